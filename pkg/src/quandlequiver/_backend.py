"""Kernel backend selection: compiled extension if available, else pure.

Set QUANDLEQUIVER_PURE=1 to force the pure-Python kernel (used by the
benchmark and by tests that compare the two backends).
"""

from __future__ import annotations

import os


def _load():
    if os.environ.get("QUANDLEQUIVER_PURE", "") not in ("", "0"):
        from . import _kernel_py

        return _kernel_py, "pure"
    try:
        from . import _kernel  # compiled extension, optional

        return _kernel, "compiled"
    except ImportError:
        from . import _kernel_py

        return _kernel_py, "pure"


kernel, BACKEND = _load()
