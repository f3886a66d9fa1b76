"""Search 3-braid closures for the non-two-bridge knots through 8 crossings.

Filters candidate words by component count and determinant (fast integer
arithmetic), then confirms with the Alexander polynomial.  Within 3-braid
closures of 8 letters the Alexander polynomials of the targets are unique,
so a match identifies the knot.
"""

from __future__ import annotations

import sys
from itertools import product
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
sys.path.insert(0, str(Path(__file__).resolve().parent))

from invariants import alexander_coeffs, determinant  # noqa: E402
from quandlequiver.construct import braid_closure  # noqa: E402

TARGETS = {
    "8_5": (21, (1, -3, 4, -5, 4, -3, 1)),
    "8_10": (27, (1, -3, 6, -7, 6, -3, 1)),
    "8_15": (33, (3, -8, 11, -8, 3)),
    "8_16": (35, (1, -4, 8, -9, 8, -4, 1)),
    "8_17": (37, (1, -4, 8, -11, 8, -4, 1)),
    "8_21": (15, (1, -4, 5, -4, 1)),
}


def main():
    found: dict[str, list[int]] = {}
    dets_wanted = {d for d, _ in TARGETS.values()}
    for word in product((1, -1, 2, -2), repeat=8):
        if len(found) == len(TARGETS):
            break
        try:
            d = braid_closure(word, strands=3)
        except Exception:
            continue
        if d.component_count() != 1 or d.arc_count != 8:
            continue
        det = determinant(d)
        if det not in dets_wanted:
            continue
        for name, (want_det, want_alex) in TARGETS.items():
            if name in found or det != want_det:
                continue
            if alexander_coeffs(d) == want_alex:
                found[name] = list(word)
                print(name, "=", list(word))
                break
    for name in TARGETS:
        if name not in found:
            print(name, "NOT FOUND")


if __name__ == "__main__":
    main()
