"""Exception types shared across the package.

Validation errors carry enough structure (axiom number, witness tuple,
offending arc, parse position) for the CLI to print a usable diagnostic
and for tests to assert on the failure, not just its message.
"""

from __future__ import annotations


class QuandleQuiverError(Exception):
    """Base class for all errors raised by this package."""


class AxiomViolation(QuandleQuiverError):
    """An operation table fails one of the three quandle axioms.

    axiom: 1 (idempotence), 2 (column bijectivity), 3 (self-distributivity).
    witness: the offending element tuple, 1-based: (x,), (x, y) or (x, y, z).
    """

    def __init__(self, axiom: int, witness: tuple[int, ...]):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"quandle axiom {axiom} fails at {witness}")


class OutOfRangeEntry(QuandleQuiverError):
    """A table entry is not an element of {1..n}."""


class SizeLimitExceeded(QuandleQuiverError):
    """An enumeration or matrix build would exceed its configured bound."""


class MalformedPD(QuandleQuiverError):
    """A PD code edge label does not appear exactly twice."""


class AmbiguousOrientation(QuandleQuiverError):
    """Over-strand direction cannot be inferred; pass component ranges."""


class ArcUnderUseCount(QuandleQuiverError):
    """An arc is not used exactly once as under_in and once as under_out."""

    def __init__(self, arc: int, in_count: int, out_count: int):
        self.arc = arc
        self.in_count = in_count
        self.out_count = out_count
        super().__init__(
            f"arc {arc} used {in_count}x as under_in, {out_count}x as under_out"
        )


class OutOfRangeArc(QuandleQuiverError):
    """A crossing references an arc id outside {1..arc_count}."""


class InvalidColoring(QuandleQuiverError):
    """A color assignment violates a crossing constraint."""


class NonEndomorphismInS(QuandleQuiverError):
    """A map passed where a verified quandle endomorphism is required."""


class NonCocycle(QuandleQuiverError):
    """A cochain passed where a verified 2-cocycle is required."""


class NonSquare(QuandleQuiverError):
    """A square matrix is required."""


class NonPrimeModulus(QuandleQuiverError):
    """A prime modulus is required."""


class CochainSyntaxError(QuandleQuiverError):
    """Cochain expression does not match the grammar; carries the position."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class IndexOutOfRange(QuandleQuiverError):
    """A chi-term index in a cochain expression exceeds the quandle size."""
