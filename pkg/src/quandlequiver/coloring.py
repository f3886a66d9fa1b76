"""X-colorings, Boltzmann weights, and the 2-cocycle invariant.

A coloring assigns a quandle element to every arc so that each crossing
relation holds (sign conventions fixed in the diagram module).  The
Boltzmann weight of a colored crossing is +phi(under_in, over) at a +1
crossing and -phi(under_out, over) at a -1 crossing; summing over
crossings gives the weight phi(v) of a coloring, and the generating
polynomial sum_v s^phi(v) is the cocycle invariant.

Free loops never appear as arcs: they multiply term counts by |X| per
loop at exponent 0.  Canonical coloring order is lexicographic on the
color array; the search kernel is an optimization whose correctness is
pinned by the brute-force oracle in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ._backend import kernel
from .algebra import Quandle, QuandleMap, is_endomorphism
from .chain import Cochain2
from .diagram import LinkDiagram
from .errors import InvalidColoring, NonEndomorphismInS


@dataclass(frozen=True)
class Coloring:
    """An arc -> element assignment satisfying every crossing constraint."""

    colors: tuple[int, ...]
    diagram: LinkDiagram = field(compare=False, repr=False)

    def color(self, arc: int) -> int:
        return self.colors[arc - 1]


@dataclass(frozen=True)
class WeightPolynomial:
    """Multiset of Z/m exponents: represents sum of mult * s^exp terms."""

    modulus: int
    terms: tuple[tuple[int, int], ...]  # (exponent, multiplicity), sorted

    @staticmethod
    def from_dict(m: int, counts: dict[int, int]) -> "WeightPolynomial":
        items = tuple(sorted((e % m, c) for e, c in counts.items() if c))
        if any(c < 0 for _, c in items):
            raise ValueError("multiplicities must be positive")
        return WeightPolynomial(m, items)

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def total(self) -> int:
        return sum(c for _, c in self.terms)

    def scale(self, k: int) -> "WeightPolynomial":
        return WeightPolynomial(self.modulus, tuple((e, c * k) for e, c in self.terms))

    def text(self) -> str:
        """Canonical text, e.g. '6+12s+12s^2'; '0' for the empty multiset."""
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            if e == 0:
                parts.append(str(c))
            else:
                s = "s" if e == 1 else f"s^{e}"
                parts.append(s if c == 1 else f"{c}{s}")
        return "+".join(parts)

    def to_json_dict(self) -> dict:
        return {"modulus": self.modulus, "terms": [[e, c] for e, c in self.terms]}


def enumerate_colorings(d: LinkDiagram, q: Quandle) -> list[Coloring]:
    """All X-colorings of d in canonical (lexicographic) order.

    Free loops contribute no arcs; callers multiply counts by
    q.size ** d.free_loops where the convention requires it.
    """
    table0 = [[v - 1 for v in row] for row in q.table]
    inv0 = [[v - 1 for v in row] for row in q.inv_table]
    crossings = [
        (c.sign, c.over - 1, c.under_in - 1, c.under_out - 1) for c in d.crossings
    ]
    raw = kernel.enumerate_colorings_raw(q.size, table0, inv0, d.arc_count, crossings)
    return [Coloring(tuple(v + 1 for v in tup), d) for tup in raw]


def _check_coloring(d: LinkDiagram, q: Quandle, v: Coloring) -> None:
    if len(v.colors) != d.arc_count:
        raise InvalidColoring(f"{len(v.colors)} colors for {d.arc_count} arcs")
    for c in d.crossings:
        if c.sign > 0:
            ok = v.color(c.under_out) == q.op(v.color(c.under_in), v.color(c.over))
        else:
            ok = v.color(c.under_in) == q.op(v.color(c.under_out), v.color(c.over))
        if not ok:
            raise InvalidColoring(f"crossing {c} violated by {v.colors}")


def boltzmann_weight(d: LinkDiagram, q: Quandle, phi: Cochain2, v: Coloring) -> int:
    """Signed sum of phi over the colored crossings, in Z/m."""
    _check_coloring(d, q, v)
    total = 0
    for c in d.crossings:
        if c.sign > 0:
            total += phi(v.color(c.under_in), v.color(c.over))
        else:
            total -= phi(v.color(c.under_out), v.color(c.over))
    return total % phi.modulus


def cocycle_invariant(d: LinkDiagram, q: Quandle, phi: Cochain2) -> WeightPolynomial:
    """sum over colorings of s^phi(v), with the free-loop factor at s^0."""
    counts: dict[int, int] = {}
    for v in enumerate_colorings(d, q):
        w = boltzmann_weight(d, q, phi, v)
        counts[w] = counts.get(w, 0) + 1
    factor = q.size**d.free_loops
    return WeightPolynomial.from_dict(phi.modulus, {e: c * factor for e, c in counts.items()})


def apply_map_to_coloring(f: QuandleMap, v: Coloring, q: Quandle) -> Coloring:
    """Arcwise image of a coloring under a verified endomorphism of q."""
    if not is_endomorphism(q, f):
        raise NonEndomorphismInS(f"{list(f.values)} is not an endomorphism")
    image = Coloring(tuple(f(c) for c in v.colors), v.diagram)
    _check_coloring(v.diagram, q, image)
    return image
