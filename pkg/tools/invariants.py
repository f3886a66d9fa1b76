"""Classical invariant oracles used to vet corpus diagrams (tools only).

The linearized crossing relations (Alexander quandle x > y = t*x + (1-t)*y)
give a presentation matrix over Z[t, 1/t]; any maximal minor evaluated at
t = -1 has absolute value the link determinant, and for knots the minor
itself normalizes to the Alexander polynomial.
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from quandlequiver._intlinalg import int_det  # noqa: E402
from quandlequiver.diagram import LinkDiagram  # noqa: E402


def alexander_matrix_at(d: LinkDiagram, t: int) -> list[list[int]]:
    """Presentation matrix with the Alexander variable specialized to an int."""
    n = d.arc_count
    rows = []
    for c in d.crossings:
        row = [0] * n
        if c.sign > 0:
            # out = t*in + (1-t)*over
            row[c.under_out - 1] += 1
            row[c.under_in - 1] -= t
            row[c.over - 1] -= 1 - t
        else:
            # in = t*out + (1-t)*over
            row[c.under_in - 1] += 1
            row[c.under_out - 1] -= t
            row[c.over - 1] -= 1 - t
        rows.append(row)
    return rows


def determinant(d: LinkDiagram) -> int:
    """|H_1| of the double branched cover: |minor| of the matrix at t = -1."""
    if d.free_loops:
        return 0
    if d.arc_count == 0:
        return 1
    rows = alexander_matrix_at(d, -1)
    minor = [row[:-1] for row in rows[:-1]]
    return abs(int_det(minor))


def alexander_polynomial(d: LinkDiagram):
    """Normalized Alexander polynomial as a sympy Poly in t (knots).

    Normalization: strip t factors, make the leading coefficient positive.
    """
    import sympy

    t = sympy.Symbol("t")
    n = d.arc_count
    rows = []
    for c in d.crossings:
        row = [sympy.Integer(0)] * n
        if c.sign > 0:
            row[c.under_out - 1] += 1
            row[c.under_in - 1] -= t
            row[c.over - 1] -= 1 - t
        else:
            row[c.under_in - 1] += 1
            row[c.under_out - 1] -= t
            row[c.over - 1] -= 1 - t
        rows.append(row)
    minor = sympy.Matrix([row[:-1] for row in rows[:-1]])
    det = sympy.expand(minor.det(method="berkowitz"))
    if det == 0:
        return sympy.Integer(0)
    poly = sympy.Poly(det, t)
    # strip the power of t
    coeffs = poly.all_coeffs()
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if coeffs and coeffs[0] < 0:
        coeffs = [-c for c in coeffs]
    return sympy.Poly(coeffs, t)


def alexander_coeffs(d: LinkDiagram) -> tuple[int, ...]:
    """Alexander coefficients, highest degree first, normalized; () for 0."""
    poly = alexander_polynomial(d)
    try:
        coeffs = poly.all_coeffs()
    except AttributeError:
        return ()
    return tuple(int(c) for c in coeffs)


def linking_matrix(d: LinkDiagram) -> dict[tuple[int, int], int]:
    """Pairwise linking numbers from inter-component crossing signs."""
    comp = d.arc_components()
    lk: dict[tuple[int, int], int] = {}
    for c in d.crossings:
        a, b = comp[c.under_in - 1], comp[c.over - 1]
        if a == b:
            continue
        key = (min(a, b), max(a, b))
        lk[key] = lk.get(key, 0) + c.sign
    return {k: v // 2 for k, v in lk.items()}
