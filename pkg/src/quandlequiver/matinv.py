"""Weighted incidence matrices of cocycle quivers and derived invariants.

The matrix has one row per vertex (canonical coloring order) and one
column per edge (sorted by source index, then endomorphism index).  The
column of an edge v_j -> v_k holds -phi(v_j) at row j and +phi(v_k) at
row k; for a self-loop the two contributions land on the same entry and
sum to 0.  The matrix itself depends on the numbering, but rank, Smith
normal form, characteristic polynomial (up to similarity) and elementary
ideals do not.

The characteristic polynomial over Z/m is defined as the mod-m reduction
of the integer characteristic polynomial of the entry lift in {0..m-1},
computed division-free (Berkowitz); for prime m this agrees with the
field computation.  Smith normal form is over Z on the same lift.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from . import _intlinalg
from .chain import ZmMatrix
from .errors import NonPrimeModulus, NonSquare, SizeLimitExceeded
from .quiver import CocycleQuiver

IDEALS_MAX_MIN_DIMENSION = 10
IDEALS_MAX_MINOR_ORDER = 5


@dataclass(frozen=True)
class WeightedIncidenceMatrix:
    matrix: ZmMatrix

    @property
    def modulus(self) -> int:
        return self.matrix.modulus


def build_matrix(Q: CocycleQuiver) -> WeightedIncidenceMatrix:
    """Vertex x edge matrix of the quiver; square exactly when |S| = 1."""
    m = Q.modulus
    nv = Q.vertex_count()
    edges = sorted(Q.edges, key=lambda e: (e[0], e[2]))
    entries = [[0] * len(edges) for _ in range(nv)]
    for col, (src, dst, _) in enumerate(edges):
        entries[src][col] = (entries[src][col] - Q.weights[src]) % m
        entries[dst][col] = (entries[dst][col] + Q.weights[dst]) % m
    return WeightedIncidenceMatrix(ZmMatrix(nv, len(edges), m, tuple(tuple(r) for r in entries)))


def _as_int_rows(M) -> list[list[int]]:
    if isinstance(M, WeightedIncidenceMatrix):
        M = M.matrix
    if isinstance(M, ZmMatrix):
        return [list(r) for r in M.entries]
    return [list(r) for r in M]


def char_poly(M: ZmMatrix) -> list[int]:
    """Coefficients of det(xI - M) mod m, highest degree first, leading 1."""
    if isinstance(M, WeightedIncidenceMatrix):
        M = M.matrix
    if M.rows != M.cols:
        raise NonSquare(f"{M.rows}x{M.cols} matrix has no characteristic polynomial")
    coeffs = _intlinalg.berkowitz_charpoly(_as_int_rows(M))
    return [c % M.modulus for c in coeffs]


def format_poly(coeffs: list[int]) -> str:
    """'x^9+3x^8+...' from mod-m coefficients, highest degree first."""
    n = len(coeffs) - 1
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        deg = n - i
        if deg == 0:
            parts.append(str(c))
        else:
            x = "x" if deg == 1 else f"x^{deg}"
            parts.append(x if c == 1 else f"{c}{x}")
    return "+".join(parts) if parts else "0"


def smith_normal_form(M) -> list[int]:
    """Invariant factors d1 | d2 | ... of the integer lift, all positive.

    Accepts a ZmMatrix (entries are already the lifts in {0..m-1}), a
    WeightedIncidenceMatrix, or a plain list-of-lists integer matrix.
    """
    rows = _as_int_rows(M)
    if not rows or not rows[0]:
        return []
    return _intlinalg.smith_normal_form(rows)


def rank_mod_p(M: ZmMatrix, p: int) -> int:
    """Rank of the matrix over the field Z/pZ."""
    if p < 2 or any(p % k == 0 for k in range(2, int(p**0.5) + 1)):
        raise NonPrimeModulus(f"{p} is not prime")
    rows = _as_int_rows(M)
    if not rows:
        return 0
    return _intlinalg.rank_mod_p(rows, p)


def elementary_ideals(
    M: ZmMatrix,
    max_min_dimension: int = IDEALS_MAX_MIN_DIMENSION,
    max_minor_order: int = IDEALS_MAX_MINOR_ORDER,
) -> list[int]:
    """Canonical generator of the order-k minor ideal in Z/m, k = 1..min(r,c).

    Z/m is a principal ideal ring, so each ideal is (gcd of the k-minors
    and m), reduced mod m; the zero ideal is reported as 0.  Minor
    enumeration is exponential, so dimensions are bounded; raise the
    bounds explicitly for bigger matrices.
    """
    if isinstance(M, WeightedIncidenceMatrix):
        M = M.matrix
    m = M.modulus
    k_max = min(M.rows, M.cols)
    if k_max > max_min_dimension:
        raise SizeLimitExceeded(
            f"min dimension {k_max} exceeds limit {max_min_dimension}"
        )
    if k_max > max_minor_order:
        raise SizeLimitExceeded(
            f"minor order {k_max} exceeds limit {max_minor_order}; raise max_minor_order"
        )
    rows = _as_int_rows(M)
    gens = []
    for k in range(1, k_max + 1):
        g = m
        for rsel in combinations(range(M.rows), k):
            for csel in combinations(range(M.cols), k):
                minor = _intlinalg.int_det([[rows[i][j] for j in csel] for i in rsel])
                g = gcd(g, minor)
                if g == 1:
                    break
            if g == 1:
                break
        gens.append(g % m)
    return gens


def permutation_equivalent_to_diagonal(M: ZmMatrix, diag: list[int]) -> bool:
    """True iff row/column permutations turn M into diag(diag ++ zeros).

    Holds exactly when every row and every column of M carries at most one
    nonzero entry and the multiset of nonzero entries equals the multiset
    of nonzero requested diagonal values.
    """
    if isinstance(M, WeightedIncidenceMatrix):
        M = M.matrix
    nonzeros = []
    for i in range(M.rows):
        row_nonzero = [v for v in M.entries[i] if v]
        if len(row_nonzero) > 1:
            return False
        nonzeros.extend(row_nonzero)
    for j in range(M.cols):
        if sum(1 for i in range(M.rows) if M.entries[i][j]) > 1:
            return False
    want = sorted(v % M.modulus for v in diag if v % M.modulus)
    return sorted(nonzeros) == want
