"""Quandle chain and cochain complexes with Z/m coefficients.

Chains in degree k are spanned by non-degenerate k-tuples (no adjacent
equal pair); degenerate tuples are projected to zero, which implements
the quandle quotient of the rack complex.  The boundary convention is

  d(x_1,...,x_k) = sum_{i=1..k} (-1)^i [ (x_1,...,^x_i,...,x_k)
                   - (x_1>x_i,...,x_{i-1}>x_i, x_{i+1},...,x_k) ],

under which a 2-cochain phi is a cocycle exactly when phi(x,x) = 0 and
phi(x,y) + phi(x>y,z) = phi(x,z) + phi(x>z,y>z) for all triples.  The
degree-1 coboundary is (d psi)(x,y) = psi(x) - psi(x>y); the sign is a
fixed convention and does not change the coboundary subgroup.

Kernels and solves are done with Smith-form arithmetic over Z, valid for
composite moduli (the paper-scale examples use Z/4).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from ._intlinalg import kernel_mod, solve_mod
from .algebra import Quandle
from .errors import CochainSyntaxError, IndexOutOfRange, SizeLimitExceeded

BOUNDARY_BASIS_LIMIT = 200_000
COCYCLE_SPACE_MAX_SIZE = 8


@dataclass(frozen=True)
class Cochain2:
    """A map X x X -> Z/m, stored as an n x n value table (1-based access)."""

    quandle_size: int
    modulus: int
    values: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be >= 2")
        if len(self.values) != self.quandle_size or any(
            len(r) != self.quandle_size for r in self.values
        ):
            raise ValueError("values must be an n x n table")
        if any(not 0 <= v < self.modulus for r in self.values for v in r):
            raise ValueError("entries must be reduced mod m")

    def __call__(self, x: int, y: int) -> int:
        return self.values[x - 1][y - 1]

    @staticmethod
    def zero(n: int, m: int) -> "Cochain2":
        return Cochain2(n, m, tuple((0,) * n for _ in range(n)))

    @staticmethod
    def from_terms(n: int, m: int, terms: dict[tuple[int, int], int]) -> "Cochain2":
        """Sum of coeff * chi_(i,j) elementary functions, reduced mod m."""
        vals = [[0] * n for _ in range(n)]
        for (i, j), c in terms.items():
            if not (1 <= i <= n and 1 <= j <= n):
                raise IndexOutOfRange(f"chi index ({i},{j}) outside 1..{n}")
            vals[i - 1][j - 1] = (vals[i - 1][j - 1] + c) % m
        return Cochain2(n, m, tuple(tuple(r) for r in vals))


@dataclass(frozen=True)
class Cochain1:
    """A map X -> Z/m."""

    quandle_size: int
    modulus: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.quandle_size:
            raise ValueError("values must have length n")
        if any(not 0 <= v < self.modulus for v in self.values):
            raise ValueError("entries must be reduced mod m")

    def __call__(self, x: int) -> int:
        return self.values[x - 1]


@dataclass(frozen=True)
class ZmMatrix:
    """A rows x cols matrix over Z/m, entries reduced and row-major."""

    rows: int
    cols: int
    modulus: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry table shape mismatch")
        if any(not 0 <= v < self.modulus for r in self.entries for v in r):
            raise ValueError("entries must be reduced mod m")

    @staticmethod
    def from_rows(rows: list[list[int]], m: int) -> "ZmMatrix":
        return ZmMatrix(
            len(rows),
            len(rows[0]) if rows else 0,
            m,
            tuple(tuple(v % m for v in r) for r in rows),
        )

    def mul(self, other: "ZmMatrix") -> "ZmMatrix":
        if self.cols != other.rows or self.modulus != other.modulus:
            raise ValueError("shape or modulus mismatch")
        prod = [
            [
                sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols))
                % self.modulus
                for j in range(other.cols)
            ]
            for i in range(self.rows)
        ]
        return ZmMatrix.from_rows(prod, self.modulus) if prod else ZmMatrix(0, other.cols, self.modulus, ())

    def is_zero(self) -> bool:
        return all(v == 0 for r in self.entries for v in r)

    def to_json_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "rows": self.rows,
            "cols": self.cols,
            "entries": [list(r) for r in self.entries],
        }


def nondegenerate_tuples(n: int, k: int) -> list[tuple[int, ...]]:
    """All k-tuples over {1..n} with no adjacent equal pair, lexicographic."""
    if k == 0:
        return [()]
    out = []
    for tup in product(range(1, n + 1), repeat=k):
        if all(tup[i] != tup[i + 1] for i in range(k - 1)):
            out.append(tup)
    return out


def boundary_matrix(q: Quandle, k: int, m: int, limit: int = BOUNDARY_BASIS_LIMIT) -> ZmMatrix:
    """Matrix of the degree-k quandle boundary map over Z/m.

    Columns are indexed by non-degenerate k-tuples, rows by non-degenerate
    (k-1)-tuples, both lexicographic; images landing on degenerate tuples
    are dropped.
    """
    if k < 1:
        raise ValueError("degree must be >= 1")
    n = q.size
    if n**k > limit:
        raise SizeLimitExceeded(f"{n}^{k} basis tuples exceed limit {limit}")
    domain = nondegenerate_tuples(n, k)
    codomain = nondegenerate_tuples(n, k - 1)
    row_index = {t: i for i, t in enumerate(codomain)}
    entries = [[0] * len(domain) for _ in codomain]
    for col, tup in enumerate(domain):
        for i in range(1, k + 1):
            sign = -1 if i % 2 else 1
            dropped = tup[: i - 1] + tup[i:]
            acted = tuple(q.op(tup[j], tup[i - 1]) for j in range(i - 1)) + tup[i:]
            for target, s in ((dropped, sign), (acted, -sign)):
                idx = row_index.get(target)
                if idx is not None:
                    entries[idx][col] = (entries[idx][col] + s) % m
    return ZmMatrix(len(codomain), len(domain), m, tuple(tuple(r) for r in entries))


def is_cocycle(q: Quandle, phi: Cochain2) -> bool:
    """True iff phi(x,x) = 0 for all x and the 2-cocycle identity holds mod m."""
    if phi.quandle_size != q.size:
        raise ValueError(f"cochain on {phi.quandle_size} elements, quandle of size {q.size}")
    m = phi.modulus
    f = phi.values
    t = q.table
    for x in range(1, q.size + 1):
        if f[x - 1][x - 1] % m:
            return False
    for x in range(1, q.size + 1):
        for y in range(1, q.size + 1):
            xy = t[x - 1][y - 1]
            for z in range(1, q.size + 1):
                xz = t[x - 1][z - 1]
                yz = t[y - 1][z - 1]
                if (f[x - 1][y - 1] + f[xy - 1][z - 1] - f[x - 1][z - 1] - f[xz - 1][yz - 1]) % m:
                    return False
    return True


def coboundary(q: Quandle, psi: Cochain1) -> Cochain2:
    """(d psi)(x,y) = psi(x) - psi(x>y) mod m."""
    if psi.quandle_size != q.size:
        raise ValueError(f"cochain on {psi.quandle_size} elements, quandle of size {q.size}")
    m = psi.modulus
    n = q.size
    vals = tuple(
        tuple((psi(x) - psi(q.op(x, y))) % m for y in range(1, n + 1)) for x in range(1, n + 1)
    )
    return Cochain2(n, m, vals)


def is_coboundary(q: Quandle, phi: Cochain2) -> Cochain1 | None:
    """A psi with coboundary(psi) = phi if one exists (solved mod m), else None."""
    if phi.quandle_size != q.size:
        raise ValueError(f"cochain on {phi.quandle_size} elements, quandle of size {q.size}")
    n = q.size
    m = phi.modulus
    # one equation per (x, y): psi(x) - psi(x>y) = phi(x,y)
    rows = []
    rhs = []
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            row = [0] * n
            row[x - 1] += 1
            row[q.op(x, y) - 1] -= 1
            rows.append(row)
            rhs.append(phi(x, y))
    sol = solve_mod(rows, rhs, m)
    if sol is None:
        return None
    return Cochain1(n, m, tuple(v % m for v in sol))


def cocycle_space(q: Quandle, m: int, max_size: int = COCYCLE_SPACE_MAX_SIZE) -> list[Cochain2]:
    """Generating set of the Z/m-module of quandle 2-cocycles of q.

    Computed as the kernel of the diagonal and cocycle-identity constraint
    matrix over Z/m via Smith-form arithmetic (valid for composite m).
    """
    n = q.size
    if n > max_size:
        raise SizeLimitExceeded(f"cocycle space limited to size {max_size}, got {n}")

    def var(x: int, y: int) -> int:
        return (x - 1) * n + (y - 1)

    rows = []
    for x in range(1, n + 1):
        row = [0] * (n * n)
        row[var(x, x)] = 1
        rows.append(row)
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            for z in range(1, n + 1):
                row = [0] * (n * n)
                row[var(x, y)] += 1
                row[var(q.op(x, y), z)] += 1
                row[var(x, z)] -= 1
                row[var(q.op(x, z), q.op(y, z))] -= 1
                if any(row):
                    rows.append(row)
    gens = []
    for vec in kernel_mod(rows, m):
        vals = tuple(tuple(vec[var(x, y)] for y in range(1, n + 1)) for x in range(1, n + 1))
        g = Cochain2(n, m, vals)
        if not is_cocycle(q, g):
            raise AssertionError("kernel generator failed the cocycle check")
        gens.append(g)
    return gens


def parse_cochain(expr: str, n: int, m: int) -> Cochain2:
    """Parse 'c x(i,j) + ...' linear combinations of elementary cochains.

    Grammar: expr := term ('+' term)* | ''; term := [int '*'?] 'x(' int ',' int ')'.
    Whitespace is ignored; coefficients are non-negative integers reduced
    mod m; indices are 1-based.
    """
    vals = [[0] * n for _ in range(n)]
    s = expr
    pos = 0
    length = len(s)

    def skip_ws():
        nonlocal pos
        while pos < length and s[pos].isspace():
            pos += 1

    def read_int() -> int:
        nonlocal pos
        start = pos
        while pos < length and s[pos].isdigit():
            pos += 1
        if pos == start:
            raise CochainSyntaxError("expected an integer", start)
        return int(s[start:pos])

    def expect(ch: str):
        nonlocal pos
        skip_ws()
        if pos >= length or s[pos] != ch:
            raise CochainSyntaxError(f"expected {ch!r}", pos)
        pos += 1

    skip_ws()
    if pos == length:
        return Cochain2.zero(n, m)
    first = True
    while True:
        if not first:
            expect("+")
        first = False
        skip_ws()
        coeff = 1
        if pos < length and s[pos].isdigit():
            coeff = read_int()
            skip_ws()
            if pos < length and s[pos] == "*":
                pos += 1
                skip_ws()
        if pos >= length or s[pos] != "x":
            raise CochainSyntaxError("expected 'x(' term", pos)
        pos += 1
        expect("(")
        skip_ws()
        i = read_int()
        expect(",")
        skip_ws()
        j = read_int()
        expect(")")
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexOutOfRange(f"chi index ({i},{j}) outside 1..{n}")
        vals[i - 1][j - 1] = (vals[i - 1][j - 1] + coeff) % m
        skip_ws()
        if pos == length:
            break
    return Cochain2(n, m, tuple(tuple(r) for r in vals))


def format_cochain(phi: Cochain2) -> str:
    """Canonical text for a cochain: terms by (i,j) ascending, '' for zero.

    parse_cochain is a left inverse of this printer.
    """
    parts = []
    for i in range(1, phi.quandle_size + 1):
        for j in range(1, phi.quandle_size + 1):
            c = phi(i, j)
            if c == 0:
                continue
            prefix = "" if c == 1 else str(c)
            parts.append(f"{prefix}x({i},{j})")
    return "+".join(parts)
