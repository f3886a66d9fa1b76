"""Finite quandles: validation, the inverse operation, and endomorphisms.

Elements are 1-based everywhere at the interface, matching the usual
operation-table layout: ``table[x][y]`` (1-based row x, column y) holds
``x > y`` where ``>`` is the quandle operation.  A valid table satisfies

  (i)   x > x = x,
  (ii)  for each y the map x -> x > y is a bijection,
  (iii) (x > y) > z = (x > z) > (y > z).

The inverse table (unique z with z > y = x) is precomputed at validation
time because the coloring search calls it in inner loops.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import AxiomViolation, NonEndomorphismInS, OutOfRangeEntry, SizeLimitExceeded

ENDO_ENUM_MAX_SIZE = 8


@dataclass(frozen=True)
class Quandle:
    """A finite quandle given by its operation table (validated, immutable)."""

    size: int
    table: tuple[tuple[int, ...], ...]
    inv_table: tuple[tuple[int, ...], ...]

    def op(self, x: int, y: int) -> int:
        """x > y, 1-based."""
        return self.table[x - 1][y - 1]

    def inv_op(self, x: int, y: int) -> int:
        """The unique z with z > y = x, 1-based."""
        return self.inv_table[x - 1][y - 1]

    def elements(self) -> range:
        return range(1, self.size + 1)

    def __repr__(self) -> str:
        return f"Quandle(size={self.size})"


@dataclass(frozen=True)
class QuandleMap:
    """A set map {1..source_size} -> {1..target_size}, written [f(1),...,f(n)]."""

    source_size: int
    target_size: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.source_size:
            raise ValueError("values length must equal source_size")
        for v in self.values:
            if not 1 <= v <= self.target_size:
                raise OutOfRangeEntry(f"map value {v} outside 1..{self.target_size}")

    def __call__(self, x: int) -> int:
        return self.values[x - 1]

    def compose(self, other: "QuandleMap") -> "QuandleMap":
        """self after other: x -> self(other(x))."""
        if other.target_size != self.source_size:
            raise ValueError("size mismatch in composition")
        return QuandleMap(
            other.source_size,
            self.target_size,
            tuple(self.values[v - 1] for v in other.values),
        )

    @staticmethod
    def identity(n: int) -> "QuandleMap":
        return QuandleMap(n, n, tuple(range(1, n + 1)))

    @staticmethod
    def constant(n: int, c: int) -> "QuandleMap":
        return QuandleMap(n, n, (c,) * n)


def validate_quandle(table) -> Quandle:
    """Validate an operation table and return the Quandle with inv_table filled.

    Raises AxiomViolation naming the first violated axiom with a witness,
    or OutOfRangeEntry for entries outside {1..n}.  Axioms are checked in
    order (i), (ii), (iii); witnesses are lexicographically first.
    """
    rows = tuple(tuple(row) for row in table)
    n = len(rows)
    if n == 0:
        raise OutOfRangeEntry("empty table")
    for row in rows:
        if len(row) != n:
            raise OutOfRangeEntry(f"table is not square: row of length {len(row)}, expected {n}")
        for v in row:
            if not isinstance(v, int) or not 1 <= v <= n:
                raise OutOfRangeEntry(f"entry {v!r} outside 1..{n}")

    for x in range(1, n + 1):
        if rows[x - 1][x - 1] != x:
            raise AxiomViolation(1, (x,))

    inv = [[0] * n for _ in range(n)]
    for y in range(1, n + 1):
        seen = [0] * (n + 1)
        for x in range(1, n + 1):
            z = rows[x - 1][y - 1]
            if seen[z]:
                raise AxiomViolation(2, (x, y))
            seen[z] = x
        for x in range(1, n + 1):
            inv[x - 1][y - 1] = seen[x]

    for x in range(1, n + 1):
        for y in range(1, n + 1):
            xy = rows[x - 1][y - 1]
            for z in range(1, n + 1):
                if rows[xy - 1][z - 1] != rows[rows[x - 1][z - 1] - 1][rows[y - 1][z - 1] - 1]:
                    raise AxiomViolation(3, (x, y, z))

    return Quandle(n, rows, tuple(tuple(r) for r in inv))


def quandle_op(q: Quandle, x: int, y: int) -> int:
    _check_range(q, x, y)
    return q.op(x, y)


def quandle_inv_op(q: Quandle, x: int, y: int) -> int:
    _check_range(q, x, y)
    return q.inv_op(x, y)


def _check_range(q: Quandle, *elts: int) -> None:
    for e in elts:
        if not 1 <= e <= q.size:
            raise OutOfRangeEntry(f"element {e} outside 1..{q.size}")


def is_endomorphism(q: Quandle, f: QuandleMap) -> bool:
    """True iff f(x > y) = f(x) > f(y) for all x, y."""
    if f.source_size != q.size or f.target_size != q.size:
        raise NonEndomorphismInS(
            f"map on {f.source_size}->{f.target_size} elements against quandle of size {q.size}"
        )
    t = q.table
    v = f.values
    for x in range(q.size):
        for y in range(q.size):
            if v[t[x][y] - 1] != t[v[x] - 1][v[y] - 1]:
                return False
    return True


def enumerate_endomorphisms(q: Quandle, max_size: int = ENDO_ENUM_MAX_SIZE) -> list[QuandleMap]:
    """All quandle endomorphisms of q, lexicographic in their value arrays.

    Brute-force DFS over the n^n candidate maps, pruning as soon as an
    assigned triple violates the homomorphism condition.  Paper-scale
    quandles have n <= 6; refuse anything past max_size.
    """
    n = q.size
    if n > max_size:
        raise SizeLimitExceeded(f"endomorphism enumeration limited to size {max_size}, got {n}")
    t = q.table
    out: list[QuandleMap] = []
    values = [0] * n

    def consistent(k: int) -> bool:
        # check every pair whose constraint became fully assigned with f(k)
        for x in range(k + 1):
            for y in range(k + 1):
                z = t[x][y] - 1
                if z > k:
                    continue
                if x < k and y < k and z < k:
                    continue
                if values[z] != t[values[x] - 1][values[y] - 1]:
                    return False
        return True

    def dfs(k: int) -> None:
        if k == n:
            out.append(QuandleMap(n, n, tuple(values)))
            return
        for v in range(1, n + 1):
            values[k] = v
            if consistent(k):
                dfs(k + 1)
        values[k] = 0

    dfs(0)
    return out


def quandle_from_text(text: str) -> Quandle:
    """Parse the quandle file format: line 1 is n, then n rows of n entries."""
    tokens_by_line = [line.split() for line in text.splitlines() if line.strip()]
    if not tokens_by_line:
        raise OutOfRangeEntry("empty quandle file")
    try:
        n = int(tokens_by_line[0][0])
    except ValueError:
        raise OutOfRangeEntry(f"first line must be the size, got {tokens_by_line[0][0]!r}")
    if len(tokens_by_line) != n + 1:
        raise OutOfRangeEntry(f"expected {n} table rows, got {len(tokens_by_line) - 1}")
    table = []
    for line in tokens_by_line[1:]:
        try:
            row = [int(tok) for tok in line]
        except ValueError:
            raise OutOfRangeEntry(f"non-integer table entry in row {line!r}")
        if len(row) != n:
            raise OutOfRangeEntry(f"row has {len(row)} entries, expected {n}")
        table.append(row)
    return validate_quandle(table)


def quandle_to_text(q: Quandle) -> str:
    lines = [str(q.size)]
    lines += [" ".join(str(v) for v in row) for row in q.table]
    return "\n".join(lines) + "\n"
