"""Recover the intended 6-element quandle from its printed artifacts.

The printed operation table has trivial Z/3 second cohomology, which
contradicts every Z/3 computation printed alongside it, so the table has
a typo.  This search enumerates all labeled 6-element quandles by column
DFS (columns are permutations fixing their index; right distributivity
and the four printed endomorphisms prune) and keeps those on which both
printed cochains are cocycles, the Z/3 one is not a coboundary, and the
worked 6_1 / 7_7 polynomial values reproduce.
"""

from __future__ import annotations

import sys
from itertools import permutations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

import _data as D  # noqa: E402
from quandlequiver.algebra import is_endomorphism, validate_quandle  # noqa: E402
from quandlequiver.chain import is_coboundary, is_cocycle  # noqa: E402
from quandlequiver.coloring import cocycle_invariant, enumerate_colorings  # noqa: E402
from quandlequiver.construct import rational_link  # noqa: E402
from quandlequiver.errors import AxiomViolation  # noqa: E402

N = 6
ENDOS = [(2, 4, 6, 6, 4, 2), (1, 2, 3, 3, 2, 1), (1, 5, 4, 3, 2, 6), (3, 1, 2, 5, 6, 4)]

# columns[y][x] = x > (y+1), 0-based storage, values 1-based
COLUMN_CHOICES = [
    [perm for perm in permutations(range(1, N + 1)) if perm[y] == y + 1]
    for y in range(N)
]


def distributive_ok(cols, assigned):
    # (x>y)>z == (x>z)>(y>z) whenever every referenced column is assigned
    for y in assigned:
        cy = cols[y]
        for z in assigned:
            cz = cols[z]
            yz = cz[y] - 1
            if yz not in assigned:
                continue
            cyz = cols[yz]
            for x in range(N):
                if cz[cy[x] - 1] != cyz[cz[x] - 1]:
                    return False
    return True


def endos_ok(cols, assigned):
    for f in ENDOS:
        for y in assigned:
            fy = f[y] - 1
            if fy not in assigned:
                continue
            cy = cols[y]
            cfy = cols[fy]
            for x in range(N):
                if f[cy[x] - 1] != cfy[f[x] - 1]:
                    return False
    return True


def search():
    cols = [None] * N
    found = []

    def dfs(y):
        if y == N:
            table = [[cols[j][i] for j in range(N)] for i in range(N)]
            found.append(table)
            return
        for choice in COLUMN_CHOICES[y]:
            cols[y] = choice
            assigned = set(range(y + 1))
            if distributive_ok(cols, assigned) and endos_ok(cols, assigned):
                dfs(y + 1)
        cols[y] = None

    dfs(0)
    return found


def main():
    tables = search()
    print(f"{len(tables)} labeled quandles admit all four endomorphisms")
    k61 = rational_link([4, 2])
    k77 = rational_link([2, 1, 1, 1, 2])
    hits = []
    for table in tables:
        q = validate_quandle(table)
        if not is_cocycle(q, D.PHI_Z3_Q6) or not is_cocycle(q, D.PHI_Z4_Q6):
            continue
        if is_coboundary(q, D.PHI_Z3_Q6) is not None:
            continue
        if len(enumerate_colorings(k61, q)) != 30:
            continue
        inv61 = cocycle_invariant(k61, q, D.PHI_Z3_Q6).text()
        inv77 = cocycle_invariant(k77, q, D.PHI_Z3_Q6).text()
        print("candidate:", table, "Phi(6_1)=", inv61, "Phi(7_7)=", inv77)
        if inv61 == "6+12s+12s^2" and inv77 == "6+12s+12s^2":
            hits.append(table)
    print(f"{len(hits)} full matches")
    for t in hits:
        for row in t:
            print("   ", row)
        print()


if __name__ == "__main__":
    main()
