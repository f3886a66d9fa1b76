"""Exact linear algebra over Z and Z/mZ on plain Python integers.

Everything here is division-free or pivot-exact: Smith normal form over Z
with recorded transforms, kernel and solve over Z/mZ for composite m
(field elimination would be wrong there), rank over a prime field, and
the Berkowitz characteristic polynomial.  Matrices are lists of lists of
ints; callers own any mod-m reduction of the results.
"""

from __future__ import annotations

from math import gcd


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = gcd(a, b) >= 0 and s*a + t*b = g."""
    s, next_s = 1, 0
    t, next_t = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        s, next_s = next_s, s - q * next_s
        t, next_t = next_t, t - q * next_t
        g, next_g = next_g, g - q * next_g
    if g < 0:
        g, s, t = -g, -s, -t
    return g, s, t


def _row_combine(M: list[list[int]], i: int, j: int, a: int, b: int, c: int, d: int) -> None:
    # rows (i, j) <- (a*row_i + b*row_j, c*row_i + d*row_j)
    Mi, Mj = M[i], M[j]
    for k in range(len(Mi)):
        x, y = Mi[k], Mj[k]
        Mi[k] = a * x + b * y
        Mj[k] = c * x + d * y


def _col_combine(M: list[list[int]], i: int, j: int, a: int, b: int, c: int, d: int) -> None:
    # cols (i, j) <- (a*col_i + b*col_j, c*col_i + d*col_j)
    for row in M:
        x, y = row[i], row[j]
        row[i] = a * x + b * y
        row[j] = c * x + d * y


def smith_with_transforms(
    A: list[list[int]],
) -> tuple[list[list[int]], list[int], list[list[int]]]:
    """Smith normal form over Z: returns (U, diag, V) with U*A*V diagonal.

    U (rows x rows) and V (cols x cols) are unimodular; diag is the list of
    min(rows, cols) diagonal entries, nonnegative, satisfying d1 | d2 | ...
    (trailing zeros included).
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    M = [list(r) for r in A]
    U = [[int(i == j) for j in range(rows)] for i in range(rows)]
    V = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def clear_position(t: int) -> None:
        # make M[t][t] the gcd of row t / col t and zero the rest of both;
        # plain reduction when the pivot already divides keeps the pivot
        # row/column untouched, which guarantees termination
        while True:
            for i in range(t + 1, rows):
                if M[i][t]:
                    if M[i][t] % M[t][t] == 0:
                        q = M[i][t] // M[t][t]
                        _row_combine(M, t, i, 1, 0, -q, 1)
                        _row_combine(U, t, i, 1, 0, -q, 1)
                    else:
                        g, s, u = xgcd(M[t][t], M[i][t])
                        a, b = M[t][t] // g, M[i][t] // g
                        _row_combine(M, t, i, s, u, -b, a)
                        _row_combine(U, t, i, s, u, -b, a)
            for j in range(t + 1, cols):
                if M[t][j]:
                    if M[t][j] % M[t][t] == 0:
                        q = M[t][j] // M[t][t]
                        _col_combine(M, t, j, 1, 0, -q, 1)
                        _col_combine(V, t, j, 1, 0, -q, 1)
                    else:
                        g, s, u = xgcd(M[t][t], M[t][j])
                        a, b = M[t][t] // g, M[t][j] // g
                        _col_combine(M, t, j, s, u, -b, a)
                        _col_combine(V, t, j, s, u, -b, a)
            if all(M[i][t] == 0 for i in range(t + 1, rows)) and all(
                M[t][j] == 0 for j in range(t + 1, cols)
            ):
                return

    for t in range(min(rows, cols)):
        # move a nonzero pivot into (t, t)
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if M[i][j] and (pivot is None or abs(M[i][j]) < abs(M[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            M[t], M[pi] = M[pi], M[t]
            U[t], U[pi] = U[pi], U[t]
        if pj != t:
            for row in M:
                row[t], row[pj] = row[pj], row[t]
            for row in V:
                row[t], row[pj] = row[pj], row[t]
        clear_position(t)
        # enforce divisibility of the remaining block by M[t][t]
        while True:
            bad = None
            d = M[t][t]
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if M[i][j] % d:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            for k in range(cols):
                M[t][k] += M[bad][k]
            for k in range(rows):
                U[t][k] += U[bad][k]
            clear_position(t)

    diag = []
    for t in range(min(rows, cols)):
        d = M[t][t]
        if d < 0:
            d = -d
            for k in range(cols):
                V[k][t] = -V[k][t]
        diag.append(d)
    return U, diag, V


def smith_normal_form(A: list[list[int]]) -> list[int]:
    """Positive invariant factors d1 | d2 | ... | dr of an integer matrix."""
    _, diag, _ = smith_with_transforms(A)
    return [d for d in diag if d != 0]


def kernel_mod(A: list[list[int]], m: int) -> list[list[int]]:
    """Generating set of {x in (Z/m)^cols : A x = 0 mod m} as a Z/m-module."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if cols == 0:
        return []
    if rows == 0:
        return [[1 if j == i else 0 for j in range(cols)] for i in range(cols)]
    _, diag, V = smith_with_transforms(A)
    gens = []
    for i in range(cols):
        d = diag[i] if i < len(diag) else 0
        g = gcd(d, m)
        if g <= 1:
            continue
        mult = m // g
        vec = [(mult * V[k][i]) % m for k in range(cols)]
        if any(vec):
            gens.append(vec)
    return gens


def solve_mod(A: list[list[int]], b: list[int], m: int) -> list[int] | None:
    """One x with A x = b (mod m), or None if the system is inconsistent."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if rows == 0:
        return [0] * cols
    U, diag, V = smith_with_transforms(A)
    ub = [sum(U[i][k] * b[k] for k in range(rows)) % m for i in range(rows)]
    y = [0] * cols
    for i in range(rows):
        d = diag[i] if i < len(diag) else 0
        rhs = ub[i]
        if d == 0:
            if rhs % m:
                return None
            continue
        g = gcd(d, m)
        if rhs % g:
            return None
        # d*y = rhs mod m  <=>  (d/g)*y = rhs/g mod m/g
        mm = m // g
        if mm == 1:
            continue
        ginv = pow((d // g) % mm, -1, mm)
        if i < cols:
            y[i] = (rhs // g * ginv) % mm
    return [sum(V[k][i] * y[i] for i in range(cols)) % m for k in range(cols)]


def rank_mod_p(A: list[list[int]], p: int) -> int:
    """Rank of A over the field Z/pZ (p prime) by Gaussian elimination."""
    rows = [[x % p for x in row] for row in A]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    rank = 0
    col = 0
    while rank < nrows and col < ncols:
        piv = next((i for i in range(rank, nrows) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [(inv * x) % p for x in rows[rank]]
        for i in range(nrows):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def int_det(A: list[list[int]]) -> int:
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(r) for r in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if M[i][k]), None)
            if piv is None:
                return 0
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def berkowitz_charpoly(A: list[list[int]]) -> list[int]:
    """Coefficients of det(xI - A), highest degree first, over Z.

    Division-free (Berkowitz), so exact over any coefficient ring after
    reduction; leading coefficient is always 1.
    """
    n = len(A)
    vec = [1]
    for i in range(1, n + 1):
        a = A[i - 1][i - 1]
        R = A[i - 1][:i - 1]
        C = [A[j][i - 1] for j in range(i - 1)]
        B = [row[:i - 1] for row in A[:i - 1]]
        t = [1, -a]
        w = C
        for _ in range(2, i + 1):
            t.append(-sum(r * x for r, x in zip(R, w)))
            w = [sum(B[r][k] * w[k] for k in range(len(w))) for r in range(len(w))]
        new = [0] * (i + 1)
        for j, vj in enumerate(vec):
            for k, tk in enumerate(t):
                if j + k <= i:
                    new[j + k] += tk * vj
        vec = new
    return vec
