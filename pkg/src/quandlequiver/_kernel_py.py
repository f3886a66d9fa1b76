"""Pure-Python coloring search kernel.

Same contract as the compiled kernel in _kernel.pyx: backtracking over
arcs in increasing id order with unit propagation through any crossing
that has its over arc and one under arc colored.  Everything is 0-based
here; the coloring module owns the 1-based interface.
"""

from __future__ import annotations


def enumerate_colorings_raw(
    n: int,
    table: list[list[int]],
    inv_table: list[list[int]],
    arc_count: int,
    crossings: list[tuple[int, int, int, int]],
) -> list[tuple[int, ...]]:
    """All constraint-satisfying color tuples, lexicographically sorted.

    table / inv_table are 0-based n x n operation tables; crossings are
    (sign, over, under_in, under_out) with 0-based arc ids.  A +1 record
    constrains out = table[in][over]; a -1 record constrains
    out = inv_table[in][over] (equivalently in = table[out][over]).
    """
    if arc_count == 0:
        return [()]

    touching: list[list[int]] = [[] for _ in range(arc_count)]
    for idx, (sign, over, a_in, a_out) in enumerate(crossings):
        for arc in {over, a_in, a_out}:
            touching[arc].append(idx)

    colors = [-1] * arc_count
    results: list[tuple[int, ...]] = []

    def fwd(sign: int, x: int, y: int) -> int:
        return table[x][y] if sign > 0 else inv_table[x][y]

    def bwd(sign: int, x: int, y: int) -> int:
        return inv_table[x][y] if sign > 0 else table[x][y]

    def propagate(start_arc: int, trail: list[int]) -> bool:
        queue = [start_arc]
        while queue:
            arc = queue.pop()
            for ci in touching[arc]:
                sign, over, a_in, a_out = crossings[ci]
                c_over, c_in, c_out = colors[over], colors[a_in], colors[a_out]
                if c_over < 0:
                    continue
                if c_in >= 0 and c_out >= 0:
                    if fwd(sign, c_in, c_over) != c_out:
                        return False
                elif c_in >= 0:
                    colors[a_out] = fwd(sign, c_in, c_over)
                    trail.append(a_out)
                    queue.append(a_out)
                elif c_out >= 0:
                    colors[a_in] = bwd(sign, c_out, c_over)
                    trail.append(a_in)
                    queue.append(a_in)
        return True

    def dfs(arc: int) -> None:
        while arc < arc_count and colors[arc] >= 0:
            arc += 1
        if arc == arc_count:
            results.append(tuple(colors))
            return
        for color in range(n):
            trail = [arc]
            colors[arc] = color
            if propagate(arc, trail):
                dfs(arc + 1)
            for a in trail:
                colors[a] = -1

    dfs(0)
    results.sort()
    return results
