"""Coloring/cocycle quivers and the polynomial invariants read off them.

The quiver of (L, X, S) has one vertex per X-coloring of L and, for every
endomorphism f in S, one edge v -> f(v); vertices carry their Boltzmann
weights.  Free loops replicate each abstract coloring |X|^loops times
(the loop colors are acted on by f like arc colors), so vertex and edge
counts match the split-link conventions of the counting invariant.

Vertices are kept in canonical order (lexicographic on arc colors, then
loop colors) and edges in (source index, endomorphism index) order, so
every derived object is byte-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .algebra import Quandle, QuandleMap, is_endomorphism
from .chain import Cochain2, is_cocycle
from .coloring import Coloring, WeightPolynomial, boltzmann_weight, enumerate_colorings
from .diagram import LinkDiagram
from .errors import NonCocycle, NonEndomorphismInS, SizeLimitExceeded

ISO_MAX_VERTICES = 200


@dataclass(frozen=True)
class CocycleQuiver:
    """Weight-labeled directed multigraph over the colorings of a diagram."""

    vertices: tuple[Coloring, ...]
    loop_labels: tuple[tuple[int, ...], ...]  # free-loop colors, parallel to vertices
    weights: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]  # (source index, target index, endo index)
    endos: tuple[QuandleMap, ...]
    modulus: int

    def vertex_count(self) -> int:
        return len(self.vertices)

    def vertex_key(self, i: int) -> tuple[int, ...]:
        return self.vertices[i].colors + self.loop_labels[i]

    def out_degree(self, i: int) -> int:
        return sum(1 for e in self.edges if e[0] == i)

    def in_degree(self, i: int) -> int:
        return sum(1 for e in self.edges if e[1] == i)


@dataclass(frozen=True)
class QuiverPolynomial:
    """Multiset of (s-exponent, t-exponent) pairs over Z/m."""

    modulus: int
    terms: tuple[tuple[tuple[int, int], int], ...]  # ((a, b), multiplicity), sorted

    @staticmethod
    def from_dict(m: int, counts: dict[tuple[int, int], int]) -> "QuiverPolynomial":
        items = tuple(
            sorted(((a % m, b % m), c) for (a, b), c in counts.items() if c)
        )
        if any(c < 0 for _, c in items):
            raise ValueError("multiplicities must be positive")
        return QuiverPolynomial(m, items)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.terms)

    def total(self) -> int:
        return sum(c for _, c in self.terms)

    def text(self) -> str:
        """Canonical text, terms by (a, b) ascending, e.g. '6+12st+12s^2t^2'."""
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in self.terms:
            factors = ""
            if a:
                factors += "s" if a == 1 else f"s^{a}"
            if b:
                factors += "t" if b == 1 else f"t^{b}"
            if not factors:
                parts.append(str(c))
            else:
                parts.append(factors if c == 1 else f"{c}{factors}")
        return "+".join(parts)

    def to_json_dict(self) -> dict:
        return {"modulus": self.modulus, "terms": [[a, b, c] for (a, b), c in self.terms]}


def build_quiver(
    d: LinkDiagram, q: Quandle, S, phi: Cochain2
) -> CocycleQuiver:
    """Construct the cocycle quiver; with phi = 0 it is the plain coloring quiver."""
    endos = tuple(S)
    for f in endos:
        if not is_endomorphism(q, f):
            raise NonEndomorphismInS(f"{list(f.values)} is not an endomorphism")
    if not is_cocycle(q, phi):
        raise NonCocycle("the cochain fails the 2-cocycle condition")

    colorings = enumerate_colorings(d, q)
    base_weights = [boltzmann_weight(d, q, phi, v) for v in colorings]
    loop_space = list(product(range(1, q.size + 1), repeat=d.free_loops))

    vertices: list[Coloring] = []
    loop_labels: list[tuple[int, ...]] = []
    weights: list[int] = []
    index: dict[tuple[int, ...], int] = {}
    for v, w in zip(colorings, base_weights):
        for loops in loop_space:
            index[v.colors + loops] = len(vertices)
            vertices.append(v)
            loop_labels.append(loops)
            weights.append(w)

    edges = []
    for i in range(len(vertices)):
        for k, f in enumerate(endos):
            target_key = tuple(f(c) for c in vertices[i].colors) + tuple(
                f(c) for c in loop_labels[i]
            )
            edges.append((i, index[target_key], k))

    return CocycleQuiver(
        tuple(vertices),
        tuple(loop_labels),
        tuple(weights),
        tuple(edges),
        endos,
        phi.modulus,
    )


def quiver_polynomial(Q: CocycleQuiver) -> QuiverPolynomial:
    """sum over edges of s^weight(source) t^weight(target)."""
    counts: dict[tuple[int, int], int] = {}
    for src, dst, _ in Q.edges:
        key = (Q.weights[src], Q.weights[dst])
        counts[key] = counts.get(key, 0) + 1
    return QuiverPolynomial.from_dict(Q.modulus, counts)


def specialize(P: QuiverPolynomial, mode: str) -> WeightPolynomial:
    """t_to_1: sum multiplicities over the t exponent; diagonal_st: a+b mod m."""
    counts: dict[int, int] = {}
    if mode == "t_to_1":
        for (a, _), c in P.terms:
            counts[a] = counts.get(a, 0) + c
    elif mode == "diagonal_st":
        for (a, b), c in P.terms:
            e = (a + b) % P.modulus
            counts[e] = counts.get(e, 0) + c
    else:
        raise ValueError(f"unknown specialization mode {mode!r}")
    return WeightPolynomial.from_dict(P.modulus, counts)


@dataclass(frozen=True)
class CountPolynomial:
    """One-variable polynomial with non-negative integer exponents (no modulus)."""

    terms: tuple[tuple[int, int], ...]  # (exponent, multiplicity), sorted

    @staticmethod
    def from_dict(counts: dict[int, int]) -> "CountPolynomial":
        return CountPolynomial(tuple(sorted((e, c) for e, c in counts.items() if c)))

    def text(self) -> str:
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
        return {"terms": [[e, c] for e, c in self.terms]}


def in_degree_polynomial(Q: CocycleQuiver) -> CountPolynomial:
    """sum over vertices of s^in-degree(v)."""
    indeg = [0] * Q.vertex_count()
    for _, dst, _ in Q.edges:
        indeg[dst] += 1
    counts: dict[int, int] = {}
    for degree in indeg:
        counts[degree] = counts.get(degree, 0) + 1
    return CountPolynomial.from_dict(counts)


def _adjacency_multiset(Q: CocycleQuiver) -> dict[tuple[int, int], int]:
    mult: dict[tuple[int, int], int] = {}
    for src, dst, _ in Q.edges:
        mult[(src, dst)] = mult.get((src, dst), 0) + 1
    return mult


def quiver_isomorphic(
    Q1: CocycleQuiver, Q2: CocycleQuiver, use_weights: bool, max_vertices: int = ISO_MAX_VERTICES
) -> bool:
    """Exact digraph isomorphism with edge multiplicities (endo labels forgotten).

    When use_weights is set, the bijection must also preserve vertex
    weights.  Backtracking over a partition produced by iterated
    weight/degree refinement; worst case exponential, fine at desk scale.
    """
    n = Q1.vertex_count()
    if n != Q2.vertex_count() or len(Q1.edges) != len(Q2.edges):
        return False
    if use_weights and Q1.modulus != Q2.modulus:
        return False
    if n > max_vertices:
        raise SizeLimitExceeded(f"isomorphism search limited to {max_vertices} vertices")

    adj1, adj2 = _adjacency_multiset(Q1), _adjacency_multiset(Q2)

    def neighbor_lists(adj):
        out_nbrs = [[] for _ in range(n)]
        in_nbrs = [[] for _ in range(n)]
        for (s, t), c in adj.items():
            out_nbrs[s].append((t, c))
            in_nbrs[t].append((s, c))
        return out_nbrs, in_nbrs

    out1, in1 = neighbor_lists(adj1)
    out2, in2 = neighbor_lists(adj2)

    # refine both graphs against a shared signature table so the integer
    # colors are comparable across them
    col1 = [Q1.weights[i] if use_weights else 0 for i in range(n)]
    col2 = [Q2.weights[i] if use_weights else 0 for i in range(n)]
    for _ in range(n):
        table: dict = {}

        def next_colors(colors, out_nbrs, in_nbrs):
            new = []
            for i in range(n):
                sig = (
                    colors[i],
                    tuple(sorted((c, colors[t]) for t, c in out_nbrs[i])),
                    tuple(sorted((c, colors[s]) for s, c in in_nbrs[i])),
                )
                new.append(table.setdefault(sig, len(table)))
            return new

        new1 = next_colors(col1, out1, in1)
        new2 = next_colors(col2, out2, in2)
        if new1 == col1 and new2 == col2:
            break
        col1, col2 = new1, new2

    if sorted(col1) != sorted(col2):
        return False

    class_size = {c: col1.count(c) for c in set(col1)}
    order = sorted(range(n), key=lambda i: (class_size[col1[i]], col1[i], i))
    mapping = [-1] * n
    used = [False] * n

    inv_mapping = [-1] * n

    def feasible_full(i: int, j: int) -> bool:
        if col1[i] != col2[j]:
            return False
        for t, c in out1[i]:
            jt = mapping[t]
            if jt >= 0 and adj2.get((j, jt), 0) != c:
                return False
        for s, c in in1[i]:
            js = mapping[s]
            if js >= 0 and adj2.get((js, j), 0) != c:
                return False
        for t, c in out2[j]:
            it = inv_mapping[t]
            if it >= 0 and adj1.get((i, it), 0) != c:
                return False
        for s, c in in2[j]:
            isrc = inv_mapping[s]
            if isrc >= 0 and adj1.get((isrc, i), 0) != c:
                return False
        return True

    def backtrack(k: int) -> bool:
        if k == n:
            return True
        i = order[k]
        for j in range(n):
            if used[j] or not feasible_full(i, j):
                continue
            mapping[i] = j
            inv_mapping[j] = i
            used[j] = True
            if backtrack(k + 1):
                return True
            mapping[i] = -1
            inv_mapping[j] = -1
            used[j] = False
        return False

    return backtrack(0)


def to_dot(Q: CocycleQuiver) -> str:
    """Deterministic DOT text: labels 'v<i> [w=<weight>]', one line per edge."""
    lines = ["digraph quiver {"]
    for i in range(Q.vertex_count()):
        lines.append(f'  v{i} [label="v{i} [w={Q.weights[i]}]"];')
    for src, dst, _ in Q.edges:
        lines.append(f"  v{src} -> v{dst};")
    lines.append("}")
    return "\n".join(lines) + "\n"
