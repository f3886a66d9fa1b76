"""Oriented link diagrams: signed crossing records, PD import, corpus.

The native format is a list of signed crossing records over numbered arcs
(1-based).  Each record stores the over arc, the arc entering the crossing
along the understrand orientation (under_in) and the arc exiting it
(under_out).  The coloring constraint attached to a record is fixed once
and for all:

  sign +1:  color(under_out) = color(under_in) > color(over)
  sign -1:  color(under_in)  = color(under_out) > color(over)

PD import follows the usual convention: a tuple (a, b, c, d) lists the
four incident edges counterclockwise starting from the incoming under
edge a, so the understrand runs a -> c and the over strand occupies b and
d.  Edge succession (out-edge = in-edge + 1 inside a component, wrapping
at the component's last edge) orients the over strand; the crossing sign
is +1 when the over strand runs d -> b and -1 when it runs b -> d.  Edges
are then merged into arcs across over-passes.

A free loop is a crossing-free component; free loops are carried as a
count, not as arcs (each contributes a factor of |X| to coloring counts
and Boltzmann weight 0).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .errors import (
    AmbiguousOrientation,
    ArcUnderUseCount,
    MalformedPD,
    OutOfRangeArc,
)


@dataclass(frozen=True)
class Crossing:
    sign: int
    over: int
    under_in: int
    under_out: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise OutOfRangeArc(f"crossing sign must be +1 or -1, got {self.sign}")


@dataclass(frozen=True)
class LinkDiagram:
    arc_count: int
    crossings: tuple[Crossing, ...]
    free_loops: int = 0
    name: str = field(default="", compare=False)

    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def arc_components(self) -> list[int]:
        """Component index (0-based) of each arc, following under-strand succession."""
        succ = {c.under_in: c.under_out for c in self.crossings}
        comp = [-1] * self.arc_count
        current = 0
        for start in range(1, self.arc_count + 1):
            if comp[start - 1] >= 0:
                continue
            arc = start
            while comp[arc - 1] < 0:
                comp[arc - 1] = current
                arc = succ[arc]
            current += 1
        return comp

    def component_count(self) -> int:
        comps = self.arc_components()
        return (max(comps) + 1 if comps else 0) + self.free_loops


def validate_diagram(
    crossings, arc_count: int, free_loops: int = 0, name: str = ""
) -> LinkDiagram:
    """Check arc-usage invariants and return the immutable diagram.

    Every arc id must lie in {1..arc_count} and appear exactly once as
    under_in and exactly once as under_out across all crossings; over arcs
    only need to be in range.
    """
    recs = tuple(
        c if isinstance(c, Crossing) else Crossing(*c) for c in crossings
    )
    if arc_count < 0 or free_loops < 0:
        raise OutOfRangeArc("arc_count and free_loops must be non-negative")
    in_count = [0] * (arc_count + 1)
    out_count = [0] * (arc_count + 1)
    for c in recs:
        for arc in (c.over, c.under_in, c.under_out):
            if not 1 <= arc <= arc_count:
                raise OutOfRangeArc(f"arc {arc} outside 1..{arc_count}")
        in_count[c.under_in] += 1
        out_count[c.under_out] += 1
    for arc in range(1, arc_count + 1):
        if in_count[arc] != 1 or out_count[arc] != 1:
            raise ArcUnderUseCount(arc, in_count[arc], out_count[arc])
    return LinkDiagram(arc_count, recs, free_loops, name)


def from_pd(pd, component_ranges=None, name: str = "") -> LinkDiagram:
    """Convert a PD code (list of 4-tuples) to a validated LinkDiagram.

    component_ranges, when given, is a list of (first_edge, last_edge)
    pairs declaring each component's consecutive edge interval; wraparound
    is then exact.  Without it a table-numbering heuristic is used: the
    over pair (b, d) with |b - d| = 1 runs from the smaller edge to the
    larger, and with |b - d| > 1 the larger edge is treated as incoming
    (the wraparound of a consecutively numbered component).
    """
    tuples = [tuple(int(x) for x in t) for t in pd]
    if any(len(t) != 4 for t in tuples):
        raise MalformedPD("every PD entry must have exactly 4 edge labels")
    counts: dict[int, int] = {}
    for t in tuples:
        for e in t:
            counts[e] = counts.get(e, 0) + 1
    for e, k in sorted(counts.items()):
        if k != 2:
            raise MalformedPD(f"edge label {e} appears {k} times, expected 2")

    succ_by_range = None
    if component_ranges is not None:
        succ_by_range = {}
        covered = set()
        for first, last in component_ranges:
            if last < first:
                raise MalformedPD(f"bad component range ({first}, {last})")
            for e in range(first, last + 1):
                if e in covered:
                    raise MalformedPD(f"edge {e} in two component ranges")
                covered.add(e)
                succ_by_range[e] = e + 1 if e < last else first
        if covered != set(counts):
            raise MalformedPD("component ranges do not cover the PD edge set")

    # Orient the over strands.  An edge terminates at exactly one crossing
    # (where it is under-in or over-in) and starts at exactly one (under-out
    # or over-out); the under passes force a partial succession map, and
    # most over pairs are then decided by where their edges already start
    # or terminate.  Anything still open falls back to the numbering
    # convention (with ranges: the consecutive pair; without: the
    # min->max / wraparound heuristic).
    succ: dict[int, int] = {}
    pred: dict[int, int] = {}

    def record(e_in: int, e_out: int) -> None:
        if e_in in succ or e_out in pred:
            raise MalformedPD(f"edges ({e_in} -> {e_out}) overdetermine the succession")
        succ[e_in] = e_out
        pred[e_out] = e_in

    for a, b, c, d in tuples:
        record(a, c)

    pending: list[int] = list(range(len(tuples)))
    over_dir: dict[int, tuple[int, int]] = {}

    def decide(idx: int) -> tuple[int, int] | None:
        _, b, _, d = tuples[idx]
        if b == d:
            raise AmbiguousOrientation(f"over strand uses edge {b} twice")
        b_ends_here = b in succ or d in pred
        d_ends_here = d in succ or b in pred
        if b_ends_here and d_ends_here:
            raise MalformedPD(f"over pair ({b}, {d}) inconsistent with the under passes")
        if b_ends_here:
            return d, b
        if d_ends_here:
            return b, d
        return None

    progress = True
    while pending and progress:
        progress = False
        still = []
        for idx in pending:
            direction = decide(idx)
            if direction is None:
                still.append(idx)
                continue
            over_dir[idx] = direction
            record(*direction)
            progress = True
        pending = still

    for idx in pending:
        _, b, _, d = tuples[idx]
        if succ_by_range is not None:
            b_next = succ_by_range.get(b) == d
            d_next = succ_by_range.get(d) == b
            if b_next and d_next:
                raise AmbiguousOrientation(
                    f"over pair ({b}, {d}) is ambiguous even with component ranges"
                )
            if b_next:
                direction = (b, d)
            elif d_next:
                direction = (d, b)
            else:
                raise MalformedPD(f"over pair ({b}, {d}) not consecutive in any component")
        elif abs(b - d) == 1:
            direction = (b, d) if b < d else (d, b)
        else:
            direction = (b, d) if b > d else (d, b)
        over_dir[idx] = direction
        record(*direction)

    oriented = []  # (a, c, over_in, over_out, sign)
    for idx, (a, b, c, d) in enumerate(tuples):
        over_in, over_out = over_dir[idx]
        sign = 1 if (over_in, over_out) == (d, b) else -1
        oriented.append((a, c, over_in, over_out, sign))

    # when ranges are supplied, the succession they define must agree
    if succ_by_range is not None and succ != succ_by_range:
        raise MalformedPD("edge succession contradicts the component ranges")
    if set(succ) != set(counts) or set(pred) != set(counts):
        bad = sorted(set(counts) - set(succ))
        raise AmbiguousOrientation(
            f"edge succession is not a permutation (unmatched edges {bad}); "
            "pass component_ranges"
        )

    # merge edges into arcs: over-passes keep the arc alive, under-passes cut it
    parent = {e: e for e in counts}

    def find(e: int) -> int:
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for a, c, over_in, over_out, sign in oriented:
        ra, rb = find(over_in), find(over_out)
        parent[ra] = rb

    rep_min: dict[int, int] = {}
    for e in counts:
        r = find(e)
        rep_min[r] = min(rep_min.get(r, e), e)
    arc_id = {
        r: idx
        for idx, (r, _) in enumerate(sorted(rep_min.items(), key=lambda kv: kv[1]), start=1)
    }

    crossings = [
        Crossing(sign, arc_id[find(over_in)], arc_id[find(a)], arc_id[find(c)])
        for a, c, over_in, over_out, sign in oriented
    ]
    try:
        return validate_diagram(crossings, len(arc_id), 0, name)
    except ArcUnderUseCount as exc:
        raise AmbiguousOrientation(
            f"PD import produced an invalid diagram ({exc}); a component may never pass under"
        ) from exc


def diagram_to_json(d: LinkDiagram) -> dict:
    return {
        "name": d.name,
        "arcs": d.arc_count,
        "free_loops": d.free_loops,
        "crossings": [
            {"sign": c.sign, "over": c.over, "under_in": c.under_in, "under_out": c.under_out}
            for c in d.crossings
        ],
    }


def diagram_from_json(obj: dict) -> LinkDiagram:
    """Build a diagram from either JSON form (crossing records or PD code)."""
    name = obj.get("name", "")
    if "pd" in obj:
        ranges = obj.get("components")
        ranges = [tuple(r) for r in ranges] if ranges is not None else None
        return from_pd(obj["pd"], ranges, name)
    crossings = [
        Crossing(c["sign"], c["over"], c["under_in"], c["under_out"])
        for c in obj.get("crossings", [])
    ]
    return validate_diagram(crossings, obj["arcs"], obj.get("free_loops", 0), name)


def load_corpus(path: str | None = None) -> list[LinkDiagram]:
    """Load and revalidate a corpus file (JSON array of diagram objects).

    With no path, loads the bundled table of prime knots through 8
    crossings and prime links through 7 crossings.
    """
    if path is None:
        text = resources.files("quandlequiver").joinpath("data/corpus.json").read_text()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    return [diagram_from_json(obj) for obj in json.loads(text)]


_corpus_cache: dict[str, LinkDiagram] | None = None


def _corpus_index() -> dict[str, LinkDiagram]:
    global _corpus_cache
    if _corpus_cache is None:
        _corpus_cache = {d.name: d for d in load_corpus()}
    return _corpus_cache


def corpus_names() -> list[str]:
    return list(_corpus_index())


def corpus_diagram(name: str) -> LinkDiagram:
    try:
        return _corpus_index()[name]
    except KeyError:
        raise KeyError(f"no corpus diagram named {name!r}; see corpus_names()") from None
