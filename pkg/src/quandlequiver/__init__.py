"""Quandle cocycle quiver invariants of oriented knots and links.

Computes quandle colorings, Boltzmann weights, the classical 2-cocycle
invariant, quiver-enhanced two-variable cocycle polynomials, and the
weighted-incidence-matrix invariants derived from them, over a bundled
corpus of prime knots through 8 crossings and prime links through 7.
"""

from .algebra import (
    Quandle,
    QuandleMap,
    enumerate_endomorphisms,
    is_endomorphism,
    quandle_from_text,
    quandle_inv_op,
    quandle_op,
    quandle_to_text,
    validate_quandle,
)
from .chain import (
    Cochain1,
    Cochain2,
    ZmMatrix,
    boundary_matrix,
    coboundary,
    cocycle_space,
    format_cochain,
    is_coboundary,
    is_cocycle,
    parse_cochain,
)
from .coloring import (
    Coloring,
    WeightPolynomial,
    apply_map_to_coloring,
    boltzmann_weight,
    cocycle_invariant,
    enumerate_colorings,
)
from .diagram import (
    Crossing,
    LinkDiagram,
    corpus_diagram,
    corpus_names,
    diagram_from_json,
    diagram_to_json,
    from_pd,
    load_corpus,
    validate_diagram,
)
from .matinv import (
    WeightedIncidenceMatrix,
    build_matrix,
    char_poly,
    elementary_ideals,
    rank_mod_p,
    smith_normal_form,
)
from .quiver import (
    CocycleQuiver,
    QuiverPolynomial,
    build_quiver,
    in_degree_polynomial,
    quiver_isomorphic,
    quiver_polynomial,
    specialize,
    to_dot,
)

__version__ = "0.1.0"

__all__ = [
    "Quandle",
    "QuandleMap",
    "validate_quandle",
    "quandle_op",
    "quandle_inv_op",
    "is_endomorphism",
    "enumerate_endomorphisms",
    "quandle_from_text",
    "quandle_to_text",
    "Cochain1",
    "Cochain2",
    "ZmMatrix",
    "boundary_matrix",
    "is_cocycle",
    "coboundary",
    "is_coboundary",
    "cocycle_space",
    "parse_cochain",
    "format_cochain",
    "Crossing",
    "LinkDiagram",
    "validate_diagram",
    "from_pd",
    "diagram_from_json",
    "diagram_to_json",
    "load_corpus",
    "corpus_names",
    "corpus_diagram",
    "Coloring",
    "WeightPolynomial",
    "enumerate_colorings",
    "boltzmann_weight",
    "cocycle_invariant",
    "apply_map_to_coloring",
    "CocycleQuiver",
    "QuiverPolynomial",
    "build_quiver",
    "quiver_polynomial",
    "specialize",
    "in_degree_polynomial",
    "quiver_isomorphic",
    "to_dot",
    "WeightedIncidenceMatrix",
    "build_matrix",
    "char_poly",
    "smith_normal_form",
    "rank_mod_p",
    "elementary_ideals",
]
