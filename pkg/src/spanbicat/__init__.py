"""Executable model of the bicategory of spans of finite sets."""

from .errors import BoundaryError, NotAMapError, PreconditionError, SpanError
from .finset import (
    Cone,
    FiniteFunction,
    FiniteSet,
    compose_fn,
    coproduct,
    copair,
    equalizer,
    inverse,
    is_bijection,
    pair,
    product,
    pullback,
)
from .spans import (
    CanonicalIso,
    Span,
    SpanMorphism,
    compose_spans,
    find_iso,
    graph,
    id_span,
    opposite,
    span,
    tensor,
    vertical_compose,
    whisker,
    whisker_left,
)
from .adjunctions import (
    Adjunction,
    GSquare,
    function_from_map,
    is_map,
    make_adjunction,
    map_from_function,
    mate,
    paste,
    reflects_map,
)
from .local import (
    LocalProduct,
    is_subterminal,
    local_product,
    local_product_via_tensor,
    local_terminal,
)
from .report import AxiomReport
from .axioms import (
    check_beck_pullback,
    check_closure_properties,
    check_discrete,
    check_frobenius,
    check_hom_discreteness,
    check_maps_comonadic,
    check_separable,
    check_separability_forms,
)
from .comonads import (
    Comonad,
    EMObject,
    Tabulation,
    check_wedge_of_copointed,
    comultiplication,
    d_arrow_equations_hold,
    em_object,
    find_copoint,
    g_of_r,
    tabulate,
)
from .equiv import (
    MapSpan,
    MapSpanMorphism,
    check_pseudofunctoriality,
    check_roundtrips,
    functor_c,
    functor_c_on_2cells,
    functor_f,
)
from .direct_sums import (
    SpanMatrix,
    canonical_sum_to_product,
    codiagonal_is_map,
    direct_sum_hom_equivalence,
    injection_spans,
    matrix_compose,
    matrix_of_span,
    span_of_matrix,
    zero_object_check,
)
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BoundaryError", "NotAMapError", "PreconditionError", "SpanError", "Cone",
    "FiniteFunction", "FiniteSet", "compose_fn", "coproduct", "copair", "equalizer",
    "inverse", "is_bijection", "pair", "product", "pullback", "CanonicalIso", "Span",
    "SpanMorphism", "compose_spans", "find_iso", "graph", "id_span", "opposite", "span",
    "tensor", "vertical_compose", "whisker", "whisker_left", "Adjunction", "GSquare",
    "function_from_map", "is_map", "make_adjunction", "map_from_function", "mate",
    "paste", "reflects_map", "LocalProduct", "is_subterminal", "local_product",
    "local_product_via_tensor", "local_terminal", "AxiomReport", "check_beck_pullback",
    "check_closure_properties", "check_discrete", "check_frobenius",
    "check_hom_discreteness", "check_maps_comonadic", "check_separable",
    "check_separability_forms", "Comonad", "EMObject", "Tabulation",
    "check_wedge_of_copointed", "comultiplication", "d_arrow_equations_hold",
    "em_object", "find_copoint", "g_of_r", "tabulate", "MapSpan", "MapSpanMorphism",
    "check_pseudofunctoriality", "check_roundtrips", "functor_c", "functor_c_on_2cells",
    "functor_f", "SpanMatrix", "canonical_sum_to_product", "codiagonal_is_map",
    "direct_sum_hom_equivalence", "injection_spans", "matrix_compose", "matrix_of_span",
    "span_of_matrix", "zero_object_check", "BACKEND",
    "__version__",
]
