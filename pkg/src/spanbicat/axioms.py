"""Checkers for separability, Frobenius, Beck conditions for pullbacks,
comonadicity of maps and discreteness of the hom-categories of maps.

Every checker returns an :class:`~spanbicat.report.AxiomReport`. Checkers
that compute a witness also accept a candidate witness in its place; the
candidate is then validated instead (that is how corrupted witnesses are fed
in).
"""

from itertools import product as _pairs

from . import finset, sweep
from .adjunctions import (
    GSquare,
    is_map,
    make_adjunction,
    map_from_function,
    mate,
    pullback_square,
)
from .comonads import (
    check_em_universal,
    comparison_to_em,
    find_copoint,
)
from .errors import BoundaryError, NotAMapError
from .local import is_mono, is_product_diagram, to_terminal
from .report import combine, failed, passed
from .spans import (
    compose_spans,
    find_iso,
    id_span,
    identity_cell,
    opposite,
    tensor_cells,
    two_cells,
    vertical_compose,
    whisker,
)


def _diag(A):
    return map_from_function(finset.diagonal(A))


def _judge_iso(subject, cell, source, target, bounded=False, **details):
    """Verdict on a candidate invertible 2-cell ``source -> target``."""
    if cell.source != source or cell.target != target:
        return failed(subject, {"reason": "witness has the wrong boundary", "witness": cell},
                      bounded=bounded, **details)
    problem = cell.problem()
    if problem:
        return failed(subject, {"reason": problem, "witness": cell}, bounded=bounded, **details)
    if not finset.is_bijection(cell.map):
        return failed(subject, {"reason": "witness is not a bijection", "witness": cell},
                      bounded=bounded, **details)
    return passed(subject, cell, bounded=bounded, **details)


def separable_unit(A):
    """``eta_d: 1_A -> d ; d*`` for the diagonal of ``A``."""
    return make_adjunction(_diag(A)).unit


def separable_square(A):
    """The square with ``1_A`` on top and left and ``d_A`` on the right and bottom."""
    d = _diag(A)
    one = id_span(A)
    fill = find_iso(compose_spans(one, d), compose_spans(one, d))
    return GSquare(one, d, one, d, fill)


def check_separable(A, unit=None):
    subject = f"separable |A|={A.size}"
    d = _diag(A)
    expected = separable_unit(A)
    cell = unit if unit is not None else expected
    rep = _judge_iso(subject, cell, id_span(A), compose_spans(d, opposite(d)),
                     apex=expected.target.apex.size)
    if rep.holds and unit is None:
        # the Beck mate of the defining square is the unit up to unitors
        if not mate(separable_square(A)).is_iso():
            return failed(subject, {"reason": "mate of the diagonal square is not invertible"})
    return rep


def frobenius_square(A):
    """Pullback of ``d x A`` and ``A x d`` (both ``A x A -> A x A x A``)."""
    iA = finset.identity(A)
    dA = finset.diagonal(A)
    a = map_from_function(finset.product_map(dA, iA))
    b = map_from_function(finset.product_map(iA, dA))
    return pullback_square(a, b)


def check_frobenius(A, witness=None):
    subject = f"Frobenius |A|={A.size}"
    square, cone = frobenius_square(A)
    d = finset.diagonal(A)
    if cone.apex.size != A.size or any(leg != d for leg in cone.legs):
        return failed(subject, {"reason": "pullback of the Frobenius cospan is not A",
                                "apex": cone.apex.size})
    expected = mate(square)
    cell = witness if witness is not None else expected
    return _judge_iso(subject, cell, expected.source, expected.target,
                      apex=expected.source.apex.size)


def check_discrete(A):
    return combine(f"discrete |A|={A.size}", [check_separable(A), check_frobenius(A)])


def check_beck_pullback(a, b, witness=None):
    """Mate ``r* ; p -> b ; a*`` of the pullback square of ``a: N -> A <- M: b``."""
    if a.tgt != b.tgt:
        raise BoundaryError("Beck check needs a cospan")
    subject = f"Beck pullback {a.src.size}->{a.tgt.size}<-{b.src.size}"
    square, cone = pullback_square(a, b)
    expected = mate(square)
    if find_iso(compose_spans(opposite(square.top), square.left),
                compose_spans(b, opposite(a))) is None:
        return failed(subject, {"reason": "p r* and a* b are not isomorphic"})
    cell = witness if witness is not None else expected
    return _judge_iso(subject, cell, expected.source, expected.target, apex=cone.apex.size)


def _reflection_sweep(g, bound):
    """Postcomposing with ``g`` reflects isos and is faithful on 2-cells between
    spans ``1 -> X`` with apex <= bound."""
    X = g.src
    one = finset.FiniteSet(1)
    tests = list(sweep.spans_up_to_iso(one, X, bound))
    cells = 0
    for R in tests:
        for S in tests:
            if R.apex.size > S.apex.size:
                continue
            seen = {}
            for alpha in two_cells(R, S):
                cells += 1
                w = whisker(alpha, g)
                if w.is_iso() and not alpha.is_iso():
                    return {"reason": "g does not reflect an iso", "cell": alpha}, cells
                if w.map.table in seen:
                    return {"reason": "g is not faithful", "cells": [seen[w.map.table], alpha]}, cells
                seen[w.map.table] = alpha
    return None, cells


def check_maps_comonadic(g, bound=4, em_bound=2, sweep_bound=3):
    """EM comparison for ``G = g* ; g`` plus isomorphism reflection (bounded)."""
    if not is_map(g):
        raise NotAMapError("comonadicity is checked for maps only")
    subject = f"map comonadic {g.src.size}->{g.tgt.size}"
    K, em = comparison_to_em(g)
    if not finset.is_bijection(K):
        return failed(subject, {"reason": "comparison is not a bijection", "comparison": K},
                      bounded=True)
    uni = check_em_universal(em, min(em_bound, bound))
    if not uni.holds:
        return failed(subject, uni.counterexample, bounded=True)
    bad, cells = _reflection_sweep(g, min(sweep_bound, bound))
    if bad:
        return failed(subject, bad, bounded=True)
    return passed(subject, em.mate(), bounded=True, em_object=em.object.size,
                  comparison=list(K.table), cells_swept=cells)


def check_hom_discreteness(X, A):
    """At most one 2-cell between parallel maps ``X -> A``, and it is invertible."""
    subject = f"maps {X.size}->{A.size} locally discrete"
    maps = list(sweep.maps_between(X, A))
    pairs = 0
    for f, h in _pairs(maps, repeat=2):
        cells = two_cells(f, h)
        pairs += 1
        if len(cells) > 1:
            return failed(subject, {"reason": "two 2-cells", "cells": cells[:2]})
        if cells and not cells[0].is_iso():
            return failed(subject, {"reason": "2-cell not invertible", "cell": cells[0]})
        if cells and f != h:
            return failed(subject, {"reason": "2-cell between distinct maps", "cell": cells[0]})
    return passed(subject, [identity_cell(f) for f in maps], maps=len(maps),
                  pairs=pairs)


def check_closure_properties(A, B):
    """Separable and Frobenius for ``A x B``, and ``eta_{A x B}`` is ``eta_A x eta_B``."""
    AB, _, _ = finset.product(A, B)
    subject = f"closure under products {A.size}x{B.size}"
    parts = [check_separable(AB), check_frobenius(AB)]
    eta = tensor_cells(separable_unit(A), separable_unit(B))
    target = separable_unit(AB)
    # middle-four interchange: (d_A;d_A*) x (d_B;d_B*) ~ d_AB ; d_AB*
    if eta.source != target.source:
        return failed(subject, {"reason": "1_A x 1_B differs from 1_AxB"})
    iso = find_iso(eta.target, target.target)
    if iso is None:
        return failed(subject, {"reason": "no interchange iso"})
    if vertical_compose(eta, iso) != target:
        return failed(subject, {"reason": "tensor of units differs from the unit",
                                "tensor": eta, "unit": target})
    parts.append(passed(f"unit of {AB.size} is the tensor of units", iso))
    return combine(subject, parts)


# The five equivalent forms of separability

def sep_unit_invertible(A):
    return check_separable(A).holds


def _parallel_tests(X, A, max_apex):
    return list(sweep.spans_up_to_iso(X, A, max_apex))


def sep_maps_self_product(A, max_dom=2, max_apex=2):
    """``f <- f -> f`` is a product for every map ``f: X -> A``."""
    for n in range(max_dom + 1):
        X = finset.FiniteSet(n)
        tests = _parallel_tests(X, A, max_apex)
        for f in sweep.maps_between(X, A):
            one = identity_cell(f)
            if is_product_diagram(f, one, one, tests) is not None:
                return False
    return True


def sep_identity_self_product(A, max_apex=3):
    one = identity_cell(id_span(A))
    return is_product_diagram(id_span(A), one, one, _parallel_tests(A, A, max_apex)) is None


def sep_identity_mono(A, max_apex=3):
    return is_mono(to_terminal(id_span(A)), _parallel_tests(A, A, max_apex)) is None


def sep_copointed_products(A, max_g=3, max_apex=2):
    """``G <- G -> 1_A`` is a product for every copointed ``G`` with apex <= max_g."""
    tests = _parallel_tests(A, A, max_apex)
    for G in sweep.equal_leg_spans(A, max_g):
        eps = find_copoint(G)
        if is_product_diagram(G, identity_cell(G), eps, tests) is not None:
            return False
    return True


SEPARABILITY_FORMS = {
    "unit invertible": sep_unit_invertible,
    "maps are self-products": sep_maps_self_product,
    "identity is a self-product": sep_identity_self_product,
    "identity is subterminal": sep_identity_mono,
    "copointed spans split off": sep_copointed_products,
}


def separability_forms(A):
    return {name: pred(A) for name, pred in SEPARABILITY_FORMS.items()}


def check_separability_forms(A):
    forms = separability_forms(A)
    subject = f"separability forms agree |A|={A.size}"
    if len(set(forms.values())) != 1:
        return failed(subject, forms, bounded=True)
    return passed(subject, forms, bounded=True)


__all__ = [
    "check_separable", "check_frobenius", "check_discrete", "check_beck_pullback",
    "check_maps_comonadic", "check_hom_discreteness", "check_closure_properties",
    "separable_unit", "separable_square", "frobenius_square", "separability_forms",
    "check_separability_forms", "SEPARABILITY_FORMS",
]
