"""Finite products inside each hom-category ``B(X, A)`` and how they relate to
the tensor.

A hom-category of spans is the slice over ``X x A``, so the local product of
``R`` and ``S`` is the pullback of their apexes over ``X x A`` and the local
terminal object is ``X <- X x A -> A``.
"""

from dataclasses import dataclass

from . import finset, kernels, sweep
from .adjunctions import (
    GSquare,
    make_adjunction,
    map_from_function,
    paste_horizontal,
    transpose_cell_right,
)
from .errors import BoundaryError
from .spans import (
    Span,
    SpanMorphism,
    compose_path,
    compose_spans,
    compose_with_cone,
    count_two_cells,
    find_iso,
    graph,
    id_span,
    iso_by_key,
    left_unitor,
    opposite,
    right_unitor,
    tensor,
    two_cells,
    vertical_path,
    whisker,
    whisker_left,
)


@dataclass(frozen=True)
class LocalProduct:
    product: Span
    pi: SpanMorphism
    rho: SpanMorphism

    def pairing(self, alpha, beta):
        """The unique ``T -> R ^ S`` whose projections are ``alpha`` and ``beta``."""
        if alpha.source != beta.source:
            raise BoundaryError("pairing needs 2-cells out of the same span")
        T = alpha.source
        p, q = self.pi.map, self.rho.map
        index = kernels.pair_index(p.table, q.table, q.cod.size)
        table = kernels.lookup_pairs(index, alpha.map.table, beta.map.table, q.cod.size)
        return SpanMorphism(T, self.product, finset.FiniteFunction(T.apex, self.product.apex, table))


def _check_parallel(R, S):
    if R.src != S.src or R.tgt != S.tgt:
        raise BoundaryError("local operations need parallel spans")


def legs_map(R):
    """``<left, right>: apex -> X x A``."""
    return finset.pair(R.left, R.right)


def local_product(R, S):
    _check_parallel(R, S)
    cone = finset.pullback(legs_map(R), legs_map(S))
    p, q = cone.legs
    P = Span(finset.compose_fn(p, R.left), finset.compose_fn(p, R.right))
    return LocalProduct(P, SpanMorphism(P, R, p), SpanMorphism(P, S, q))


def local_terminal(X, A):
    P, p1, p2 = finset.product(X, A)
    return Span(p1, p2)


def to_terminal(R):
    """The unique 2-cell ``R -> T(X, A)``."""
    top = local_terminal(R.src, R.tgt)
    return SpanMorphism(R, top, legs_map(R))


def local_product_via_tensor(R, S):
    """``d_X ; (R (x) S) ; d_A*``."""
    _check_parallel(R, S)
    dX = map_from_function(finset.diagonal(R.src))
    dA = map_from_function(finset.diagonal(R.tgt))
    return compose_path(dX, tensor(R, S), opposite(dA))


def via_tensor_iso(R, S):
    """The structural iso ``R ^ S -> d_X ; (R (x) S) ; d_A*``."""
    lp = local_product(R, S)
    dX = map_from_function(finset.diagonal(R.src))
    dA = map_from_function(finset.diagonal(R.tgt))
    RS = tensor(R, S)
    first, p1, q1 = compose_with_cone(dX, RS)
    whole, p2, q2 = compose_with_cone(first, opposite(dA))
    ns = S.apex.size
    key_tgt = [q1.table[p2.table[k]] for k in range(whole.apex.size)]
    p, q = lp.pi.map.table, lp.rho.map.table
    key_src = [p[k] * ns + q[k] for k in range(lp.product.apex.size)]
    return iso_by_key(lp.product, whole, key_src, key_tgt)


def comparison_square(R, S):
    """Square ``d_X`` over ``d_A`` from ``R ^ S`` to ``R (x) S``; the fill is the
    mate of :func:`via_tensor_iso` along ``d_A -| d_A*``."""
    dX = map_from_function(finset.diagonal(R.src))
    dA = map_from_function(finset.diagonal(R.tgt))
    iso = via_tensor_iso(R, S)
    fill = transpose_cell_right(make_adjunction(dA), iso, compose_spans(dX, tensor(R, S)))
    return GSquare(dX, dA, iso.source, tensor(R, S), fill)


def tensor_projection_square(R, S, first=True):
    """Square ``p_{X,X}`` over ``p_{A,A}`` from ``R (x) S`` to ``R`` (or to ``S``)."""
    X, A = R.src, R.tgt
    _, px1, px2 = finset.product(X, X)
    _, pa1, pa2 = finset.product(A, A)
    px, pa = (px1, pa1) if first else (px2, pa2)
    target = R if first else S
    RS = tensor(R, S)
    top, bottom = graph(px), graph(pa)
    src, sp, _ = compose_with_cone(RS, bottom)
    tgt, tp, tq = compose_with_cone(top, target)
    ns, nx = S.apex.size, X.size
    key_src = []
    for k in sp.table:
        r, s = divmod(k, ns)
        key_src.append((R.left.table[r] * nx + S.left.table[s], r if first else s))
    key_tgt = list(zip(tp.table, tq.table))
    return GSquare(top, bottom, RS, target, _cell_by_keys(src, tgt, key_src, key_tgt))


def _cell_by_keys(source, target, key_src, key_tgt):
    where = {k: j for j, k in enumerate(key_tgt)}
    table = tuple(where[k] for k in key_src)
    return SpanMorphism(source, target, finset.FiniteFunction(source.apex, target.apex, table))


def recovered_projection(R, S, first=True):
    """Paste the comparison square with a tensor projection square and strip the
    unit isos ``d ; p = 1``; the result should be the local projection."""
    sq = paste_horizontal(comparison_square(R, S), tensor_projection_square(R, S, first))
    K = sq.left
    target = R if first else S
    unit_a = _diag_proj_iso(sq.bottom)   # d_A ; p_A  ->  1_A
    unit_x = _diag_proj_iso(sq.top)      # d_X ; p_X  ->  1_X
    return vertical_path(
        right_unitor(K).inverse(),
        whisker_left(K, unit_a.inverse()),
        sq.fill,
        whisker(unit_x, target),
        left_unitor(target),
    )


def _diag_proj_iso(m):
    """``m`` is a map whose underlying function is an identity; iso to ``1``."""
    iso = find_iso(m, id_span(m.src))
    if iso is None:
        raise BoundaryError("expected a map isomorphic to an identity")
    return iso


def is_product_diagram(P, pi, rho, tests):
    """Brute-force universal property of ``R <-pi- P -rho-> S`` against test spans.

    Returns ``None`` if every test span ``T`` has ``gamma -> (gamma.pi, gamma.rho)``
    a bijection from ``T -> P`` onto pairs of 2-cells, else a counterexample dict.
    """
    R, S = pi.target, rho.target
    for T in tests:
        n_r = count_two_cells(T, R)
        n_s = count_two_cells(T, S)
        gammas = two_cells(T, P)
        seen = set()
        for g in gammas:
            key = (kernels.compose_tables(g.map.table, pi.map.table),
                   kernels.compose_tables(g.map.table, rho.map.table))
            if key in seen:
                return {"test_span": T, "reason": "two pairings share projections",
                        "projections": key}
            seen.add(key)
        if len(seen) != n_r * n_s:
            return {"test_span": T, "reason": "some pair of 2-cells has no pairing",
                    "pairings": len(seen), "pairs": n_r * n_s}
    return None


def is_mono(m, tests):
    """``m: R -> S`` is a monomorphism in the hom-category (checked on ``tests``)."""
    for T in tests:
        seen = {}
        for a in two_cells(T, m.source):
            key = kernels.compose_tables(a.map.table, m.map.table)
            if key in seen:
                return {"test_span": T, "cells": (seen[key], a.map.table)}
            seen[key] = a.map.table
    return None


def parallel_test_spans(X, A, max_apex):
    return list(sweep.spans_up_to_iso(X, A, max_apex))


def is_subterminal(R, extra=2):
    """At most one 2-cell into ``R`` from every parallel span with apex <= |R| + extra."""
    for T in sweep.spans_up_to_iso(R.src, R.tgt, R.apex.size + extra):
        if count_two_cells(T, R) > 1:
            return False
    return True
