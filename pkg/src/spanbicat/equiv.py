"""Spans of maps and the comparison with spans: ``C(y, N, b) = y* ; b`` and
its pseudo-inverse ``F`` read off a tabulation.

A :class:`MapSpan` keeps the two functions of a span in the category of
maps; ``C`` sends it to a 1-cell by composing an opposite map with a map,
and ``F`` goes back by tabulating.
"""

from dataclasses import dataclass

from . import finset
from .adjunctions import make_adjunction, mate, pullback_square
from .comonads import tabulate
from .errors import BoundaryError, PreconditionError
from .finset import FiniteFunction
from .report import failed, passed
from .spans import (
    Span,
    SpanMorphism,
    as_iso,
    associator,
    compose_spans,
    compose_with_cone,
    find_iso,
    graph,
    horizontal,
    id_span,
    iso_by_key,
    opposite,
    opposite_cell,
    right_unitor,
    vertical_path,
    whisker,
    whisker_left,
)


@dataclass(frozen=True)
class MapSpan:
    left: FiniteFunction
    right: FiniteFunction

    def __post_init__(self):
        if self.left.dom != self.right.dom:
            raise BoundaryError("a span of maps needs a common apex")

    @property
    def apex(self):
        return self.left.dom

    @property
    def src(self):
        return self.left.cod

    @property
    def tgt(self):
        return self.right.cod


@dataclass(frozen=True)
class MapSpanMorphism:
    source: MapSpan
    target: MapSpan
    h: FiniteFunction

    def __post_init__(self):
        if self.h.dom != self.source.apex or self.h.cod != self.target.apex:
            raise BoundaryError("h must go between the apexes")
        if finset.compose_fn(self.h, self.target.left) != self.source.left:
            raise PreconditionError("h does not commute with the left legs")
        if finset.compose_fn(self.h, self.target.right) != self.source.right:
            raise PreconditionError("h does not commute with the right legs")


def identity_mapspan(X):
    i = finset.identity(X)
    return MapSpan(i, i)


def literal_c(ms):
    """``y* ; b`` computed as an actual composite."""
    return compose_spans(opposite(graph(ms.left)), graph(ms.right))


def _literal_iso(ms):
    """``y* ; b -> (y, b)``; the composite apex is the pairs ``(n, n)``."""
    lit, p, _ = compose_with_cone(opposite(graph(ms.left)), graph(ms.right))
    return iso_by_key(lit, Span(ms.left, ms.right), list(p.table), list(range(ms.apex.size)))


def functor_c(ms):
    direct = Span(ms.left, ms.right)
    if not _literal_iso(ms).is_iso():
        raise AssertionError("y* ; b is not the span (y, b)")
    return direct


def functor_c_literal_cell(hm):
    """``x* ; a ~ ((y* ; h*) ; h) ; b -> y* ; b`` through the counit of ``h -| h*``."""
    src, tgt = hm.source, hm.target
    ys, b = opposite(graph(tgt.left)), graph(tgt.right)
    hmap = graph(hm.h)
    adj = make_adjunction(hmap)
    hs = adj.right
    l1, _, q1 = compose_with_cone(ys, hs)
    l2, p2, _ = compose_with_cone(l1, hmap)
    l3, p3, _ = compose_with_cone(l2, b)
    keys = [q1.table[p2.table[p3.table[k]]] for k in range(l3.apex.size)]
    start, sp, _ = compose_with_cone(opposite(graph(src.left)), graph(src.right))
    into = iso_by_key(start, l3, list(sp.table), keys)
    return vertical_path(
        into,
        whisker(associator(ys, hs, hmap), b),
        whisker(whisker_left(ys, adj.counit), b),
        whisker(right_unitor(ys), b),
    )


def functor_c_on_2cells(hm):
    cell = SpanMorphism(functor_c(hm.source), functor_c(hm.target), hm.h)
    # agreement with the literal composite, conjugated by the literal isos
    lit = functor_c_literal_cell(hm)
    via = vertical_path(_literal_iso(hm.source).inverse(), lit, _literal_iso(hm.target))
    if via != cell:
        raise AssertionError("C(h) disagrees with the composite through the counit")
    return cell


def functor_f(R):
    tab = tabulate(R)
    return MapSpan(tab.u.right, tab.v.right)


def mapspan_iso(m1, m2):
    """Apex bijection commuting with both legs, as a CanonicalIso of the spans, or None."""
    return find_iso(Span(m1.left, m1.right), Span(m2.left, m2.right))


def check_roundtrips(R=None, ms=None):
    parts = []
    subject = "C and F are inverse"
    if R is not None:
        iso = find_iso(functor_c(functor_f(R)), R)
        if iso is None:
            return failed(subject, {"reason": "C(F(R)) is not isomorphic to R", "span": R})
        parts.append(iso)
    if ms is not None:
        iso = mapspan_iso(functor_f(functor_c(ms)), ms)
        if iso is None:
            return failed(subject, {"reason": "F(C(m)) is not isomorphic to m",
                                    "left": ms.left, "right": ms.right})
        parts.append(iso)
    return passed(subject, parts)


def compose_mapspans(m1, m2):
    """Pullback composite; returns the map-span and the pullback cone."""
    if m1.tgt != m2.src:
        raise BoundaryError("map-spans are not composable")
    cone = finset.pullback(m1.right, m2.left)
    p, r = cone.legs
    return MapSpan(finset.compose_fn(p, m1.left), finset.compose_fn(r, m2.right)), cone


def comparison_direct(m1, m2):
    """Key iso ``C(m1) ; C(m2) -> C(m2 . m1)``: both apexes list compatible pairs."""
    m12, cone = compose_mapspans(m1, m2)
    src, p, q = compose_with_cone(functor_c(m1), functor_c(m2))
    p2, r2 = cone.legs
    return iso_by_key(src, functor_c(m12), list(zip(p.table, q.table)),
                      list(zip(p2.table, r2.table)))


def comparison_via_beck(m1, m2):
    """``C(m1) ; C(m2) -> C(m2 . m1)`` built from the inverse Beck iso
    ``b1 ; y2* -> p* ; r`` of the pullback of ``b1`` and ``y2``."""
    y1s, b1 = opposite(graph(m1.left)), graph(m1.right)
    y2s, b2 = opposite(graph(m2.left)), graph(m2.right)
    square, cone = pullback_square(b1, graph(m2.left))
    flipped = as_iso(opposite_cell(mate(square))).inverse()   # (y2;b1*)* -> p*;r
    pm, rm = square.left, square.top
    ps = opposite(pm)
    C2 = compose_spans(y2s, b2)
    middle, p1, q1 = compose_with_cone(b1, y2s)
    _, p2, q2 = compose_with_cone(graph(m2.left), opposite(b1))
    swap = iso_by_key(middle, flipped.source, list(zip(p1.table, q1.table)),
                      list(zip(q2.table, p2.table)))
    beck = vertical_path(swap, flipped)                          # b1;y2* -> p*;r
    lit1, lit2 = _literal_iso(m1).inverse(), _literal_iso(m2).inverse()
    # (C1;C2) -> y1*;((b1;y2*);b2) -> y1*;((p*;r);b2) -> (y1*;p*);(r;b2)
    steps = [
        horizontal(lit1, lit2),
        associator(y1s, b1, C2),
        whisker_left(y1s, associator(b1, y2s, b2).inverse()),
        whisker_left(y1s, whisker(beck, b2)),
        whisker_left(y1s, associator(ps, rm, b2)),
        associator(y1s, ps, compose_spans(rm, b2)).inverse(),
    ]
    chain = vertical_path(*steps)
    m12, _ = compose_mapspans(m1, m2)
    left_iso = find_iso(compose_spans(y1s, ps), opposite(graph(m12.left)))
    right_iso = find_iso(compose_spans(rm, b2), graph(m12.right))
    tail = horizontal(left_iso, right_iso)
    return vertical_path(chain, tail, _literal_iso(m12))


def check_pseudofunctoriality(m1, m2):
    subject = f"C composes {m1.apex.size}x{m2.apex.size}"
    direct = comparison_direct(m1, m2)
    if find_iso(compose_spans(functor_c(m1), functor_c(m2)), functor_c(compose_mapspans(m1, m2)[0])) is None:
        return failed(subject, {"reason": "C(m1);C(m2) not isomorphic to C(m2 m1)"})
    beck = comparison_via_beck(m1, m2)
    if beck != direct:
        return failed(subject, {"reason": "Beck-induced comparison differs", "beck": beck,
                                "direct": direct})
    return passed(subject, direct)


def check_triple_coherence(m1, m2, m3):
    """Both bracketings of ``C(m1);C(m2);C(m3) -> C(m3 m2 m1)`` agree."""
    subject = "C coherence on a triple"
    c1, c2, c3 = functor_c(m1), functor_c(m2), functor_c(m3)
    m12, _ = compose_mapspans(m1, m2)
    m23, _ = compose_mapspans(m2, m3)
    a, cone_a = compose_mapspans(m12, m3)
    b, cone_b = compose_mapspans(m1, m23)
    route_a = vertical_path(whisker(comparison_via_beck(m1, m2), c3),
                            comparison_via_beck(m12, m3))
    route_b = vertical_path(associator(c1, c2, c3),
                            whisker_left(c1, comparison_via_beck(m2, m3)),
                            comparison_via_beck(m1, m23))
    # C(m3 (m2 m1)) ~ C((m3 m2) m1) by matching triples
    c12 = finset.pullback(m1.right, m2.left)
    c23 = finset.pullback(m2.right, m3.left)
    pa, ra = cone_a.legs
    pb, rb = cone_b.legs
    keys_a = [(c12.legs[0].table[pa.table[k]], c12.legs[1].table[pa.table[k]], ra.table[k])
              for k in range(a.apex.size)]
    keys_b = [(pb.table[k], c23.legs[0].table[rb.table[k]], c23.legs[1].table[rb.table[k]])
              for k in range(b.apex.size)]
    reassoc = iso_by_key(functor_c(a), functor_c(b), keys_a, keys_b)
    if vertical_path(route_a, reassoc) != route_b:
        return failed(subject, {"reason": "bracketings disagree"}, bounded=True)
    return passed(subject, route_b, bounded=True)


def check_unit_comparison(X):
    """``C(1_X) ~ 1_X``."""
    subject = f"C preserves the identity on {X.size}"
    iso = find_iso(literal_c(identity_mapspan(X)), id_span(X))
    if iso is None:
        return failed(subject, {"reason": "no iso"})
    return passed(subject, iso)


__all__ = [
    "MapSpan", "MapSpanMorphism", "identity_mapspan", "functor_c", "functor_c_on_2cells",
    "functor_c_literal_cell", "functor_f", "mapspan_iso", "check_roundtrips",
    "compose_mapspans", "comparison_direct", "comparison_via_beck",
    "check_pseudofunctoriality", "check_triple_coherence", "check_unit_comparison",
    "literal_c",
]
