import pytest
from hypothesis import given, strategies as st

import oracles
from strategies import spans
from spanbicat import finset, spans as sp
from spanbicat.errors import BoundaryError, PreconditionError
from spanbicat.finset import FiniteSet
from spanbicat.spans import Span, SpanMorphism, span


def raw(R):
    return R.left.table, R.right.table


def test_compose_example():
    R = span([0, 1, 1], [0, 0, 1], 2, 2)
    T = span([0, 0, 1], [1, 0, 0], 2, 2)
    RT = sp.compose_spans(R, T)
    # a = 0 has two R-elements over it and two T-elements: four pairs, plus one for a = 1
    assert RT.apex.size == 5
    assert oracles.fiber_counts(*raw(RT)) == oracles.composite_counts(raw(R), raw(T))


def test_compose_boundary_mismatch():
    with pytest.raises(BoundaryError):
        sp.compose_spans(span([0], [0], 1, 2), span([0], [0], 1, 1))


@given(spans(), st.data())
def test_composite_fibers_match_oracle(R, data):
    T = data.draw(spans(src=R.tgt.size))
    RT = sp.compose_spans(R, T)
    assert oracles.fiber_counts(*raw(RT)) == oracles.composite_counts(raw(R), raw(T))


@given(spans(), st.data())
def test_associator_and_unitors(R, data):
    S = data.draw(spans(src=R.tgt.size, max_apex=3))
    T = data.draw(spans(src=S.tgt.size, max_apex=3))
    a = sp.associator(R, S, T)
    assert a.is_iso()
    assert a.target == sp.compose_spans(R, sp.compose_spans(S, T))
    assert sp.left_unitor(R).is_iso() and sp.right_unitor(R).is_iso()


@given(spans(max_apex=3), st.data())
def test_two_cells_match_oracle(R, data):
    S = data.draw(spans(src=R.src.size, tgt=R.tgt.size, max_apex=3))
    got = sorted(c.map.table for c in sp.two_cells(R, S))
    assert got == sorted(oracles.two_cells(raw(R), raw(S)))
    assert sp.count_two_cells(R, S) == len(got)


@given(spans(max_apex=4), st.data())
def test_find_iso_matches_oracle(R, data):
    S = data.draw(spans(src=R.src.size, tgt=R.tgt.size, max_apex=4))
    iso = sp.find_iso(R, S)
    assert (iso is not None) == oracles.isomorphic(raw(R), raw(S))
    if iso is not None:
        assert iso.is_iso()


def test_find_iso_on_permuted_apex():
    R = span([0, 0, 1], [1, 0, 1], 2, 2)
    S = span([1, 0, 0], [1, 1, 0], 2, 2)
    iso = sp.find_iso(R, S)
    assert iso is not None and iso.map.table == (1, 2, 0)
    assert sp.find_iso(R, span([0, 0], [1, 0], 2, 2)) is None


def test_cell_validation():
    R = span([0, 1], [0, 0], 2, 1)
    with pytest.raises(BoundaryError):
        SpanMorphism(R, R, finset.fn(2, 2, [1, 0]))
    bad = SpanMorphism.unchecked(R, R, [1, 0])
    assert bad.problem() == "left leg does not commute at apex element 0"
    assert not bad.is_iso()


def test_iso_by_key_rejects_mismatch():
    R = span([0, 1], [0, 0], 2, 1)
    with pytest.raises(PreconditionError):
        sp.iso_by_key(R, R, [0, 1], [0, 0])


def _cell_chain(data, R):
    """Two composable 2-cells ``R -> R' -> R''`` drawn by factoring maps."""
    S = data.draw(spans(src=R.src.size, tgt=R.tgt.size, max_apex=3))
    U = data.draw(spans(src=R.src.size, tgt=R.tgt.size, max_apex=3))
    a = sp.two_cells(R, S)
    b = sp.two_cells(S, U)
    if not a or not b:
        return None
    return data.draw(st.sampled_from(a)), data.draw(st.sampled_from(b))


@given(spans(max_apex=2, max_size=2), spans(max_apex=2, max_size=2), st.data())
def test_interchange(R, T0, data):
    T = Span(T0.left, T0.right) if T0.src == R.tgt else data.draw(
        spans(src=R.tgt.size, max_apex=2, max_size=2))
    first = _cell_chain(data, R)
    second = _cell_chain(data, T)
    if first is None or second is None:
        return
    (a1, a2), (b1, b2) = first, second
    lhs = sp.horizontal(sp.vertical_compose(a1, a2), sp.vertical_compose(b1, b2))
    rhs = sp.vertical_compose(sp.horizontal(a1, b1), sp.horizontal(a2, b2))
    assert lhs == rhs
    assert sp.horizontal(a1, b1) == sp.vertical_compose(
        sp.whisker(a1, b1.source), sp.whisker_left(a1.target, b1))


def test_identity_is_unit_up_to_iso():
    R = span([0, 1, 1], [2, 0, 2], 2, 3)
    assert sp.find_iso(sp.compose_spans(sp.id_span(R.src), R), R) is not None
    assert sp.find_iso(sp.compose_spans(R, sp.id_span(R.tgt)), R) is not None


def test_tensor_and_opposite():
    R = span([0, 1], [0, 0], 2, 1)
    T = span([0], [1], 1, 2)
    RT = sp.tensor(R, T)
    assert (RT.src.size, RT.apex.size, RT.tgt.size) == (2, 2, 2)
    assert RT.left.table == (0, 1) and RT.right.table == (1, 1)
    assert sp.opposite(sp.opposite(R)) == R


def test_graph_composes_like_functions():
    f, g = finset.fn(3, 2, [0, 1, 1]), finset.fn(2, 2, [1, 0])
    comp = sp.compose_spans(sp.graph(f), sp.graph(g))
    assert sp.find_iso(comp, sp.graph(finset.compose_fn(f, g))) is not None


def test_empty_span_composes_to_empty():
    E = sp.empty_span(FiniteSet(2), FiniteSet(3))
    R = span([0, 2], [1, 1], 3, 2)
    assert sp.compose_spans(E, R).apex.size == 0
