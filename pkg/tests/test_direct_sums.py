from collections import Counter
from itertools import product as cartesian

import pytest
from hypothesis import given, strategies as st

import oracles
from strategies import spans
from spanbicat import direct_sums as ds
from spanbicat import finset, spans as sp
from spanbicat.errors import BoundaryError
from spanbicat.finset import FiniteSet
from spanbicat.spans import span


def offsets(sizes):
    out, t = [], 0
    for n in sizes:
        out.append(t)
        t += n
    return out


def block_counts(R, row_sizes, col_sizes):
    """Fiber counts of each block read straight off the big span."""
    ro, co = offsets(row_sizes), offsets(col_sizes)
    out = {}
    for i, j in cartesian(range(len(row_sizes)), range(len(col_sizes))):
        c = Counter()
        for (x, y), n in oracles.fiber_counts(R.left.table, R.right.table).items():
            if ro[i] <= x < ro[i] + row_sizes[i] and co[j] <= y < co[j] + col_sizes[j]:
                c[(x - ro[i], y - co[j])] += n
        out[i, j] = c
    return out


def sizes_strategy():
    return st.lists(st.integers(0, 2), min_size=1, max_size=3)


def random_span(draw, x, y, max_apex=3):
    n = draw(st.integers(0, max_apex)) if x and y else 0
    left = draw(st.lists(st.integers(0, max(x - 1, 0)), min_size=n, max_size=n))
    right = draw(st.lists(st.integers(0, max(y - 1, 0)), min_size=n, max_size=n))
    return span(left, right, x, y)


@given(sizes_strategy(), sizes_strategy(), st.data())
def test_matrix_blocks_match_oracle(rows, cols, data):
    R = random_span(data.draw, sum(rows), sum(cols))
    M = ds.matrix_of_span(R, [FiniteSet(n) for n in rows], [FiniteSet(n) for n in cols])
    expected = block_counts(R, rows, cols)
    for (i, j), c in expected.items():
        assert oracles.fiber_counts(M[i, j].left.table, M[i, j].right.table) == c
    assert ds.matrix_roundtrip(R, M.row_objects, M.col_objects) is not None


@given(sizes_strategy(), sizes_strategy(), sizes_strategy(), st.data())
def test_matrix_compose_matches_oracle(rows, mids, cols, data):
    R = random_span(data.draw, sum(rows), sum(mids))
    T = random_span(data.draw, sum(mids), sum(cols))
    fs = [FiniteSet(n) for n in rows], [FiniteSet(n) for n in mids], [FiniteSet(n) for n in cols]
    M, N = ds.matrix_of_span(R, fs[0], fs[1]), ds.matrix_of_span(T, fs[1], fs[2])
    P = ds.matrix_compose(M, N)
    for i, k in cartesian(range(len(rows)), range(len(cols))):
        want = Counter()
        for j in range(len(mids)):
            want += oracles.composite_counts((M[i, j].left.table, M[i, j].right.table),
                                             (N[j, k].left.table, N[j, k].right.table))
        assert oracles.fiber_counts(P[i, k].left.table, P[i, k].right.table) == want
    assert ds.matrix_composition_agrees(M, N) is not None


def test_matrix_shape_errors():
    R = span([0, 1], [0, 0], 2, 1)
    with pytest.raises(BoundaryError):
        ds.matrix_of_span(R, [FiniteSet(1)], [FiniteSet(1)])
    M = ds.identity_matrix([FiniteSet(1)])
    N = ds.identity_matrix([FiniteSet(2)])
    with pytest.raises(BoundaryError):
        ds.matrix_compose(M, N)
    with pytest.raises(BoundaryError):
        ds.SpanMatrix([FiniteSet(1)], [FiniteSet(1)], [[R]])


def test_identity_matrix_is_identity_span():
    objs = [FiniteSet(1), FiniteSet(2)]
    k = ds.span_of_matrix(ds.identity_matrix(objs))
    assert sp.find_iso(k, sp.id_span(FiniteSet(3))) is not None


@pytest.mark.parametrize("x,y", list(cartesian(range(4), repeat=2)))
def test_canonical_sum_to_product(x, y):
    rep = ds.canonical_sum_to_product(FiniteSet(x), FiniteSet(y))
    assert rep.holds and rep.details["size"] == x + y


def test_zero_object():
    rep = ds.zero_object_check(5)
    assert rep.holds and rep.details["sizes"] == 6
    for n in range(6):
        assert sp.count_two_cells(sp.empty_span(FiniteSet(0), FiniteSet(n)),
                                  sp.empty_span(FiniteSet(0), FiniteSet(n))) == 1


@pytest.mark.parametrize("n", range(4))
def test_codiagonal_is_map(n):
    X = FiniteSet(n)
    assert ds.codiagonal_is_map(X).holds
    assert ds.codiagonal_direct(X).right == finset.codiagonal(X)


def test_injections():
    for x, y in cartesian(range(3), repeat=2):
        assert ds.check_injections(FiniteSet(x), FiniteSet(y)).holds


@given(spans(max_apex=3, max_size=3), st.integers(0, 3))
def test_hom_equivalence_random(R, cut):
    n = R.src.size
    cut = min(cut, n)
    X, Y = FiniteSet(cut), FiniteSet(n - cut)
    assert ds.direct_sum_hom_equivalence(X, Y, R.tgt, [R]).holds
    m = R.tgt.size
    c2 = min(cut, m)
    assert ds.direct_sum_hom_equivalence(FiniteSet(c2), FiniteSet(m - c2), R.src, [R]).holds


def test_lextensivity():
    assert ds.lextensivity_report(2).holds
    f = finset.fn(3, 3, [2, 0, 2])
    assert ds.check_coproduct_stability(f, FiniteSet(1), FiniteSet(2)).holds


def test_direct_sum_theorem():
    assert ds.direct_sum_theorem(2).holds


def test_transpose_is_involution():
    M = ds.matrix_of_span(span([0, 1, 2], [1, 0, 0], 3, 2), [FiniteSet(1), FiniteSet(2)],
                          [FiniteSet(2)])
    assert ds.transpose_matrix(ds.transpose_matrix(M)) == M
