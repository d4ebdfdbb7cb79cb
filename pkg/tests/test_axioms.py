from itertools import product as cartesian

import pytest

import oracles
from spanbicat import axioms, finset, sweep
from spanbicat.errors import BoundaryError, NotAMapError
from spanbicat.finset import FiniteSet
from spanbicat.local import is_product_diagram
from spanbicat.spans import SpanMorphism, graph, identity_cell, span


def diag_table(n):
    return tuple(i * n + i for i in range(n))


@pytest.mark.parametrize("n", range(5))
def test_separable_oracle(n):
    # d ; d* has one apex element per a in A (only (a, a) survives)
    d = (tuple(range(n)), diag_table(n))
    counts = oracles.composite_counts(d, d[::-1])
    assert counts == oracles.fiber_counts(tuple(range(n)), tuple(range(n)))
    rep = axioms.check_separable(FiniteSet(n))
    assert rep.holds and rep.witness.is_iso()


@pytest.mark.parametrize("n", range(4))
def test_frobenius_oracle(n):
    # d* ; d and (1 x d) ; (d* x 1) both have apex {((a, a), (a, a))}
    d = (tuple(range(n)), diag_table(n))
    lhs = oracles.composite_counts(d[::-1], d)
    one_d = (tuple(range(n * n)), tuple(x * n * n + y * n + y for x in range(n) for y in range(n)))
    d_one = (tuple(range(n * n)), tuple(x * n * n + x * n + y for x in range(n) for y in range(n)))
    rhs = oracles.composite_counts(one_d, d_one[::-1])
    assert lhs == rhs
    rep = axioms.check_frobenius(FiniteSet(n))
    assert rep.holds and rep.details["apex"] == n


def test_frobenius_pullback_apex_is_a():
    _, cone = axioms.frobenius_square(FiniteSet(3))
    assert cone.apex.size == 3


@pytest.mark.parametrize("n", range(6))
def test_discrete(n):
    rep = axioms.check_discrete(FiniteSet(n))
    assert rep.holds and rep.counterexample is None


def test_corrupted_unit_is_rejected():
    A = FiniteSet(2)
    good = axioms.separable_unit(A)
    bad = SpanMorphism.unchecked(good.source, good.target, [good.map.table[1], good.map.table[0]])
    rep = axioms.check_separable(A, unit=bad)
    assert not rep.holds
    assert "commute" in rep.counterexample["reason"]


def test_corrupted_frobenius_witness_rejected():
    A = FiniteSet(2)
    good = axioms.check_frobenius(A).witness
    table = list(good.map.table)
    table[0], table[1] = table[1], table[0]
    rep = axioms.check_frobenius(A, witness=SpanMorphism.unchecked(good.source, good.target, table))
    assert not rep.holds and rep.counterexample["witness"] is not None


def test_frobenius_witness_with_wrong_boundary():
    A = FiniteSet(2)
    other = axioms.separable_unit(A)
    rep = axioms.check_frobenius(A, witness=other)
    assert not rep.holds
    assert rep.counterexample["reason"] == "witness has the wrong boundary"


def test_beck_example_and_corruption():
    a = graph(finset.fn(2, 1, [0, 0]))
    b = graph(finset.fn(3, 1, [0, 0, 0]))
    rep = axioms.check_beck_pullback(a, b)
    assert rep.holds and rep.details["apex"] == 6
    w = rep.witness
    bad = SpanMorphism.unchecked(w.source, w.target, [0] * len(w.map.table))
    assert not axioms.check_beck_pullback(a, b, witness=bad).holds


def test_beck_needs_cospan_of_maps():
    with pytest.raises(BoundaryError):
        axioms.check_beck_pullback(graph(finset.fn(1, 1, [0])), graph(finset.fn(1, 2, [0])))
    with pytest.raises(NotAMapError):
        axioms.check_beck_pullback(span([0, 0], [0, 0], 1, 1), graph(finset.fn(1, 1, [0])))


def test_beck_all_small_cospans():
    for n, m, c in cartesian(range(3), repeat=3):
        for fa in finset.all_functions(FiniteSet(n), FiniteSet(c)):
            for fb in finset.all_functions(FiniteSet(m), FiniteSet(c)):
                rep = axioms.check_beck_pullback(graph(fa), graph(fb))
                assert rep.holds
                assert rep.details["apex"] == len(oracles.pullback_elements(fa.table, fb.table))


def test_maps_comonadic_example():
    g = graph(finset.fn(3, 2, [0, 1, 1]))
    rep = axioms.check_maps_comonadic(g)
    assert rep.holds and rep.bounded
    assert rep.details["comparison"] == [0, 1, 2]


def test_maps_comonadic_rejects_nonmap():
    with pytest.raises(NotAMapError):
        axioms.check_maps_comonadic(span([0, 0], [0, 1], 1, 2))


@pytest.mark.parametrize("x,a", list(cartesian(range(4), repeat=2)))
def test_hom_discreteness(x, a):
    rep = axioms.check_hom_discreteness(FiniteSet(x), FiniteSet(a))
    assert rep.holds
    assert rep.details["maps"] == a ** x


@pytest.mark.parametrize("a,b", [(0, 2), (1, 1), (2, 2), (2, 3)])
def test_closure_properties(a, b):
    assert axioms.check_closure_properties(FiniteSet(a), FiniteSet(b)).holds


@pytest.mark.parametrize("n", range(4))
def test_separability_forms_agree(n):
    forms = axioms.separability_forms(FiniteSet(n))
    assert len(forms) == 5 and all(forms.values())
    assert axioms.check_separability_forms(FiniteSet(n)).holds


def test_separability_form_detects_non_product():
    # a span with two elements over one fiber is not a self-product
    G = span([0, 0], [0, 0], 1, 1)
    one = identity_cell(G)
    tests = list(sweep.spans_up_to_iso(FiniteSet(1), FiniteSet(1), 2))
    assert is_product_diagram(G, one, one, tests) is not None
