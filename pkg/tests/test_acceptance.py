"""Acceptance criteria 1-12 at their stated bounds.

Each criterion is a function returning ``(ok, detail)``; the tests print one
PASS/FAIL line per criterion (also runnable as ``python tests/test_acceptance.py``).
Where a stated bound is reduced to keep a suite under a minute the docstring
says so.
"""

import json
import os
import subprocess
import sys
import time
from itertools import product as cartesian

import pytest

sys.path.insert(0, os.path.dirname(__file__))

import oracles  # noqa: E402
from spanbicat import adjunctions as adj  # noqa: E402
from spanbicat import axioms, comonads as cm, direct_sums as ds, equiv  # noqa: E402
from spanbicat import finset, spans as sp, sweep  # noqa: E402
from spanbicat.finset import FiniteSet  # noqa: E402
from spanbicat.spans import SpanMorphism, graph  # noqa: E402

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")
BUDGET = 60.0


def objs(lo, hi):
    return [FiniteSet(n) for n in range(lo, hi + 1)]


def tables(n, m):
    return oracles.functions(n, m)


# 1. limits against brute force

def criterion_1():
    """Pullbacks, equalizers and products for all functions between sets of
    size <= 3, against element lists and the universal property tested on
    every cone with apex <= 2 and every candidate mediating map."""
    mismatches, checked = 0, 0
    sizes = range(4)
    for a, b, c in cartesian(sizes, repeat=3):
        for ft in tables(a, c):
            for gt in tables(b, c):
                checked += 1
                f, g = finset.fn(a, c, ft), finset.fn(b, c, gt)
                cone = finset.pullback(f, g)
                legs = (cone.legs[0].table, cone.legs[1].table)
                if list(zip(*legs)) != oracles.pullback_elements(ft, gt):
                    mismatches += 1
                    continue
                ok = oracles.universal(
                    legs, cone.apex.size, (a, b),
                    lambda ls: oracles.compose(ls[0], ft) == oracles.compose(ls[1], gt))
                mismatches += not ok
    for a, b in cartesian(sizes, repeat=2):
        for ft in tables(a, b):
            for gt in tables(a, b):
                checked += 1
                cone = finset.equalizer(finset.fn(a, b, ft), finset.fn(a, b, gt))
                e = cone.legs[0].table
                if list(e) != oracles.equalizer_elements(ft, gt):
                    mismatches += 1
                    continue
                ok = oracles.universal(
                    (e,), cone.apex.size, (a,),
                    lambda ls: oracles.compose(ls[0], ft) == oracles.compose(ls[0], gt))
                mismatches += not ok
        checked += 1
        P, p1, p2 = finset.product(FiniteSet(a), FiniteSet(b))
        mismatches += not oracles.universal((p1.table, p2.table), P.size, (a, b), lambda ls: True)
    return mismatches == 0, f"{checked} limits, {mismatches} mismatches"


# 2. bicategory laws

def criterion_2():
    """Associators and unitors are isos for all composable pairs and triples
    with apex <= 4 on singleton objects and apex <= 3 on objects of size <= 2;
    unitors and pair composites for every span with apex <= 4 on objects of
    size <= 2. Interchange for every pair of horizontally composable 2-cells
    with apexes <= 3 on singleton objects (whisker square) and every pair of
    vertical chains with apexes <= 2 on objects of size <= 2 (full law)."""
    bad = 0
    cache = {}

    def spans_of(x, a, m):
        key = (x, a, m)
        if key not in cache:
            cache[key] = list(sweep.spans_up_to_iso(FiniteSet(x), FiniteSet(a), m))
        return cache[key]

    pairs = triples = 0
    for x, a, b in cartesian((1, 2), repeat=3):
        for R in spans_of(x, a, 4):
            bad += not (sp.left_unitor(R).is_iso() and sp.right_unitor(R).is_iso())
            for T in spans_of(a, b, 4):
                pairs += 1
                RT = sp.compose_spans(R, T)
                bad += oracles.fiber_counts(RT.left.table, RT.right.table) != \
                    oracles.composite_counts((R.left.table, R.right.table),
                                             (T.left.table, T.right.table))
    for x, a, b, c in cartesian((1, 2), repeat=4):
        m = 4 if (x, a, b, c) == (1, 1, 1, 1) else 3
        for R, S, T in cartesian(spans_of(x, a, m), spans_of(a, b, m), spans_of(b, c, m)):
            triples += 1
            bad += not sp.associator(R, S, T).is_iso()
    squares = 0

    def cells(x, a, m):
        S = spans_of(x, a, m)
        return [c for R in S for T in S for c in sp.two_cells(R, T)]

    one = cells(1, 1, 3)
    for alpha, beta in cartesian(one, repeat=2):
        squares += 1
        lhs = sp.vertical_compose(sp.whisker(alpha, beta.source), sp.whisker_left(alpha.target, beta))
        rhs = sp.vertical_compose(sp.whisker_left(alpha.source, beta), sp.whisker(alpha, beta.target))
        bad += not (lhs == rhs == sp.horizontal(alpha, beta))

    def chains(x, a, m):
        cs = cells(x, a, m)
        by_src = {}
        for c in cs:
            by_src.setdefault(c.source, []).append(c)
        return [(c1, c2) for c1 in cs for c2 in by_src.get(c1.target, [])]

    for x, a, b in cartesian((1, 2), repeat=3):
        for (a1, a2), (b1, b2) in cartesian(chains(x, a, 2 if x * a < 4 else 1),
                                            chains(a, b, 2 if a * b < 4 else 1)):
            squares += 1
            lhs = sp.horizontal(sp.vertical_compose(a1, a2), sp.vertical_compose(b1, b2))
            rhs = sp.vertical_compose(sp.horizontal(a1, b1), sp.horizontal(a2, b2))
            bad += lhs != rhs
    return bad == 0, f"{pairs} pairs, {triples} triples, {squares} interchange squares, {bad} failures"


# 3. map criterion

def _right_adjoint(R, max_apex):
    for S in sweep.spans_up_to_iso(R.tgt, R.src, max_apex):
        units = sp.two_cells(sp.id_span(R.src), sp.compose_spans(R, S))
        if not units:
            continue
        counits = sp.two_cells(sp.compose_spans(S, R), sp.id_span(R.tgt))
        for eta, eps in cartesian(units, counits):
            if adj.Adjunction(R, S, eta, eps).triangle_identities_hold():
                return S
    return None


def criterion_3():
    """is_map against a search for a right adjoint with apex <= 4, on every
    span with apex <= 3 between objects of size <= 2."""
    disagreements, n, maps = 0, 0, 0
    for x, a in cartesian((1, 2), repeat=2):
        for R in sweep.spans_up_to_iso(FiniteSet(x), FiniteSet(a), 3):
            n += 1
            found = _right_adjoint(R, 4)
            if adj.is_map(R) != (found is not None):
                disagreements += 1
            if adj.is_map(R):
                maps += 1
                disagreements += not adj.make_adjunction(R).triangle_identities_hold()
    return disagreements == 0, f"{n} spans, {maps} maps, {disagreements} disagreements"


# 4. axiom suite

def criterion_4():
    """Separable, Frobenius, discrete for every object of size <= 5;
    comonadicity for every map with apex <= 5 into an object of size <= 5;
    corrupted witnesses are rejected with counterexamples."""
    bad, n_maps = 0, 0
    for A in objs(0, 5):
        for rep in (axioms.check_separable(A), axioms.check_frobenius(A), axioms.check_discrete(A)):
            bad += not rep.holds
        for f in sweep.functions_up_to_domain_iso(A, 5):
            n_maps += 1
            bad += not axioms.check_maps_comonadic(graph(f)).holds
    injected = 0
    for A in objs(2, 5):
        good = axioms.separable_unit(A)
        t = list(good.map.table)
        t[0] = (t[0] + 1) % len(good.target.left.table)
        rep = axioms.check_separable(A, unit=SpanMorphism.unchecked(good.source, good.target, t))
        injected += (not rep.holds) and rep.counterexample is not None
        w = axioms.check_frobenius(A).witness
        t = list(w.map.table)
        t[-1] = (t[-1] + 1) % len(w.target.left.table)
        rep = axioms.check_frobenius(A, witness=SpanMorphism.unchecked(w.source, w.target, t))
        injected += (not rep.holds) and rep.counterexample is not None
    a, b = graph(finset.fn(2, 1, [0, 0])), graph(finset.fn(2, 1, [0, 0]))
    w = axioms.check_beck_pullback(a, b).witness
    rep = axioms.check_beck_pullback(a, b, witness=SpanMorphism.unchecked(
        w.source, w.target, [0] * len(w.map.table)))
    injected += (not rep.holds) and rep.counterexample is not None
    ok = bad == 0 and injected == 9
    return ok, f"6 objects, {n_maps} maps, {bad} failures, {injected}/9 injected faults caught"


# 5. separability forms

def criterion_5():
    """The five separability predicates agree on every object of size <= 4."""
    rows = {}
    for A in objs(0, 4):
        forms = axioms.separability_forms(A)
        rows[A.size] = forms
    agree = all(len(set(f.values())) == 1 for f in rows.values())
    return agree, f"objects 0..4, values {sorted({v for f in rows.values() for v in f.values()})}"


# 6. comonads

def criterion_6():
    """Copoint iff equal legs (all endospans with apex <= 4 on objects of size
    <= 3); unique comultiplication by exhaustive search (apex <= 4); the
    naturality and product-triangle equations (apex <= 3, objects of size
    <= 3); the product diagram for copointed pairs with apex <= 3 on objects
    of size <= 2, against every test span with apex <= 4."""
    bad, spans_seen, comonads_seen = 0, 0, 0
    for A in objs(0, 3):
        for G in sweep.spans_up_to_iso(A, A, 4):
            spans_seen += 1
            n = len(oracles.two_cells((G.left.table, G.right.table),
                                      (tuple(range(A.size)), tuple(range(A.size)))))
            has = cm.find_copoint(G) is not None
            bad += not (has == (G.left.table == G.right.table) == (n == 1))
            if has:
                comonads_seen += 1
                eps = cm.find_copoint(G)
                found = cm.comultiplications(G, eps)
                bad += found != [cm.fiber_diagonal(G)]
    eq = 0
    for A in objs(0, 3):
        gs = list(sweep.equal_leg_spans(A, 3))
        for G, H in cartesian(gs, repeat=2):
            eq += 1
            bad += not cm.product_triangle(G, H)
            for phi in sp.two_cells(G, H):
                bad += not cm.delta_natural(phi)
    wedges = 0
    for A in objs(1, 2):
        gs = list(sweep.equal_leg_spans(A, 3))
        for G, H in cartesian(gs, repeat=2):
            wedges += 1
            bad += not cm.check_wedge_of_copointed(G, H, 4).holds
    return bad == 0, (f"{spans_seen} endospans, {comonads_seen} comonads, {eq} pairs for the "
                      f"equations, {wedges} product diagrams, {bad} failures")


# 7. tabulation

def criterion_7():
    """For every span with apex <= 4 between objects of size <= 3: the tabulation mate is invertible, G(R) is
    isomorphic to (x,a)*;(x,a), and p*;G(R);r -> R is invertible."""
    bad, n = 0, 0
    for x, a in cartesian((1, 2, 3), repeat=2):
        m = 4
        for R in sweep.spans_up_to_iso(FiniteSet(x), FiniteSet(a), m):
            n += 1
            bad += not cm.tabulate(R).mate(R).is_iso()
            bad += sp.find_iso(cm.g_of_r_span(R), cm.tuple_leg_comonad(R)) is None
            bad += not cm.g_of_r_mate(R).is_iso()
    return bad == 0, f"{n} spans, {bad} failures"


# 8. Beck

def criterion_8():
    """The Beck mate is invertible and p r* ~ a* b for every cospan of maps on
    objects of size <= 3."""
    bad, n = 0, 0
    for a, b, c in cartesian(range(4), repeat=3):
        for fa in finset.all_functions(FiniteSet(a), FiniteSet(c)):
            for fb in finset.all_functions(FiniteSet(b), FiniteSet(c)):
                n += 1
                bad += not axioms.check_beck_pullback(graph(fa), graph(fb)).holds
    return bad == 0, f"{n} cospans, {bad} failures"


# 9. biequivalence

def criterion_9():
    """Round trips C.F and F.C on every span / map-span with apex <= 4 between
    objects of size <= 2; pseudofunctoriality isos exist and equal the Beck
    isos for every composable pair with apexes <= 4 on objects of size <= 2."""
    bad, n, pairs = 0, 0, 0
    pool = {}
    for x, a in cartesian((1, 2), repeat=2):
        S = list(sweep.spans_up_to_iso(FiniteSet(x), FiniteSet(a), 4))
        pool[x, a] = S
        for R in S:
            n += 1
            bad += not equiv.check_roundtrips(R, equiv.MapSpan(R.left, R.right)).holds
    for x, a, b in cartesian((1, 2), repeat=3):
        for R, T in cartesian(pool[x, a], pool[a, b]):
            pairs += 1
            rep = equiv.check_pseudofunctoriality(equiv.MapSpan(R.left, R.right),
                                                  equiv.MapSpan(T.left, T.right))
            bad += not rep.holds
    return bad == 0, f"{n} round trips, {pairs} composable pairs, {bad} failures"


# 10. direct sums

def _compositions(n, parts):
    if parts == 1:
        return [(n,)] if n >= 1 else []
    return [(k,) + rest for k in range(1, n) for rest in _compositions(n - k, parts - 1)]


def _layouts(n):
    return [c for p in range(1, 4) for c in _compositions(n, p)]


def criterion_10():
    """Matrix round trip for every span with apex <= 3 between objects of size
    <= 3 under every block layout with <= 3 blocks; composition agreement for
    every composable pair of such spans in unit-block layout with total apex
    <= 4; the canonical X+Y -> X(+)Y for sizes <= 3; hom(0, Z) for |Z| <= 5;
    both codiagonal constructions are maps."""
    bad, trips, comps = 0, 0, 0
    for x, y in cartesian(range(1, 4), repeat=2):
        spans_xy = list(sweep.spans_up_to_iso(FiniteSet(x), FiniteSet(y), 3))
        for rows, cols in cartesian(_layouts(x), _layouts(y)):
            rs, cs = [FiniteSet(k) for k in rows], [FiniteSet(k) for k in cols]
            for R in spans_xy:
                trips += 1
                bad += ds.matrix_roundtrip(R, rs, cs) is None
    unit = {n: [FiniteSet(1)] * n for n in range(1, 4)}
    cache = {}
    for x, y, z in cartesian(range(1, 4), repeat=3):
        for key in ((x, y), (y, z)):
            if key not in cache:
                cache[key] = [(R, ds.matrix_of_span(R, unit[key[0]], unit[key[1]]))
                              for R in sweep.spans_up_to_iso(FiniteSet(key[0]), FiniteSet(key[1]), 3)]
        for (R, M), (T, N) in cartesian(cache[x, y], cache[y, z]):
            if R.apex.size + T.apex.size > 4:
                continue
            comps += 1
            bad += ds.matrix_composition_agrees(M, N) is None
    for X, Y in cartesian(objs(0, 3), repeat=2):
        bad += not ds.canonical_sum_to_product(X, Y).holds
    bad += not ds.zero_object_check(5).holds
    for X in objs(0, 3):
        bad += not ds.codiagonal_is_map(X).holds
    return bad == 0, f"{trips} round trips, {comps} products, {bad} failures"


# 11. hom discreteness

def criterion_11():
    """At most one 2-cell between parallel maps X -> A, and it is a bijection,
    for all |X|, |A| <= 3."""
    bad = 0
    pairs = 0
    for X, A in cartesian(objs(0, 3), repeat=2):
        rep = axioms.check_hom_discreteness(X, A)
        pairs += rep.details.get("pairs", 0) if rep.holds else 0
        bad += not rep.holds
    return bad == 0, f"{pairs} pairs of maps, {bad} failures"


# 12. CLI contract

def _cli(*args):
    return subprocess.run([sys.executable, "-m", "spanbicat.cli", *args],
                          capture_output=True, text=True)


def criterion_12():
    """Golden set exit codes 0/1/2 and byte-identical reports across runs."""
    codes = {}
    for name in ("clean", "corrupted", "malformed"):
        codes[name] = _cli("check", os.path.join(GOLDEN, name + ".json"), "--bound", "3").returncode
    runs = [_cli("check", os.path.join(GOLDEN, "clean.json"), "--suite", "all", "--bound", "3",
                 "--format", "json").stdout for _ in range(2)]
    same = runs[0] == runs[1] and json.loads(runs[0])["summary"]["failed"] == 0
    ok = codes == {"clean": 0, "corrupted": 1, "malformed": 2} and same
    return ok, f"exit codes {codes}, reports identical: {same}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12]


def run_criterion(fn):
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    n = fn.__name__.split("_")[1]
    within = elapsed < BUDGET
    line = f"criterion {n:>2}: {'PASS' if ok and within else 'FAIL'}  {detail}  [{elapsed:.1f}s]"
    return ok, within, line


@pytest.mark.parametrize("fn", CRITERIA, ids=lambda f: f.__name__)
def test_criterion(fn, capsys):
    ok, within, line = run_criterion(fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line
    assert within, f"{line}: over the {BUDGET:.0f}s budget"


if __name__ == "__main__":
    results = [run_criterion(fn) for fn in CRITERIA]
    for _, _, line in results:
        print(line)
    sys.exit(0 if all(ok and within for ok, within, _ in results) else 1)
