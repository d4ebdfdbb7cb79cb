"""Named checker suites run over an instance plus a bounded sweep.

Each suite yields ``(group, name, size, report)`` tuples; :func:`run_suite`
sorts them so that output does not depend on evaluation order.
"""

from itertools import product as _cartesian

from . import axioms, comonads, direct_sums, equiv, finset, sweep
from .errors import SpanError
from .finset import FiniteSet
from .report import failed, passed
from .spans import compose_spans, find_iso, graph

SUITES = ("axioms", "comonads", "tabulation", "biequivalence", "direct-sums")


def _guard(subject, fn, *args, **kwargs):
    """Run a checker; precondition failures become failing reports."""
    try:
        return fn(*args, **kwargs)
    except SpanError as exc:
        return failed(subject, {"reason": str(exc)})


def claimed_cells(inst):
    for name, cell in sorted(inst.cells.items()):
        problem = cell.problem()
        subject = f"claimed 2-cell {name}"
        if problem:
            rep = failed(subject, {"reason": problem, "map": list(cell.map.table)})
        else:
            rep = passed(subject, cell)
        yield "instance", name, cell.source.apex.size, rep


def axioms_suite(inst, bound):
    for n in range(bound + 1):
        A = FiniteSet(n)
        yield "sweep", "discrete", n, axioms.check_discrete(A)
    small = min(bound, 3)
    for n in range(small + 1):
        yield "sweep", "separability forms", n, axioms.check_separability_forms(FiniteSet(n))
    for a, b in _cartesian(range(min(bound, 2) + 1), repeat=2):
        yield "sweep", f"closure {a}x{b}", a * b, axioms.check_closure_properties(
            FiniteSet(a), FiniteSet(b))
    for x, a in _cartesian(range(small + 1), repeat=2):
        yield "sweep", f"hom discreteness {x}->{a}", x, axioms.check_hom_discreteness(
            FiniteSet(x), FiniteSet(a))
    for a in range(min(bound, 2) + 1):
        for f in sweep.functions_up_to_domain_iso(FiniteSet(a), small):
            yield ("sweep", f"comonadic {list(f.table)}->{a}", f.dom.size,
                   axioms.check_maps_comonadic(graph(f), bound=small))
    tiny = min(bound, 2)
    for n, m, c in _cartesian(range(tiny + 1), repeat=3):
        N, M, A = FiniteSet(n), FiniteSet(m), FiniteSet(c)
        for fa in finset.all_functions(N, A):
            for fb in finset.all_functions(M, A):
                yield ("sweep", f"Beck {list(fa.table)}/{list(fb.table)}->{c}", n + m,
                       axioms.check_beck_pullback(graph(fa), graph(fb)))
    for name, A in sorted(inst.sets.items()):
        yield "instance", name, A.size, axioms.check_discrete(A)
    for name, f in sorted(inst.functions.items()):
        yield "instance", name, f.dom.size, axioms.check_maps_comonadic(graph(f), bound=small)
    fns = sorted(inst.functions.items())
    for (na, fa), (nb, fb) in _cartesian(fns, repeat=2):
        if fa.cod == fb.cod and na <= nb:
            yield ("instance", f"{na}/{nb}", fa.dom.size + fb.dom.size,
                   axioms.check_beck_pullback(graph(fa), graph(fb)))


def _comonad_report(G, em_bound):
    subject = f"comonad on {G.src.size} with apex {G.apex.size}"
    eps = comonads.find_copoint(G)
    if eps is None:
        return failed(subject, {"reason": "no copoint: the legs differ",
                                "left": list(G.left.table), "right": list(G.right.table)})
    C = comonads.comultiplication(G, eps, check_unique=True)
    laws = C.laws()
    if not all(laws.values()):
        return failed(subject, laws)
    if comonads.delta_by_pasting(G) != C.comult:
        return failed(subject, {"reason": "pasted comultiplication differs"})
    em = comonads.em_object(C)
    uni = comonads.check_em_universal(em, em_bound)
    if not uni.holds:
        return failed(subject, uni.counterexample, bounded=True)
    return passed(subject, C.comult, bounded=True, em_object=em.object.size, **laws)


def comonads_suite(inst, bound):
    em_bound = min(bound, 2)
    for name, G in sorted(inst.comonads.items()):
        yield "instance", name, G.apex.size, _comonad_report(G, em_bound)
    for a in range(min(bound, 2) + 1):
        A = FiniteSet(a)
        for G in sweep.equal_leg_spans(A, min(bound, 3)):
            yield ("sweep", f"comonad {list(G.left.table)}->{a}", G.apex.size,
                   _comonad_report(G, 1))
    A = FiniteSet(min(bound, 2))
    gs = list(sweep.equal_leg_spans(A, min(bound, 2)))
    for G, H in _cartesian(gs, repeat=2):
        yield ("sweep", f"wedge {list(G.left.table)},{list(H.left.table)}",
               G.apex.size + H.apex.size, comonads.check_wedge_of_copointed(G, H, 1))


def _tabulation_report(R, cone_bound):
    subject = f"tabulation of span with apex {R.apex.size}"
    tab = comonads.tabulate(R)
    mate = tab.mate(R)
    if not mate.is_iso():
        return failed(subject, {"reason": "mate not invertible", "mate": mate})
    uni = comonads.check_tabulation_universal(tab, R, cone_bound)
    if not uni.holds:
        return failed(subject, uni.counterexample, bounded=True)
    G = comonads.g_of_r_span(R)
    if find_iso(G, comonads.tuple_leg_comonad(R)) is None:
        return failed(subject, {"reason": "G(R) not isomorphic to (x,a)*;(x,a)"})
    if not comonads.g_of_r_mate(R).is_iso():
        return failed(subject, {"reason": "mate of the G(R) counit not invertible"})
    if comonads.g_of_r_counit(R).fill != comonads.g_of_r_counit_by_pasting(R).fill:
        return failed(subject, {"reason": "pasted counit differs"})
    if comonads.tabulation_agrees_with_em(R) is None:
        return failed(subject, {"reason": "EM route gives a different tabulation"})
    return passed(subject, mate, bounded=True)


def tabulation_suite(inst, bound):
    for name, R in sorted(inst.spans.items()):
        yield "instance", name, R.apex.size, _tabulation_report(R, 1)
    small = min(bound, 2)
    for x, a in _cartesian(range(1, small + 1), repeat=2):
        for R in sweep.spans_up_to_iso(FiniteSet(x), FiniteSet(a), min(bound, 3)):
            yield ("sweep", f"tabulate {list(R.left.table)}/{list(R.right.table)}",
                   R.apex.size, _tabulation_report(R, 0))


def _as_mapspan(R):
    return equiv.MapSpan(R.left, R.right)


def biequivalence_suite(inst, bound):
    spans = sorted(inst.spans.items())
    for name, R in spans:
        yield "instance", name, R.apex.size, equiv.check_roundtrips(R, _as_mapspan(R))
    for (n1, R1), (n2, R2) in _cartesian(spans, repeat=2):
        if R1.tgt == R2.src:
            yield ("instance", f"{n1};{n2}", R1.apex.size + R2.apex.size,
                   equiv.check_pseudofunctoriality(_as_mapspan(R1), _as_mapspan(R2)))
    for n in range(bound + 1):
        yield "sweep", "C identity", n, equiv.check_unit_comparison(FiniteSet(n))
    small = min(bound, 2)
    pool = []
    for x, a in _cartesian(range(1, small + 1), repeat=2):
        for R in sweep.spans_up_to_iso(FiniteSet(x), FiniteSet(a), min(bound, 3)):
            pool.append(R)
            yield ("sweep", f"round trip {list(R.left.table)}/{list(R.right.table)}",
                   R.apex.size, equiv.check_roundtrips(R, _as_mapspan(R)))
    short = [R for R in pool if R.apex.size <= 2]
    for R1, R2 in _cartesian(short, repeat=2):
        if R1.tgt == R2.src:
            yield ("sweep", f"compose {list(R1.left.table)}/{list(R1.right.table)};"
                            f"{list(R2.left.table)}/{list(R2.right.table)}",
                   R1.apex.size + R2.apex.size,
                   equiv.check_pseudofunctoriality(_as_mapspan(R1), _as_mapspan(R2)))


def direct_sums_suite(inst, bound):
    yield "sweep", "direct sums", bound, direct_sums.direct_sum_theorem(min(bound, 2))
    yield "sweep", "zero object", bound, direct_sums.zero_object_check(min(bound, 5))
    for n in range(min(bound, 3) + 1):
        yield "sweep", "codiagonal", n, direct_sums.codiagonal_is_map(FiniteSet(n))
    mats = sorted(inst.matrices.items())
    for name, M in mats:
        R = direct_sums.span_of_matrix(M)
        back = direct_sums.matrix_of_span(R, M.row_objects, M.col_objects)
        iso = direct_sums.matrix_iso(back, M)
        rep = (passed(f"matrix {name} round trip", iso) if iso is not None
               else failed(f"matrix {name} round trip", {"reason": "entries changed"}))
        yield "instance", name, R.apex.size, rep
    for (n1, M), (n2, N) in _cartesian(mats, repeat=2):
        if M.col_objects == N.row_objects:
            iso = _guard("matrix product", direct_sums.matrix_composition_agrees, M, N)
            subject = f"matrix product {n1}.{n2}"
            rep = (passed(subject, iso) if isinstance(iso, list)
                   else failed(subject, {"reason": "disagrees with span composition"}))
            yield "instance", f"{n1}.{n2}", len(M.row_objects), rep


_RUNNERS = {
    "axioms": axioms_suite,
    "comonads": comonads_suite,
    "tabulation": tabulation_suite,
    "biequivalence": biequivalence_suite,
    "direct-sums": direct_sums_suite,
}


def run_suite(inst, suite, bound):
    names = SUITES if suite == "all" else (suite,)
    rows = list(claimed_cells(inst))
    for s in names:
        for group, name, size, rep in _RUNNERS[s](inst, bound):
            rows.append((group, f"{s}: {name}", size, rep))
    rows.sort(key=lambda r: (r[0], r[1], r[2], r[3].subject))
    return rows


def compose_names(inst, names):
    spans = [inst.span(n) for n in names]
    out = spans[0]
    for s in spans[1:]:
        out = compose_spans(out, s)
    return out
