"""Brute-force oracles that work on raw tables and never call the library's
constructions. Sets are sizes, functions are tuples."""

from collections import Counter
from itertools import product


def functions(n, m):
    return list(product(range(m), repeat=n))


def compose(f, g):
    return tuple(g[i] for i in f)


def pullback_elements(f, g):
    return [(i, j) for i in range(len(f)) for j in range(len(g)) if f[i] == g[j]]


def equalizer_elements(f, g):
    return [i for i in range(len(f)) if f[i] == g[i]]


def mediators(cone_legs, test_legs, t_size, apex_size):
    """All maps ``T -> apex`` sending the cone legs to the test legs."""
    out = []
    for h in functions(t_size, apex_size):
        if all(compose(h, leg) == test for leg, test in zip(cone_legs, test_legs)):
            out.append(h)
    return out


def universal(cone_legs, apex_size, targets, commutes, max_test=2):
    """Every test cone over the diagram (apex up to ``max_test``) factors uniquely."""
    for t in range(max_test + 1):
        for legs in product(*[functions(t, n) for n in targets]):
            if not commutes(legs):
                continue
            if len(mediators(cone_legs, legs, t, apex_size)) != 1:
                return False
    return True


def fiber_counts(left, right):
    return Counter(zip(left, right))


def composite_counts(R, T):
    """Fiber sizes of ``R ; T`` over ``src x tgt`` by summing over the middle."""
    (rl, rr), (tl, tr) = R, T
    out = Counter()
    for s in range(len(rl)):
        for t in range(len(tl)):
            if rr[s] == tl[t]:
                out[(rl[s], tr[t])] += 1
    return out


def two_cells(R, S):
    """Every apex function ``R -> S`` commuting with both legs."""
    (rl, rr), (sl, sr) = R, S
    return [h for h in functions(len(rl), len(sl))
            if all(sl[h[i]] == rl[i] and sr[h[i]] == rr[i] for i in range(len(rl)))]


def isomorphic(R, S):
    return fiber_counts(*R) == fiber_counts(*S)


def spans(x, a, max_apex):
    """Every labelled span ``x <- n -> a`` with ``n <= max_apex``."""
    for n in range(max_apex + 1):
        for left in functions(n, x):
            for right in functions(n, a):
                yield left, right


def spans_up_to_iso(x, a, max_apex):
    seen = set()
    for R in spans(x, a, max_apex):
        key = tuple(sorted(fiber_counts(*R).items()))
        if key not in seen:
            seen.add(key)
            yield R
