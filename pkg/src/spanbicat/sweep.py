"""Bounded enumerations of objects, functions and spans used by the checkers.

Spans are enumerated up to isomorphism: a span ``X <- S -> A`` is determined
up to iso by the multiset of ``(left, right)`` pairs of its apex elements, so
each class is produced once, with its apex listed in sorted pair order.
"""

from itertools import combinations_with_replacement

from . import finset
from .finset import FiniteSet
from .spans import Span, graph


def objects(bound, start=0):
    return [FiniteSet(n) for n in range(start, bound + 1)]


def spans_with_apex(X, A, n):
    cells = [(x, a) for x in range(X.size) for a in range(A.size)]
    S = FiniteSet(n)
    for combo in combinations_with_replacement(cells, n):
        left = tuple(c[0] for c in combo)
        right = tuple(c[1] for c in combo)
        yield Span(finset.FiniteFunction(S, X, left), finset.FiniteFunction(S, A, right))


def spans_up_to_iso(X, A, max_apex, min_apex=0):
    """One representative per iso class of spans ``X -> A`` with apex in range."""
    for n in range(min_apex, max_apex + 1):
        yield from spans_with_apex(X, A, n)


def count_spans_up_to_iso(X, A, max_apex):
    from math import comb
    k = X.size * A.size
    return sum(comb(k + n - 1, n) if k else (1 if n == 0 else 0) for n in range(max_apex + 1))


def maps_between(X, A):
    """Every map ``X -> A`` (graphs of all functions)."""
    for f in finset.all_functions(X, A):
        yield graph(f)


def equal_leg_spans(A, max_apex, min_apex=0):
    """Spans ``A <- S -> A`` with both legs equal, one per iso class."""
    for n in range(min_apex, max_apex + 1):
        S = FiniteSet(n)
        for combo in combinations_with_replacement(range(A.size), n):
            g = finset.FiniteFunction(S, A, combo)
            yield Span(g, g)


def functions_up_to_domain_iso(A, max_dom, min_dom=0):
    """Functions into ``A`` with domain size in range, one per iso class of the
    slice over ``A`` (sorted tables)."""
    for n in range(min_dom, max_dom + 1):
        S = FiniteSet(n)
        for combo in combinations_with_replacement(range(A.size), n):
            yield finset.FiniteFunction(S, A, combo)


def all_spans_labeled(X, A, n):
    """Every span with apex exactly ``n`` (not up to iso); small sizes only."""
    S = FiniteSet(n)
    for left in finset.all_functions(S, X):
        for right in finset.all_functions(S, A):
            yield Span(left, right)
