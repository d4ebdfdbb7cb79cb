"""Spans over finite sets (1-cells), span morphisms (2-cells), composition by
pullback, whiskering, tensor and isomorphism search.

Composition is written in diagrammatic order throughout the package:
``compose_spans(R, T)`` is "first R, then T" (the usual ``T . R``).
"""

from dataclasses import dataclass

from . import finset, kernels
from .errors import BoundaryError, PreconditionError
from .finset import FiniteFunction


@dataclass(frozen=True)
class Span:
    """``src <- apex -> tgt`` given by its two legs."""

    left: FiniteFunction
    right: FiniteFunction

    def __post_init__(self):
        if self.left.dom != self.right.dom:
            raise BoundaryError("span legs must share their domain (the apex)")

    @property
    def src(self):
        return self.left.cod

    @property
    def tgt(self):
        return self.right.cod

    @property
    def apex(self):
        return self.left.dom

    def boundary(self):
        return self.src.size, self.tgt.size

    def __repr__(self):
        return (f"Span({self.src.size} <- {self.apex.size} -> {self.tgt.size}: "
                f"{list(self.left.table)}, {list(self.right.table)})")


def span(left, right, src=None, tgt=None):
    """Build a span from raw tables, inferring sizes where not given."""
    left = tuple(left)
    right = tuple(right)
    n = len(left)
    if src is None:
        src = max(left, default=-1) + 1
    if tgt is None:
        tgt = max(right, default=-1) + 1
    return Span(finset.fn(n, src, left), finset.fn(n, tgt, right))


@dataclass(frozen=True, eq=False)
class SpanMorphism:
    """Apex function ``map: source.apex -> target.apex`` commuting with both legs."""

    source: Span
    target: Span
    map: FiniteFunction

    def __eq__(self, other):
        if not isinstance(other, SpanMorphism):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.map == other.map)

    def __hash__(self):
        return hash((self.source, self.target, self.map))

    def __post_init__(self):
        problem = _cell_problem(self.source, self.target, self.map)
        if problem:
            raise BoundaryError(problem)

    @classmethod
    def unchecked(cls, source, target, table):
        """Build without validation; used to feed corrupted witnesses to checkers."""
        obj = object.__new__(cls)
        f = object.__new__(FiniteFunction)
        object.__setattr__(f, "dom", source.apex)
        object.__setattr__(f, "cod", target.apex)
        object.__setattr__(f, "table", tuple(table))
        object.__setattr__(obj, "source", source)
        object.__setattr__(obj, "target", target)
        object.__setattr__(obj, "map", f)
        return obj

    @property
    def table(self):
        return self.map.table

    def problem(self):
        """Why this is not a valid 2-cell, or ``None``."""
        return _cell_problem(self.source, self.target, self.map)

    def is_iso(self):
        return self.problem() is None and finset.is_bijection(self.map)

    def __repr__(self):
        return f"SpanMorphism({list(self.map.table)})"


def _cell_problem(source, target, f):
    if source.src != target.src or source.tgt != target.tgt:
        return "2-cell source and target must share their boundary"
    if f.dom != source.apex or f.cod != target.apex:
        return "2-cell map must go from source apex to target apex"
    n = target.apex.size
    for i, j in enumerate(f.table):
        if not 0 <= j < n:
            return f"apex element {i} sent to {j}, outside the target apex"
        if target.left.table[j] != source.left.table[i]:
            return f"left leg does not commute at apex element {i}"
        if target.right.table[j] != source.right.table[i]:
            return f"right leg does not commute at apex element {i}"
    return None


class CanonicalIso(SpanMorphism):
    """A span morphism whose apex map is a bijection."""

    def __post_init__(self):
        super().__post_init__()
        if not finset.is_bijection(self.map):
            raise PreconditionError("CanonicalIso needs a bijective apex map")

    def inverse(self):
        return CanonicalIso(self.target, self.source, finset.inverse(self.map))

    def __repr__(self):
        return f"CanonicalIso({list(self.map.table)})"


def as_iso(cell):
    return CanonicalIso(cell.source, cell.target, cell.map)


def id_span(A):
    i = finset.identity(A)
    return Span(i, i)


def graph(f):
    """The span ``dom f <- dom f -> cod f`` with legs ``(1, f)``."""
    return Span(finset.identity(f.dom), f)


def compose_with_cone(R, T):
    """``R ; T`` plus the projections from its apex onto the apexes of R and T."""
    if R.tgt != T.src:
        raise BoundaryError(f"cannot compose {R!r} with {T!r}: boundary mismatch")
    cone = finset.pullback(R.right, T.left)
    p, q = cone.legs
    S = Span(finset.compose_fn(p, R.left), finset.compose_fn(q, T.right))
    return S, p, q


def compose_spans(R, T):
    """First R (X -> A), then T (A -> B)."""
    return compose_with_cone(R, T)[0]


def compose_path(*spans):
    """Left-nested composite ``((R1 ; R2) ; R3) ...``."""
    out = spans[0]
    for s in spans[1:]:
        out = compose_spans(out, s)
    return out


def identity_cell(R):
    return CanonicalIso(R, R, finset.identity(R.apex))


def vertical_compose(alpha, beta):
    """``alpha`` then ``beta``."""
    if alpha.target != beta.source:
        raise BoundaryError("vertical composition needs alpha.target == beta.source")
    return SpanMorphism(alpha.source, beta.target, finset.compose_fn(alpha.map, beta.map))


def vertical_path(*cells):
    out = cells[0]
    for c in cells[1:]:
        out = vertical_compose(out, c)
    return out


def _induced(source_cone, target_cone, a_map, b_map, source, target):
    """Mediating map between two pullback apexes along apex maps of the factors."""
    _, p, q = source_cone
    _, p2, q2 = target_cone
    index = kernels.pair_index(p2.table, q2.table, q2.cod.size)
    a = kernels.compose_tables(p.table, a_map.table)
    b = kernels.compose_tables(q.table, b_map.table)
    table = kernels.lookup_pairs(index, a, b, q2.cod.size)
    return SpanMorphism(source, target, FiniteFunction(source.apex, target.apex, table))


def whisker(alpha, T):
    """``alpha ; T``: from ``R ; T`` to ``R' ; T`` for ``alpha: R -> R'``."""
    src = compose_with_cone(alpha.source, T)
    tgt = compose_with_cone(alpha.target, T)
    return _induced(src, tgt, alpha.map, finset.identity(T.apex), src[0], tgt[0])


def whisker_left(T, alpha):
    """``T ; alpha``: from ``T ; R`` to ``T ; R'`` for ``alpha: R -> R'``."""
    src = compose_with_cone(T, alpha.source)
    tgt = compose_with_cone(T, alpha.target)
    return _induced(src, tgt, finset.identity(T.apex), alpha.map, src[0], tgt[0])


def horizontal(alpha, beta):
    """``alpha ; beta`` for ``alpha: R -> R'`` and ``beta: S -> S'`` with R, S composable."""
    src = compose_with_cone(alpha.source, beta.source)
    tgt = compose_with_cone(alpha.target, beta.target)
    return _induced(src, tgt, alpha.map, beta.map, src[0], tgt[0])


def iso_by_key(source, target, key_src, key_tgt):
    """Structural isomorphism that matches apex elements carrying equal keys.

    ``key_src[i]`` and ``key_tgt[j]`` are hashable descriptions of apex
    elements (typically tuples of component indices). Raises if the keys do
    not define a bijection or the result does not commute with the legs.
    """
    where = {}
    for j, k in enumerate(key_tgt):
        if k in where:
            raise PreconditionError(f"duplicate target key {k!r}")
        where[k] = j
    if len(key_src) != len(where):
        raise PreconditionError("keys do not match up: apex sizes differ")
    try:
        table = tuple(where[k] for k in key_src)
    except KeyError as exc:
        raise PreconditionError(f"source key {exc.args[0]!r} has no partner") from None
    return CanonicalIso(source, target, FiniteFunction(source.apex, target.apex, table))


def associator(R, S, T):
    """``(R ; S) ; T  ->  R ; (S ; T)``."""
    RS, p1, q1 = compose_with_cone(R, S)
    left, p2, q2 = compose_with_cone(RS, T)
    ST, p3, q3 = compose_with_cone(S, T)
    right, p4, q4 = compose_with_cone(R, ST)
    key_l = [(p1.table[p2.table[k]], q1.table[p2.table[k]], q2.table[k])
             for k in range(left.apex.size)]
    key_r = [(p4.table[k], p3.table[q4.table[k]], q3.table[q4.table[k]])
             for k in range(right.apex.size)]
    return iso_by_key(left, right, key_l, key_r)


def left_unitor(R):
    """``1 ; R -> R``."""
    S, _, q = compose_with_cone(id_span(R.src), R)
    return CanonicalIso(S, R, q)


def right_unitor(R):
    """``R ; 1 -> R``."""
    S, p, _ = compose_with_cone(R, id_span(R.tgt))
    return CanonicalIso(S, R, p)


def tensor(R, T):
    """Componentwise product: ``R.src x T.src <- R.apex x T.apex -> R.tgt x T.tgt``."""
    return Span(finset.product_map(R.left, T.left), finset.product_map(R.right, T.right))


def tensor_many(*spans):
    out = spans[0]
    for s in spans[1:]:
        out = tensor(out, s)
    return out


def tensor_cells(alpha, beta):
    return SpanMorphism(tensor(alpha.source, beta.source), tensor(alpha.target, beta.target),
                        finset.product_map(alpha.map, beta.map))


def opposite(R):
    return Span(R.right, R.left)


def opposite_cell(alpha):
    return SpanMorphism(opposite(alpha.source), opposite(alpha.target), alpha.map)


def _same_boundary(R, S):
    if R.src != S.src or R.tgt != S.tgt:
        raise BoundaryError("spans must be parallel")


def two_cells(R, S, limit=-1):
    """Every 2-cell ``R -> S`` (lexicographic by apex table)."""
    _same_boundary(R, S)
    tables = kernels.two_cell_tables(R.left.table, R.right.table,
                                     S.left.table, S.right.table, S.tgt.size, limit)
    return [SpanMorphism(R, S, FiniteFunction(R.apex, S.apex, t)) for t in tables]


def count_two_cells(R, S):
    _same_boundary(R, S)
    return kernels.count_two_cells(R.left.table, R.right.table,
                                   S.left.table, S.right.table, S.tgt.size)


def find_iso(R, S):
    """A leg-preserving apex bijection ``R -> S``, or ``None``.

    Elements are matched fiber by fiber over ``src x tgt``; a bijection
    exists exactly when every fiber has the same size on both sides.
    """
    if R.src != S.src or R.tgt != S.tgt:
        return None
    t = kernels.fiber_bijection(R.left.table, R.right.table,
                                S.left.table, S.right.table, S.tgt.size)
    if t is None:
        return None
    return CanonicalIso(R, S, FiniteFunction(R.apex, S.apex, t))


def all_isos(R, S):
    """Every isomorphism ``R -> S`` (backtracking over fiber-respecting choices)."""
    if R.src != S.src or R.tgt != S.tgt or R.apex.size != S.apex.size:
        return []
    n = R.apex.size
    nt = S.tgt.size
    fibers = {}
    for j in range(n):
        fibers.setdefault(S.left.table[j] * nt + S.right.table[j], []).append(j)
    keys = [R.left.table[i] * nt + R.right.table[i] for i in range(n)]
    out = []
    used = [False] * n
    chosen = [0] * n

    def go(i):
        if i == n:
            out.append(CanonicalIso(R, S, FiniteFunction(R.apex, S.apex, tuple(chosen))))
            return
        for j in fibers.get(keys[i], ()):
            if not used[j]:
                used[j] = True
                chosen[i] = j
                go(i + 1)
                used[j] = False

    go(0)
    return out


def isomorphic(R, S):
    return find_iso(R, S) is not None


def fiber_signature(R):
    """Sorted multiset of ``(left, right)`` pairs; a complete iso invariant."""
    return tuple(sorted(zip(R.left.table, R.right.table)))


def empty_span(X, A):
    return Span(finset.empty_function(X), finset.empty_function(A))


def is_identity_like(R):
    return R.src == R.tgt and find_iso(R, id_span(R.src)) is not None
