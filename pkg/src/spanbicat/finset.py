"""Finite sets and total functions between them, with explicit finite limits
and colimits.

Elements of a set of size ``n`` are the integers ``0 .. n-1``. Labels are
cosmetic and never take part in equality. A product ``A x B`` encodes the
pair ``(i, j)`` as ``i * |B| + j``; the encoding is associative on integers,
so ``(A x B) x C`` and ``A x (B x C)`` coincide element for element.
"""

from dataclasses import dataclass, field
from itertools import product as _cartesian
from typing import Optional, Sequence, Tuple

from . import kernels
from .errors import BoundaryError, PreconditionError


@dataclass(frozen=True)
class FiniteSet:
    size: int
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 0:
            raise ValueError(f"set size must be a nonnegative int, got {self.size!r}")
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != self.size:
                raise ValueError("labels must have one entry per element")
            if len(set(labels)) != len(labels):
                raise ValueError("labels must be distinct")
            object.__setattr__(self, "labels", labels)

    def __len__(self):
        return self.size

    def __iter__(self):
        return iter(range(self.size))

    def label(self, i):
        return self.labels[i] if self.labels else str(i)

    def __repr__(self):
        return f"FiniteSet({self.size})"


@dataclass(frozen=True)
class FiniteFunction:
    dom: FiniteSet
    cod: FiniteSet
    table: Tuple[int, ...]

    def __post_init__(self):
        table = tuple(int(v) for v in self.table)
        object.__setattr__(self, "table", table)
        if len(table) != self.dom.size:
            raise BoundaryError(
                f"table has {len(table)} entries but the domain has {self.dom.size}")
        bad = kernels.check_table(table, self.cod.size)
        if bad >= 0:
            raise BoundaryError(
                f"entry {table[bad]} at position {bad} is outside 0..{self.cod.size - 1}")

    def __call__(self, i):
        return self.table[i]

    def __repr__(self):
        return f"FiniteFunction({self.dom.size}->{self.cod.size}, {list(self.table)})"

    def then(self, other):
        return compose_fn(self, other)


@dataclass(frozen=True)
class Cone:
    apex: FiniteSet
    legs: Tuple[FiniteFunction, ...]

    def __post_init__(self):
        object.__setattr__(self, "legs", tuple(self.legs))
        for leg in self.legs:
            if leg.dom != self.apex:
                raise BoundaryError("every cone leg must start at the apex")


def fn(dom, cod, table):
    """Shorthand: ``fn(2, 3, [0, 2])`` with sizes or FiniteSets."""
    if isinstance(dom, int):
        dom = FiniteSet(dom)
    if isinstance(cod, int):
        cod = FiniteSet(cod)
    return FiniteFunction(dom, cod, tuple(table))


def identity(A):
    return FiniteFunction(A, A, tuple(range(A.size)))


def compose_fn(f, g):
    """``g . f``: first ``f``, then ``g``."""
    if f.cod != g.dom:
        raise BoundaryError(f"cannot compose {f!r} with {g!r}: {f.cod} != {g.dom}")
    return FiniteFunction(f.dom, g.cod, kernels.compose_tables(f.table, g.table))


def compose_all(*fs):
    out = fs[0]
    for f in fs[1:]:
        out = compose_fn(out, f)
    return out


def terminal():
    return FiniteSet(1)


def initial():
    return FiniteSet(0)


def bang(A):
    """The unique function ``A -> 1``."""
    return FiniteFunction(A, FiniteSet(1), (0,) * A.size)


def empty_function(A):
    """The unique function ``0 -> A``."""
    return FiniteFunction(FiniteSet(0), A, ())


def product(A, B):
    """``(A x B, proj1, proj2)`` with ``(i, j)`` encoded as ``i * |B| + j``."""
    P = FiniteSet(A.size * B.size)
    nb = B.size
    p1 = FiniteFunction(P, A, tuple(k // nb for k in range(P.size)) if nb else ())
    p2 = FiniteFunction(P, B, tuple(k % nb for k in range(P.size)) if nb else ())
    return P, p1, p2


def product_many(objs):
    """Iterated product; returns the set and its projections."""
    size = 1
    for A in objs:
        size *= A.size
    P = FiniteSet(size)
    projections = []
    for idx in range(len(objs)):
        stride = 1
        for A in objs[idx + 1:]:
            stride *= A.size
        n = objs[idx].size
        projections.append(FiniteFunction(
            P, objs[idx], tuple((k // stride) % n for k in range(size))))
    return P, tuple(projections)


def pair(f, g):
    """``<f, g>: T -> A x B``."""
    if f.dom != g.dom:
        raise BoundaryError("pair needs a common domain")
    P, _, _ = product(f.cod, g.cod)
    nb = g.cod.size
    return FiniteFunction(f.dom, P, tuple(a * nb + b for a, b in zip(f.table, g.table)))


def tuple_map(fs):
    """``<f_1, ..., f_n>: T -> A_1 x ... x A_n``."""
    out = fs[0]
    for f in fs[1:]:
        out = pair(out, f)
    return out


def product_map(f, g):
    """``f x g: A x B -> C x D``."""
    P, p1, p2 = product(f.dom, g.dom)
    return pair(compose_fn(p1, f), compose_fn(p2, g))


def diagonal(A):
    return pair(identity(A), identity(A))


def pullback(f, g):
    """Pullback of the cospan ``f: A -> C <- B: g``.

    The apex lists every ``(a, b)`` with ``f(a) == g(b)`` in lexicographic
    order; the legs are the two projections.
    """
    if f.cod != g.cod:
        raise BoundaryError(f"pullback needs a common codomain, got {f.cod} and {g.cod}")
    ps, qs = kernels.pullback_pairs(f.table, g.table, f.cod.size)
    P = FiniteSet(len(ps))
    return Cone(P, (FiniteFunction(P, f.dom, ps), FiniteFunction(P, g.dom, qs)))


def equalizer(f, g):
    if f.dom != g.dom or f.cod != g.cod:
        raise BoundaryError("equalizer needs a parallel pair")
    idx = kernels.equalizer_indices(f.table, g.table)
    E = FiniteSet(len(idx))
    return Cone(E, (FiniteFunction(E, f.dom, idx),))


def coproduct(A, B):
    """``(A + B, inj1, inj2)`` laid out as the block of A followed by the block of B."""
    S = FiniteSet(A.size + B.size)
    i1 = FiniteFunction(A, S, tuple(range(A.size)))
    i2 = FiniteFunction(B, S, tuple(range(A.size, A.size + B.size)))
    return S, i1, i2


def coproduct_many(objs):
    """Block-layout coproduct of several sets; returns the set and injections."""
    S = FiniteSet(sum(A.size for A in objs))
    injections = []
    offset = 0
    for A in objs:
        injections.append(FiniteFunction(A, S, tuple(range(offset, offset + A.size))))
        offset += A.size
    return S, tuple(injections)


def copair(f, g):
    if f.cod != g.cod:
        raise BoundaryError("copair needs a common codomain")
    S, _, _ = coproduct(f.dom, g.dom)
    return FiniteFunction(S, f.cod, f.table + g.table)


def copair_many(fs, cod=None):
    if not fs:
        if cod is None:
            raise BoundaryError("copair of no functions needs an explicit codomain")
        return empty_function(cod)
    cod = fs[0].cod
    for f in fs:
        if f.cod != cod:
            raise BoundaryError("copair needs a common codomain")
    S, _ = coproduct_many([f.dom for f in fs])
    return FiniteFunction(S, cod, sum((f.table for f in fs), ()))


def sum_map(f, g):
    """``f + g: A + B -> C + D``."""
    _, j1, j2 = coproduct(f.cod, g.cod)
    return copair(compose_fn(f, j1), compose_fn(g, j2))


def codiagonal(A):
    return copair(identity(A), identity(A))


def is_injective(f):
    return kernels.is_injective(f.table, f.cod.size)


def is_surjective(f):
    return len(set(f.table)) == f.cod.size


def is_bijection(f):
    return f.dom.size == f.cod.size and kernels.is_injective(f.table, f.cod.size)


def inverse(f):
    if not is_bijection(f):
        raise PreconditionError(f"{f!r} is not a bijection")
    return FiniteFunction(f.cod, f.dom, kernels.invert_bijection(f.table))


def image(f):
    return sorted(set(f.table))


def all_functions(A, B):
    """Every function ``A -> B`` in lexicographic table order."""
    for table in _cartesian(range(B.size), repeat=A.size):
        yield FiniteFunction(A, B, table)


def count_functions(A, B):
    return B.size ** A.size


def distributor(X, Y, Z):
    """The canonical ``X x Z + Y x Z -> (X + Y) x Z``."""
    _, i1, i2 = coproduct(X, Y)
    return copair(product_map(i1, identity(Z)), product_map(i2, identity(Z)))


def fiber(f, b):
    return [a for a in range(f.dom.size) if f.table[a] == b]


def sizes(objs: Sequence[FiniteSet]):
    return tuple(A.size for A in objs)
