"""Maps (left adjoint spans), their chosen adjunctions, squares of maps with a
2-cell inside, pasting, and the mate correspondence.

Orientation of a square. A :class:`GSquare` has maps ``top: X -> Y`` and
``bottom: A -> B`` and spans ``left: X -> A``, ``right: Y -> B``. Its fill is
a 2-cell ``left ; bottom  ->  top ; right`` (in the usual notation
``uR -> Sf``), the shape of the tabulation counit ``v -> R u`` and of the
Eilenberg-Moore counit ``g -> G g``. Its mate is the 2-cell

    top* ; left  ->  right ; bottom*        (usual notation ``R f* -> u* S``)

so a pullback square of maps gives the Beck comparison ``p r* -> a* b``.
"""

from dataclasses import dataclass

from . import finset, spans
from .errors import BoundaryError, NotAMapError, PreconditionError
from .spans import (
    CanonicalIso,
    Span,
    SpanMorphism,
    associator,
    compose_spans,
    compose_with_cone,
    find_iso,
    id_span,
    left_unitor,
    opposite,
    right_unitor,
    vertical_path,
    whisker,
    whisker_left,
)


def is_map(R):
    """A span has a right adjoint exactly when its left leg is invertible."""
    return finset.is_bijection(R.left)


def map_from_function(f):
    return spans.graph(f)


def function_from_map(R):
    """``right . left^-1`` for a map ``R``."""
    if not is_map(R):
        raise NotAMapError(f"{R!r} is not a map: left leg is not a bijection")
    return finset.compose_fn(finset.inverse(R.left), R.right)


@dataclass(frozen=True)
class Adjunction:
    """``left -| right`` with ``unit: 1 -> left ; right`` and ``counit: right ; left -> 1``.

    In the usual notation this is ``f -| f*`` with ``eta: 1 -> f* f`` and
    ``eps: f f* -> 1``.
    """

    left: Span
    right: Span
    unit: SpanMorphism
    counit: SpanMorphism

    def triangle_identities_hold(self):
        return all(t.map == finset.identity(t.source.apex) for t in self.triangles())

    def triangles(self):
        """The two zig-zag composites ``f -> f`` and ``f* -> f*``."""
        f, g = self.left, self.right
        first = vertical_path(
            left_unitor(f).inverse(),
            whisker(self.unit, f),
            associator(f, g, f),
            whisker_left(f, self.counit),
            right_unitor(f),
        )
        second = vertical_path(
            right_unitor(g).inverse(),
            whisker_left(g, self.unit),
            associator(g, f, g).inverse(),
            whisker(self.counit, g),
            left_unitor(g),
        )
        return first, second


def make_adjunction(R):
    """The chosen adjunction ``R -| R*`` for a map ``R``, regenerated from ``R``."""
    if not is_map(R):
        raise NotAMapError(f"{R!r} is not a map: left leg is not a bijection")
    Rs = opposite(R)
    x_inv = finset.inverse(R.left)
    # unit: X -> R ; R*, apex = pairs (s, s') with a(s) == a(s')
    RRs, p, q = compose_with_cone(R, Rs)
    unit = iso_key_cell(
        id_span(R.src), RRs,
        [(x_inv.table[i], x_inv.table[i]) for i in range(R.src.size)],
        list(zip(p.table, q.table)))
    # counit: R* ; R -> A, apex = pairs (s, s) since x is injective
    RsR, p2, _ = compose_with_cone(Rs, R)
    counit = SpanMorphism(RsR, id_span(R.tgt), finset.compose_fn(p2, R.right))
    adj = Adjunction(R, Rs, unit, counit)
    if not adj.triangle_identities_hold():
        raise AssertionError("triangle identities failed for a generated adjunction")
    return adj


def iso_key_cell(source, target, key_src, key_tgt):
    """2-cell sending each source element to the target element with the same key."""
    where = {k: j for j, k in enumerate(key_tgt)}
    table = tuple(where[k] for k in key_src)
    return SpanMorphism(source, target, finset.FiniteFunction(source.apex, target.apex, table))


@dataclass(frozen=True)
class GSquare:
    top: Span
    bottom: Span
    left: Span
    right: Span
    fill: SpanMorphism

    def __post_init__(self):
        if not (is_map(self.top) and is_map(self.bottom)):
            raise NotAMapError("the horizontal sides of a square must be maps")
        if self.left.src != self.top.src or self.right.src != self.top.tgt:
            raise BoundaryError("square corners do not match at the top")
        if self.left.tgt != self.bottom.src or self.right.tgt != self.bottom.tgt:
            raise BoundaryError("square corners do not match at the bottom")
        if self.fill.source != compose_spans(self.left, self.bottom):
            raise BoundaryError("fill must start at left ; bottom")
        if self.fill.target != compose_spans(self.top, self.right):
            raise BoundaryError("fill must end at top ; right")


def commutative_square(top, bottom, left, right):
    """Square of maps whose two composites are equal as functions; fill is the
    canonical iso."""
    src = compose_spans(left, bottom)
    tgt = compose_spans(top, right)
    iso = find_iso(src, tgt)
    if iso is None or not all(is_map(s) for s in (top, bottom, left, right)):
        raise PreconditionError("square of maps does not commute")
    # between two maps with the same boundary there is exactly one 2-cell
    return GSquare(top, bottom, left, right, iso)


def pullback_square(a, b):
    """Pullback square for the cospan of maps ``a: N -> A <- M: b``.

    Returns the square with ``top = r: P -> M``, ``left = p: P -> N``,
    ``right = b``, ``bottom = a``, plus the cone.
    """
    if not (is_map(a) and is_map(b)):
        raise NotAMapError("Beck squares need maps on the cospan")
    fa, fb = function_from_map(a), function_from_map(b)
    cone = finset.pullback(fa, fb)
    p, r = cone.legs
    return commutative_square(spans.graph(r), a, spans.graph(p), b), cone


def mate(square, adj_top=None, adj_bottom=None):
    """``top* ; left -> right ; bottom*``.

    Insert the unit of the bottom adjunction after ``left``, push the fill
    through, then cancel ``top* ; top`` with the counit of the top adjunction.
    Every step is a whisker or a coherence iso, composed vertically.
    """
    adj_top = adj_top or make_adjunction(square.top)
    adj_bottom = adj_bottom or make_adjunction(square.bottom)
    if adj_top.left != square.top or adj_bottom.left != square.bottom:
        raise BoundaryError("adjunctions do not match the square")
    f, fs = adj_top.left, adj_top.right
    u, us = adj_bottom.left, adj_bottom.right
    R, S = square.left, square.right
    fsR = compose_spans(fs, R)
    steps = [
        right_unitor(fsR).inverse(),                     # f*R -> (f*R)1
        whisker_left(fsR, adj_bottom.unit),              # -> (f*R)(u u*)
        associator(fs, R, compose_spans(u, us)),         # -> f*(R(u u*))
        whisker_left(fs, associator(R, u, us).inverse()),  # -> f*((R u)u*)
        whisker_left(fs, whisker(square.fill, us)),      # -> f*((f S)u*)
        whisker_left(fs, associator(f, S, us)),          # -> f*(f(S u*))
        associator(fs, f, compose_spans(S, us)).inverse(),  # -> (f* f)(S u*)
        whisker(adj_top.counit, compose_spans(S, us)),   # -> 1(S u*)
        left_unitor(compose_spans(S, us)),               # -> S u*
    ]
    return vertical_path(*steps)


def dual_mate(cell, top, bottom, left, right, adj_top=None, adj_bottom=None):
    """Inverse of :func:`mate`: from ``top* ; left -> right ; bottom*`` back to a fill."""
    adj_top = adj_top or make_adjunction(top)
    adj_bottom = adj_bottom or make_adjunction(bottom)
    f, fs = adj_top.left, adj_top.right
    u, us = adj_bottom.left, adj_bottom.right
    R, S = left, right
    Ru = compose_spans(R, u)
    steps = [
        left_unitor(Ru).inverse(),                       # Ru -> 1(Ru)
        whisker(adj_top.unit, Ru),                       # -> (f f*)(R u)
        associator(f, fs, Ru),                           # -> f(f*(R u))
        whisker_left(f, associator(fs, R, u).inverse()),  # -> f((f* R)u)
        whisker_left(f, whisker(cell, u)),               # -> f((S u*)u)
        whisker_left(f, associator(S, us, u)),           # -> f(S(u* u))
        whisker_left(f, whisker_left(S, adj_bottom.counit)),  # -> f(S 1)
        whisker_left(f, right_unitor(S)),                # -> f S
    ]
    return vertical_path(*steps)


def transpose_cell(adj, cell, S):
    """One-sided mate of ``cell: K -> f ; S`` along ``f -| f*``: ``f* ; K -> S``."""
    f, fs = adj.left, adj.right
    if cell.target != compose_spans(f, S):
        raise BoundaryError("cell must land in f ; S")
    return vertical_path(
        whisker_left(fs, cell),
        associator(fs, f, S).inverse(),
        whisker(adj.counit, S),
        left_unitor(S),
    )


def transpose_cell_right(adj, cell, M):
    """One-sided mate of ``cell: K -> M ; u*`` along ``u -| u*``: ``K ; u -> M``."""
    u, us = adj.left, adj.right
    if cell.target != compose_spans(M, us):
        raise BoundaryError("cell must land in M ; u*")
    return vertical_path(
        whisker(cell, u),
        associator(M, us, u),
        whisker_left(M, adj.counit),
        right_unitor(M),
    )


def reverse_fill(square_like_top, bottom, left, right, inverse_fill):
    """Square from a fill given in the opposite orientation ``top;right -> left;bottom``.

    Only invertible fills can be turned around.
    """
    if not inverse_fill.is_iso():
        raise PreconditionError("only an invertible fill can change orientation")
    return GSquare(square_like_top, bottom, left, right, spans.as_iso(inverse_fill).inverse())


def paste_horizontal(sq1, sq2):
    """Side-by-side pasting; ``sq1.right`` must equal ``sq2.left``."""
    if sq1.right != sq2.left:
        raise BoundaryError("horizontal pasting needs sq1.right == sq2.left")
    R, u1, u2 = sq1.left, sq1.bottom, sq2.bottom
    f1, f2, S, T = sq1.top, sq2.top, sq1.right, sq2.right
    fill = vertical_path(
        associator(R, u1, u2).inverse(),                 # R(u1u2) -> (R u1)u2
        whisker(sq1.fill, u2),                           # -> (f1 S)u2
        associator(f1, S, u2),                           # -> f1(S u2)
        whisker_left(f1, sq2.fill),                      # -> f1(f2 T)
        associator(f1, f2, T).inverse(),                 # -> (f1 f2)T
    )
    return GSquare(compose_spans(f1, f2), compose_spans(u1, u2), R, T, fill)


def paste_vertical(sq1, sq2):
    """``sq1`` on top of ``sq2``; ``sq1.bottom`` must equal ``sq2.top``."""
    if sq1.bottom != sq2.top:
        raise BoundaryError("vertical pasting needs sq1.bottom == sq2.top")
    R, R2, w = sq1.left, sq2.left, sq2.bottom
    f, u, S, S2 = sq1.top, sq1.bottom, sq1.right, sq2.right
    fill = vertical_path(
        associator(R, R2, w),                            # (R R2)w -> R(R2 w)
        whisker_left(R, sq2.fill),                       # -> R(u S2)
        associator(R, u, S2).inverse(),                  # -> (R u)S2
        whisker(sq1.fill, S2),                           # -> (f S)S2
        associator(f, S, S2),                            # -> f(S S2)
    )
    return GSquare(f, w, compose_spans(R, R2), compose_spans(S, S2), fill)


def paste(grid):
    """Paste a rectangular grid of squares (rows top to bottom)."""
    rows = []
    for row in grid:
        sq = row[0]
        for nxt in row[1:]:
            sq = paste_horizontal(sq, nxt)
        rows.append(sq)
    out = rows[0]
    for nxt in rows[1:]:
        out = paste_vertical(out, nxt)
    return out


def identity_square(R):
    """Square with identity maps on top and bottom around ``R``."""
    fill = vertical_path(
        right_unitor(R),
        left_unitor(R).inverse(),
    )
    return GSquare(id_span(R.src), id_span(R.tgt), R, R, fill)


def reflects_map(F, g, h):
    """If ``F ; g`` is isomorphic to ``h`` with ``g``, ``h`` maps, then ``F`` is a map."""
    if not (is_map(g) and is_map(h)):
        raise PreconditionError("g and h must be maps")
    if find_iso(compose_spans(F, g), h) is None:
        raise PreconditionError("F ; g is not isomorphic to h")
    return is_map(F)


__all__ = [
    "Adjunction", "GSquare", "CanonicalIso", "is_map", "map_from_function",
    "function_from_map", "make_adjunction", "mate", "dual_mate", "transpose_cell",
    "paste", "paste_horizontal", "paste_vertical", "identity_square",
    "commutative_square", "pullback_square", "reflects_map", "reverse_fill",
]
