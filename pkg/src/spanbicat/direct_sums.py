"""Zero object, direct sums and the matrix calculus for spans between disjoint
unions, plus the observable consequences of lextensivity of finite sets.

In the bicategory of spans the disjoint union ``X + Y`` is both a coproduct
(injections as maps) and a product (opposite injections as projections). A
span ``X_1 + ... + X_m -> Y_1 + ... + Y_n`` splits into an ``m x n`` matrix of
spans ``X_i -> Y_j`` by sorting apex elements according to the blocks their
legs land in.
"""

from dataclasses import dataclass
from typing import Tuple

from . import finset, sweep
from .adjunctions import is_map, map_from_function
from .errors import BoundaryError
from .finset import FiniteFunction, FiniteSet
from .report import combine, failed, passed
from .spans import (
    Span,
    compose_path,
    compose_spans,
    empty_span,
    find_iso,
    graph,
    id_span,
    opposite,
)


def _offsets(objs):
    out, total = [], 0
    for A in objs:
        out.append(total)
        total += A.size
    return out, total


@dataclass(frozen=True)
class SpanMatrix:
    row_objects: Tuple[FiniteSet, ...]
    col_objects: Tuple[FiniteSet, ...]
    entries: Tuple[Tuple[Span, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "row_objects", tuple(self.row_objects))
        object.__setattr__(self, "col_objects", tuple(self.col_objects))
        object.__setattr__(self, "entries", tuple(tuple(r) for r in self.entries))
        if len(self.entries) != len(self.row_objects):
            raise BoundaryError("one row of entries per row object")
        for i, row in enumerate(self.entries):
            if len(row) != len(self.col_objects):
                raise BoundaryError("one entry per column object")
            for j, R in enumerate(row):
                if R.src != self.row_objects[i] or R.tgt != self.col_objects[j]:
                    raise BoundaryError(f"entry ({i}, {j}) has the wrong boundary")

    @property
    def shape(self):
        return len(self.row_objects), len(self.col_objects)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


def span_sum(spans, X, Y):
    """Coproduct of parallel spans ``X -> Y``: apexes side by side."""
    S, _ = finset.coproduct_many([R.apex for R in spans])
    left = sum((R.left.table for R in spans), ())
    right = sum((R.right.table for R in spans), ())
    return Span(FiniteFunction(S, X, left), FiniteFunction(S, Y, right))


def matrix_of_span(R, rows, cols):
    rows, cols = tuple(rows), tuple(cols)
    row_off, row_total = _offsets(rows)
    col_off, col_total = _offsets(cols)
    if row_total != R.src.size or col_total != R.tgt.size:
        raise BoundaryError("block sizes do not add up to the boundary of the span")
    row_of = [i for i, A in enumerate(rows) for _ in range(A.size)]
    col_of = [j for j, B in enumerate(cols) for _ in range(B.size)]
    cells = {}
    for s in range(R.apex.size):
        x, y = R.left.table[s], R.right.table[s]
        i, j = row_of[x], col_of[y]
        lefts, rights = cells.setdefault((i, j), ([], []))
        lefts.append(x - row_off[i])
        rights.append(y - col_off[j])
    entries = []
    for i, A in enumerate(rows):
        row = []
        for j, B in enumerate(cols):
            lefts, rights = cells.get((i, j), ([], []))
            S = FiniteSet(len(lefts))
            row.append(Span(FiniteFunction(S, A, lefts), FiniteFunction(S, B, rights)))
        entries.append(row)
    return SpanMatrix(rows, cols, entries)


def span_of_matrix(M):
    row_off, row_total = _offsets(M.row_objects)
    col_off, col_total = _offsets(M.col_objects)
    X, Y = FiniteSet(row_total), FiniteSet(col_total)
    left, right = [], []
    for i, row in enumerate(M.entries):
        for j, R in enumerate(row):
            left.extend(row_off[i] + v for v in R.left.table)
            right.extend(col_off[j] + v for v in R.right.table)
    S = FiniteSet(len(left))
    return Span(FiniteFunction(S, X, left), FiniteFunction(S, Y, right))


def matrix_compose(M, N):
    if M.col_objects != N.row_objects:
        raise BoundaryError("matrix dimensions do not match")
    entries = []
    for i, X in enumerate(M.row_objects):
        row = []
        for k, Z in enumerate(N.col_objects):
            terms = [compose_spans(M[i, j], N[j, k]) for j in range(len(M.col_objects))]
            row.append(span_sum(terms, X, Z))
        entries.append(row)
    return SpanMatrix(M.row_objects, N.col_objects, entries)


def identity_matrix(objs):
    objs = tuple(objs)
    return SpanMatrix(objs, objs, [[id_span(A) if i == j else empty_span(A, B)
                                    for j, B in enumerate(objs)]
                                   for i, A in enumerate(objs)])


def zero_matrix(rows, cols):
    return SpanMatrix(rows, cols, [[empty_span(A, B) for B in cols] for A in rows])


def transpose_matrix(M):
    """Entrywise opposite, rows and columns swapped."""
    return SpanMatrix(M.col_objects, M.row_objects,
                      [[opposite(M[i, j]) for i in range(len(M.row_objects))]
                       for j in range(len(M.col_objects))])


def matrix_iso(M, N):
    """Entrywise isomorphisms, or ``None``."""
    if M.row_objects != N.row_objects or M.col_objects != N.col_objects:
        return None
    out = []
    for i in range(len(M.row_objects)):
        row = []
        for j in range(len(M.col_objects)):
            iso = find_iso(M[i, j], N[i, j])
            if iso is None:
                return None
            row.append(iso)
        out.append(row)
    return out


def matrix_roundtrip(R, rows, cols):
    return find_iso(span_of_matrix(matrix_of_span(R, rows, cols)), R)


def matrix_composition_agrees(M, N):
    """``M N`` entrywise iso to the matrix of the composite of the assembled spans."""
    direct = matrix_of_span(compose_spans(span_of_matrix(M), span_of_matrix(N)),
                            M.row_objects, N.col_objects)
    return matrix_iso(matrix_compose(M, N), direct)


# zero object and injections

def zero_object_check(bound=5, max_apex=3):
    """``0`` is initial and terminal: one span each way, the empty one."""
    zero = FiniteSet(0)
    for n in range(bound + 1):
        Z = FiniteSet(n)
        into = list(sweep.spans_up_to_iso(zero, Z, max_apex))
        out = list(sweep.spans_up_to_iso(Z, zero, max_apex))
        if len(into) != 1 or len(out) != 1:
            return failed("zero object", {"size": n, "spans_from_0": len(into),
                                          "spans_to_0": len(out)}, bounded=True)
        # the composite through 0 is the empty span, and 0 is strict initial
        through = compose_spans(out[0], empty_span(zero, Z))
        if through.apex.size != 0:
            return failed("zero object", {"size": n, "reason": "composite through 0 not empty"},
                          bounded=True)
        for f in finset.all_functions(Z, zero):
            if not finset.is_bijection(f):
                return failed("zero object", {"reason": "arrow into 0 not invertible"})
    return passed("zero object", empty_span(zero, zero), bounded=True, sizes=bound + 1)


def injection_spans(X, Y):
    _, i1, i2 = finset.coproduct(X, Y)
    return graph(i1), graph(i2)


def check_injections(X, Y):
    j1, j2 = injection_spans(X, Y)
    subject = f"injections {X.size}+{Y.size}"
    if not (is_map(j1) and is_map(j2)):
        return failed(subject, {"reason": "injection is not a map"})
    isos = []
    for j, A in ((j1, X), (j2, Y)):
        iso = find_iso(compose_spans(j, opposite(j)), id_span(A))
        if iso is None:
            return failed(subject, {"reason": "injection is not fully faithful", "injection": j})
        isos.append(iso)
    return passed(subject, isos)


def codiagonal_direct(X):
    return map_from_function(finset.codiagonal(X))


def codiagonal_from_components(X):
    """The span ``X + X -> X`` whose composites with both injections are ``1_X``."""
    return span_of_matrix(SpanMatrix((X, X), (X,), [[id_span(X)], [id_span(X)]]))


def codiagonal_is_map(X):
    subject = f"codiagonal on {X.size} is a map"
    direct = codiagonal_direct(X)
    built = codiagonal_from_components(X)
    iso = find_iso(direct, built)
    if iso is None:
        return failed(subject, {"reason": "two constructions differ"})
    j1, j2 = injection_spans(X, X)
    for j in (j1, j2):
        if find_iso(compose_spans(j, built), id_span(X)) is None:
            return failed(subject, {"reason": "composite with an injection is not 1_X"})
    if not (is_map(direct) and is_map(built)):
        return failed(subject, {"reason": "codiagonal is not a map"})
    return passed(subject, iso)


def split_by_injections(R, X, Y):
    j1, j2 = injection_spans(X, Y)
    return compose_spans(j1, R), compose_spans(j2, R)


def recombine_from_coproduct(R1, R2, X, Y):
    """``[R1, R2]: X + Y -> Z``."""
    return span_of_matrix(SpanMatrix((X, Y), (R1.tgt,), [[R1], [R2]]))


def split_by_projections(R, X, Y):
    j1, j2 = injection_spans(X, Y)
    return compose_spans(R, opposite(j1)), compose_spans(R, opposite(j2))


def recombine_into_product(R1, R2, X, Y):
    return span_of_matrix(SpanMatrix((R1.src,), (X, Y), [[R1, R2]]))


def direct_sum_hom_equivalence(X, Y, Z, sample):
    subject = f"hom equivalence for {X.size}+{Y.size} against {Z.size}"
    S, _, _ = finset.coproduct(X, Y)
    isos = []
    for R in sample:
        if R.src == S and R.tgt == Z:
            back = recombine_from_coproduct(*split_by_injections(R, X, Y), X, Y)
        elif R.src == Z and R.tgt == S:
            back = recombine_into_product(*split_by_projections(R, X, Y), X, Y)
        else:
            raise BoundaryError("sample spans must go X+Y -> Z or Z -> X+Y")
        iso = find_iso(back, R)
        if iso is None:
            return failed(subject, {"reason": "recombination not isomorphic", "span": R})
        isos.append(iso)
    return passed(subject, isos, samples=len(isos))


def canonical_sum_to_product(X, Y):
    """The arrow ``X + Y -> X (+) Y`` given by the identity matrix, with the
    transpose matrix as pseudo-inverse and both composites iso to identities."""
    subject = f"direct sum {X.size}+{Y.size}"
    S, _, _ = finset.coproduct(X, Y)
    I = identity_matrix((X, Y))
    k = span_of_matrix(I)
    j1, j2 = injection_spans(X, Y)
    # components j_i ; k ; j_j* are the identity-matrix entries
    for i, ji in enumerate((j1, j2)):
        for j, jj in enumerate((j1, j2)):
            comp = compose_path(ji, k, opposite(jj))
            if find_iso(comp, I[i, j]) is None:
                return failed(subject, {"reason": "component mismatch", "entry": [i, j]})
    inv = span_of_matrix(transpose_matrix(I))
    unit = find_iso(compose_spans(k, inv), id_span(S))
    counit = find_iso(compose_spans(inv, k), id_span(S))
    if unit is None or counit is None:
        return failed(subject, {"reason": "not an equivalence"})
    return passed(subject, {"unit": unit, "counit": counit}, size=S.size)


# lextensivity of finite sets

def check_distributivity(X, Y, Z):
    d = finset.distributor(X, Y, Z)
    if not finset.is_bijection(d):
        return failed("distributivity", {"map": d})
    return passed("distributivity", d)


def check_coproduct_stability(f, X, Y):
    """Pulling ``X + Y`` back along ``f: Z -> X + Y`` splits ``Z`` as a sum."""
    _, i1, i2 = finset.coproduct(X, Y)
    c1, c2 = finset.pullback(f, i1), finset.pullback(f, i2)
    glued = finset.copair(c1.legs[0], c2.legs[0])
    if not finset.is_bijection(glued):
        return failed("coproducts are universal", {"map": f})
    disjoint = finset.pullback(i1, i2)
    if disjoint.apex.size != 0:
        return failed("coproducts are disjoint", {"X": X.size, "Y": Y.size})
    return passed("coproducts are universal", glued)


def lextensivity_report(bound=2):
    parts = []
    objs = sweep.objects(bound)
    for X in objs:
        for Y in objs:
            S, _, _ = finset.coproduct(X, Y)
            for Z in objs:
                parts.append(check_distributivity(X, Y, Z))
                for f in finset.all_functions(Z, S):
                    parts.append(check_coproduct_stability(f, X, Y))
    return combine("base is lextensive", parts, bounded=True)


def direct_sum_theorem(bound=2):
    """Direct sums, coproducts, products and lextensivity, all at once."""
    parts = [zero_object_check(min(bound + 2, 5)), lextensivity_report(bound)]
    for X in sweep.objects(bound):
        parts.append(codiagonal_is_map(X))
        for Y in sweep.objects(bound):
            parts.append(canonical_sum_to_product(X, Y))
            parts.append(check_injections(X, Y))
            S, _, _ = finset.coproduct(X, Y)
            Z = FiniteSet(1)
            sample = list(sweep.spans_up_to_iso(S, Z, 2)) + list(sweep.spans_up_to_iso(Z, S, 2))
            parts.append(direct_sum_hom_equivalence(X, Y, Z, sample))
    return combine("direct sums", parts, bounded=True)


__all__ = [
    "SpanMatrix", "span_sum", "matrix_of_span", "span_of_matrix", "matrix_compose",
    "identity_matrix", "zero_matrix", "transpose_matrix", "matrix_iso", "matrix_roundtrip",
    "matrix_composition_agrees", "zero_object_check", "injection_spans", "check_injections",
    "codiagonal_direct", "codiagonal_from_components", "codiagonal_is_map",
    "direct_sum_hom_equivalence", "canonical_sum_to_product", "check_distributivity",
    "check_coproduct_stability", "lextensivity_report", "direct_sum_theorem",
]
