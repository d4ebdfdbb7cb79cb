"""Pure-Python kernels. Same contract as the compiled ``_speedups`` module.

Tables are tuples of ints. Every function returns tuples so results are
hashable and comparable regardless of which backend produced them.
"""

from itertools import product as _cartesian


def check_table(table, cod_size):
    """Index of the first out-of-range entry, or -1 if the table is valid."""
    for i, v in enumerate(table):
        if v < 0 or v >= cod_size:
            return i
    return -1


def compose_tables(f, g):
    return tuple([g[i] for i in f])


def pullback_pairs(f, g, cod_size):
    """All (a, b) with f[a] == g[b], lexicographic in (a, b)."""
    buckets = [[] for _ in range(cod_size)]
    for b, c in enumerate(g):
        buckets[c].append(b)
    ps = []
    qs = []
    for a, c in enumerate(f):
        for b in buckets[c]:
            ps.append(a)
            qs.append(b)
    return tuple(ps), tuple(qs)


def equalizer_indices(f, g):
    return tuple([i for i in range(len(f)) if f[i] == g[i]])


def pair_index(p, q, q_size):
    """Dense lookup (a * q_size + b) -> position of (a, b) in the pair list."""
    n = (max(p) + 1 if p else 0) * q_size
    out = [-1] * n
    for k in range(len(p)):
        out[p[k] * q_size + q[k]] = k
    return tuple(out)


def lookup_pairs(index, a, b, q_size):
    """Positions of the pairs (a[k], b[k]); -1 where the pair is absent."""
    out = []
    n = len(index)
    for k in range(len(a)):
        key = a[k] * q_size + b[k]
        out.append(index[key] if key < n else -1)
    return tuple(out)


def is_injective(table, cod_size):
    seen = [False] * cod_size
    for v in table:
        if seen[v]:
            return False
        seen[v] = True
    return True


def invert_bijection(table):
    out = [0] * len(table)
    for i, v in enumerate(table):
        out[v] = i
    return tuple(out)


def fiber_lists(left, right, right_size):
    """Map key left*right_size+right -> list of apex elements over it."""
    fibers = {}
    for s in range(len(left)):
        fibers.setdefault(left[s] * right_size + right[s], []).append(s)
    return fibers


def count_two_cells(src_left, src_right, tgt_left, tgt_right, right_size):
    fibers = fiber_lists(tgt_left, tgt_right, right_size)
    total = 1
    for s in range(len(src_left)):
        n = len(fibers.get(src_left[s] * right_size + src_right[s], ()))
        if n == 0:
            return 0
        total *= n
    return total


def two_cell_tables(src_left, src_right, tgt_left, tgt_right, right_size, limit=-1):
    """Every apex function commuting with both legs, in lexicographic order."""
    fibers = fiber_lists(tgt_left, tgt_right, right_size)
    choices = []
    for s in range(len(src_left)):
        fib = fibers.get(src_left[s] * right_size + src_right[s])
        if not fib:
            return ()
        choices.append(fib)
    out = []
    for t in _cartesian(*choices):
        out.append(t)
        if limit >= 0 and len(out) >= limit:
            break
    return tuple(out)


def fiber_bijection(src_left, src_right, tgt_left, tgt_right, right_size):
    """One leg-preserving bijection between apexes, or None."""
    if len(src_left) != len(tgt_left):
        return None
    fibers = fiber_lists(tgt_left, tgt_right, right_size)
    cursor = {}
    out = []
    for s in range(len(src_left)):
        key = src_left[s] * right_size + src_right[s]
        fib = fibers.get(key)
        k = cursor.get(key, 0)
        if fib is None or k >= len(fib):
            return None
        out.append(fib[k])
        cursor[key] = k + 1
    for key, fib in fibers.items():
        if cursor.get(key, 0) != len(fib):
            return None
    return tuple(out)
