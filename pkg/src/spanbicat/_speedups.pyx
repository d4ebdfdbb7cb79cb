# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; mirrors ``_purepy`` function for function."""

from cpython.mem cimport PyMem_Malloc, PyMem_Free


def check_table(tuple table, Py_ssize_t cod_size):
    cdef Py_ssize_t i, n = len(table)
    cdef long v
    for i in range(n):
        v = table[i]
        if v < 0 or v >= cod_size:
            return i
    return -1


def compose_tables(tuple f, tuple g):
    cdef Py_ssize_t i, n = len(f)
    cdef list out = [None] * n
    for i in range(n):
        out[i] = g[<Py_ssize_t>f[i]]
    return tuple(out)


def pullback_pairs(tuple f, tuple g, Py_ssize_t cod_size):
    cdef Py_ssize_t nf = len(f), ng = len(g)
    cdef Py_ssize_t a, b, c, k
    cdef Py_ssize_t *start = <Py_ssize_t *>PyMem_Malloc((cod_size + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *order = <Py_ssize_t *>PyMem_Malloc((ng + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *fill = <Py_ssize_t *>PyMem_Malloc((cod_size + 1) * sizeof(Py_ssize_t))
    cdef list ps = []
    cdef list qs = []
    if start == NULL or order == NULL or fill == NULL:
        PyMem_Free(start)
        PyMem_Free(order)
        PyMem_Free(fill)
        raise MemoryError()
    try:
        for c in range(cod_size + 1):
            start[c] = 0
        for b in range(ng):
            start[<Py_ssize_t>g[b] + 1] += 1
        for c in range(cod_size):
            start[c + 1] += start[c]
        for c in range(cod_size):
            fill[c] = start[c]
        for b in range(ng):
            c = g[b]
            order[fill[c]] = b
            fill[c] += 1
        for a in range(nf):
            c = f[a]
            for k in range(start[c], start[c + 1]):
                ps.append(a)
                qs.append(order[k])
    finally:
        PyMem_Free(start)
        PyMem_Free(order)
        PyMem_Free(fill)
    return tuple(ps), tuple(qs)


def equalizer_indices(tuple f, tuple g):
    cdef Py_ssize_t i, n = len(f)
    cdef list out = []
    for i in range(n):
        if <long>f[i] == <long>g[i]:
            out.append(i)
    return tuple(out)


def pair_index(tuple p, tuple q, Py_ssize_t q_size):
    cdef Py_ssize_t k, n = len(p), top = -1
    for k in range(n):
        if <Py_ssize_t>p[k] > top:
            top = p[k]
    cdef list out = [-1] * ((top + 1) * q_size)
    for k in range(n):
        out[<Py_ssize_t>p[k] * q_size + <Py_ssize_t>q[k]] = k
    return tuple(out)


def lookup_pairs(tuple index, tuple a, tuple b, Py_ssize_t q_size):
    cdef Py_ssize_t k, key, n = len(index), m = len(a)
    cdef list out = [None] * m
    for k in range(m):
        key = <Py_ssize_t>a[k] * q_size + <Py_ssize_t>b[k]
        out[k] = index[key] if key < n else -1
    return tuple(out)


def is_injective(tuple table, Py_ssize_t cod_size):
    cdef Py_ssize_t i, v, n = len(table)
    cdef char *seen = <char *>PyMem_Malloc(cod_size + 1)
    if seen == NULL:
        raise MemoryError()
    try:
        for i in range(cod_size):
            seen[i] = 0
        for i in range(n):
            v = table[i]
            if seen[v]:
                return False
            seen[v] = 1
        return True
    finally:
        PyMem_Free(seen)


def invert_bijection(tuple table):
    cdef Py_ssize_t i, n = len(table)
    cdef list out = [0] * n
    for i in range(n):
        out[<Py_ssize_t>table[i]] = i
    return tuple(out)


def fiber_lists(tuple left, tuple right, Py_ssize_t right_size):
    cdef dict fibers = {}
    cdef Py_ssize_t s, n = len(left)
    cdef object key
    for s in range(n):
        key = <Py_ssize_t>left[s] * right_size + <Py_ssize_t>right[s]
        lst = fibers.get(key)
        if lst is None:
            fibers[key] = [s]
        else:
            lst.append(s)
    return fibers


def count_two_cells(tuple src_left, tuple src_right, tuple tgt_left,
                    tuple tgt_right, Py_ssize_t right_size):
    cdef dict fibers = fiber_lists(tgt_left, tgt_right, right_size)
    cdef Py_ssize_t s, n = len(src_left)
    total = 1
    for s in range(n):
        fib = fibers.get(<Py_ssize_t>src_left[s] * right_size + <Py_ssize_t>src_right[s])
        if fib is None:
            return 0
        total *= len(fib)
    return total


def two_cell_tables(tuple src_left, tuple src_right, tuple tgt_left,
                    tuple tgt_right, Py_ssize_t right_size, Py_ssize_t limit=-1):
    cdef dict fibers = fiber_lists(tgt_left, tgt_right, right_size)
    cdef Py_ssize_t s, j, n = len(src_left)
    cdef list choices = []
    for s in range(n):
        fib = fibers.get(<Py_ssize_t>src_left[s] * right_size + <Py_ssize_t>src_right[s])
        if fib is None:
            return ()
        choices.append(fib)
    if n == 0:
        return ((),)
    cdef Py_ssize_t *pos = <Py_ssize_t *>PyMem_Malloc(n * sizeof(Py_ssize_t))
    cdef Py_ssize_t *lens = <Py_ssize_t *>PyMem_Malloc(n * sizeof(Py_ssize_t))
    cdef list out = []
    cdef list row
    if pos == NULL or lens == NULL:
        PyMem_Free(pos)
        PyMem_Free(lens)
        raise MemoryError()
    try:
        for s in range(n):
            pos[s] = 0
            lens[s] = len(choices[s])
        while True:
            row = [None] * n
            for s in range(n):
                row[s] = choices[s][pos[s]]
            out.append(tuple(row))
            if limit >= 0 and len(out) >= limit:
                break
            j = n - 1
            while j >= 0:
                pos[j] += 1
                if pos[j] < lens[j]:
                    break
                pos[j] = 0
                j -= 1
            if j < 0:
                break
    finally:
        PyMem_Free(pos)
        PyMem_Free(lens)
    return tuple(out)


def fiber_bijection(tuple src_left, tuple src_right, tuple tgt_left,
                    tuple tgt_right, Py_ssize_t right_size):
    cdef Py_ssize_t s, k, n = len(src_left)
    if n != len(tgt_left):
        return None
    cdef dict fibers = fiber_lists(tgt_left, tgt_right, right_size)
    cdef dict cursor = {}
    cdef list out = [None] * n
    for s in range(n):
        key = <Py_ssize_t>src_left[s] * right_size + <Py_ssize_t>src_right[s]
        fib = fibers.get(key)
        k = cursor.get(key, 0)
        if fib is None or k >= len(fib):
            return None
        out[s] = fib[k]
        cursor[key] = k + 1
    for key, fib in fibers.items():
        if cursor.get(key, 0) != len(fib):
            return None
    return tuple(out)
