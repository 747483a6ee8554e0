# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled versions of the kernels in ``_kernels_py``.

Arithmetic is in 64-bit integers; :mod:`lsalg.kernels` only dispatches here
when the inputs are known to stay in range.
"""

from libc.stdlib cimport malloc, free


cdef void _cumul_rec(int j, int n, long long lo, long long total,
                     long long *mults, long long *cur, list out):
    cdef long long m, k
    if j == n:
        out.append(tuple([cur[i] for i in range(n)]))
        return
    m = mults[j]
    k = ((lo + m - 1) // m) * m
    while k <= total:
        cur[j] = k
        _cumul_rec(j + 1, n, k, total, mults, cur, out)
        k += m


def enumerate_cumulative(mults, long long total):
    cdef int n = len(mults)
    cdef long long *m = <long long *> malloc((n + 1) * sizeof(long long))
    cdef long long *cur = <long long *> malloc((n + 1) * sizeof(long long))
    cdef list out = []
    try:
        for i in range(n):
            m[i] = mults[i]
            cur[i] = 0
        _cumul_rec(0, n, 0, total, m, cur, out)
    finally:
        free(m)
        free(cur)
    return out


def count_cumulative(mults, long long total):
    cdef int n = len(mults)
    cdef long long v, run, mm
    if n == 0:
        return 1
    cdef long long *ways = <long long *> malloc((total + 1) * sizeof(long long))
    try:
        ways[0] = 1
        for v in range(1, total + 1):
            ways[v] = 0
        for mult in mults:
            mm = mult
            run = 0
            for v in range(total + 1):
                run += ways[v]
                ways[v] = run if v % mm == 0 else 0
        run = 0
        for v in range(total + 1):
            run += ways[v]
        return run
    finally:
        free(ways)


cdef void _lattice_rec(int k, int n, long long used, long long total,
                       long long *basis, long long *weights, long long *acc,
                       long long *cur, list out):
    # acc holds n entries per depth: acc[k*n:(k+1)*n] is the running combination
    cdef long long w = weights[k]
    cdef long long piv = basis[k * n + k]
    cdef long long rem, g, c, start
    cdef long long *a = acc + k * n
    cdef long long *nxt
    cdef int i
    if k == n - 1:
        rem = total - used
        if rem % w == 0 and (rem // w - a[k]) % piv == 0:
            cur[k] = rem // w
            out.append(tuple([cur[i] for i in range(n)]))
        return
    nxt = acc + (k + 1) * n
    start = a[k] % piv
    if start < 0:
        start += piv
    g = start
    while g <= (total - used) // w:
        c = (g - a[k]) // piv
        cur[k] = g
        for i in range(n):
            nxt[i] = a[i] + c * basis[k * n + i]
        _lattice_rec(k + 1, n, used + w * g, total, basis, weights, acc, cur, out)
        g += piv


def graded_lattice_points(basis, weights, long long total):
    cdef int n = len(basis)
    cdef list out = []
    if n == 0:
        return out
    cdef long long *b = <long long *> malloc(n * n * sizeof(long long))
    cdef long long *w = <long long *> malloc(n * sizeof(long long))
    cdef long long *acc = <long long *> malloc(n * n * sizeof(long long))
    cdef long long *cur = <long long *> malloc(n * sizeof(long long))
    try:
        for i in range(n):
            w[i] = weights[i]
            cur[i] = 0
            acc[i] = 0
            for j in range(n):
                b[i * n + j] = basis[i][j]
        _lattice_rec(0, n, 0, total, b, w, acc, cur, out)
    finally:
        free(b)
        free(w)
        free(acc)
        free(cur)
    return out
