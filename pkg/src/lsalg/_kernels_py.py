"""Pure-Python implementations of the integer enumeration kernels.

Both this module and the compiled ``_ckernels`` expose the same three
functions; :mod:`lsalg.kernels` picks one at import time.
"""


def enumerate_cumulative(mults, total):
    """All nondecreasing ``k`` with ``0 <= k_j <= total`` and ``k_j % mults[j] == 0``."""
    n = len(mults)
    out = []
    cur = [0] * n

    def rec(j, lo):
        if j == n:
            out.append(tuple(cur))
            return
        m = mults[j]
        for k in range(-(-lo // m) * m, total + 1, m):
            cur[j] = k
            rec(j + 1, k)

    rec(0, 0)
    return out


def count_cumulative(mults, total):
    """Number of sequences :func:`enumerate_cumulative` would return."""
    if not mults:
        return 1
    ways = [1] + [0] * total  # sequences ending at value v; the empty prefix ends at 0
    for m in mults:
        new = [0] * (total + 1)
        run = 0
        for v in range(total + 1):
            run += ways[v]
            if v % m == 0:
                new[v] = run
        ways = new
    return sum(ways)


def graded_lattice_points(basis, weights, total):
    """Nonnegative points of the row lattice of ``basis`` with ``sum w_i g_i == total``.

    ``basis`` must be square, upper triangular with positive diagonal (a
    Hermite normal form), so membership is decided coordinate by coordinate.
    """
    n = len(basis)
    out = []
    cur = [0] * n

    def rec(k, used, acc):
        w = weights[k]
        piv = basis[k][k]
        if k == n - 1:
            rem = total - used
            if rem % w == 0 and (rem // w - acc[k]) % piv == 0:
                cur[k] = rem // w
                out.append(tuple(cur))
            return
        row = basis[k]
        for g in range(acc[k] % piv, (total - used) // w + 1, piv):
            c = (g - acc[k]) // piv
            cur[k] = g
            rec(k + 1, used + w * g, [a + c * x for a, x in zip(acc, row)])

    if n:
        rec(0, 0, [0] * n)
    return out
