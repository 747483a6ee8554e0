"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import sys
import timeit
from math import lcm

from lsalg import kernels
from lsalg._kernels_py import count_cumulative, enumerate_cumulative, graded_lattice_points
from lsalg.lattice import lattice_basis
from lsalg.poset import chain_poset


def lattice_case(bonds, r):
    P = chain_poset(bonds)
    m = [P.m_of[e] for e in P.order]
    M = lcm(*m)
    return [list(row) for row in lattice_basis(P).basis], [M // x for x in m], r * M


def cases():
    def cumulative(bonds, r):
        scale = lcm(*bonds)
        return [scale // b for b in bonds], r * scale

    yield "enumerate_cumulative b=(2,3,4) r=6", "enumerate_cumulative", cumulative((2, 3, 4), 6)
    yield "enumerate_cumulative b=(4,4,4,4) r=4", "enumerate_cumulative", cumulative((4, 4, 4, 4), 4)
    yield "count_cumulative b=(2,3,4,5) r=20", "count_cumulative", cumulative((2, 3, 4, 5), 20)
    yield "count_cumulative b=(4,)*6 r=30", "count_cumulative", cumulative((4,) * 6, 30)
    yield "graded_lattice_points b=(2,3,4) r=6", "graded_lattice_points", lattice_case((2, 3, 4), 6)
    yield "graded_lattice_points b=(4,4,4) r=8", "graded_lattice_points", lattice_case((4, 4, 4), 8)


PURE = {"enumerate_cumulative": enumerate_cumulative, "count_cumulative": count_cumulative,
        "graded_lattice_points": graded_lattice_points}


def best(fn, args, repeat):
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    ext = kernels.compiled_impl
    if ext is None:
        print("compiled extension not available; build with Cython installed", file=sys.stderr)
        return 1
    print(f"{'case':44s} {'python (ms)':>12s} {'cython (ms)':>12s} {'speedup':>8s}")
    for label, name, call in cases():
        a = PURE[name](*call)
        b = getattr(ext, name)(*call)
        assert sorted(a) == sorted(b) if isinstance(a, list) else a == b
        tp, tc = best(PURE[name], call, args.repeat), best(getattr(ext, name), call, args.repeat)
        print(f"{label:44s} {tp * 1e3:12.2f} {tc * 1e3:12.2f} {tp / tc:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
