"""Affine-semigroup realization of the discrete algebra.

For a chain s_0 < ... < s_N the exponent lattice is the set of integer
vectors g with ``b_j * sum_{i<=j} g_i / M_i`` integral for j < N and
``sum_i g_i / M_i`` integral; the discrete algebra is the semigroup algebra
of its nonnegative points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm, prod
from typing import Sequence

from . import kernels
from .discrete import to_monomial
from .errors import InvalidPath, PosetError
from .paths import LSPath, canonical_form, chain_paths, count_chain_paths, count_paths, enumerate_paths, make_function
from .poset import PosetWithBonds


def hnf(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form; zero rows are dropped.

    Pivots are positive and entries above a pivot lie in ``[0, pivot)``.
    """
    A = [list(r) for r in rows if any(r)]
    if not A:
        return []
    m, n = len(A), len(A[0])
    pr = 0
    for col in range(n):
        if pr == m:
            break
        while True:
            nz = [i for i in range(pr, m) if A[i][col]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(A[i][col]))
            A[pr], A[p] = A[p], A[pr]
            piv = A[pr][col]
            clean = True
            for i in range(pr + 1, m):
                if A[i][col]:
                    q = A[i][col] // piv
                    A[i] = [a - q * b for a, b in zip(A[i], A[pr])]
                    clean = clean and A[i][col] == 0
            if clean:
                break
        if not any(A[i][col] for i in range(pr, m)):
            continue
        if A[pr][col] < 0:
            A[pr] = [-a for a in A[pr]]
        piv = A[pr][col]
        for i in range(pr):
            q = A[i][col] // piv
            if q:
                A[i] = [a - q * b for a, b in zip(A[i], A[pr])]
        pr += 1
    return [r for r in A[:pr]]


def congruence_lattice(conditions: Sequence[Sequence[int]], modulus: int, n: int) -> list[list[int]]:
    """HNF basis of ``{g in Z^n : c . g == 0 mod modulus for every row c}``."""
    m = len(conditions)
    # rows (A^T e_i | e_i) and (modulus e_k | 0); after HNF the rows with a
    # zero left block span exactly the solutions g in the right block
    W = []
    for i in range(n):
        W.append([c[i] for c in conditions] + [int(i == j) for j in range(n)])
    for k in range(m):
        W.append([modulus * int(k == j) for j in range(m)] + [0] * n)
    H = hnf(W)
    sol = [row[m:] for row in H if not any(row[:m])]
    return hnf(sol)


@dataclass(frozen=True)
class IntegerLattice:
    ambient_rank: int
    basis: tuple[tuple[int, ...], ...]
    index: int

    def contains(self, v: Sequence[int]) -> bool:
        acc = list(v)
        for k, row in enumerate(self.basis):
            piv = row[k]
            if acc[k] % piv:
                return False
            c = acc[k] // piv
            acc = [a - c * b for a, b in zip(acc, row)]
        return not any(acc)


def chain_conditions(P: PosetWithBonds) -> tuple[list[list[int]], int, list[int]]:
    """Integer congruence rows (mod M) defining the exponent lattice, plus M and the M_i."""
    if not P.is_totally_ordered:
        raise PosetError("the exponent lattice is defined for totally ordered posets only")
    bonds = P.chain_bonds()
    m = [P.m_of[e] for e in P.order]
    M = lcm(*m)
    rows = []
    for j, b in enumerate(bonds):
        rows.append([M * b // m[i] if i <= j else 0 for i in range(len(m))])
    rows.append([M // x for x in m])
    return rows, M, m


def lattice_basis(P: PosetWithBonds) -> IntegerLattice:
    rows, M, m = chain_conditions(P)
    n = len(m)
    basis = congruence_lattice(rows, M, n)
    assert len(basis) == n
    return IntegerLattice(n, tuple(tuple(r) for r in basis), prod(basis[i][i] for i in range(n)))


def graded_points(P: PosetWithBonds, r: int) -> list[tuple[int, ...]]:
    """Nonnegative lattice points g with sum g_i / M_i == r, sorted."""
    L = lattice_basis(P)
    m = [P.m_of[e] for e in P.order]
    M = lcm(*m)
    pts = kernels.graded_lattice_points([list(row) for row in L.basis], [M // x for x in m], r * M)
    return sorted(pts)


def point_to_path(P: PosetWithBonds, point: Sequence[int]) -> LSPath:
    return make_function(P, {e: Fraction(g, P.m_of[e]) for e, g in zip(P.order, point)})


def degree_one_failures(P: PosetWithBonds, r: int) -> list[tuple[int, ...]]:
    """Degree-r points that the canonical slicing fails to split into degree-1 points."""
    deg1 = set(graded_points(P, 1))
    bad = []
    for pt in graded_points(P, r):
        try:
            factors = canonical_form(P, point_to_path(P, pt))
        except InvalidPath:
            bad.append(pt)
            continue
        parts = [to_monomial(P, f) for f in factors]
        if len(parts) != r or any(q not in deg1 for q in parts) or tuple(map(sum, zip(*parts))) != tuple(pt):
            bad.append(pt)
    return bad


def degree_one_generation(P: PosetWithBonds, r: int) -> bool:
    return not degree_one_failures(P, r)


# -- components of the discrete algebra of a general poset --------------------


@dataclass(frozen=True)
class ChainComponent:
    chain: tuple[str, ...]
    path_set: tuple[LSPath, ...]
    killed_variables: tuple[LSPath, ...]


@dataclass(frozen=True)
class Intersection:
    first: int
    second: int
    common: tuple[str, ...]
    expected: int
    found: int
    ok: bool


@dataclass(frozen=True)
class ComponentReport:
    components: tuple[ChainComponent, ...]
    intersections: tuple[Intersection, ...]
    # (degree, |LS_d|, inclusion-exclusion over the components)
    inclusion_exclusion: tuple[tuple[int, int, int], ...]

    @property
    def ok(self) -> bool:
        return all(x.ok for x in self.intersections) and all(a == b for _, a, b in self.inclusion_exclusion)


def components(P: PosetWithBonds, D: int = 3) -> ComponentReport:
    P.require_valid()
    gens = enumerate_paths(P, 1)
    chains = P.maximal_chains()
    comps = []
    for ch in chains:
        inside = set(ch)
        comps.append(ChainComponent(
            ch,
            tuple(f for f in gens if set(f.support) <= inside),
            tuple(f for f in gens if not set(f.support) <= inside)))
    inters = []
    for i, j in combinations(range(len(comps)), 2):
        common = tuple(e for e in chains[i] if e in set(chains[j]))
        expected = set(chain_paths(P, common, 1))
        found = set(comps[i].path_set) & set(comps[j].path_set)
        inters.append(Intersection(i, j, common, len(expected), len(found), expected == found))
    ie = []
    for d in range(D + 1):
        total = 0
        for size in range(1, len(chains) + 1):
            for group in combinations(chains, size):
                common = set(group[0]).intersection(*group[1:])
                total += (-1) ** (size + 1) * count_chain_paths(P, sorted(common, key=P.index.__getitem__), d)
        ie.append((d, count_paths(P, d), total))
    return ComponentReport(tuple(comps), tuple(inters), tuple(ie))
