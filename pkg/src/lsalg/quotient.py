"""The finite abelian group whose invariant ring is the discrete algebra of a chain.

A group element is a diagonal matrix ``diag(zeta^a_0, ..., zeta^a_N)`` with
``zeta`` a primitive M-th root of unity; it is stored as the residue vector
``(a_0, ..., a_N)`` mod M, so every test below is a congruence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm
from typing import Sequence

from .discrete import to_monomial
from .errors import CapExceeded, PosetError
from .paths import enumerate_paths
from .poset import PosetWithBonds

DEFAULT_GROUP_CAP = 100_000


@dataclass(frozen=True)
class GroupData:
    modulus: int
    generators: tuple[tuple[int, ...], ...]
    bonds: tuple[int, ...] | None = None
    m_values: tuple[int, ...] | None = None
    _closure: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def rank(self) -> int:
        return len(self.generators[0]) if self.generators else 0

    def identity(self) -> tuple[int, ...]:
        return (0,) * self.rank


def _extended_bonds(bonds):
    """b_{-1}, b_0, ..., b_{N-1}, b_N with the boundary bonds set to 1."""
    return (1,) + tuple(bonds) + (1,)


def chain_m_values(bonds: Sequence[int]) -> tuple[int, ...]:
    b = _extended_bonds(bonds)
    return tuple(lcm(b[i], b[i + 1]) for i in range(len(bonds) + 1))


def group_generators(P: PosetWithBonds) -> GroupData:
    if not P.is_totally_ordered:
        raise PosetError("the quotient group is defined for totally ordered posets only")
    bonds = P.chain_bonds()
    m = chain_m_values(bonds)
    assert m == tuple(P.m_of[e] for e in P.order)
    M = lcm(*bonds) if bonds else 1
    top = bonds + (1,)  # b_i for i = 0..N, with b_N = 1
    gens = []
    for i in range(len(m)):
        gens.append(tuple((M // m[j]) * top[i] % M if j <= i else 0 for j in range(len(m))))
    return GroupData(M, tuple(gens), tuple(bonds), m)


def group_closure(G: GroupData, cap: int = DEFAULT_GROUP_CAP) -> list[tuple[int, ...]]:
    if cap in G._closure:
        return list(G._closure[cap])
    M = G.modulus
    seen = {G.identity()}
    frontier = [G.identity()]
    while frontier:
        nxt = []
        for x in frontier:
            for g in G.generators:
                y = tuple((a + b) % M for a, b in zip(x, g))
                if y not in seen:
                    seen.add(y)
                    if len(seen) > cap:
                        raise CapExceeded(f"group order exceeds {cap}")
                    nxt.append(y)
        frontier = nxt
    out = sorted(seen)
    G._closure[cap] = out
    return list(out)


def pseudo_reflections(G: GroupData, elements=None) -> list[tuple[int, ...]]:
    """Elements fixing a hyperplane pointwise: exactly one nontrivial eigenvalue."""
    if elements is None:
        elements = group_closure(G)
    M = G.modulus
    return [g for g in elements if sum(1 for a in g if a % M) == 1]


def is_in_sl(g: Sequence[int], G: GroupData) -> bool:
    return sum(g) % G.modulus == 0


def element_from_word(G: GroupData, word: Sequence[int]) -> tuple[int, ...]:
    """e_0^t_0 * ... * e_N^t_N as a residue vector."""
    acc = [0] * G.rank
    for t, g in zip(word, G.generators):
        for j, a in enumerate(g):
            acc[j] += t * a
    return tuple(a % G.modulus for a in acc)


def word_coordinate_trivial(bonds: Sequence[int], word: Sequence[int], i: int) -> bool:
    """Whether coordinate i of the word's element vanishes, decided by the bond congruences."""
    b = _extended_bonds(bonds)  # b[k + 1] is b_k
    s = sum(b[j + 1] * word[j] for j in range(i, len(bonds) + 1))
    return s % b[i] == 0 and s % b[i + 1] == 0


def format_element(g: Sequence[int], M: int) -> str:
    return f"zeta^({','.join(str(a) for a in g)}) mod {M}"


def invariant_monomials(P: PosetWithBonds, d: int) -> set[tuple[int, ...]]:
    """Exponent vectors of path-degree d that every generator fixes."""
    G = group_generators(P)
    M, m = G.modulus, G.m_values
    n = len(m)
    weights = [M // x for x in m]
    total = d * M
    gens = G.generators
    out = set()
    cur = [0] * n

    def rec(j, used, eig):
        if j == n - 1:
            rem = total - used
            if rem % weights[j]:
                return
            k = rem // weights[j]
            if all((e + g[j] * k) % M == 0 for e, g in zip(eig, gens)):
                cur[j] = k
                out.add(tuple(cur))
            return
        for k in range((total - used) // weights[j] + 1):
            cur[j] = k
            rec(j + 1, used + weights[j] * k, [e + g[j] * k for e, g in zip(eig, gens)])

    rec(0, 0, [0] * len(gens))
    return out


def invariant_mismatches(P: PosetWithBonds, D: int) -> list[int]:
    """Degrees d <= D where invariant monomials differ from {x^pi : pi in LS_d}."""
    bad = []
    for d in range(D + 1):
        from_paths = {to_monomial(P, f) for f in enumerate_paths(P, d)}
        if invariant_monomials(P, d) != from_paths:
            bad.append(d)
    return bad


def verify_invariants_equal_paths(P: PosetWithBonds, D: int) -> bool:
    return not invariant_mismatches(P, D)


def lattice_index_equals_group_order(P: PosetWithBonds) -> bool:
    from .lattice import lattice_basis

    return len(group_closure(group_generators(P))) == lattice_basis(P).index
