"""Gorenstein decision for discrete LS algebras over chains, by three routes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .discrete import hilbert_function, stanley_symmetry
from .errors import PosetError
from .paths import is_ls_path
from .poset import PosetWithBonds, chain_poset
from .quotient import chain_m_values, group_generators, is_in_sl


@dataclass(frozen=True)
class GorensteinVerdict:
    by_paths: bool
    by_sl: bool
    by_hvector: bool
    candidate: tuple[Fraction, ...]  # values 1/M_i
    partial_sums: tuple[Fraction, ...]  # 1/M_0 + ... + 1/M_i

    @property
    def agree(self) -> bool:
        return self.by_paths == self.by_sl == self.by_hvector


def _require_chain(P: PosetWithBonds):
    P.require_valid()
    if not P.is_totally_ordered:
        raise PosetError("the Gorenstein criterion is stated for totally ordered posets only")


def candidate_function(P: PosetWithBonds) -> dict[str, Fraction]:
    return {e: Fraction(1, P.m_of[e]) for e in P.order}


def gorenstein_by_paths(P: PosetWithBonds) -> bool:
    _require_chain(P)
    f = candidate_function(P)
    total = sum(f.values())
    if total.denominator != 1:
        return False
    return is_ls_path(P, f, int(total)).ok


def gorenstein_by_sl(P: PosetWithBonds) -> bool:
    _require_chain(P)
    G = group_generators(P)
    return all(is_in_sl(g, G) for g in G.generators)


def gorenstein_by_hvector(P: PosetWithBonds, D: int | None = None) -> bool:
    _require_chain(P)
    return stanley_symmetry(hilbert_function(P, D))


def decide(P: PosetWithBonds, D: int | None = None) -> GorensteinVerdict:
    cand = tuple(Fraction(1, P.m_of[e]) for e in P.order)
    sums = []
    acc = Fraction(0)
    for q in cand:
        acc += q
        sums.append(acc)
    return GorensteinVerdict(gorenstein_by_paths(P), gorenstein_by_sl(P), gorenstein_by_hvector(P, D),
                             cand, tuple(sums))


def _paths_criterion(bonds: Sequence[int]) -> bool:
    return gorenstein_by_paths(chain_poset(bonds))


@dataclass(frozen=True)
class ScanReport:
    length: int
    max_bond: int
    vectors: tuple[tuple[int, ...], ...]
    pruned_by_bound: int  # sum 1/M_i < 1, so the total cannot be a positive integer
    pruned_by_integrality: int  # sum >= 1 but some LS condition fails
    largest_gorenstein_bond: int
    bound_prunes_tail: bool  # every scanned vector with a larger bond fails sum >= 1


def enumerate_gorenstein_bonds(N: int, B: int) -> ScanReport:
    if N < 1 or B < 1:
        raise ValueError("need N >= 1 and B >= 1")
    found = []
    by_bound = by_int = 0
    below_one = {}
    for bonds in product(range(1, B + 1), repeat=N):
        s = sum(Fraction(1, m) for m in chain_m_values(bonds))
        below_one[bonds] = s < 1
        if _paths_criterion(bonds):
            found.append(bonds)
        elif s < 1:
            by_bound += 1
        else:
            by_int += 1
    largest = max((max(v) for v in found), default=0)
    tail = all(flag for v, flag in below_one.items() if max(v) > largest)
    return ScanReport(N, B, tuple(found), by_bound, by_int, largest, tail)
