"""The discrete LS algebra: monomial realization, straightening, Hilbert data."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import LSError
from .paths import (
    LSPath,
    canonical_form,
    count_paths,
    dotplus,
    enumerate_paths,
    is_standard,
    make_function,
)
from .poset import PosetWithBonds

# Exponent vectors are plain tuples of ints aligned with ``P.order``.
ExponentMonomial = tuple


def to_monomial(P: PosetWithBonds, f) -> ExponentMonomial:
    f = make_function(P, f)
    exps = [0] * len(P.order)
    for e, v in f.items:
        x = P.m_of[e] * v
        if x.denominator != 1:
            raise AssertionError(f"M_{e} * {v} is not an integer")
        exps[P.index[e]] = int(x)
    return tuple(exps)


def format_monomial(P: PosetWithBonds, exps: Sequence[int]) -> str:
    parts = []
    for e, k in zip(P.order, exps):
        if k == 1:
            parts.append(f"x_{{{e}}}")
        elif k:
            parts.append(f"x_{{{e}}}^{k}")
    return " ".join(parts) if parts else "1"


@dataclass(frozen=True)
class StraighteningRelation:
    lhs: tuple[LSPath, LSPath]
    rhs: tuple[LSPath, LSPath] | None  # None means the product is zero

    @property
    def is_zero(self) -> bool:
        return self.rhs is None


def straighten(P: PosetWithBonds, a, b) -> StraighteningRelation | None:
    """Discrete straightening of a degree-2 product; None if already standard."""
    a, b = make_function(P, a), make_function(P, b)
    if is_standard(P, [a, b]) or is_standard(P, [b, a]):
        return None
    s, comparable = dotplus(P, a, b)
    if not comparable:
        return StraighteningRelation((a, b), None)
    lo, hi = canonical_form(P, s)
    return StraighteningRelation((a, b), (lo, hi))


def discrete_relations(P: PosetWithBonds) -> list[StraighteningRelation]:
    """One relation per unordered non-standard pair of degree-1 paths."""
    gens = enumerate_paths(P, 1)
    out = []
    for i, a in enumerate(gens):
        for b in gens[i:]:
            rel = straighten(P, a, b)
            if rel is not None:
                out.append(rel)
    return out


@dataclass(frozen=True)
class HilbertData:
    dims: tuple[int, ...]
    h: tuple[int, ...]
    krull_dim: int
    stabilized: bool

    @property
    def stanley_exponent(self) -> int:
        """k with F(1/t) = (-1)^n t^k F(t) when h is palindromic; equals n - deg h."""
        return self.krull_dim - (len(self.h) - 1)


def finite_difference(seq: Sequence[int], times: int) -> list[int]:
    """Coefficients of (1 - t)^times * sum seq_r t^r, truncated to len(seq)."""
    out = list(seq)
    for _ in range(times):
        out = [out[0]] + [b - a for a, b in zip(out, out[1:])]
    return out


def hilbert_function(P: PosetWithBonds, D: int | None = None) -> HilbertData:
    n = P.length + 1
    if D is None:
        D = 2 * n + 4
    dims = tuple(count_paths(P, r) for r in range(D + 1))
    diff = finite_difference(dims, n)
    last = max((i for i, x in enumerate(diff) if x), default=-1)
    stabilized = last <= D - n
    h = tuple(diff[: last + 1])
    return HilbertData(dims, h, n, stabilized)


def stanley_symmetry(h) -> bool:
    if isinstance(h, HilbertData):
        if not h.stabilized:
            raise LSError("Hilbert data did not stabilize; increase the degree bound")
        h = h.h
    h = list(h)
    while h and h[-1] == 0:
        h.pop()
    return h == h[::-1]
