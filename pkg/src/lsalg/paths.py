"""LS-paths: validation, enumeration, canonical forms and the path orders."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Mapping, Sequence

from . import kernels
from .errors import InvalidPath, LSError, PosetError
from .poset import DEFAULT_EXTENSION_CAP, PosetWithBonds


@dataclass(frozen=True)
class LSPath:
    """A nonnegative rational function stored sparsely on its support.

    ``items`` holds ``(element, value)`` pairs with nonzero values, sorted by
    the canonical element order of the poset the function was built on.
    Construction does not check the LS conditions; use :func:`lspath` for that.
    """

    items: tuple[tuple[str, Fraction], ...]

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(e for e, _ in self.items)

    @property
    def total(self) -> Fraction:
        return sum((v for _, v in self.items), Fraction(0))

    @property
    def degree(self) -> int:
        t = self.total
        if t.denominator != 1:
            raise InvalidPath(f"total {t} is not an integer")
        return int(t)

    def value(self, e) -> Fraction:
        for x, v in self.items:
            if x == e:
                return v
        return Fraction(0)

    def as_dict(self) -> dict[str, Fraction]:
        return dict(self.items)

    def __str__(self):
        return format_path(self)


# a formal monomial is just a sequence of degree-1 paths
FormalMonomial = Sequence[LSPath]


class Dominance(enum.Enum):
    DOMINATED = "dominated"
    DOMINATES = "dominates"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class PathCheck:
    ok: bool
    condition: int | None = None
    index: int | None = None
    message: str = ""

    def __bool__(self):
        return self.ok


def _as_fraction(v) -> Fraction:
    if isinstance(v, float):
        raise TypeError("path values must be exact rationals, not floats")
    return Fraction(v)


def make_function(P: PosetWithBonds, mapping) -> LSPath:
    if isinstance(mapping, LSPath):
        return mapping
    items = []
    for e, v in mapping.items():
        if e not in P.index:
            raise PosetError(f"value on unknown element {e!r}")
        q = _as_fraction(v)
        if q:
            items.append((e, q))
    items.sort(key=lambda it: P.index[it[0]])
    return LSPath(tuple(items))


def lspath(P: PosetWithBonds, mapping, degree: int | None = None) -> LSPath:
    f = make_function(P, mapping)
    r = f.degree if degree is None else degree
    check = is_ls_path(P, f, r)
    if not check:
        raise InvalidPath(check.message)
    return f


def zero_path() -> LSPath:
    return LSPath(())


# -- rendering -----------------------------------------------------------------


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_path(f: LSPath) -> str:
    return "{" + ", ".join(f"{e}={format_rational(v)}" for e, v in f.items) + "}"


_PAIR = re.compile(r"([^\s=,{}]+)\s*=\s*(-?\d+(?:/\d+)?)")


def parse_path_spec(P: PosetWithBonds, text: str) -> LSPath:
    """Parse ``{s0=1/2, s1=1/2}`` (braces and commas optional)."""
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    mapping: dict[str, Fraction] = {}
    rest = _PAIR.sub("", body).replace(",", " ").strip()
    if rest:
        raise LSError(f"cannot parse path specification near {rest!r}")
    for name, val in _PAIR.findall(body):
        if name in mapping:
            raise LSError(f"element {name!r} given twice")
        mapping[name] = Fraction(val)
    return make_function(P, mapping)


# -- the LS conditions ---------------------------------------------------------


def is_ls_path(P: PosetWithBonds, f, r: int) -> PathCheck:
    f = make_function(P, f)
    for e, v in f.items:
        if v < 0:
            return PathCheck(False, 1, None, f"negative value {format_rational(v)} at {e}")
    supp = f.support
    if not P.is_chain(supp):
        return PathCheck(False, 2, None, "support is not a chain")
    partial = Fraction(0)
    for j, ((a, v), (b, _)) in enumerate(zip(f.items, f.items[1:]), start=1):
        partial += v
        scaled = P.extended_bond(a, b) * partial
        if scaled.denominator != 1:
            return PathCheck(False, 3, j,
                             f"bond({a},{b}) * {format_rational(partial)} = {format_rational(scaled)} is not an integer")
    if f.total != r:
        return PathCheck(False, 3, None, f"total {format_rational(f.total)} differs from degree {r}")
    return PathCheck(True)


# -- enumeration ---------------------------------------------------------------


def _chain_sequences(P: PosetWithBonds, chain: Sequence[str], r: int):
    steps = P.chain_step_bonds(chain)
    scale = lcm(*steps) if steps else 1
    mults = [scale // b for b in steps]
    return scale, kernels.enumerate_cumulative(mults, r * scale)


def _paths_on_chain(P, chain, r):
    scale, seqs = _chain_sequences(P, chain, r)
    total = r * scale
    out = []
    for ks in seqs:
        items = []
        prev = 0
        for e, k in zip(chain, ks + (total,)):
            if k != prev:
                items.append((e, Fraction(k - prev, scale)))
            prev = k
        out.append(LSPath(tuple(items)))
    return out


def rlex_key(P: PosetWithBonds, f: LSPath, ext_index: Mapping[str, int] | None = None):
    """Sort key realizing the reverse-lexicographic order for a linear extension."""
    idx = P.index if ext_index is None else ext_index
    dense = [Fraction(0)] * len(idx)
    for e, v in f.items:
        dense[idx[e]] = v
    return tuple(reversed(dense))


@lru_cache(maxsize=None)
def _enumerate(P: PosetWithBonds, r: int) -> tuple[LSPath, ...]:
    P.require_valid()
    found = set()
    for chain in P.maximal_chains():
        found.update(_paths_on_chain(P, chain, r))
    return tuple(sorted(found, key=lambda f: rlex_key(P, f)))


def enumerate_paths(P: PosetWithBonds, r: int) -> list[LSPath]:
    if r < 0:
        raise ValueError("degree must be nonnegative")
    return list(_enumerate(P, r))


def chain_paths(P: PosetWithBonds, chain: Sequence[str], r: int) -> list[LSPath]:
    """LS_r(C): paths of degree r supported in the chain C (any chain, not only maximal)."""
    chain = sorted(chain, key=P.index.__getitem__)
    if not P.is_chain(chain):
        raise PosetError("not a chain")
    return sorted(_paths_on_chain(P, chain, r), key=lambda f: rlex_key(P, f))


def count_chain_paths(P: PosetWithBonds, chain: Sequence[str], r: int) -> int:
    chain = sorted(chain, key=P.index.__getitem__)
    steps = P.chain_step_bonds(chain)
    scale = lcm(*steps) if steps else 1
    return kernels.count_cumulative([scale // b for b in steps], r * scale)


def count_paths(P: PosetWithBonds, r: int) -> int:
    """|LS_r|; uses the counting kernel directly on totally ordered posets."""
    P.require_valid()
    if P.is_totally_ordered:
        return count_chain_paths(P, P.order, r)
    return len(_enumerate(P, r))


# -- operations on paths -------------------------------------------------------


def dotplus(P: PosetWithBonds, a, b) -> tuple[LSPath, bool]:
    """Pointwise sum, and whether the supports lie in a common chain."""
    a, b = make_function(P, a), make_function(P, b)
    acc = a.as_dict()
    for e, v in b.items:
        acc[e] = acc.get(e, Fraction(0)) + v
    s = make_function(P, acc)
    return s, P.is_chain(s.support)


def slice_unit_intervals(values: Sequence[Fraction], r: int) -> list[list[Fraction]]:
    """Split cumulative mass into unit slices: slice h takes ``[h-1, h]``."""
    cum = [Fraction(0)]
    for v in values:
        cum.append(cum[-1] + v)
    out = []
    for h in range(1, r + 1):
        row = []
        for lo, hi in zip(cum, cum[1:]):
            row.append(max(Fraction(0), min(hi, Fraction(h)) - max(lo, Fraction(h - 1))))
        out.append(row)
    return out


def canonical_form(P: PosetWithBonds, f) -> list[LSPath]:
    f = make_function(P, f)
    try:
        r = f.degree
    except InvalidPath as exc:
        raise InvalidPath(f"not an LS-path: {exc}") from None
    check = is_ls_path(P, f, r)
    if not check:
        raise InvalidPath(f"not an LS-path: {check.message}")
    supp = f.support
    slices = slice_unit_intervals([v for _, v in f.items], r)
    factors = [make_function(P, dict(zip(supp, row))) for row in slices]
    for g in factors:
        if not is_ls_path(P, g, 1):
            raise AssertionError(f"canonical factor {g} of {f} is not an LS-path of degree 1")
    if not is_standard(P, factors):
        raise AssertionError(f"canonical form of {f} is not standard")
    if sum_paths(P, factors) != f:
        raise AssertionError(f"canonical factors of {f} do not sum to it")
    return factors


def sum_paths(P: PosetWithBonds, paths) -> LSPath:
    acc: dict[str, Fraction] = {}
    for g in paths:
        for e, v in g.items:
            acc[e] = acc.get(e, Fraction(0)) + v
    return make_function(P, acc)


def is_standard(P: PosetWithBonds, factors: FormalMonomial) -> bool:
    for a, b in zip(factors, factors[1:]):
        if not a.items or not b.items:
            continue
        if not P.leq(a.items[-1][0], b.items[0][0]):
            return False
    return True


def rlex_compare(P: PosetWithBonds, a, b, ext: Sequence[str] | None = None) -> int:
    """-1, 0 or 1: compare at the ext-maximal element where the values differ."""
    if ext is not None and not P.is_linear_extension(ext):
        raise PosetError("not a linear extension of the poset")
    return _rlex(make_function(P, a), make_function(P, b),
                 P.index if ext is None else {e: i for i, e in enumerate(ext)})


def _rlex(a: LSPath, b: LSPath, pos: Mapping[str, int]) -> int:
    if a == b:
        return 0
    da, db = dict(a.items), dict(b.items)
    top = max((e for e in set(da) | set(db) if da.get(e, 0) != db.get(e, 0)), key=pos.__getitem__)
    return -1 if da.get(top, 0) < db.get(top, 0) else 1


def dominance(P: PosetWithBonds, a, b, cap: int = DEFAULT_EXTENSION_CAP) -> Dominance:
    a, b = make_function(P, a), make_function(P, b)
    if a == b:
        return Dominance.EQUAL
    seen = set()
    for ext in P.linear_extensions(cap):
        seen.add(_rlex(a, b, {e: i for i, e in enumerate(ext)}))
        if len(seen) == 2:
            return Dominance.INCOMPARABLE
    return Dominance.DOMINATED if seen == {-1} else Dominance.DOMINATES


def failing_extension(P: PosetWithBonds, a, b, cap: int = DEFAULT_EXTENSION_CAP):
    """A linear extension under which ``a`` is rlex-greater than ``b``, or None."""
    a, b = make_function(P, a), make_function(P, b)
    for ext in P.linear_extensions(cap):
        if _rlex(a, b, {e: i for i, e in enumerate(ext)}) > 0:
            return ext
    return None
