"""Finite graded posets with a unique minimum and maximum whose covers carry bonds.

The poset file format is line based::

    # comment
    elements s0 s1 s2
    cover s0 s1 2
    cover s1 s2 3

``elements`` lines are cumulative and fix the input order of elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import CapExceeded, PosetError, PosetSyntaxError

DEFAULT_EXTENSION_CAP = 10_000


@dataclass(frozen=True)
class Diagnostic:
    kind: str
    message: str
    witness: tuple = field(default=())

    def __str__(self):
        return f"{self.kind}: {self.message}"


class PosetWithBonds:
    """Immutable poset with bonds; derived data is computed at construction.

    Structural errors (duplicates, unknown elements, nonpositive bonds) raise
    immediately. Violations of the poset-with-bonds invariants are collected
    in :attr:`diagnostics`; operations that need a valid poset call
    :meth:`require_valid`.
    """

    def __init__(self, elements: Sequence[str], covers: Iterable[tuple[str, str, int]]):
        elements = tuple(elements)
        seen = set()
        for e in elements:
            if e in seen:
                raise PosetError(f"duplicate element {e!r}")
            seen.add(e)
        if not elements:
            raise PosetError("poset has no elements")
        bonds: dict[tuple[str, str], int] = {}
        for lo, hi, b in covers:
            for e in (lo, hi):
                if e not in seen:
                    raise PosetError(f"cover references unknown element {e!r}")
            if lo == hi:
                raise PosetError(f"cover {lo} {hi} relates an element to itself")
            if not isinstance(b, int) or b <= 0:
                raise PosetError(f"nonpositive bond {b!r} on cover {lo} {hi}")
            if (lo, hi) in bonds:
                raise PosetError(f"duplicate cover {lo} {hi}")
            bonds[(lo, hi)] = b

        self.input_elements = elements
        self.bonds = bonds
        self._input_pos = {e: i for i, e in enumerate(elements)}
        self._up = {e: [] for e in elements}
        self._down = {e: [] for e in elements}
        for lo, hi in bonds:
            self._up[lo].append(hi)
            self._down[hi].append(lo)

        diags: list[Diagnostic] = []
        topo = self._topological_order()
        self.acyclic = topo is not None
        if topo is None:
            diags.append(Diagnostic("cycle", "cover relations contain a cycle"))
            topo = list(elements)
            self.rank = {e: 0 for e in elements}
        else:
            self.rank = self._longest_ranks(topo)

        self.order = tuple(sorted(elements, key=lambda e: (self.rank[e], self._input_pos[e])))
        self.index = {e: i for i, e in enumerate(self.order)}
        for e in elements:
            self._up[e].sort(key=self.index.__getitem__)
            self._down[e].sort(key=self.index.__getitem__)

        minima = [e for e in self.order if not self._down[e]]
        maxima = [e for e in self.order if not self._up[e]]
        if len(minima) != 1:
            diags.append(Diagnostic("multiple minima" if minima else "no minimum",
                                    f"minimal elements: {' '.join(minima)}", tuple(minima)))
        if len(maxima) != 1:
            diags.append(Diagnostic("multiple maxima" if maxima else "no maximum",
                                    f"maximal elements: {' '.join(maxima)}", tuple(maxima)))
        self.bottom = minima[0] if minima else None
        self.top = maxima[0] if maxima else None
        self.length = self.rank[self.top] if self.top is not None else 0

        self.m_of = {}
        for e in elements:
            incident = [self.bonds[(e, u)] for u in self._up[e]] + [self.bonds[(d, e)] for d in self._down[e]]
            self.m_of[e] = lcm(*incident) if incident else 1

        self._strict_up: dict[str, frozenset] = {}
        self._ext_bond: dict[tuple[str, str], int] = {}
        if self.acyclic:
            diags.extend(self._check_graded(topo))
            self._strict_up = self._closure(topo)
            diags.extend(self._check_bonds(topo))
        self.diagnostics = tuple(diags)
        self._extension_cache: dict[int, list[tuple[str, ...]]] = {}

    # -- construction helpers -------------------------------------------------

    def _topological_order(self):
        indeg = {e: len(self._down[e]) for e in self.input_elements}
        ready = [e for e in self.input_elements if indeg[e] == 0]
        out = []
        while ready:
            e = ready.pop(0)
            out.append(e)
            for u in self._up[e]:
                indeg[u] -= 1
                if indeg[u] == 0:
                    ready.append(u)
        return out if len(out) == len(self.input_elements) else None

    def _longest_ranks(self, topo):
        rank = {}
        for e in topo:
            rank[e] = max((rank[d] + 1 for d in self._down[e]), default=0)
        return rank

    def _check_graded(self, topo):
        shortest = {}
        for e in topo:
            shortest[e] = min((shortest[d] + 1 for d in self._down[e]), default=0)
        out = []
        for e in self.order:
            if shortest[e] != self.rank[e]:
                out.append(Diagnostic(
                    "not graded",
                    f"chains from the minimum to {e} have lengths {shortest[e]} and {self.rank[e]}",
                    (e, shortest[e], self.rank[e])))
        return out

    def _closure(self, topo):
        up = {}
        for e in reversed(topo):
            s = set()
            for u in self._up[e]:
                s.add(u)
                s |= up[u]
            up[e] = frozenset(s)
        return up

    def _check_bonds(self, topo):
        # For each start element, track every distinct chain-gcd reaching each
        # element above it, with one witness chain per value.
        out = []
        pos = {e: i for i, e in enumerate(topo)}
        for start in self.order:
            reach: dict[str, dict[int, tuple[str, ...]]] = {}
            for u in self._up[start]:
                reach.setdefault(u, {})[self.bonds[(start, u)]] = (start, u)
            for e in sorted(self._strict_up[start], key=pos.__getitem__):
                vals = reach[e]
                for u in self._up[e]:
                    b = self.bonds[(e, u)]
                    dest = reach.setdefault(u, {})
                    for g, ch in vals.items():
                        dest.setdefault(gcd(g, b), ch + (u,))
            for e in sorted(reach, key=self.index.__getitem__):
                vals = reach[e]
                g0 = min(vals)
                self._ext_bond[(start, e)] = g0
                if len(vals) > 1:
                    (g1, c1), (g2, c2) = sorted(vals.items())[:2]
                    out.append(Diagnostic(
                        "bond mismatch",
                        f"chains from {start} to {e} have bond gcds {g1} ({' < '.join(c1)}) "
                        f"and {g2} ({' < '.join(c2)})",
                        (start, e, c1, g1, c2, g2)))
        return out

    # -- queries ----------------------------------------------------------------

    @property
    def is_valid(self) -> bool:
        return not self.diagnostics

    def require_valid(self):
        if self.diagnostics:
            raise PosetError("invalid poset: " + "; ".join(str(d) for d in self.diagnostics))

    def __len__(self):
        return len(self.order)

    def __repr__(self):
        return f"PosetWithBonds({len(self.order)} elements, length {self.length})"

    def upper_covers(self, e):
        return tuple(self._up[e])

    def lower_covers(self, e):
        return tuple(self._down[e])

    def lt(self, a, b) -> bool:
        return b in self._strict_up[a]

    def leq(self, a, b) -> bool:
        return a == b or b in self._strict_up[a]

    def comparable(self, a, b) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def is_chain(self, elems) -> bool:
        elems = sorted(set(elems), key=self.index.__getitem__)
        # rank-sorted: a chain iff consecutive elements are comparable
        return all(self.lt(a, b) for a, b in zip(elems, elems[1:]))

    def extended_bond(self, a, b) -> int:
        if not self.lt(a, b):
            raise PosetError(f"extended bond needs {a} < {b}")
        return self._ext_bond[(a, b)]

    @cached_property
    def is_totally_ordered(self) -> bool:
        return self.is_chain(self.order)

    def chain_bonds(self) -> tuple[int, ...]:
        """Bonds b_0..b_{N-1} of a totally ordered poset, bottom to top."""
        if not self.is_totally_ordered:
            raise PosetError("poset is not totally ordered")
        return tuple(self.bonds[(a, b)] for a, b in zip(self.order, self.order[1:]))

    @property
    def lcm_all(self) -> int:
        return lcm(*self.bonds.values()) if self.bonds else 1

    def chain_step_bonds(self, chain: Sequence[str]) -> tuple[int, ...]:
        """Extended bonds between consecutive elements of a chain."""
        return tuple(self.extended_bond(a, b) for a, b in zip(chain, chain[1:]))

    @cached_property
    def _maximal_chains(self):
        self.require_valid()
        out = []

        def walk(prefix):
            e = prefix[-1]
            if e == self.top:
                out.append(tuple(prefix))
                return
            for u in self._up[e]:
                prefix.append(u)
                walk(prefix)
                prefix.pop()

        walk([self.bottom])
        return tuple(out)

    def maximal_chains(self):
        return list(self._maximal_chains)

    def linear_extensions(self, cap: int = DEFAULT_EXTENSION_CAP):
        if cap in self._extension_cache:
            return list(self._extension_cache[cap])
        self.require_valid()
        out = []
        placed = set()
        remaining = {e: len(self._down[e]) for e in self.order}
        prefix = []

        def rec():
            if len(prefix) == len(self.order):
                out.append(tuple(prefix))
                if len(out) > cap:
                    raise CapExceeded(f"more than {cap} linear extensions")
                return
            for e in self.order:
                if e in placed or remaining[e]:
                    continue
                placed.add(e)
                prefix.append(e)
                for u in self._up[e]:
                    remaining[u] -= 1
                rec()
                for u in self._up[e]:
                    remaining[u] += 1
                prefix.pop()
                placed.discard(e)

        rec()
        self._extension_cache[cap] = out
        return list(out)

    def is_linear_extension(self, ext: Sequence[str]) -> bool:
        if len(ext) != len(self.order) or set(ext) != set(self.order):
            return False
        pos = {e: i for i, e in enumerate(ext)}
        return all(pos[lo] < pos[hi] for lo, hi in self.bonds)


# -- module-level operations -------------------------------------------------


def parse_poset(text: str) -> PosetWithBonds:
    elements: list[str] = []
    seen: set[str] = set()
    covers = []
    cover_seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = _tokens_with_columns(line)
        if not tokens:
            continue
        (kw, kcol), rest = tokens[0], tokens[1:]
        if kw == "elements":
            if not rest:
                raise PosetSyntaxError("'elements' needs at least one identifier", lineno, kcol)
            for tok, col in rest:
                if tok in seen:
                    raise PosetSyntaxError(f"duplicate element {tok!r}", lineno, col)
                seen.add(tok)
                elements.append(tok)
        elif kw == "cover":
            if len(rest) != 3:
                raise PosetSyntaxError("expected 'cover <lower> <upper> <bond>'", lineno, kcol)
            (lo, lcol), (hi, hcol), (b, bcol) = rest
            for tok, col in ((lo, lcol), (hi, hcol)):
                if tok not in seen:
                    raise PosetSyntaxError(f"cover references unknown element {tok!r}", lineno, col)
            try:
                bond = int(b)
            except ValueError:
                raise PosetSyntaxError(f"bond {b!r} is not an integer", lineno, bcol) from None
            if bond <= 0:
                raise PosetSyntaxError(f"nonpositive bond {bond}", lineno, bcol)
            if lo == hi:
                raise PosetSyntaxError(f"cover relates {lo} to itself", lineno, hcol)
            if (lo, hi) in cover_seen:
                raise PosetSyntaxError(f"duplicate cover {lo} {hi}", lineno, kcol)
            cover_seen.add((lo, hi))
            covers.append((lo, hi, bond))
        else:
            raise PosetSyntaxError(f"unknown keyword {kw!r}", lineno, kcol)
    if not elements:
        raise PosetSyntaxError("no elements declared")
    return PosetWithBonds(elements, covers)


def _tokens_with_columns(line):
    out = []
    i, n = 0, len(line)
    while i < n:
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < n and not line[j].isspace():
            j += 1
        out.append((line[i:j], i + 1))
        i = j
    return out


def format_poset(P: PosetWithBonds) -> str:
    lines = ["elements " + " ".join(P.input_elements)]
    for (lo, hi), b in P.bonds.items():
        lines.append(f"cover {lo} {hi} {b}")
    return "\n".join(lines) + "\n"


def validate(P: PosetWithBonds) -> list[Diagnostic]:
    return list(P.diagnostics)


def extended_bond(P: PosetWithBonds, a: str, b: str) -> int:
    return P.extended_bond(a, b)


def maximal_chains(P: PosetWithBonds):
    return P.maximal_chains()


def linear_extensions(P: PosetWithBonds, cap: int = DEFAULT_EXTENSION_CAP):
    return P.linear_extensions(cap)


def chain_poset(bonds: Sequence[int], prefix: str = "s") -> PosetWithBonds:
    """Totally ordered poset s0 < s1 < ... with the given cover bonds."""
    names = [f"{prefix}{i}" for i in range(len(bonds) + 1)]
    return PosetWithBonds(names, [(names[i], names[i + 1], b) for i, b in enumerate(bonds)])


def diamond(bonds=(1, 1, 1, 1)) -> PosetWithBonds:
    """0 < a, b < 1 with bonds on (0,a), (0,b), (a,1), (b,1)."""
    b0a, b0b, ba1, bb1 = bonds
    return PosetWithBonds(["0", "a", "b", "1"],
                          [("0", "a", b0a), ("0", "b", b0b), ("a", "1", ba1), ("b", "1", bb1)])


def double_diamond() -> PosetWithBonds:
    """Two diamonds stacked: 0 < a, b < m < c, d < 1, all bonds 1."""
    return PosetWithBonds(
        ["0", "a", "b", "m", "c", "d", "1"],
        [("0", "a", 1), ("0", "b", 1), ("a", "m", 1), ("b", "m", 1),
         ("m", "c", 1), ("m", "d", 1), ("c", "1", 1), ("d", "1", 1)])
