"""Straightening ideals in K[x_pi : pi in LS_1] and their Groebner verification.

Monomials are sorted tuples of variable indices. Variables are numbered by
the reverse-lexicographic order of their paths, so index 0 is the smallest.

Monomial order: degree, then the rlex order of the dotplus-sum of the
factors, then exponent vectors compared from the largest variable down.
The leading term of a polynomial is its *smallest* monomial, so every
rewrite replaces a monomial by strictly larger ones.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import LeadingTermError
from .paths import LSPath, count_chain_paths, enumerate_paths, is_standard, sum_paths
from .poset import PosetWithBonds
from .discrete import straighten

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class PathVariable:
    index: int
    path: LSPath


class MonomialOrder:
    def __init__(self, P: PosetWithBonds, variables: Sequence[PathVariable], ext: Sequence[str] | None = None):
        self.extension = tuple(P.order if ext is None else ext)
        pos = {e: i for i, e in enumerate(self.extension)}
        n = len(pos)
        scale = P.lcm_all
        self._vecs = []
        for v in variables:
            vec = [0] * n
            for e, q in v.path.items:
                vec[n - 1 - pos[e]] = int(q * scale)  # top of the extension first
            self._vecs.append(tuple(vec))
        self._n = n
        self._keys: dict[Monomial, tuple] = {}

    def key(self, m: Monomial):
        k = self._keys.get(m)
        if k is None:
            acc = [0] * self._n
            for i in m:
                for j, x in enumerate(self._vecs[i]):
                    acc[j] += x
            k = (len(m), tuple(acc), tuple(reversed(m)))
            self._keys[m] = k
        return k

    def sum_key(self, m: Monomial):
        return self.key(m)[1]

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        a, b = self.key(m1), self.key(m2)
        return (a > b) - (a < b)


class Polynomial:
    """Sparse polynomial with rational coefficients over path variables."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Fraction] = {}
        for m, c in items:
            m = tuple(sorted(m))
            acc[m] = acc.get(m, Fraction(0)) + Fraction(c)
        self.terms = {m: c for m, c in acc.items() if c}

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"Polynomial({self.terms!r})"

    def leading(self, order: MonomialOrder) -> Monomial:
        return min(self.terms, key=order.key)

    def format(self, names=None) -> str:
        if not self.terms:
            return "0"
        out = ""
        for m, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"x{i}" if names is None else names[i] for i in m) or "1"
            body = mono if abs(c) == 1 else f"{abs(c)} {mono}"
            if not out:
                out = body if c > 0 else f"-{body}"
            else:
                out += f" {'+' if c > 0 else '-'} {body}"
        return out


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(sorted(a + b))


def mono_div(a: Monomial, b: Monomial) -> Monomial | None:
    """a / b if b divides a, else None."""
    ca = Counter(a)
    ca.subtract(b)
    if any(v < 0 for v in ca.values()):
        return None
    return tuple(sorted(ca.elements()))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    ca, cb = Counter(a), Counter(b)
    return tuple(sorted((ca | cb).elements()))


class PathRing:
    """The polynomial ring on LS_1 of a poset together with the monomial order."""

    def __init__(self, P: PosetWithBonds, ext: Sequence[str] | None = None):
        P.require_valid()
        self.poset = P
        self.variables = [PathVariable(i, f) for i, f in enumerate(enumerate_paths(P, 1))]
        self.var_of = {v.path: v.index for v in self.variables}
        self.order = MonomialOrder(P, self.variables, ext)

    def __len__(self):
        return len(self.variables)

    def monomial(self, *paths: LSPath) -> Monomial:
        return tuple(sorted(self.var_of[f] for f in paths))

    def paths_of(self, m: Monomial) -> list[LSPath]:
        return [self.variables[i].path for i in m]

    def standard_ordering(self, m: Monomial) -> list[LSPath] | None:
        """The factors of m arranged as a standard monomial, or None."""
        P = self.poset
        fs = sorted(self.paths_of(m), key=lambda f: (P.index[f.items[0][0]], P.index[f.items[-1][0]]))
        return fs if is_standard(P, fs) else None

    def is_standard_pair(self, i: int, j: int) -> bool:
        a, b = self.variables[i].path, self.variables[j].path
        return is_standard(self.poset, [a, b]) or is_standard(self.poset, [b, a])


def straightening_ideal(P: PosetWithBonds, ring: PathRing | None = None) -> list[Polynomial]:
    """Discrete straightening generators; each must lead with its non-standard monomial."""
    ring = ring or PathRing(P)
    out = []
    for i, j in _pairs(len(ring)):
        a, b = ring.variables[i].path, ring.variables[j].path
        rel = straighten(P, a, b)
        if rel is None:
            continue
        lhs = (i, j)
        terms = {lhs: Fraction(1)}
        if rel.rhs is not None:
            tail = ring.monomial(*rel.rhs)
            terms[tail] = terms.get(tail, Fraction(0)) - 1
        g = Polynomial(terms)
        assert_leading(g, lhs, ring.order)
        out.append(g)
    return out


def _pairs(n):
    for i in range(n):
        for j in range(i, n):
            yield i, j


def assert_leading(g: Polynomial, lhs: Monomial, order: MonomialOrder):
    lead = g.leading(order)
    if lead != tuple(sorted(lhs)):
        raise LeadingTermError(f"generator {g.format()} leads with {lead}, not with {tuple(sorted(lhs))}")


class Reducer:
    """Normal forms modulo a fixed list of polynomials.

    The normal form of a polynomial is the sum of the normal forms of its
    terms. Each monomial is reduced by the division algorithm once and the
    result cached; the sum is again fully reduced and differs from the input
    by an element with a standard representation.
    """

    def __init__(self, basis: Sequence[Polynomial], order: MonomialOrder):
        self.order = order
        self.basis = [g for g in basis if g]
        self._by_lead: dict[Monomial, tuple[int, dict[Monomial, Fraction]]] = {}
        self._other: list[tuple[Monomial, int, dict]] = []
        for k, g in enumerate(self.basis):
            lead = g.leading(order)
            lc = g.terms[lead]
            tail = {m: -c / lc for m, c in g.terms.items() if m != lead}
            if lead in self._by_lead:
                continue  # same leading monomial: one suffices for division
            self._by_lead[lead] = (k, tail)
            if len(lead) > 2:
                self._other.append((lead, k, tail))
        self._cache: dict[Monomial, dict[Monomial, Fraction]] = {}

    @property
    def leads(self):
        return list(self._by_lead)

    def divisor(self, m: Monomial):
        """(quotient, tail) of the first basis element whose lead divides m."""
        by = self._by_lead
        prev = None
        for idx, v in enumerate(m):
            if v != prev and (v,) in by:
                return m[:idx] + m[idx + 1:], by[(v,)][1]
            prev = v
        for a in range(len(m)):
            for b in range(a + 1, len(m)):
                hit = by.get((m[a], m[b]))
                if hit is not None:
                    return m[:a] + m[a + 1:b] + m[b + 1:], hit[1]
        for lead, _, tail in self._other:
            q = mono_div(m, lead)
            if q is not None:
                return q, tail
        if () in by:
            return m, by[()][1]
        return None

    def monomial_normal_form(self, m: Monomial) -> dict[Monomial, Fraction]:
        hit = self._cache.get(m)
        if hit is not None:
            return hit
        key = self.order.key
        pending = {m: Fraction(1)}
        result: dict[Monomial, Fraction] = defaultdict(Fraction)
        while pending:
            # rewrites only create larger monomials, so the smallest pending
            # term never reappears once handled
            t = min(pending, key=key)
            c = pending.pop(t)
            if not c:
                continue
            if t != m and t in self._cache:
                for s, d in self._cache[t].items():
                    result[s] += c * d
                continue
            div = self.divisor(t)
            if div is None:
                result[t] += c
                continue
            q, tail = div
            for s, d in tail.items():
                u = mono_mul(q, s)
                pending[u] = pending.get(u, Fraction(0)) + c * d
        nf = {s: d for s, d in result.items() if d}
        self._cache[m] = nf
        return nf

    def reduce(self, f: Polynomial) -> Polynomial:
        acc: dict[Monomial, Fraction] = defaultdict(Fraction)
        for m, c in f.terms.items():
            for s, d in self.monomial_normal_form(m).items():
                acc[s] += c * d
        return Polynomial(acc)


def reduce(f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    return Reducer(basis, order).reduce(f)


def s_polynomial(g1: Polynomial, g2: Polynomial, order: MonomialOrder) -> Polynomial:
    l1, l2 = g1.leading(order), g2.leading(order)
    L = mono_lcm(l1, l2)
    q1, q2 = mono_div(L, l1), mono_div(L, l2)
    c1, c2 = g1.terms[l1], g2.terms[l2]
    acc: dict[Monomial, Fraction] = defaultdict(Fraction)
    for m, c in g1.terms.items():
        acc[mono_mul(q1, m)] += c / c1
    for m, c in g2.terms.items():
        acc[mono_mul(q2, m)] -= c / c2
    return Polynomial(acc)


@dataclass(frozen=True)
class BuchbergerResult:
    ok: bool
    generators: int
    pairs_checked: int
    pairs_skipped: int
    witness: tuple[int, int, Polynomial] | None = None

    def __bool__(self):
        return self.ok


def buchberger_verify(basis: Sequence[Polynomial], order: MonomialOrder) -> BuchbergerResult:
    """Check that every S-polynomial reduces to zero.

    Pairs of monomials and pairs with coprime leading monomials are skipped;
    both always reduce to zero.
    """
    basis = [g for g in basis if g]
    red = Reducer(basis, order)
    leads = [g.leading(order) for g in basis]
    by_var = defaultdict(list)
    for k, lead in enumerate(leads):
        for v in set(lead):
            by_var[v].append(k)
    candidates = set()
    for ks in by_var.values():
        for a, b in combinations(ks, 2):
            candidates.add((a, b))
    total = len(basis) * (len(basis) - 1) // 2
    checked = 0
    for a, b in sorted(candidates):
        if len(basis[a].terms) == 1 and len(basis[b].terms) == 1:
            continue
        checked += 1
        rem = red.reduce(s_polynomial(basis[a], basis[b], order))
        if rem:
            return BuchbergerResult(False, len(basis), checked, total - checked, (a, b, rem))
    return BuchbergerResult(True, len(basis), checked, total - checked)


# -- standard monomials and the initial ideal ----------------------------------


def monomials_outside(n_vars: int, quadratic_leads, d: int, allowed: Iterable[int] | None = None,
                      linear_leads=()) -> list[Monomial]:
    """Degree-d monomials divisible by no quadratic (or linear) lead."""
    leads = {tuple(sorted(x)) for x in quadratic_leads}
    dead = set(linear_leads)
    pool = [v for v in (range(n_vars) if allowed is None else sorted(set(allowed))) if v not in dead]
    ok = {v: {w for w in pool if (min(v, w), max(v, w)) not in leads} for v in pool}
    out: list[Monomial] = []
    cur: list[int] = []

    def rec(start_idx, cand):
        if len(cur) == d:
            out.append(tuple(cur))
            return
        for idx in range(start_idx, len(pool)):
            v = pool[idx]
            if v not in cand:
                continue
            cur.append(v)
            rec(idx, cand & ok[v])
            cur.pop()

    rec(0, set(pool))
    return out


@dataclass(frozen=True)
class InitialIdealRow:
    degree: int
    standard: int
    ls_paths: int
    match: bool


@dataclass(frozen=True)
class InitialIdealReport:
    buchberger: BuchbergerResult
    rows: tuple[InitialIdealRow, ...]

    @property
    def ok(self) -> bool:
        return self.buchberger.ok and all(r.match for r in self.rows)

    def __bool__(self):
        return self.ok


def standard_monomial_rows(ring: PathRing, leads, D: int) -> list[InitialIdealRow]:
    """Per degree: monomials outside the initial ideal against LS_d, via the dotplus bijection."""
    P = ring.poset
    quad = [m for m in leads if len(m) == 2]
    lin = [m[0] for m in leads if len(m) == 1]
    rows = []
    for d in range(D + 1):
        target = set(enumerate_paths(P, d))
        sums = set()
        match = True
        outside = monomials_outside(len(ring), quad, d, linear_leads=lin)
        for m in outside:
            fs = ring.standard_ordering(m)
            if fs is None:
                match = False
                continue
            sums.add(sum_paths(P, fs))
        match = match and len(sums) == len(outside) and sums == target
        rows.append(InitialIdealRow(d, len(outside), len(target), match))
    return rows


def initial_ideal_check(P: PosetWithBonds, D: int = 4) -> InitialIdealReport:
    ring = PathRing(P)
    basis = straightening_ideal(P, ring)
    bb = buchberger_verify(basis, ring.order)
    leads = [g.leading(ring.order) for g in basis]
    nonstandard = {(i, j) for i, j in _pairs(len(ring)) if not ring.is_standard_pair(i, j)}
    if set(leads) != nonstandard:
        raise AssertionError("initial terms of the generators are not exactly the non-standard pairs")
    return InitialIdealReport(bb, tuple(standard_monomial_rows(ring, leads, D)))


@dataclass(frozen=True)
class SumIdealCheck:
    first: int
    second: int
    buchberger_ok: bool
    # (degree, dim of R/(I_C1 + I_C2), |LS_d(C1 cap C2)|)
    dims: tuple[tuple[int, int, int], ...]

    @property
    def ok(self) -> bool:
        return self.buchberger_ok and all(a == b for _, a, b in self.dims)


def component_ideal_checks(P: PosetWithBonds, D: int = 3) -> list[SumIdealCheck]:
    """Compare R/(I_C1 + I_C2) with the discrete algebra of C1 cap C2 degree by degree."""
    ring = PathRing(P)
    basis = straightening_ideal(P, ring)
    chains = P.maximal_chains()
    killed = []
    for ch in chains:
        inside = set(ch)
        killed.append({v.index for v in ring.variables if not set(v.path.support) <= inside})
    leads = [g.leading(ring.order) for g in basis]
    out = []
    for i, j in combinations(range(len(chains)), 2):
        dead = killed[i] | killed[j]
        full = basis + [Polynomial({(v,): 1}) for v in sorted(dead)]
        bb = buchberger_verify(full, ring.order)
        common = [e for e in chains[i] if e in set(chains[j])]
        dims = []
        for d in range(D + 1):
            n_std = len(monomials_outside(len(ring), leads, d, linear_leads=dead))
            dims.append((d, n_std, count_chain_paths(P, common, d)))
        out.append(SumIdealCheck(i, j, bb.ok, tuple(dims)))
    return out
