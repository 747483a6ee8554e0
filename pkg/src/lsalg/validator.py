"""Check a presented algebra (path basis plus straightening table) against LSA1-LSA3.

Relations file format::

    path a : s0=1
    path b : s0=1/2 s1=1/2
    path c : s1=1
    rel b b = 1 a c            # terms joined by '+' or '-'
    rel x y = 0                # zero right-hand side
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import LeadingTermError, RelationsError
from .grobner import (
    BuchbergerResult,
    InitialIdealRow,
    PathRing,
    Polynomial,
    assert_leading,
    buchberger_verify,
    standard_monomial_rows,
)
from .paths import (
    LSPath,
    canonical_form,
    dotplus,
    failing_extension,
    format_path,
    format_rational,
    is_ls_path,
    parse_path_spec,
)
from .poset import DEFAULT_EXTENSION_CAP, PosetWithBonds
from .discrete import discrete_relations

Pair = tuple[int, int]


@dataclass
class RelationTable:
    poset: PosetWithBonds
    ring: PathRing
    names: dict[int, str]  # variable index -> declared name
    relations: dict[Pair, list[tuple[Fraction, Pair]]] = field(default_factory=dict)

    def name(self, m) -> str:
        return " ".join(self.names[i] for i in m)

    def path(self, i: int) -> LSPath:
        return self.ring.variables[i].path


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str
    witness: tuple = ()

    def __str__(self):
        return f"{self.kind}: {self.message}"


def _err(msg, lineno=None):
    return RelationsError(f"line {lineno}: {msg}" if lineno else msg)


def parse_relations(text: str, P: PosetWithBonds) -> RelationTable:
    ring = PathRing(P)
    names: dict[str, int] = {}
    rel_lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kw, _, rest = line.partition(" ")
        if kw == "path":
            name, colon, spec = rest.partition(":")
            name = name.strip()
            if not colon or not name or " " in name:
                raise _err("expected 'path <name> : <elem>=<value> ...'", lineno)
            f = parse_path_spec(P, spec)
            if not is_ls_path(P, f, 1):
                raise _err(f"unknown path {format_path(f)}: not an LS-path of degree 1", lineno)
            if name in names:
                raise _err(f"path name {name!r} declared twice", lineno)
            idx = ring.var_of[f]
            if idx in names.values():
                raise _err(f"path {format_path(f)} declared twice", lineno)
            names[name] = idx
        elif kw == "rel":
            rel_lines.append((lineno, rest))
        else:
            raise _err(f"unknown keyword {kw!r}", lineno)
    missing = [v for v in ring.variables if v.index not in names.values()]
    if missing:
        raise _err("missing path declaration for " + ", ".join(format_path(v.path) for v in missing))
    table = RelationTable(P, ring, {i: n for n, i in names.items()})

    def lookup(tok, lineno):
        if tok not in names:
            raise _err(f"unknown path {tok!r}", lineno)
        return names[tok]

    for lineno, rest in rel_lines:
        lhs_text, eq, rhs_text = rest.partition("=")
        lhs_tokens = lhs_text.split()
        if not eq or len(lhs_tokens) != 2:
            raise _err("expected 'rel <name> <name> = ...'", lineno)
        lhs = tuple(sorted(lookup(t, lineno) for t in lhs_tokens))
        if ring.is_standard_pair(*lhs):
            raise _err(f"relation given for the standard monomial {rest.split('=')[0].strip()}", lineno)
        if lhs in table.relations:
            raise _err(f"second relation for {' '.join(lhs_tokens)}", lineno)
        table.relations[lhs] = _parse_rhs(rhs_text.split(), lookup, ring, lineno)
    for i, j in _nonstandard_pairs(ring):
        if (i, j) not in table.relations:
            raise _err(f"missing relation for {table.names[i]} {table.names[j]}")
    return table


def _parse_rhs(tokens, lookup, ring, lineno):
    if tokens == ["0"]:
        return []
    terms = []
    seen = set()
    k = 0
    sign = 1
    while k < len(tokens):
        if tokens[k] in "+-":
            sign = -1 if tokens[k] == "-" else 1
            k += 1
        if k + 3 > len(tokens):
            raise _err("expected '<coeff> <name> <name>' term", lineno)
        try:
            c = sign * Fraction(tokens[k])
        except ValueError:
            raise _err(f"bad coefficient {tokens[k]!r}", lineno) from None
        if c == 0:
            raise _err("zero coefficient", lineno)
        mono = tuple(sorted((lookup(tokens[k + 1], lineno), lookup(tokens[k + 2], lineno))))
        if not ring.is_standard_pair(*mono):
            raise _err(f"rhs not standard: {tokens[k + 1]} {tokens[k + 2]}", lineno)
        if mono in seen:
            raise _err(f"repeated term {tokens[k + 1]} {tokens[k + 2]}", lineno)
        seen.add(mono)
        terms.append((c, mono))
        k += 3
        sign = 1
        if k < len(tokens) and tokens[k] not in "+-":
            raise _err(f"expected '+' or '-' before {tokens[k]!r}", lineno)
    return terms


def _nonstandard_pairs(ring: PathRing):
    n = len(ring)
    return [(i, j) for i in range(n) for j in range(i, n) if not ring.is_standard_pair(i, j)]


def discrete_table(P: PosetWithBonds) -> RelationTable:
    ring = PathRing(P)
    table = RelationTable(P, ring, {v.index: f"p{v.index}" for v in ring.variables})
    for rel in discrete_relations(P):
        lhs = ring.monomial(*rel.lhs)
        table.relations[lhs] = [] if rel.rhs is None else [(Fraction(1), ring.monomial(*rel.rhs))]
    return table


def format_relations(T: RelationTable) -> str:
    lines = []
    for v in T.ring.variables:
        vals = " ".join(f"{e}={format_rational(q)}" for e, q in v.path.items)
        lines.append(f"path {T.names[v.index]} : {vals}")
    for lhs in sorted(T.relations):
        terms = T.relations[lhs]
        rhs = " + ".join(f"{format_rational(c)} {T.name(m)}" for c, m in terms) if terms else "0"
        lines.append(f"rel {T.name(lhs)} = {rhs}")
    return "\n".join(lines) + "\n"


# -- the axioms ------------------------------------------------------------------


def _sum(T: RelationTable, m):
    return dotplus(T.poset, T.path(m[0]), T.path(m[1]))


def check_lsa2(T: RelationTable, cap: int = DEFAULT_EXTENSION_CAP) -> list[Violation]:
    out = []
    for lhs, terms in sorted(T.relations.items()):
        left, _ = _sum(T, lhs)
        for c, m in terms:
            right, _ = _sum(T, m)
            ext = failing_extension(T.poset, left, right, cap)
            if ext is not None:
                out.append(Violation(
                    "LSA2",
                    f"{T.name(lhs)}: sum {format_path(left)} is not dominated by "
                    f"{format_path(right)} of term {T.name(m)} (fails for order {' < '.join(ext)})",
                    (lhs, m, ext)))
    return out


def check_lsa3(T: RelationTable, relaxed: bool = False) -> list[Violation]:
    """Canonical form must appear with coefficient 1 (any nonzero value when relaxed)."""
    out = []
    for lhs, terms in sorted(T.relations.items()):
        s, comparable = _sum(T, lhs)
        if not comparable:
            continue
        canon = T.ring.monomial(*canonical_form(T.poset, s))
        coeff = dict((m, c) for c, m in terms).get(canon, Fraction(0))
        if coeff == 0 or (not relaxed and coeff != 1):
            out.append(Violation(
                "LSA3",
                f"{T.name(lhs)}: canonical form {T.name(canon)} has coefficient {format_rational(coeff)}",
                (lhs, canon, coeff)))
    return out


@dataclass(frozen=True)
class LSA1Result:
    ok: bool
    reason: str  # "", "leading-term", "buchberger" or "count"
    detail: str = ""
    buchberger: BuchbergerResult | None = None
    rows: tuple[InitialIdealRow, ...] = ()

    def __bool__(self):
        return self.ok


def relation_polynomials(T: RelationTable) -> list[tuple[Pair, Polynomial]]:
    out = []
    for lhs, terms in sorted(T.relations.items()):
        acc = {lhs: Fraction(1)}
        for c, m in terms:
            acc[m] = acc.get(m, Fraction(0)) - c
        out.append((lhs, Polynomial(acc)))
    return out


def check_lsa1_via_grobner(T: RelationTable, D: int = 4) -> LSA1Result:
    polys = relation_polynomials(T)
    order = T.ring.order
    for lhs, g in polys:
        try:
            assert_leading(g, lhs, order)
        except LeadingTermError as exc:
            return LSA1Result(False, "leading-term", f"relation for {T.name(lhs)}: {exc}")
    bb = buchberger_verify([g for _, g in polys], order)
    if not bb.ok:
        a, b, rem = bb.witness
        return LSA1Result(False, "buchberger",
                          f"S-pair of {T.name(polys[a][0])} and {T.name(polys[b][0])} leaves {rem.format()}", bb)
    rows = tuple(standard_monomial_rows(T.ring, [lhs for lhs, _ in polys], D))
    bad = [r for r in rows if not r.match]
    if bad:
        return LSA1Result(False, "count", f"degree {bad[0].degree}: {bad[0].standard} standard "
                                          f"monomials vs {bad[0].ls_paths} LS-paths", bb, rows)
    return LSA1Result(True, "", "", bb, rows)


@dataclass(frozen=True)
class AlgebraReport:
    lsa1: LSA1Result
    lsa2: tuple[Violation, ...]
    lsa3: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return self.lsa1.ok and not self.lsa2 and not self.lsa3


def validate_algebra(T: RelationTable, D: int = 4, cap: int = DEFAULT_EXTENSION_CAP,
                     relaxed: bool = False) -> AlgebraReport:
    return AlgebraReport(check_lsa1_via_grobner(T, D), tuple(check_lsa2(T, cap)), tuple(check_lsa3(T, relaxed)))
