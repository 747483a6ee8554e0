"""Command-line front end. Every report is plain deterministic text (or TSV)."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__, kernels
from .discrete import format_monomial, hilbert_function, stanley_symmetry, straighten, to_monomial
from .errors import LeadingTermError, LSError
from .gorenstein import decide, enumerate_gorenstein_bonds
from .grobner import PathRing, component_ideal_checks, initial_ideal_check
from .lattice import components, degree_one_failures, graded_points, lattice_basis
from .paths import (
    canonical_form,
    dominance,
    dotplus,
    enumerate_paths,
    format_path,
    format_rational,
    is_ls_path,
    parse_path_spec,
    rlex_compare,
)
from .poset import DEFAULT_EXTENSION_CAP, parse_poset
from .quotient import (
    DEFAULT_GROUP_CAP,
    format_element,
    group_closure,
    group_generators,
    invariant_mismatches,
    is_in_sl,
    pseudo_reflections,
)
from .validator import parse_relations, validate_algebra


class InternalFailure(Exception):
    """A computed verdict contradicts a proved statement; exit code 2."""


def yes(flag: bool) -> str:
    return "YES" if flag else "NO"


def _load(path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise LSError(f"cannot read {path}: {exc.strerror}") from None
    return text


def _poset(args, need_valid=True):
    P = parse_poset(_load(args.file))
    if need_valid:
        P.require_valid()
    return P


class Report:
    """Collects output lines; TSV mode joins fields with tabs."""

    def __init__(self, fmt):
        self.fmt = fmt
        self.lines: list[str] = []

    def kv(self, key, value):
        self.lines.append(f"{key}\t{value}" if self.fmt == "tsv" else f"{key}: {value}")

    def row(self, *fields, sep=" | "):
        self.lines.append(("\t" if self.fmt == "tsv" else sep).join(str(f) for f in fields))

    def line(self, text):
        self.lines.append(text)


# -- commands ------------------------------------------------------------------------


def cmd_validate(args, out):
    P = _poset(args, need_valid=False)
    if not P.diagnostics:
        out.kv("valid", "YES")
        out.kv("elements", len(P.order))
        out.kv("length", P.length)
        chains = P.maximal_chains()
        out.kv("maximal chains", len(chains))
        for ch in chains:
            out.row("chain", " < ".join(ch))
        if args.bond:
            lo, hi = args.bond
            out.kv(f"bond({lo},{hi})", P.extended_bond(lo, hi))
        return 0
    out.kv("valid", "NO")
    for d in P.diagnostics:
        out.line(str(d))
    return 1


def cmd_paths(args, out):
    P = _poset(args)
    for f in enumerate_paths(P, args.degree):
        if out.fmt == "tsv":
            out.row(*(format_rational(f.value(e)) for e in P.order))
        else:
            out.line(format_path(f))
    return 0


def cmd_canonical(args, out):
    P = _poset(args)
    f = parse_path_spec(P, args.path)
    for g in canonical_form(P, f):
        out.line(format_path(g))
    return 0


def cmd_compare(args, out):
    P = _poset(args)
    a, b = (parse_path_spec(P, s) for s in args.path)
    for name, f in (("first", a), ("second", b)):
        chk = is_ls_path(P, f, f.degree)
        out.kv(f"{name} is LS-path", yes(chk.ok) + ("" if chk.ok else f" ({chk.message})"))
    s, ok = dotplus(P, a, b)
    out.kv("dotplus", f"{format_path(s)} ({'comparable' if ok else 'incomparable'} supports)")
    out.kv("rlex", {-1: "less", 0: "equal", 1: "greater"}[rlex_compare(P, a, b)])
    out.kv("dominance", dominance(P, a, b, args.cap_extensions).value)
    if a.total == 1 and b.total == 1:
        rel = straighten(P, a, b)
        if rel is None:
            out.kv("straightening", "already standard")
        elif rel.rhs is None:
            out.kv("straightening", "product is zero")
        else:
            out.kv("straightening", " ".join(format_path(g) for g in rel.rhs))
    if P.is_totally_ordered:
        out.kv("monomials", f"{format_monomial(P, to_monomial(P, a))} ; {format_monomial(P, to_monomial(P, b))}")
    return 0


def cmd_hilbert(args, out):
    P = _poset(args)
    hd = hilbert_function(P, args.max_degree)
    out.kv("d", " ".join(map(str, hd.dims)))
    out.kv("h", " ".join(map(str, hd.h)))
    out.kv("krull dimension", hd.krull_dim)
    out.kv("stabilized", yes(hd.stabilized))
    if hd.stabilized:
        out.kv("symmetric", yes(stanley_symmetry(hd)))
    return 0


def cmd_gorenstein(args, out):
    P = _poset(args)
    v = decide(P, args.max_degree)
    hd = hilbert_function(P, args.max_degree)
    out.kv("candidate", "{" + ", ".join(f"{e}={format_rational(q)}" for e, q in zip(P.order, v.candidate)) + "}")
    out.kv("partial sums", " ".join(format_rational(q) for q in v.partial_sums))
    out.kv("by LS-path criterion", yes(v.by_paths))
    out.kv("by SL membership", yes(v.by_sl))
    out.kv("by h-vector symmetry", f"{yes(v.by_hvector)} (h: {' '.join(map(str, hd.h))})")
    out.kv("AGREEMENT", yes(v.agree))
    if not v.agree:
        raise InternalFailure("the three Gorenstein routes disagree")
    out.kv("GORENSTEIN", yes(v.by_paths))
    return 0


def cmd_gorenstein_scan(args, out):
    rep = enumerate_gorenstein_bonds(args.length, args.max_bond)
    for vec in rep.vectors:
        out.line("(" + ",".join(map(str, vec)) + ")")
    out.kv("count", len(rep.vectors))
    out.kv("pruned by sum < 1", rep.pruned_by_bound)
    out.kv("pruned by integrality", rep.pruned_by_integrality)
    out.kv("largest Gorenstein bond", rep.largest_gorenstein_bond)
    out.kv("bound prunes all larger bonds", yes(rep.bound_prunes_tail))
    return 0


def cmd_group(args, out):
    P = _poset(args)
    G = group_generators(P)
    elems = group_closure(G, args.cap_group_order)
    out.kv("modulus", G.modulus)
    out.kv("order", len(elems))
    for i, g in enumerate(G.generators):
        out.row(f"e_{i}", format_element(g, G.modulus), "SL" if is_in_sl(g, G) else "not SL")
    refl = pseudo_reflections(G, elems)
    out.kv("pseudo-reflections", "none" if not refl else " ".join(format_element(g, G.modulus) for g in refl))
    out.kv("contained in SL", yes(all(is_in_sl(g, G) for g in G.generators)))
    bad = invariant_mismatches(P, args.max_degree)
    out.kv(f"invariants equal LS monomials (d <= {args.max_degree})", yes(not bad))
    if refl or bad:
        raise InternalFailure("group fails the quotient statement")
    return 0


def cmd_toric(args, out):
    P = _poset(args)
    L = lattice_basis(P)
    for row in L.basis:
        out.row("hnf", "(" + ",".join(map(str, row)) + ")")
    out.kv("index", L.index)
    order = len(group_closure(group_generators(P), args.cap_group_order))
    out.kv("group order", order)
    out.row("r", "#points", "#LS_r", "match", "degree-1 generated")
    bad = order != L.index
    for r in range(args.max_degree + 1):
        npts = len(graded_points(P, r))
        nls = len(enumerate_paths(P, r))
        gen = "-" if r < 2 else yes(not degree_one_failures(P, r))
        out.row(r, npts, nls, yes(npts == nls), gen)
        bad = bad or npts != nls or gen == "NO"
    if bad:
        raise InternalFailure("toric realization check failed")
    return 0


def cmd_components(args, out):
    P = _poset(args)
    rep = components(P, args.max_degree)
    for k, c in enumerate(rep.components):
        out.row(f"C{k}", " < ".join(c.chain), f"|LS_1(C)| = {len(c.path_set)}")
    out.row("pair", "common chain", "|LS_1(C1 cap C2)|", "|LS_1(C1) cap LS_1(C2)|", "match")
    for x in rep.intersections:
        out.row(f"C{x.first},C{x.second}", " < ".join(x.common), x.expected, x.found, yes(x.ok))
    out.row("d", "|LS_d|", "inclusion-exclusion", "match")
    for d, a, b in rep.inclusion_exclusion:
        out.row(d, a, b, yes(a == b))
    ideal = component_ideal_checks(P, args.max_degree)
    for chk in ideal:
        dims = " ".join(f"{a}/{b}" for _, a, b in chk.dims)
        out.row(f"ideal C{chk.first},C{chk.second}", f"groebner {yes(chk.buchberger_ok)}", f"dims {dims}", yes(chk.ok))
    if not rep.ok or not all(c.ok for c in ideal):
        raise InternalFailure("component decomposition check failed")
    return 0


def cmd_grobner(args, out):
    P = _poset(args)
    rep = initial_ideal_check(P, args.max_degree)
    bb = rep.buchberger
    out.kv("variables", len(PathRing(P)))
    out.kv("generators", bb.generators)
    out.kv("S-pairs reduced", bb.pairs_checked)
    out.kv("S-pairs skipped", bb.pairs_skipped)
    out.kv("groebner basis", yes(bb.ok))
    if bb.witness:
        a, b, rem = bb.witness
        out.kv("witness", f"generators {a},{b} leave {rem.format()}")
    out.row("d", "#standard", "#LS_d", "match")
    for r in rep.rows:
        out.row(r.degree, r.standard, r.ls_paths, yes(r.match))
    if not rep.ok:
        raise InternalFailure("straightening relations are not a quadratic Groebner basis")
    return 0


def cmd_validate_algebra(args, out):
    P = _poset(args)
    T = parse_relations(_load(args.relations), P)
    rep = validate_algebra(T, args.max_degree, args.cap_extensions, args.relaxed)
    out.kv("relations", len(T.relations))
    out.kv("LSA1", yes(rep.lsa1.ok) + (f" ({rep.lsa1.reason}: {rep.lsa1.detail})" if not rep.lsa1.ok else ""))
    out.kv("LSA2", yes(not rep.lsa2))
    for v in rep.lsa2:
        out.line("  " + v.message)
    out.kv("LSA3", yes(not rep.lsa3))
    for v in rep.lsa3:
        out.line("  " + v.message)
    out.kv("LS algebra", yes(rep.ok))
    return 0


# -- parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "tsv"], default="text")
    common.add_argument("--cap-extensions", type=int, default=DEFAULT_EXTENSION_CAP)
    common.add_argument("--cap-group-order", type=int, default=DEFAULT_GROUP_CAP)

    p = argparse.ArgumentParser(prog="lsalg", description=__doc__)
    p.add_argument("--version", action="version", version=f"lsalg {__version__} ({kernels.BACKEND} kernels)")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help, file=True):
        sp = sub.add_parser(name, parents=[common], help=help)
        if file:
            sp.add_argument("file")
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check the poset-with-bonds invariants").add_argument(
        "--bond", nargs=2, metavar=("LO", "HI"), help="also print the extended bond of a comparable pair")
    add("paths", cmd_paths, "list LS-paths of a degree").add_argument("--degree", type=int, required=True)
    add("canonical", cmd_canonical, "canonical form of a path").add_argument("--path", required=True)
    add("compare", cmd_compare, "compare two paths").add_argument("--path", nargs=2, required=True)
    add("hilbert", cmd_hilbert, "Hilbert function and h-vector").add_argument("--max-degree", type=int, default=None)
    add("gorenstein", cmd_gorenstein, "three-way Gorenstein decision").add_argument(
        "--max-degree", type=int, default=None)
    sp = add("gorenstein-scan", cmd_gorenstein_scan, "scan bond vectors for Gorenstein chains", file=False)
    sp.add_argument("--length", type=int, required=True)
    sp.add_argument("--max-bond", type=int, required=True)
    add("group", cmd_group, "the quotient group of a chain").add_argument("--max-degree", type=int, default=3)
    add("toric", cmd_toric, "exponent lattice and graded points").add_argument("--max-degree", type=int, default=3)
    add("components", cmd_components, "chain components of a general poset").add_argument(
        "--max-degree", type=int, default=3)
    add("grobner", cmd_grobner, "verify the quadratic Groebner basis").add_argument(
        "--max-degree", type=int, default=4)
    sp = add("validate-algebra", cmd_validate_algebra, "check a relation table against LSA1-LSA3")
    sp.add_argument("--relations", required=True)
    sp.add_argument("--max-degree", type=int, default=4)
    sp.add_argument("--relaxed", action="store_true", help="accept any nonzero canonical coefficient")
    return p


def run(argv=None) -> tuple[int, str]:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage errors are input errors; --help and --version exit 0
        return (0 if exc.code == 0 else 1), ""
    out = Report(args.format)
    try:
        code = args.func(args, out)
    except (InternalFailure, LeadingTermError, AssertionError) as exc:
        out.line(f"internal failure: {exc}")
        code = 2
    except LSError as exc:
        out.line(f"error: {exc}")
        code = 1
    return code, "\n".join(out.lines) + ("\n" if out.lines else "")


def main(argv=None):
    code, text = run(argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
