
import pytest
import sympy

from lsalg.discrete import (
    HilbertData,
    discrete_relations,
    finite_difference,
    format_monomial,
    hilbert_function,
    stanley_symmetry,
    straighten,
    to_monomial,
)
from lsalg.errors import LSError
from lsalg.paths import dotplus, enumerate_paths, zero_path
from lsalg.poset import PosetWithBonds, chain_poset

from conftest import FAMILY, family_id


def test_to_monomial_examples(chain2):
    a, b, c = enumerate_paths(chain2, 1)
    assert to_monomial(chain2, b) == (1, 1)
    assert to_monomial(chain2, a) == (2, 0)
    assert {to_monomial(chain2, f) for f in (a, b, c)} == {(2, 0), (1, 1), (0, 2)}
    assert to_monomial(chain2, zero_path()) == (0, 0)
    assert format_monomial(chain2, (1, 1)) == "x_{s0} x_{s1}"
    assert format_monomial(chain2, (0, 0)) == "1"


def test_straighten_examples(chain2, dia):
    a, b, c = enumerate_paths(chain2, 1)
    rel = straighten(chain2, b, b)
    assert rel.rhs == (a, c)
    assert straighten(dia, {"a": 1}, {"b": 1}).is_zero
    assert straighten(chain2, a, c) is None
    assert straighten(chain2, c, a) is None


def test_discrete_relations_cover_nonstandard_pairs(chain23):
    rels = discrete_relations(chain23)
    assert len(rels) == 9
    assert all(not r.is_zero for r in rels)


def test_hilbert_examples(chain2, chain3):
    h2 = hilbert_function(chain2, 4)
    assert h2.dims == (1, 3, 5, 7, 9) and h2.h == (1, 1) and h2.stabilized
    h3 = hilbert_function(chain3, 4)
    assert h3.dims == (1, 4, 7, 10, 13) and h3.h == (1, 2)
    pt = hilbert_function(PosetWithBonds(["p"], []), 5)
    assert pt.dims == (1,) * 6 and pt.h == (1,)


def test_stanley_examples():
    assert stanley_symmetry((1, 1))
    assert not stanley_symmetry((1, 2))
    assert stanley_symmetry((1,))
    with pytest.raises(LSError, match="stabilize"):
        stanley_symmetry(HilbertData((1, 2), (1, 1), 2, False))


def test_finite_difference():
    assert finite_difference([1, 3, 5, 7], 2) == [1, 1, 0, 0]
    assert finite_difference([1, 1, 1], 0) == [1, 1, 1]


def test_stabilized_flag_needs_room(chain23):
    assert not hilbert_function(chain23, 3).stabilized
    assert hilbert_function(chain23).stabilized


t = sympy.symbols("t")


def sympy_stanley(hd):
    """F(1/t) == (-1)^n t^k F(t) for some integer k, checked as rational functions."""
    n = hd.krull_dim
    Fs = sum(c * t**i for i, c in enumerate(hd.h)) / (1 - t) ** n
    ratio = sympy.cancel(Fs.subs(t, 1 / t) / Fs * (-1) ** n)
    num, den = sympy.fraction(ratio)
    ok = sympy.Poly(num, t).is_monomial and sympy.Poly(den, t).is_monomial
    if not ok:
        return False, None
    k = sympy.degree(num, t) - sympy.degree(den, t)
    return sympy.LC(sympy.Poly(num, t)) == sympy.LC(sympy.Poly(den, t)), k


@pytest.mark.parametrize("bonds", FAMILY, ids=family_id)
def test_stanley_against_sympy(bonds):
    hd = hilbert_function(chain_poset(bonds))
    ok, k = sympy_stanley(hd)
    assert stanley_symmetry(hd) == ok
    if ok:
        assert hd.stanley_exponent == k


@pytest.mark.parametrize("bonds", FAMILY, ids=family_id)
def test_dims_sum_to_series(bonds):
    # the h-vector reproduces every computed dimension
    hd = hilbert_function(chain_poset(bonds))
    series = sympy.series(sum(c * t**i for i, c in enumerate(hd.h)) / (1 - t) ** hd.krull_dim, t, 0,
                          len(hd.dims)).removeO()
    assert [series.coeff(t, r) for r in range(len(hd.dims))] == list(hd.dims)


@pytest.mark.parametrize("bonds", FAMILY, ids=family_id)
def test_monomial_properties(bonds):
    P = chain_poset(bonds)
    low = enumerate_paths(P, 1) + enumerate_paths(P, 2)
    for a in low:
        for b in low:
            s, ok = dotplus(P, a, b)
            assert ok
            assert to_monomial(P, s) == tuple(x + y for x, y in zip(to_monomial(P, a), to_monomial(P, b)))
    for r in range(4):
        ps = enumerate_paths(P, r)
        assert len({to_monomial(P, f) for f in ps}) == len(ps)
    for rel in discrete_relations(P):
        lhs = [sum(v) for v in zip(*(to_monomial(P, f) for f in rel.lhs))]
        rhs = [sum(v) for v in zip(*(to_monomial(P, f) for f in rel.rhs))]
        assert lhs == rhs


def test_zero_relation_on_incomparable(dia):
    zero = [r for r in discrete_relations(dia) if r.is_zero]
    assert [tuple(f.support for f in r.lhs) for r in zero] == [(("a",), ("b",))]
