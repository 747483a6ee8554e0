from itertools import product
from math import prod

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from lsalg import kernels
from lsalg.discrete import to_monomial
from lsalg.errors import PosetError
from lsalg.lattice import (
    chain_conditions,
    components,
    congruence_lattice,
    degree_one_failures,
    degree_one_generation,
    graded_points,
    hnf,
    lattice_basis,
    point_to_path,
)
from lsalg.paths import count_paths, enumerate_paths
from lsalg.poset import chain_poset, diamond, double_diamond

from conftest import FAMILY, family_id


def residue_index(rows, M, n):
    """[Z^n : L] = M^n / #{g mod M : rows . g == 0 mod M}."""
    hits = sum(1 for g in product(range(M), repeat=n)
               if all(sum(c * x for c, x in zip(r, g)) % M == 0 for r in rows))
    return M**n // hits


def test_lattice_examples():
    L = lattice_basis(chain_poset([2]))
    assert L.index == 2 and L.contains((1, 1)) and not L.contains((1, 0))
    assert lattice_basis(chain_poset([1])).index == 1
    L = lattice_basis(chain_poset([2, 3]))
    assert L.index == 6 and L.basis == ((1, 1, 1), (0, 2, 2), (0, 0, 3))
    for g in product(range(6), repeat=3):
        assert L.contains(g) == ((3 * g[0] + g[1] + 2 * g[2]) % 6 == 0)


def test_lattice_needs_chain():
    with pytest.raises(PosetError):
        lattice_basis(diamond())


@pytest.mark.parametrize("bonds", FAMILY, ids=family_id)
def test_index_oracles(bonds):
    P = chain_poset(bonds)
    rows, M, m = chain_conditions(P)
    L = lattice_basis(P)
    if M ** len(m) <= 5000:
        assert L.index == residue_index(rows, M, len(m))
    assert abs(sympy.Matrix(L.basis).det()) == L.index
    # every basis row satisfies each congruence
    assert all(sum(c * x for c, x in zip(r, v)) % M == 0 for r in rows for v in L.basis)


@settings(max_examples=150, deadline=None)
@given(st.lists(st.lists(st.integers(-20, 20), min_size=3, max_size=3), min_size=1, max_size=5))
def test_hnf_against_sympy(rows):
    H = hnf(rows)
    A = sympy.Matrix(rows)
    assert len(H) == A.rank()
    # same row lattice: each basis expresses the other integrally
    if H:
        Aint = sympy.Matrix(H)
        for r in rows:
            sol = Aint.T.gauss_jordan_solve(sympy.Matrix(r))[0]
            assert all(x.is_integer for x in sol.subs({s: 0 for s in sol.free_symbols}))
    for k, row in enumerate(H):
        piv = next(j for j, x in enumerate(row) if x)
        assert row[piv] > 0
        assert all(0 <= H[i][piv] < row[piv] for i in range(k))


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 12), st.lists(st.lists(st.integers(0, 11), min_size=3, max_size=3), min_size=1, max_size=3))
def test_congruence_lattice_against_residues(M, rows):
    basis = congruence_lattice(rows, M, 3)
    assert len(basis) == 3
    assert prod(basis[i][i] for i in range(3)) == residue_index(rows, M, 3)


def test_graded_point_examples():
    P = chain_poset([2])
    assert graded_points(P, 1) == [(0, 2), (1, 1), (2, 0)]
    assert graded_points(chain_poset([2, 3]), 0) == [(0, 0, 0)]
    assert len(graded_points(chain_poset([2, 3]), 1)) == 7


def test_degree_one_examples():
    assert degree_one_generation(chain_poset([2]), 2)
    assert len(graded_points(chain_poset([2]), 2)) == 5
    assert degree_one_generation(chain_poset([3]), 2)
    assert degree_one_generation(chain_poset([2, 3]), 3)


@pytest.mark.parametrize("bonds", FAMILY, ids=family_id)
def test_points_are_path_monomials(bonds):
    P = chain_poset(bonds)
    for r in range(4):
        pts = graded_points(P, r)
        assert set(pts) == {to_monomial(P, f) for f in enumerate_paths(P, r)}
        assert all(to_monomial(P, point_to_path(P, g)) == g for g in pts)
    assert degree_one_failures(P, 2) == []


def test_components_examples():
    rep = components(chain_poset([2, 3]))
    assert len(rep.components) == 1 and rep.intersections == ()
    rep = components(diamond())
    assert len(rep.components) == 2
    (x,) = rep.intersections
    assert x.common == ("0", "1") and x.expected == x.found == 2 and x.ok
    rep = components(double_diamond())
    assert len(rep.components) == 4 and len(rep.intersections) == 6 and rep.ok


def test_kernel_points_sorted_and_unique():
    P = chain_poset([4, 4, 4])
    pts = graded_points(P, 3)
    assert pts == sorted(set(pts)) and len(pts) == count_paths(P, 3)
    rows = [list(r) for r in lattice_basis(P).basis]
    assert sorted(kernels.python_impl.graded_lattice_points(rows, [1, 1, 1, 1][:len(rows)], 8)) == \
        sorted(kernels.graded_lattice_points(rows, [1, 1, 1, 1][:len(rows)], 8))
