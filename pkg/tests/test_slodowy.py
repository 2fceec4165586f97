import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from helpers import to_sympy
from sympsing.exactcore import PolyRing, exact_rank
from sympsing.slodowy import (
    build_triple,
    char_poly_coefficients,
    commutator,
    expected_slice_dim,
    find_regular_point,
    is_nilpotent,
    jacobian_at,
    slice_basis,
    slice_equations,
    verify_slice_geometry,
)


@pytest.mark.parametrize("d", range(4, 10))
def test_triple_and_slice(d):
    T = build_triple(d)
    assert all(not any(v for r in R for v in r) for R in T.residuals().values())
    basis = slice_basis(T)
    assert len(basis) == d + 3 == expected_slice_dim((d - 2, 2))
    for B in basis:
        assert not any(v for r in commutator(T.f, B) for v in r)
        assert sum(B[i][i] for i in range(d)) == 0
    flat = [[v for r in B for v in r] for B in basis]
    assert exact_rank(flat) == len(basis)
    # transversality: [g, e] + ker ad f spans sl_d
    n = d
    units = []
    for i in range(n):
        for j in range(n):
            E = [[int((a, b) == (i, j)) for b in range(n)] for a in range(n)]
            units.append([v for r in commutator(E, T.e) for v in r])
    assert exact_rank(units + flat) == n * n - 1


def test_kernel_dimension_formula_matches_sympy():
    for blocks in [(2, 2), (3, 2), (4, 2), (3, 3), (5,), (4, 1, 1)]:
        T = build_triple(sum(blocks), blocks)
        n = T.n
        F = sympy.Matrix(T.f)
        ad = sympy.Matrix([[(F * sympy.Matrix(n, n, lambda a, b: int((a, b) == (i, j)))
                             - sympy.Matrix(n, n, lambda a, b: int((a, b) == (i, j))) * F)[k]
                            for i in range(n) for j in range(n)] for k in range(n * n)])
        assert n * n - ad.rank() - 1 == expected_slice_dim(blocks)


@given(st.lists(st.integers(-3, 3), min_size=16, max_size=16))
def test_newton_coefficients_match_sympy_charpoly(entries):
    R = PolyRing(["u"])
    M = [[R(entries[4 * i + j]) for j in range(4)] for i in range(4)]
    coeffs = char_poly_coefficients(M, R)
    t = sympy.Symbol("t")
    cp = sympy.Matrix(4, 4, entries).charpoly(t).all_coeffs()
    assert [to_sympy(c) for c in coeffs] == [(-1) ** k * cp[k] for k in range(1, 5)]


@pytest.mark.parametrize("d", [4, 5])
def test_slice_equations_match_sympy(d):
    pres = slice_equations(d)
    zs = sympy.symbols(pres.ring.names)
    G = sympy.Matrix(pres.triple.e)
    for z, B in zip(zs, pres.basis):
        G += z * sympy.Matrix(B)
    t = sympy.Symbol("t")
    cp = sympy.Poly(G.charpoly(t).as_expr(), t).all_coeffs()
    for k, p in enumerate(pres.equations, 2):
        assert sympy.expand(to_sympy(p) - (-1) ** k * cp[k]) == 0


@pytest.mark.parametrize("d", range(4, 10))
def test_regular_point(d):
    pres = slice_equations(d)
    z, _ = find_regular_point(pres)
    assert z is not None
    M = pres.at(z)
    assert is_nilpotent(M) and exact_rank(M) == d - 1
    assert exact_rank(jacobian_at(pres, z)) == d - 1
    assert exact_rank(jacobian_at(pres, [0] * len(z))) < d - 1


@pytest.mark.parametrize("d", range(4, 10))
def test_slodowy_suite(d):
    rep = verify_slice_geometry(d)
    assert rep.all_passed, rep.failures[:2]


def test_wrong_jordan_type_is_rejected():
    rep = verify_slice_geometry(5, blocks=(5,))
    assert rep.failures and all(f.witness is not None for f in rep.failures)
