import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from helpers import to_sympy
from sympsing.dihedral import (
    act,
    build_group,
    invariant_bundle,
    psi,
    psi_closed_form,
    verify_group,
    verify_invariance,
    verify_psi,
)

q, Q, e, t = sympy.symbols("q Q e t")


def test_psi_matches_generating_function():
    # sum Psi_k t^k = 1 / (1 - e t + qQ t^2)
    N = 20
    gf = sympy.series(1 / (1 - e * t + q * Q * t ** 2), t, 0, N + 1).removeO()
    for k in range(N + 1):
        assert sympy.expand(to_sympy(psi(k)) - gf.coeff(t, k)) == 0


def test_psi_is_a_scaled_chebyshev_polynomial():
    # at qQ = 1/4 the family becomes 2^-k U_k(e)
    for k in range(12):
        expr = to_sympy(psi(k)).subs(Q, sympy.Rational(1, 4) / q)
        assert sympy.simplify(expr - sympy.chebyshevu(k, e) / 2 ** k) == 0


@pytest.mark.parametrize("k", range(0, 30))
def test_psi_closed_form(k):
    assert psi(k) == psi_closed_form(k)


def test_psi_suite_passes_to_order_50():
    rep = verify_psi(50)
    assert rep.all_passed, rep.failures[:3]


def test_psi_specializations():
    for k in range(10):
        assert to_sympy(psi(k)).subs({q: 0}) == e ** k
        assert to_sympy(psi(k)).subs({e: 0}) == (0 if k % 2 else (-q * Q) ** (k // 2))


@pytest.mark.parametrize("d", range(3, 11))
def test_group_order_and_reflections(d):
    G = build_group(d)
    assert len(G) == 2 * d
    assert sum(1 for g in G if g.is_reflection) == d
    assert verify_group(d).all_passed


@pytest.mark.parametrize("d", [4, 5, 6])
def test_invariants_with_numeric_roots_of_unity(d):
    # independent check: rotation x->zx, y->y/z, X->X/z, Y->zY and the swap
    x, y, X, Y = sympy.symbols("x y X Y")
    z = sympy.exp(2 * sympy.pi * sympy.I / d)
    B = invariant_bundle(d)
    rot = {x: z * x, y: y / z, X: X / z, Y: z * Y}
    swap = {x: y, y: x, X: Y, Y: X}
    for name, p in B.invariants().items():
        f = to_sympy(p)
        assert sympy.simplify(f.subs(rot, simultaneous=True) - f) == 0, name
        assert sympy.expand(f.subs(swap, simultaneous=True) - f) == 0, name
    for name, p in B.semi_invariants().items():
        f = to_sympy(p)
        assert sympy.simplify(f.subs(rot, simultaneous=True) - f) == 0, name
        assert sympy.expand(f.subs(swap, simultaneous=True) + f) == 0, name


@pytest.mark.parametrize("d", range(4, 11))
def test_invariance_suite(d):
    rep = verify_invariance(d)
    assert rep.all_passed, rep.failures[:3]


@given(st.integers(4, 8), st.data())
def test_action_is_a_group_action(d, data):
    G = build_group(d)
    g = data.draw(st.sampled_from(G))
    h = data.draw(st.sampled_from(G))
    B = invariant_bundle(d, cyclotomic=True)
    x = B.ring.var("x")
    p = x * x * B.ring.var("Y") + B.ring.var("y")
    assert act(g, act(h, p)) == act(g * h, p)
