from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from helpers import from_sympy, to_sympy
from sympsing.exactcore import (
    LEX,
    Budget,
    BudgetExceeded,
    MultiPoly,
    PolyRing,
    Sqrt2Elt,
    cyclotomic_field,
    cyclotomic_polynomial,
    derivative,
    evaluate,
    exact_rank,
    groebner_basis,
    ideal_contains,
    ideal_contains_one,
    is_groebner,
    normal_form,
    nullspace,
    quotient_dimension,
    series_inv_sqrt,
    sparse_rank,
    truncate,
)

R = PolyRing(["x", "y", "z"])
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)
monos = st.tuples(*[st.integers(0, 3)] * 3)


@st.composite
def polys(draw, ring=R, max_terms=5):
    terms = draw(st.dictionaries(monos, rationals, max_size=max_terms))
    return MultiPoly(ring, terms)


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == R.zero()


@given(polys(), polys())
def test_product_matches_sympy(a, b):
    assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))


@given(polys())
def test_sympy_round_trip_and_parse(p):
    assert from_sympy(to_sympy(p), R) == p
    assert R.parse(p.to_str()) == p


@given(polys(), polys())
def test_derivative_leibniz(a, b):
    lhs = derivative(a * b, "x")
    assert lhs == derivative(a, "x") * b + a * derivative(b, "x")
    assert to_sympy(derivative(a, "y")) == sympy.diff(to_sympy(a), sympy.Symbol("y"))


@given(polys(), st.tuples(rationals, rationals, rationals))
def test_evaluate_matches_sympy(p, pt):
    env = dict(zip("xyz", pt))
    want = to_sympy(p).subs({sympy.Symbol(k): sympy.Rational(v.numerator, v.denominator) for k, v in env.items()})
    got = evaluate(p, env)
    assert sympy.Rational(Fraction(got).numerator, Fraction(got).denominator) == want


def test_integral_coefficients_normalize_to_int():
    p = R.parse("2/2*x + 4/2")
    assert all(type(c) is int for c in p.terms.values())


@pytest.mark.parametrize("d", range(1, 31))
def test_cyclotomic_polynomial_matches_sympy(d):
    t = sympy.Symbol("t")
    want = sympy.Poly(sympy.cyclotomic_poly(d, t), t).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(d)) == [int(c) for c in want]


@pytest.mark.parametrize("d", range(3, 13))
def test_zeta_has_order_d(d):
    F = cyclotomic_field(d)
    z = F.zeta()
    assert z ** d == F(1)
    assert all(z ** k != F(1) for k in range(1, d))
    assert z * z.inverse() == F(1)
    # sum of primitive d-th roots is the Mobius function
    assert sum((z ** k for k in range(1, d + 1) if sympy.gcd(k, d) == 1), F(0)) == F(int(sympy.mobius(d)))


@given(st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6))
def test_sqrt2_field(a, b, c, d):
    u, v = Sqrt2Elt(a, b), Sqrt2Elt(c, d)
    s2 = sympy.sqrt(2)
    prod = u * v
    assert sympy.expand((a + b * s2) * (c + d * s2)) == sympy.expand(prod.a + prod.b * s2)
    if (c, d) != (0, 0):
        assert (u / v) * v == u


matrices = st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5)


@given(matrices)
def test_rank_matches_sympy(rows):
    want = sympy.Matrix(rows).rank()
    assert exact_rank(rows) == want
    assert sparse_rank([{j: v for j, v in enumerate(r) if v} for r in rows]) == want


@given(matrices)
def test_nullspace_is_kernel(rows):
    ns = nullspace(rows, 4)
    assert len(ns) == 4 - exact_rank(rows)
    for v in ns:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)


def test_groebner_matches_sympy_lex():
    S = PolyRing(["x", "y"])
    gens = [S.parse("x^2 + y^2 - 1"), S.parse("x*y - 1/2")]
    ours = groebner_basis(gens, LEX)
    x, y = sympy.symbols("x y")
    theirs = sympy.groebner([to_sympy(g) for g in gens], x, y, order="lex")
    assert sorted(to_sympy(g).as_expr().expand().__str__() for g in ours) == sorted(
        str(sympy.expand(g / sympy.Poly(g, x, y).LC())) for g in theirs.exprs)
    assert is_groebner(ours, LEX)


@given(st.lists(polys(max_terms=3), min_size=1, max_size=3), polys(max_terms=3), polys(max_terms=3))
def test_ideal_membership(gens, a, b):
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return
    try:
        G = groebner_basis(gens, budget=Budget(max_basis=60, max_terms=4000, max_pairs=2000))
    except BudgetExceeded:
        return
    member = a * gens[0] + b * gens[-1]
    assert ideal_contains(member, G)
    assert normal_form(member, G).is_zero()


def test_unit_ideal_and_quotient_dimension():
    S = PolyRing(["x", "y"])
    assert ideal_contains_one([S.parse("x*y - 1"), S.parse("x")])
    assert not ideal_contains_one([S.parse("x^2"), S.parse("y")])
    # monomials 1, x, y survive; the quotient is 3-dimensional
    assert quotient_dimension([S.parse("x^2"), S.parse("x*y"), S.parse("y^2 - x")]) == 3
    assert quotient_dimension([S.parse("x^3"), S.parse("y^2")]) == 6


def test_budget_is_raised_not_swallowed():
    S = PolyRing(["x", "y", "z"])
    gens = [S.parse("x^3 - y*z + 1"), S.parse("y^3 - x*z"), S.parse("z^3 - x*y + 2")]
    with pytest.raises(BudgetExceeded):
        groebner_basis(gens, budget=Budget(max_basis=2, max_terms=10, max_pairs=3))


@pytest.mark.parametrize("order", [4, 7])
def test_inv_sqrt_series_matches_sympy(order):
    S = PolyRing(["t"])
    f = S.parse("4 + 3*t - t^2")
    s = series_inv_sqrt(f, order)
    assert truncate(s.poly * s.poly * f - 1, order).is_zero()
    t = sympy.Symbol("t")
    want = sympy.series(1 / sympy.sqrt(4 + 3 * t - t ** 2), t, 0, order + 1).removeO()
    assert sympy.expand(to_sympy(s.poly) - want) == 0


def test_inv_sqrt_rejects_non_square_constant():
    S = PolyRing(["t"])
    with pytest.raises(ValueError):
        series_inv_sqrt(S.parse("3 + t"), 4)
