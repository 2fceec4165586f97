import json
from pathlib import Path

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from helpers import to_sympy
from sympsing.dihedral import invariant_bundle
from sympsing.exactcore import MultiPoly
from sympsing.varieties import (
    all_identities,
    chart_presentation,
    clear_delta,
    jacobian_minors,
    presentation,
    verify_blowup_relations,
    verify_chart_Y0,
    verify_chart_Yr_smooth,
    verify_completion_substitution,
    verify_fiber_identity,
    verify_orbit_representatives,
    verify_phi_immersion,
    verify_presentation_on_invariants,
    verify_singular_locus,
    yr_relations,
)

GOLDEN = Path(__file__).parent / "golden"


def _sympy_invariants(d):
    B = invariant_bundle(d)
    env = {"q": B.q, "Q": B.Q, "e": B.e}
    env.update({f"a{i}": a for i, a in enumerate(B.a)})
    sd = to_sympy(B.delta)
    out = {sympy.Symbol(k): to_sympy(v) for k, v in env.items()}
    out.update({sympy.Symbol(f"b{j}"): to_sympy(b) / sd for j, b in enumerate(B.beta)})
    return out


@pytest.mark.parametrize("kind", ["Q", "Y"])
@pytest.mark.parametrize("d", [4, 5, 6, 7])
def test_relations_vanish_by_sympy(kind, d):
    env = _sympy_invariants(d)
    for label, p in presentation(kind, d).relations:
        assert sympy.cancel(to_sympy(p).subs(env, simultaneous=True)) == 0, label


@pytest.mark.parametrize("d", range(4, 11))
@pytest.mark.parametrize("kind", ["Q", "Y"])
def test_presentation_suite(kind, d):
    rep = verify_presentation_on_invariants(kind, d)
    assert rep.all_passed, rep.failures[:2]


@pytest.mark.parametrize("d", range(4, 13))
def test_relation_counts(d):
    for kind in ("Q", "Z", "Y"):
        P = presentation(kind, d)
        assert len(P.linear) == d - 1
        assert len(P.quadratic) == d * (d - 1) // 2


@pytest.mark.parametrize("d", range(4, 11))
def test_z_outer_relation_at_origin(d):
    # a_0 a_d - a_1 a_{d-1} = (e^2 - d^2) e^(d-2) once q = Q = 0
    P = presentation("Z", d)
    rel = P.relation(f"quad1,{d - 1}").subs(q=0, Q=0)
    R = P.ring
    e = R.var("e")
    a = [R.var(f"a{i}") for i in range(d + 1)]
    assert rel == a[0] * a[d] - a[1] * a[d - 1] - (e ** 2 - d * d) * e ** (d - 2)


@pytest.mark.parametrize("d", range(4, 9))
def test_y_specialization_forces_b0_bd(d):
    P = presentation("Y", d)
    R = P.ring
    inner = {f"b{j}": 0 for j in range(1, d)}
    rel = P.relation(f"quad1,{d - 1}").subs(q=0, Q=0, **inner)
    assert rel == -(R.var("b0") * R.var(f"b{d}")) - R.var("e") ** (d - 2)


@pytest.mark.parametrize("name", sorted(p.name for p in GOLDEN.glob("*.json")))
def test_golden_presentations(name):
    stem = name[:-5]
    parts = stem.split("_")
    kind, d = parts[0], int(parts[1][1:])
    if kind == "chart-Yr":
        pres = chart_presentation(kind, d, int(parts[2][1:]))
    else:
        pres = presentation(kind, d)
    assert pres.dumps() == (GOLDEN / name).read_text()
    json.loads(pres.dumps())


@pytest.mark.parametrize("d", range(4, 11))
def test_identity_suites(d):
    for rep in (all_identities(d), verify_blowup_relations(d), verify_chart_Y0(d), verify_orbit_representatives(d),
                verify_fiber_identity(d), verify_phi_immersion(d)):
        assert rep.all_passed, rep.failures[:2]


@pytest.mark.parametrize("d", [4, 6, 8, 10])
def test_singular_locus_even(d):
    rep = verify_singular_locus(d)
    assert rep.all_passed, rep.failures[:2]


@pytest.mark.parametrize("d,r", [(4, 1), (4, 2), (4, 3), (5, 2), (6, 3)])
def test_smoothness_certificate_against_sympy(d, r):
    rels = yr_relations(d, r)
    gens = [to_sympy(p) for p in rels + jacobian_minors(rels)]
    syms = sympy.symbols("q Q ar Bm Br Bp")
    G = sympy.groebner(gens, *syms, order="grevlex")
    assert list(G.exprs) == [1]
    assert verify_chart_Yr_smooth(d, r).all_passed


def test_smoothness_rejects_a_singular_chart():
    from sympsing.varieties import yr_ring

    q, Q, ar, Bm, Br, Bp = yr_ring().gens()
    rep = verify_chart_Yr_smooth(5, 2, relations=[q * Bp - Q * Bm + ar * Br, Bm * Bp])
    assert rep.failures and rep.failures[0].witness


@pytest.mark.parametrize("d", [4, 5, 6])
def test_completion_substitution(d):
    assert verify_completion_substitution(d, 8).all_passed


b_degree_polys = st.lists(st.tuples(st.integers(0, 2), st.integers(0, 5), st.integers(-3, 3)), min_size=1, max_size=4)


def _y_poly(d, terms):
    R = presentation("Y", d).ring
    out = R.zero()
    for deg, j, c in terms:
        m = R.var("e") ** (2 - deg)
        for _ in range(deg):
            m = m * R.var(f"b{min(j, d)}")
        out = out + m.scale(c)
    return out


@given(st.integers(4, 6), b_degree_polys, b_degree_polys, st.integers(0, 2))
def test_delta_clearing_is_linear_and_order_free(d, s1, s2, extra):
    p, r = _y_poly(d, s1), _y_poly(d, s2)
    E = 2 + extra
    lhs, _ = clear_delta(p + r, d, E)
    assert lhs == clear_delta(p, d, E)[0] + clear_delta(r, d, E)[0]
    base, M = clear_delta(p, d)
    delta = invariant_bundle(d).delta
    assert clear_delta(p, d, M + extra)[0] == base * delta ** extra
    # the same terms in a different insertion order clear identically
    rev = MultiPoly(p.ring, dict(reversed(list(p.terms.items()))))
    assert clear_delta(rev, d)[0] == base
