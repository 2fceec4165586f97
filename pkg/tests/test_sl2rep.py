import random

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from sympsing.dihedral import invariant_bundle
from sympsing.exactcore import Sqrt2Elt
from sympsing.sl2rep import (
    DOMAIN,
    GL2Element,
    act_gl2,
    bracket,
    corrupted_sl3_table,
    domain_action,
    image,
    in_span_of,
    random_gl2,
    sl3_embedding_check,
    sl3_table,
    sosp_check,
    torus_weight,
    verify_module_structure,
)

entries = st.integers(-3, 3)
gl2 = st.tuples(entries, entries, entries, entries).filter(lambda m: m[0] * m[3] != m[1] * m[2]).map(
    lambda m: GL2Element(*m))


@given(gl2, gl2, st.integers(4, 6), st.integers(0, 6))
def test_action_composes(g, h, d, j):
    B = invariant_bundle(d)
    p = B.a[min(j, d)] + B.q * B.e
    assert act_gl2(g, act_gl2(h, p)) == act_gl2(g * h, p)


@given(gl2, st.integers(4, 7))
def test_delta_picks_up_the_determinant(g, d):
    B = invariant_bundle(d)
    assert act_gl2(g, B.delta) == B.delta.scale(g.det)


@given(gl2, st.integers(4, 6), st.integers(0, 6))
def test_span_of_a_is_preserved(g, d, j):
    B = invariant_bundle(d)
    assert in_span_of(list(B.a), act_gl2(g, B.a[min(j, d)])) is not None


@pytest.mark.parametrize("d", range(4, 9))
def test_torus_weights(d):
    B = invariant_bundle(d)
    for j in range(d + 1):
        assert torus_weight(B.a[j]) == 2 * j - d
        assert torus_weight(B.beta[j]) == 2 * j - d
        assert torus_weight(B.a[j], homothety=True) == d
    assert (torus_weight(B.q), torus_weight(B.Q), torus_weight(B.e)) == (-2, 2, 0)
    assert torus_weight(B.q + B.Q) is None


@pytest.mark.parametrize("d", range(4, 9))
def test_module_structure(d):
    rep = verify_module_structure(d, trials=5, seed=7)
    assert rep.all_passed, rep.failures[:2]


def test_module_structure_is_seed_deterministic():
    a = verify_module_structure(5, trials=3, seed=11).to_json()
    b = verify_module_structure(5, trials=3, seed=11).to_json()
    assert a == b
    assert random_gl2(random.Random(3)) == random_gl2(random.Random(3))


def _sym(v):
    if isinstance(v, Sqrt2Elt):
        return sympy.nsimplify(v.a) + sympy.nsimplify(v.b) * sympy.sqrt(2)
    return sympy.nsimplify(v)


def test_sl3_images_satisfy_jacobi_and_rank():
    T = sl3_table()
    mats = [T[k] for k in DOMAIN]
    flat = sympy.Matrix([[_sym(v) for row in M for v in row] for M in mats])
    assert flat.rank(simplify=True) == 8
    for A in mats:
        assert sympy.simplify(sum(_sym(A[i][i]) for i in range(3))) == 0
    for A in mats[:4]:
        for B in mats[:4]:
            for C in mats[:4]:
                s = sympy.zeros(3, 3)
                for X, Y, Z in ((A, B, C), (B, C, A), (C, A, B)):
                    s += sympy.Matrix([[_sym(v) for v in r] for r in bracket(X, bracket(Y, Z))])
                assert s.applyfunc(sympy.simplify) == sympy.zeros(3, 3)


def test_sl3_equivariance_by_hand():
    # [H, E] = 2E inside the sl2 part, both in the domain and in the image
    T = sl3_table()
    assert domain_action("H", "E") == {"E": 2}
    assert bracket(T["H"], T["E"]) == image(T, {"E": 2})


def test_sl3_suite_and_control():
    rep = sl3_embedding_check()
    assert rep.all_passed
    assert len(rep.results) == 29
    bad = sl3_embedding_check(corrupted_sl3_table())
    assert bad.failures and all(f.witness for f in bad.failures)


def test_sosp():
    rep = sosp_check()
    assert rep.all_passed, rep.failures[:2]
