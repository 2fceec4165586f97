import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sympsing.quiver import (
    IMAGINARY,
    NOT_A_ROOT,
    REAL,
    FramedQuiver,
    a_norm,
    classify_root,
    expected_sigma,
    local_quiver,
    local_quiver_data,
    nakajima_partitions,
    norm4_families,
    norm4_families_strict,
    norm_sets,
    p_value,
    positive_roots_a,
    quiver_suite,
    representation_types,
    sigma_lambda,
    verify_leaves,
    verify_sigma,
)


def _reflect(Q, a, i):
    e = Q.simple("inf") if i == 0 else Q.simple(i - 1)
    c = Q.pair(a, e)
    return tuple(x - c * y for x, y in zip(a, e))


def _roots_by_orbits(Q, bound):
    """Positive roots <= bound: upward reflection closure of simples and of the fundamental set."""
    C = Q.form
    n = Q.size
    box = list(itertools.product(*(range(x + 1) for x in bound)))

    def connected(a):
        sup = [i for i, x in enumerate(a) if x]
        seen, stack = {sup[0]}, [sup[0]]
        while stack:
            i = stack.pop()
            for j in sup:
                if j not in seen and C[i][j] < 0:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == len(sup)

    fundamental = [a for a in box if any(a) and connected(a)
                   and all(sum(C[i][j] * a[j] for j in range(n)) <= 0 for i in range(n))]
    out = {}
    for seeds, kind in (([tuple(int(i == k) for i in range(n)) for k in range(n)], REAL), (fundamental, IMAGINARY)):
        frontier = list(seeds)
        seen = set(seeds)
        while frontier:
            nxt = []
            for a in frontier:
                for i in range(n):
                    b = _reflect(Q, a, i)
                    if sum(b) > sum(a) and all(x <= y for x, y in zip(b, bound)) and b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        for a in seen:
            out[a] = kind
    return out


@pytest.mark.parametrize("d", [4, 5, 6])
def test_classification_matches_weyl_orbits(d):
    Q = FramedQuiver(d)
    oracle = _roots_by_orbits(Q, Q.v())
    for a in itertools.product(*(range(x + 1) for x in Q.v())):
        if any(a):
            assert classify_root(Q, a) == oracle.get(a, NOT_A_ROOT), a


@given(st.integers(4, 7), st.data())
def test_form_is_reflection_invariant_and_even(d, data):
    Q = FramedQuiver(d)
    a = tuple(data.draw(st.lists(st.integers(-3, 3), min_size=Q.size, max_size=Q.size)))
    b = tuple(data.draw(st.lists(st.integers(-3, 3), min_size=Q.size, max_size=Q.size)))
    i = data.draw(st.integers(0, Q.size - 1))
    assert Q.norm(a) % 2 == 0
    assert Q.pair(_reflect(Q, a, i), _reflect(Q, b, i)) == Q.pair(a, b)
    assert Q.pair(a, b) == Q.pair(b, a)


@given(st.integers(4, 7), st.data())
def test_classification_is_reflection_invariant(d, data):
    Q = FramedQuiver(d)
    a = tuple(data.draw(st.lists(st.integers(0, 2), min_size=Q.size, max_size=Q.size)))
    if not any(a):
        return
    i = data.draw(st.integers(0, Q.size - 1))
    b = _reflect(Q, a, i)
    if all(x >= 0 for x in b) and any(b) and sum(1 for x in a if x) > 1:
        assert classify_root(Q, b) == classify_root(Q, a)


@pytest.mark.parametrize("n", range(3, 8))
def test_norm_two_is_the_positive_roots(n):
    brute = {a for a in itertools.product(range(3), repeat=n) if any(a) and a_norm(a) == 2}
    assert brute == positive_roots_a(n)
    assert len(brute) == n * (n + 1) // 2


@pytest.mark.parametrize("n", range(3, 8))
def test_norm_four_families_by_brute_force(n):
    brute = {a for a in itertools.product(range(3), repeat=n) if a_norm(a) == 4}
    nested, disjoint = norm4_families(n)
    assert brute == nested | disjoint


def test_strict_families_miss_vectors():
    nested, disjoint = norm4_families_strict(4)
    brute = {a for a in itertools.product(range(3), repeat=4) if a_norm(a) == 4}
    strict = nested | disjoint
    assert brute - strict  # e.g. 2*rho_2 + rho_1 + rho_3 is missed
    assert (1, 1, 1, 1) in strict and a_norm((1, 1, 1, 1)) == 2  # adjacent pair has norm 2


@pytest.mark.parametrize("d", range(4, 9))
def test_norm_sets_suite(d):
    assert norm_sets(d).all_passed


def _sigma_oracle(d):
    Q = FramedQuiver(d)
    lam = Q.lam()
    roots = sorted(a for a, _ in _roots_by_orbits(Q, Q.v()).items() if sum(x * y for x, y in zip(lam, a)) == 0)

    def decomps(g, start):
        if not any(g):
            yield []
            return
        for k in range(start, len(roots)):
            b = roots[k]
            if all(x <= y for x, y in zip(b, g)):
                rest = tuple(y - x for x, y in zip(b, g))
                for tail in decomps(rest, k):
                    yield [b] + tail

    out = []
    for b in roots:
        pb = p_value(Q, b)
        if all(pb > sum(p_value(Q, c) for c in dec) for dec in decomps(b, 0) if len(dec) > 1):
            out.append(b)
    return sorted(out)


@pytest.mark.parametrize("d", [4, 5, 6])
def test_sigma_against_exhaustive_decompositions(d):
    assert sigma_lambda(d) == _sigma_oracle(d)


@pytest.mark.parametrize("d", range(4, 9))
def test_sigma_and_leaves(d):
    assert sigma_lambda(d) == sorted(expected_sigma(d))
    assert len(sigma_lambda(d)) == d + 2
    assert verify_sigma(d).all_passed
    types = representation_types(d)
    assert sorted(t["dimension"] for t in types) == [0, 2, 4]
    assert verify_leaves(d).all_passed


def test_wrong_sigma_is_rejected():
    rep = verify_sigma(5, expected=expected_sigma(5)[1:])
    assert rep.failures and rep.failures[0].witness


@pytest.mark.parametrize("d", range(5, 11))
def test_local_quiver_dimension(d):
    assert local_quiver(d)["dimension"] == 4
    assert local_quiver_data(d).all_passed


def test_local_quiver_d4_frames_one_vertex_twice():
    L = local_quiver(4)
    assert L["w"] == [0, 2, 0]
    assert local_quiver_data(4).all_passed


@pytest.mark.parametrize("d", range(4, 9))
def test_nakajima_dictionary(d):
    L = local_quiver(d)
    lam, mu = nakajima_partitions(L["v"], L["w"])
    assert (tuple(lam), tuple(mu)) == ((d - 2, 2), (d,))


@pytest.mark.parametrize("d", range(4, 9))
def test_quiver_suite(d):
    assert quiver_suite(d).all_passed
