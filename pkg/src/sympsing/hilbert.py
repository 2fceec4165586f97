"""Graded dimensions of C[Y(d)] by rank computation, the closed Hilbert series,
and the zero-fiber algebra with its matrix model."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .dihedral import invariant_bundle
from .exactcore import (
    Budget,
    BudgetExceeded,
    PolyRing,
    exact_rank,
    quotient_dimension,
    sparse_rank,
)
from .exactcore.linalg import SparseEchelon
from .exactcore.scalars import normalize
from .report import SKIPPED, CheckResult, VerificationReport, check


def generator_weights(d: int) -> list[int]:
    return [2, 2, 2] + [d - 2] * (d + 1)


def monomials_of_degree(weights: list[int], n: int) -> list[tuple]:
    """All exponent vectors with sum w_i e_i == n."""
    out = []
    k = len(weights)

    def rec(i, left, acc):
        if i == k:
            if left == 0:
                out.append(tuple(acc))
            return
        w = weights[i]
        for a in range(left // w + 1):
            acc.append(a)
            rec(i + 1, left - a * w, acc)
            acc.pop()

    rec(0, n, [])
    return out


@lru_cache(maxsize=None)
def _generator_images(d: int):
    B = invariant_bundle(d)
    return [B.q, B.Q, B.e] + list(B.beta), B.delta


def _weight_key(exp) -> int:
    # diagonal torus weight of an x,y,X,Y monomial; images of generator
    # monomials are weight vectors, so rows split by this key
    x, y, X, Y = exp
    return x + y - X - Y


def graded_dimension(d: int, n: int, extra_clearing: int = 0, budget: Budget = Budget()) -> int:
    """dim of the degree-n piece of C[q, Q, e, b_0..b_d] inside the function field.

    Every generator monomial is multiplied by delta^(M - m) with M the largest
    b-degree in degree n (plus ``extra_clearing``), which is injective.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n % 2 and (d - 2) % 2 == 0:
        return 0
    weights = generator_weights(d)
    monos = monomials_of_degree(weights, n)
    if not monos:
        return 0
    if len(monos) > budget.max_staircase:
        raise BudgetExceeded("monomial count", budget.max_staircase)
    gens, delta = _generator_images(d)
    bdeg = [sum(m[3:]) for m in monos]
    M = max(bdeg) + extra_clearing
    dpow = [gens[0].ring.one()]
    for _ in range(M):
        dpow.append(dpow[-1] * delta)
    cache: dict = {tuple([0] * len(weights)): gens[0].ring.one()}

    def image(m):
        if m in cache:
            return cache[m]
        i = next(i for i, a in enumerate(m) if a)
        parent = m[:i] + (m[i] - 1,) + m[i + 1:]
        v = image(parent) * gens[i]
        cache[m] = v
        return v

    buckets: dict[int, SparseEchelon] = {}
    for m, bd in zip(monos, bdeg):
        p = image(m) * dpow[M - bd]
        if p.is_zero():
            continue
        key = _weight_key(next(iter(p.terms)))
        ech = buckets.setdefault(key, SparseEchelon())
        ech.add(dict(p.terms))
    return sum(e.rank for e in buckets.values())


def series_numerator(d: int) -> list[int]:
    num = [0] * (2 * d - 3)
    for k in range(0, 2 * d - 3, 2):
        num[k] += 1
    num[d - 2] += d - 1
    return num


def series_denominator(d: int) -> list[int]:
    def mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    one_t2 = [1, 0, -1]
    one_td = [1] + [0] * (d - 3) + [-1]
    return mul(mul(one_t2, one_t2), mul(one_td, one_td))


def series_coefficients(d: int, N: int) -> list[int]:
    """Power-series coefficients of numerator/denominator through t^N."""
    if N < 0:
        raise ValueError("N must be >= 0")
    num, den = series_numerator(d), series_denominator(d)
    c0 = Fraction(den[0])
    out: list = []
    for n in range(N + 1):
        s = Fraction(num[n] if n < len(num) else 0)
        for k in range(1, min(n, len(den) - 1) + 1):
            s -= den[k] * out[n - k]
        out.append(normalize(s / c0))
    return out


@dataclass
class GradedDimTable:
    d: int
    rows: list[tuple[int, int, int]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"d": self.d, "rows": [{"n": n, "computed": c, "series": s} for n, c, s in self.rows]}


def default_N(d: int) -> int:
    return max(2 * d, 12)


def verify_hilbert(d: int, N: int | None = None, series=None, budget: Budget = Budget()) -> VerificationReport:
    """graded_dimension(d, n) == series coefficient for n <= N.

    ``series`` overrides the coefficient list (negative control)."""
    N = default_N(d) if N is None else N
    if N < 2 * d:
        raise ValueError("N must be >= 2d")
    coeffs = series if series is not None else series_coefficients(d, N)
    table = GradedDimTable(d)
    rep = VerificationReport()
    first_bad = None
    for n in range(N + 1):
        try:
            c = graded_dimension(d, n, budget=budget)
        except BudgetExceeded as exc:
            rep.add(CheckResult("hilbert.degree", {"d": d, "n": n}, SKIPPED, details={"reason": str(exc)}))
            continue
        table.rows.append((n, c, coeffs[n]))
        ok = c == coeffs[n]
        if not ok and first_bad is None:
            first_bad = n
        rep.add(check("hilbert.degree", {"d": d, "n": n}, ok, witness={"computed": c, "series": coeffs[n]}))
    rep.add(check("hilbert.table", {"d": d, "N": N}, first_bad is None,
                  witness={"first_mismatch": first_bad}, table=table.to_json()))
    # numerator == denominator * series, truncated
    den, num = series_denominator(d), series_numerator(d)
    prod = [sum(den[k] * coeffs[n - k] for k in range(min(n, len(den) - 1) + 1)) for n in range(N + 1)]
    want = [num[n] if n < len(num) else 0 for n in range(N + 1)]
    rep.add(check("hilbert.series_identity", {"d": d, "N": N}, prod == want, witness=prod))
    return rep


# ---- zero-fiber algebra


def fiber_ring(d: int) -> PolyRing:
    return PolyRing(["e"] + [f"b{j}" for j in range(1, d)])


def fiber_relations(d: int) -> list:
    R = fiber_ring(d)
    e = R.var("e")
    b = [None] + [R.var(f"b{j}") for j in range(1, d)]
    rels = [e * b[j] for j in range(1, d)]
    for j in range(1, d):
        for k in range(j, d):
            rels.append(b[j] * b[k] + (e ** (d - 2) if j + k == d else 0))
    return rels


def _unit(n: int, k: int, l: int) -> list[list[int]]:
    m = [[0] * n for _ in range(n)]
    m[k - 1][l - 1] = 1
    return m


def _mmul(A, B):
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n) if A[i][k]) for j in range(n)] for i in range(n)]


def _madd(A, B, c=1):
    return [[a + c * b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def fiber_matrices(d: int):
    """E_bar = sum_{i=1}^{d-2} E_{i+1,i}, B_bar_j = E_{d-1+j,1} - E_{d-1,2d-j-1} (1-based)."""
    n = 2 * d - 2
    E = [[0] * n for _ in range(n)]
    for i in range(1, d - 1):
        E = _madd(E, _unit(n, i + 1, i))
    Bs = [_madd(_unit(n, d - 1 + j, 1), _unit(n, d - 1, 2 * d - j - 1), -1) for j in range(1, d)]
    return E, Bs


def verify_fiber_algebra(d: int, matrices=None) -> VerificationReport:
    if d < 4:
        raise ValueError("d must be >= 4")
    rep = VerificationReport()
    dim = quotient_dimension(fiber_relations(d))
    rep.add(check("fiber.quotient_dimension", {"d": d}, dim == 2 * d - 2, witness={"dimension": dim}))
    E, Bs = matrices if matrices is not None else fiber_matrices(d)
    n = len(E)
    zero = [[0] * n for _ in range(n)]
    powers = [[[int(i == j) for j in range(n)] for i in range(n)]]
    for _ in range(d - 1):
        powers.append(_mmul(powers[-1], E))
    top = powers[d - 2]
    bad = []
    for j, Bj in enumerate(Bs, 1):
        if _mmul(E, Bj) != zero or _mmul(Bj, E) != zero:
            bad.append(("e*b", j))
        for k, Bk in enumerate(Bs, 1):
            want = [[-v for v in r] for r in top] if j + k == d else zero
            if _mmul(Bj, Bk) != want:
                bad.append(("b*b", j, k))
    rep.add(check("fiber.matrix_relations", {"d": d}, not bad, witness=bad[:5]))
    rep.add(check("fiber.nilpotent", {"d": d}, powers[d - 1] == zero, witness="E_bar^(d-1) != 0"))
    family = powers[: d - 1] + Bs
    r = exact_rank([[v for row in M for v in row] for M in family])
    rep.add(check("fiber.independence", {"d": d}, r == 2 * d - 2, witness={"rank": r}))
    return rep


__all__ = [
    "graded_dimension", "series_coefficients", "series_numerator", "series_denominator", "verify_hilbert",
    "GradedDimTable", "fiber_relations", "fiber_matrices", "verify_fiber_algebra", "default_N",
    "monomials_of_degree", "generator_weights", "sparse_rank",
]
