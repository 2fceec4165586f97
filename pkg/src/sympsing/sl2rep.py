"""GL2 acting on x, y, X, Y (commuting with the dihedral group), the module
structure of the invariants, the sl2 + Sym^4 -> sl3 table, and the
orthosymplectic factorization."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .dihedral import XY_NAMES, invariant_bundle
from .exactcore import MultiPoly, PolyRing, Sqrt2Elt, exact_rank, poly_substitute
from .exactcore.linalg import solve_combination
from .exactcore.scalars import normalize
from .report import VerificationReport, check

DEFAULT_SEED = 20240917


@dataclass(frozen=True)
class GL2Element:
    a: object
    b: object
    c: object
    d: object

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    def __post_init__(self):
        det = self.det
        if isinstance(det, MultiPoly):
            if det.is_zero():
                raise ValueError("singular matrix")
        elif det == 0:
            raise ValueError("singular matrix")

    def __mul__(self, o: "GL2Element") -> "GL2Element":
        return GL2Element(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)


def act_gl2(g: GL2Element, p: MultiPoly) -> MultiPoly:
    """x -> ax + cY, y -> ay + cX, X -> by + dX, Y -> bx + dY.

    Entries may be rationals or polynomials of the target ring (which must
    contain x, y, X, Y).  act_gl2(g, act_gl2(h, p)) == act_gl2(g * h, p).
    """
    ring = p.ring
    for v in g.entries():
        if isinstance(v, MultiPoly):
            ring = v.ring
            break
    x, y, X, Y = (ring.var(n) for n in XY_NAMES)
    binding = {
        "x": x * g.a + Y * g.c,
        "y": y * g.a + X * g.c,
        "X": y * g.b + X * g.d,
        "Y": x * g.b + Y * g.d,
    }
    return poly_substitute(p, binding, ring)


# ---- torus weights


def _torus_ring() -> PolyRing:
    return PolyRing(XY_NAMES + ("t", "s"))


def _collapse_ts(p: MultiPoly) -> MultiPoly:
    """Reduce modulo t*s = 1."""
    it, is_ = p.ring.index("t"), p.ring.index("s")
    out: dict = {}
    for e, c in p.terms.items():
        e = list(e)
        m = min(e[it], e[is_])
        e[it] -= m
        e[is_] -= m
        k = tuple(e)
        out[k] = normalize(out.get(k, 0) + c)
    return MultiPoly(p.ring, {k: v for k, v in out.items() if v})


def torus_weight(p: MultiPoly, homothety: bool = False) -> int | None:
    """Weight of p under diag(xi, 1/xi) acting on functions (substitution by
    the inverse matrix), or under the homothety xi*I when ``homothety``.
    None if p is not a weight vector."""
    R = _torus_ring()
    t, s = R.var("t"), R.var("s")
    g = GL2Element(t, R.zero(), R.zero(), t) if homothety else GL2Element(s, R.zero(), R.zero(), t)
    img = _collapse_ts(act_gl2(g, p.to_ring(R)))
    weights = set()
    it, is_ = R.index("t"), R.index("s")
    for e in img.terms:
        weights.add(e[it] - e[is_])
    if len(weights) != 1:
        return None
    w = weights.pop()
    stripped = MultiPoly(R, {e[:it] + (0, 0): c for e, c in img.terms.items()})
    return w if stripped == p.to_ring(R) else None


# ---- span checks


def _vectors(polys: list[MultiPoly]):
    support = sorted({e for p in polys for e in p.terms})
    return support, [[p.terms.get(e, 0) for e in support] for p in polys]


def in_span_of(basis: list[MultiPoly], target: MultiPoly):
    """Coefficients expressing target through basis, or None."""
    support, vecs = _vectors(basis + [target])
    return solve_combination(vecs[:-1], vecs[-1])


def random_gl2(rng: random.Random, lo: int = -3, hi: int = 3) -> GL2Element:
    while True:
        a, b, c, d = (rng.randint(lo, hi) for _ in range(4))
        if a * d - b * c:
            return GL2Element(a, b, c, d)


def verify_module_structure(d: int, trials: int = 5, seed: int = DEFAULT_SEED,
                            extra: list[GL2Element] | None = None) -> VerificationReport:
    """Span stability of {q,Q,e}, {a_i}, {beta_j} and g(delta) = det(g) delta,
    for fixed sample matrices and ``trials`` seeded random ones."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    B = invariant_bundle(d)
    rng = random.Random(seed)
    mats = [GL2Element(1, 1, 0, 1), GL2Element(2, 1, 1, 1)] + list(extra or [])
    mats += [random_gl2(rng) for _ in range(trials)]
    spans = {"qQe": [B.q, B.Q, B.e], "a": list(B.a), "beta": list(B.beta)}
    rep = VerificationReport()
    for g in mats:
        params = {"d": d, "g": [g.a, g.b, g.c, g.d]}
        for name, basis in spans.items():
            bad = []
            for i, p in enumerate(basis):
                if in_span_of(basis, act_gl2(g, p)) is None:
                    bad.append(i)
            rep.add(check(f"sl2rep.span.{name}", params, not bad, witness=bad))
        r = act_gl2(g, B.delta) - B.delta * g.det
        rep.add(check("sl2rep.delta_det", params, r.is_zero(), witness=r))
    # torus weights
    wa = [torus_weight(p) for p in B.a]
    rep.add(check("sl2rep.torus.a", {"d": d}, wa == list(range(-d, d + 1, 2)), witness=wa))
    wb = [torus_weight(p) - torus_weight(B.delta) for p in B.beta]
    rep.add(check("sl2rep.torus.b", {"d": d}, wb == list(range(-d, d + 1, 2)), witness=wb,
                  note="b_j = beta_j / delta; delta has weight 0"))
    wq = [torus_weight(p) for p in (B.q, B.Q, B.e)]
    rep.add(check("sl2rep.torus.qQe", {"d": d}, wq == [-2, 2, 0], witness=wq))
    ha = {torus_weight(p, homothety=True) for p in B.a}
    hb = {torus_weight(p, homothety=True) - torus_weight(B.delta, homothety=True) for p in B.beta}
    ok = ha == {d} and hb == {d - 2}
    rep.add(check("sl2rep.homothety.b_is_a_minus_2", {"d": d}, ok, witness={"a": sorted(ha), "b": sorted(hb)}))
    return rep


# ---- sl3 table


Mat3 = tuple  # 3x3 tuple of tuples of Sqrt2Elt

DOMAIN = ("E", "H", "F", "e1^4", "e1^3e2", "e1^2e2^2", "e1e2^3", "e2^4")


def _m(rows) -> Mat3:
    return tuple(tuple(v if isinstance(v, Sqrt2Elt) else Sqrt2Elt(v) for v in r) for r in rows)


def sl3_table() -> dict[str, Mat3]:
    r2 = Sqrt2Elt(0, 1)
    h = Sqrt2Elt(0, Fraction(1, 2))
    z = 0
    return {
        "E": _m([[z, r2, z], [z, z, -r2], [z, z, z]]),
        "H": _m([[2, z, z], [z, z, z], [z, z, -2]]),
        "F": _m([[z, z, z], [r2, z, z], [z, -r2, z]]),
        "e1^4": _m([[z, z, 2], [z, z, z], [z, z, z]]),
        "e1^3e2": _m([[z, h, z], [z, z, h], [z, z, z]]),
        "e1^2e2^2": _m([[Fraction(-1, 3), z, z], [z, Fraction(2, 3), z], [z, z, Fraction(-1, 3)]]),
        "e1e2^3": _m([[z, z, z], [-h, z, z], [z, -h, z]]),
        "e2^4": _m([[z, z, z], [z, z, z], [2, z, z]]),
    }


def mat_mul(A: Mat3, B: Mat3) -> Mat3:
    n = len(A)
    return tuple(tuple(sum((A[i][k] * B[k][j] for k in range(n)), Sqrt2Elt(0)) for j in range(n)) for i in range(n))


def mat_add(A: Mat3, B: Mat3, cb=1) -> Mat3:
    return tuple(tuple(a + b * cb for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def bracket(A: Mat3, B: Mat3) -> Mat3:
    return mat_add(mat_mul(A, B), mat_mul(B, A), -1)


def mat_zero(A: Mat3) -> bool:
    return not any(v for r in A for v in r)


def trace(A: Mat3):
    return sum((A[i][i] for i in range(len(A))), Sqrt2Elt(0))


def _sym4_index(a: int) -> str:
    b = 4 - a
    parts = []
    if a:
        parts.append("e1" if a == 1 else f"e1^{a}")
    if b:
        parts.append("e2" if b == 1 else f"e2^{b}")
    return "".join(parts)


def domain_action(A: str, m: str) -> dict[str, int]:
    """A in {E, H, F} acting on a domain basis vector: ad on sl2, derivation on Sym^4."""
    if m in ("E", "H", "F"):
        table = {
            ("E", "E"): {}, ("E", "H"): {"E": -2}, ("E", "F"): {"H": 1},
            ("H", "E"): {"E": 2}, ("H", "H"): {}, ("H", "F"): {"F": -2},
            ("F", "E"): {"H": -1}, ("F", "H"): {"F": 2}, ("F", "F"): {},
        }
        return table[(A, m)]
    a = next(k for k in range(5) if _sym4_index(k) == m)
    b = 4 - a
    if A == "E":
        return {_sym4_index(a + 1): b} if b else {}
    if A == "F":
        return {_sym4_index(a - 1): a} if a else {}
    return {m: a - b} if a != b else {}


def image(table: dict[str, Mat3], combo: dict[str, int]) -> Mat3:
    out = _m([[0] * 3] * 3)
    for k, c in combo.items():
        out = mat_add(out, table[k], c)
    return out


def _mat_json(A: Mat3):
    return [[str(v) for v in r] for r in A]


def sl3_embedding_check(table: dict[str, Mat3] | None = None) -> VerificationReport:
    """Injectivity, infinitesimal equivariance (24 residuals) and the rank-one
    image.  Scope: Lie-algebra level only; determinant twists are invisible there."""
    table = table or sl3_table()
    rep = VerificationReport()
    rank = exact_rank([[v for r in table[k] for v in r] for k in DOMAIN])
    rep.add(check("sl3.injective", {}, rank == 8, witness={"rank": rank}))
    traces = {k: str(trace(M)) for k, M in table.items() if trace(M)}
    rep.add(check("sl3.traceless", {}, not traces, witness=traces))
    for A in ("E", "H", "F"):
        for m in DOMAIN:
            resid = mat_add(bracket(table[A], table[m]), image(table, domain_action(A, m)), -1)
            rep.add(check("sl3.equivariance", {"A": A, "m": m}, mat_zero(resid), witness=_mat_json(resid),
                          scope="infinitesimal"))
    M = image(table, {"H": 1, "e1^4": 1, "e2^4": -1})
    expected = _m([[2, 0, 2], [0, 0, 0], [-2, 0, -2]])
    rep.add(check("sl3.rank_one_image", {}, M == expected, witness=_mat_json(M)))
    r = exact_rank([list(row) for row in M])
    rep.add(check("sl3.rank_one_image.rank", {}, r == 1, witness={"rank": r}))
    rep.add(check("sl3.rank_one_image.trace", {}, not trace(M), witness=str(trace(M))))
    return rep


def corrupted_sl3_table() -> dict[str, Mat3]:
    """The table with one sign flipped (negative control)."""
    t = dict(sl3_table())
    h = Sqrt2Elt(0, Fraction(1, 2))
    t["e1^3e2"] = _m([[0, h, 0], [0, 0, -h], [0, 0, 0]])
    return t


# ---- orthosymplectic example


def _mat2_mul(A, B):
    return [[A[i][0] * B[0][j] + A[i][1] * B[1][j] for j in range(2)] for i in range(2)]


def _det2(A):
    return A[0][0] * A[1][1] - A[0][1] * A[1][0]


def sosp_check(fstar=None) -> VerificationReport:
    """f = (x, Y; y, X), f* = (X, Y; -y, -x): f*f has the sl2 shape carrying
    (e, q, Q), ff* = diag(delta, -delta), and the determinants agree."""
    R = PolyRing(XY_NAMES)
    x, y, X, Y = R.gens()
    f = [[x, Y], [y, X]]
    fs = fstar(R) if fstar else [[X, Y], [-y, -x]]
    rep = VerificationReport()
    ff = _mat2_mul(fs, f)
    want = [[x * X + y * Y, X * Y * 2], [-(x * y * 2), -(x * X) - y * Y]]
    for i in range(2):
        for j in range(2):
            r = ff[i][j] - want[i][j]
            rep.add(check("sosp.fstar_f", {"entry": [i, j]}, r.is_zero(), witness=r))
    f2 = _mat2_mul(f, fs)
    delta = x * X - y * Y
    want2 = [[delta, R.zero()], [R.zero(), -delta]]
    for i in range(2):
        for j in range(2):
            r = f2[i][j] - want2[i][j]
            rep.add(check("sosp.f_fstar", {"entry": [i, j]}, r.is_zero(), witness=r))
    r = _det2(ff) - _det2(f2)
    rep.add(check("sosp.det", {}, r.is_zero(), witness=r))
    r = _det2(f2) + delta * delta
    rep.add(check("sosp.det_value", {}, r.is_zero(), witness=r))
    e, q, Q = x * X + y * Y, x * y, X * Y
    r = delta * delta - (e * e - q * Q * 4)
    rep.add(check("sosp.delta_squared", {}, r.is_zero(), witness=r))
    return rep


__all__ = [
    "GL2Element", "act_gl2", "torus_weight", "verify_module_structure", "random_gl2", "in_span_of",
    "sl3_table", "sl3_embedding_check", "corrupted_sl3_table", "sosp_check", "bracket", "image",
    "domain_action", "DOMAIN", "DEFAULT_SEED",
]
