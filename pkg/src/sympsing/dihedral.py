"""The dihedral group W_d acting on V x V*, its invariants and semi-invariants,
and the three-variable family Psi_k.

Coordinates on V x V* are x, y (on V*) and X, Y (on V), all of degree 1.
A matrix w acts on x, y through w itself and on X, Y through the
contragredient, so that x*X + y*Y pairs invariantly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exactcore import (
    MultiPoly,
    PolyRing,
    cyclotomic_field,
    poly_substitute,
)
from .report import VerificationReport, check

XY_NAMES = ("x", "y", "X", "Y")


@dataclass(frozen=True)
class GroupElement:
    """A 2x2 matrix (a, b; c, d) over Q(zeta_d), with a name for reports."""

    entries: tuple
    name: str = ""

    @property
    def det(self):
        a, b, c, d = self.entries
        return a * d - b * c

    @property
    def is_reflection(self) -> bool:
        return self.det == -1

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        name = f"{self.name}*{other.name}" if self.name and other.name else ""
        return GroupElement((a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h), name)

    def inverse(self) -> "GroupElement":
        a, b, c, d = self.entries
        det = self.det
        return GroupElement((d / det, -b / det, -c / det, a / det), f"{self.name}^-1" if self.name else "")

    def same_matrix(self, other: "GroupElement") -> bool:
        return self.entries == other.entries

    def key(self):
        return tuple(e.coeffs for e in self.entries)

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.entries == other.entries

    def __hash__(self):
        return hash(self.key())


def s_matrix(d: int, j: int) -> GroupElement:
    """s_j = (0, zeta^j; zeta^-j, 0)."""
    K = cyclotomic_field(d)
    return GroupElement((K(0), K.zeta(j), K.zeta(-j), K(0)), f"s{j % d}")


def identity(d: int) -> GroupElement:
    K = cyclotomic_field(d)
    return GroupElement((K(1), K(0), K(0), K(1)), "1")


def generators(d: int) -> list[GroupElement]:
    """s = s_0 and t = s_1."""
    return [s_matrix(d, 0), s_matrix(d, 1)]


def build_group(d: int) -> list[GroupElement]:
    """All 2d elements of W_d, by closing {s, t} under multiplication."""
    if d < 3:
        raise ValueError("dihedral group needs d >= 3")
    gens = generators(d)
    elems = {identity(d)}
    frontier = [identity(d)]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                p = g * h
                if p not in elems:
                    elems.add(p)
                    nxt.append(p)
        frontier = nxt
    # name and order deterministically: rotations (ts)^k then reflections s_j
    ts = gens[1] * gens[0]
    named = []
    r = identity(d)
    for k in range(d):
        named.append(GroupElement(r.entries, f"(ts)^{k}"))
        r = r * ts
    named += [GroupElement(s_matrix(d, j).entries, f"s{j}") for j in range(d)]
    if set(named) != elems or len(elems) != 2 * d:
        raise AssertionError(f"closure of <s,t> has {len(elems)} elements, expected {2 * d}")
    return named


def xy_ring(d: int | None = None) -> PolyRing:
    """Q[x,y,X,Y], or Q(zeta_d)[x,y,X,Y] when d is given."""
    if d is None:
        return PolyRing(XY_NAMES)
    return PolyRing(XY_NAMES, field=cyclotomic_field(d))


def act(w: GroupElement, p: MultiPoly) -> MultiPoly:
    """Apply w to p: x_j -> sum_k w_kj x_k and X_j -> sum_k (w^-1)_jk X_k."""
    ring = p.ring
    if ring.field != w.entries[0].field:
        ring = ring.with_field(w.entries[0].field)
        p = p.to_ring(ring)
    x, y, X, Y = (ring.var(n) for n in XY_NAMES)
    a, b, c, d = w.entries
    ia, ib, ic, id_ = w.inverse().entries
    binding = {
        "x": x * a + y * c,
        "y": x * b + y * d,
        "X": X * ia + Y * ib,
        "Y": X * ic + Y * id_,
    }
    return poly_substitute(p, binding)


@dataclass(frozen=True)
class InvariantBundle:
    d: int
    ring: PolyRing
    q: MultiPoly
    Q: MultiPoly
    e: MultiPoly
    delta: MultiPoly
    a: tuple
    beta: tuple

    def invariants(self) -> dict[str, MultiPoly]:
        out = {"q": self.q, "Q": self.Q, "e": self.e}
        out.update({f"a{i}": ai for i, ai in enumerate(self.a)})
        return out

    def semi_invariants(self) -> dict[str, MultiPoly]:
        out = {"delta": self.delta}
        out.update({f"beta{i}": bi for i, bi in enumerate(self.beta)})
        return out


@lru_cache(maxsize=None)
def invariant_bundle(d: int, cyclotomic: bool = False) -> InvariantBundle:
    """q, Q, e, a_i and delta, beta_j as polynomials in x, y, X, Y.

    All coefficients are rational; ``cyclotomic`` only chooses the ring.
    """
    ring = xy_ring(d if cyclotomic else None)
    x, y, X, Y = (ring.var(n) for n in XY_NAMES)
    a = tuple(x ** (d - i) * Y ** i + y ** (d - i) * X ** i for i in range(d + 1))
    beta = tuple(x ** (d - j) * Y ** j - y ** (d - j) * X ** j for j in range(d + 1))
    return InvariantBundle(d, ring, x * y, X * Y, x * X + y * Y, x * X - y * Y, a, beta)


def invariant_binding(d: int, cyclotomic: bool = False) -> dict[str, MultiPoly]:
    """Substitution q, Q, e, a_i -> their x, y, X, Y expressions."""
    return invariant_bundle(d, cyclotomic).invariants()


# ---- Psi


PSI_RING = PolyRing(("q", "Q", "e"))


@lru_cache(maxsize=None)
def _psi_table(n: int) -> tuple:
    q, Q, e = PSI_RING.gens()
    qQ = q * Q
    table = [PSI_RING.one(), e]
    for _ in range(2, n + 1):
        table.append(e * table[-1] - qQ * table[-2])
    return tuple(table[: n + 1])


def psi(k: int, ring: PolyRing | None = None) -> MultiPoly:
    """Psi_k(q, Q, e); mapped by name into ``ring`` when given."""
    if k < 0:
        raise ValueError("Psi_k needs k >= 0")
    p = _psi_table(max(k, 1))[k]
    return p if ring is None else p.to_ring(ring)


def psi_closed_form(k: int) -> MultiPoly:
    """Sum_i (-1)^i C(k-i, i) e^(k-2i) (qQ)^i, independent of the recurrence."""
    from math import comb

    q, Q, e = PSI_RING.gens()
    out = PSI_RING.zero()
    for i in range(k // 2 + 1):
        out = out + (e ** (k - 2 * i) * (q * Q) ** i).scale((-1) ** i * comb(k - i, i))
    return out


def verify_psi(N: int = 50, corrupt: int | None = None) -> VerificationReport:
    """``corrupt`` = k perturbs Psi_k by e^k before checking (negative control)."""
    rep = VerificationReport()
    q, Q, e = PSI_RING.gens()
    params = {"N": N}
    table = list(_psi_table(max(N, 1)))
    if corrupt is not None:
        table[corrupt] = table[corrupt] + e ** corrupt

    bad = [k for k in range(2, N + 1) if table[k] != e * table[k - 1] - q * Q * table[k - 2]]
    rep.add(check("psi.recurrence", params, not bad, witness={"k": bad[:1]}))
    bad = [k for k in range(N + 1) if table[k] != psi_closed_form(k)]
    rep.add(check("psi.closed_form", params, not bad, witness={"k": bad[:1]}))
    bad = [k for k in range(N + 1) if not (table[k].is_homogeneous() and table[k].degree() == k)]
    rep.add(check("psi.homogeneous_degree_k", params, not bad, witness={"k": bad[:1]}))

    spec_bad = []
    for k in range(N + 1):
        pk = table[k]
        ek = e ** k
        if pk.subs(Q=0) != ek:
            spec_bad.append(("Q=0", k, pk.subs(Q=0) - ek))
        if pk.subs(q=0) != ek:
            spec_bad.append(("q=0", k, pk.subs(q=0) - ek))
        want = PSI_RING.zero() if k % 2 else (-(q * Q)) ** (k // 2)
        if pk.subs(e=0) != want:
            spec_bad.append(("e=0", k, pk.subs(e=0) - want))
    rep.add(check("psi.specializations", params, not spec_bad,
                  witness=[(s, k, r) for s, k, r in spec_bad[:1]]))

    # generating series: (sum Psi_k t^k)(1 - e t + qQ t^2) == 1 mod t^(N+1)
    gring = PolyRing(("q", "Q", "e", "t"), (1, 1, 1, 1))
    t = gring.var("t")
    # t-degree truncation: weight 0 on q,Q,e is not allowed, so truncate by t exponent
    series = gring.zero()
    for k in range(N + 1):
        series = series + table[k].to_ring(gring) * t ** k
    prod = series * (gring.one() - gring.var("e") * t + gring.var("q") * gring.var("Q") * t ** 2)
    ti = gring.index("t")
    low = MultiPoly(gring, {ex: c for ex, c in prod.terms.items() if ex[ti] <= N})
    rep.add(check("psi.generating_series", params, low == gring.one(), witness=low - gring.one()))
    return rep


# ---- invariance


def verify_invariance(d: int, bundle: InvariantBundle | None = None, full_group: bool = False) -> VerificationReport:
    """w(f) = f for the invariants and w(g) = det(w) g for the semi-invariants,
    for every generator (or every group element with ``full_group``)."""
    rep = VerificationReport()
    bundle = bundle or invariant_bundle(d, cyclotomic=True)
    elems = build_group(d) if full_group else generators(d)
    ring = xy_ring(d)
    inv = {k: v.to_ring(ring) for k, v in bundle.invariants().items()}
    sem = {k: v.to_ring(ring) for k, v in bundle.semi_invariants().items()}
    for w in elems:
        for name, f in inv.items():
            r = act(w, f) - f
            rep.add(check("dihedral.invariant", {"d": d, "w": w.name, "f": name}, r.is_zero(), witness=r))
        for name, g in sem.items():
            r = act(w, g) - g * w.det
            rep.add(check("dihedral.semi_invariant", {"d": d, "w": w.name, "f": name}, r.is_zero(), witness=r))
    # products of two semi-invariants are invariant
    names = list(sem)
    bad = []
    for i, n1 in enumerate(names):
        for n2 in names[i:]:
            prod = sem[n1] * sem[n2]
            for w in elems:
                r = act(w, prod) - prod
                if not r.is_zero():
                    bad.append({"w": w.name, "pair": [n1, n2], "residual": r})
    rep.add(check("dihedral.semi_products_invariant", {"d": d}, not bad, witness=bad[:1]))
    # delta^2 = e^2 - 4qQ
    D = bundle.e ** 2 - bundle.q * bundle.Q * 4
    r = bundle.delta ** 2 - D
    rep.add(check("dihedral.delta_squared", {"d": d}, r.is_zero(), witness=r))
    return rep


def verify_group(d: int) -> VerificationReport:
    rep = VerificationReport()
    G = build_group(d)
    refl = [g for g in G if g.is_reflection]
    rep.add(check("dihedral.group_order", {"d": d}, len(G) == 2 * d and len(refl) == d,
                  witness={"order": len(G), "reflections": len(refl)}))
    K = cyclotomic_field(d)
    s, t = generators(d)
    ts = t * s
    rep.add(check("dihedral.ts_diagonal", {"d": d},
                  ts.entries == (K.zeta(1), K(0), K(0), K.zeta(-1)), witness=[str(c) for c in ts.entries]))
    bad = [g.name for g in refl if not (g * g).same_matrix(identity(d))]
    rep.add(check("dihedral.reflections_involutive", {"d": d}, not bad, witness=bad))
    z = K.zeta()
    ok_cyc = z ** d == 1 and all(z ** k != 1 for k in range(1, d))
    total = K(0)
    for k in range(d):
        total = total + z ** k
    rep.add(check("dihedral.root_of_unity", {"d": d}, ok_cyc and total == 0,
                  witness={"zeta^d": str(z ** d), "sum": str(total)}))
    return rep
