"""Root combinatorics for the framed cyclic quiver: Kac classification,
norm-2 and norm-4 vectors in type A, Sigma_lambda(v), representation types,
and the local quiver at the most singular leaf."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .report import VerificationReport, check

REAL, IMAGINARY, NOT_A_ROOT = "real", "imaginary", "not-a-root"


@dataclass(frozen=True)
class FramedQuiver:
    """Vertices inf, 0, ..., d-1 (vector index 0 is inf, index i+1 is rho_i)."""

    d: int

    @property
    def labels(self) -> list[str]:
        return ["inf"] + [str(i) for i in range(self.d)]

    @property
    def size(self) -> int:
        return self.d + 1

    def arrows(self) -> list[tuple[int, int]]:
        out = [(0, 1)]
        for i in range(self.d):
            out.append((i + 1, (i + 1) % self.d + 1))
        return out

    @property
    def form(self) -> tuple[tuple[int, ...], ...]:
        return _form(self.d)

    def pair(self, a, b) -> int:
        C = self.form
        return sum(a[i] * C[i][j] * b[j] for i in range(self.size) if a[i] for j in range(self.size) if b[j])

    def norm(self, a) -> int:
        return self.pair(a, a)

    def simple(self, i) -> tuple[int, ...]:
        """i is 'inf' or 0..d-1."""
        k = 0 if i == "inf" else i + 1
        return tuple(int(j == k) for j in range(self.size))

    def delta_imag(self) -> tuple[int, ...]:
        return (0,) + (1,) * self.d

    def v(self) -> tuple[int, ...]:
        return add(self.simple("inf"), scale(self.delta_imag(), 2))

    def lam(self) -> tuple[int, ...]:
        return (-2, 1) + (0,) * (self.d - 1)


@lru_cache(maxsize=None)
def _form(d: int):
    n = d + 1
    C = [[0] * n for _ in range(n)]
    for i in range(n):
        C[i][i] = 2
    for a, b in FramedQuiver(d).arrows():
        C[a][b] -= 1
        C[b][a] -= 1
    return tuple(tuple(r) for r in C)


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def scale(a, k):
    return tuple(k * x for x in a)


def leq(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def p_value(Q: FramedQuiver, a) -> Fraction | int:
    r = 1 - Fraction(Q.norm(a), 2)
    return int(r) if r.denominator == 1 else r


def _support_connected(C, a) -> bool:
    sup = [i for i, x in enumerate(a) if x]
    if not sup:
        return False
    seen = {sup[0]}
    stack = [sup[0]]
    while stack:
        i = stack.pop()
        for j in sup:
            if j not in seen and C[i][j] < 0:
                seen.add(j)
                stack.append(j)
    return len(seen) == len(sup)


def classify_root_form(C, a) -> str:
    """Kac: reflect down while some (a, e_i) > 0; a simple root at the end is
    real, a vector in the fundamental set is imaginary."""
    a = list(a)
    if any(x < 0 for x in a) or not any(a):
        raise ValueError("need a nonzero nonnegative vector")
    n = len(a)
    while True:
        if sum(a) == 1:
            return REAL
        for i in range(n):
            c = sum(C[i][j] * a[j] for j in range(n))
            if c > 0:
                a[i] -= c
                if a[i] < 0:
                    return NOT_A_ROOT
                break
        else:
            return IMAGINARY if _support_connected(C, a) else NOT_A_ROOT


def classify_root(Q: FramedQuiver, a) -> str:
    return classify_root_form(Q.form, a)


# ---- type A_{d-1} sublattice


def type_a_form(n: int):
    """Cartan matrix of A_n."""
    return tuple(tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)) for i in range(n))


def a_norm(a) -> int:
    n = len(a)
    return 2 * sum(x * x for x in a) - 2 * sum(a[i] * a[i + 1] for i in range(n - 1))


def alpha(n: int, i: int, j: int) -> tuple[int, ...]:
    """alpha_{i,j} = rho_i + ... + rho_j (1-based, i <= j) in A_n."""
    return tuple(int(i <= k + 1 <= j) for k in range(n))


def positive_roots_a(n: int) -> set:
    return {alpha(n, i, j) for i in range(1, n + 1) for j in range(i, n + 1)}


def norm4_families(n: int) -> tuple[set, set]:
    """Nested pairs alpha_{i,j} + alpha_{k,l} with i < k <= l < j, and pairs with
    a gap, j + 1 < k; single simple roots are allowed as either member."""
    nested, disjoint = set(), set()
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            for k in range(1, n + 1):
                for l in range(k, n + 1):
                    if i < k and l < j:
                        nested.add(add(alpha(n, i, j), alpha(n, k, l)))
                    if j + 1 < k:
                        disjoint.add(add(alpha(n, i, j), alpha(n, k, l)))
    return nested, disjoint


def norm4_families_strict(n: int) -> tuple[set, set]:
    """The families with every inequality strict (i < k < l < j and i < j < k < l)."""
    nested, disjoint = set(), set()
    for i, j, k, l in product(range(1, n + 1), repeat=4):
        if i < k < l < j:
            nested.add(add(alpha(n, i, j), alpha(n, k, l)))
        if i < j < k < l:
            disjoint.add(add(alpha(n, i, j), alpha(n, k, l)))
    return nested, disjoint


def _fmt(vs) -> list:
    return sorted(list(v) for v in vs)


def norm_sets(d: int) -> VerificationReport:
    """Brute force over the box [0, 2]^(d-1) of Q^+ (every vector below 2 alpha_h;
    type-A roots have coefficients <= 1, so the norm-2 search is complete)."""
    if d < 4:
        raise ValueError("d must be >= 4")
    n = d - 1
    C = type_a_form(n)
    box = [v for v in product(range(3), repeat=n) if any(v)]
    norm2 = {v for v in box if a_norm(v) == 2}
    norm4 = {v for v in box if a_norm(v) == 4}
    roots = positive_roots_a(n)
    rep = VerificationReport()
    diff = norm2 ^ roots
    rep.add(check("quiver.norm2", {"d": d}, not diff, witness=_fmt(diff), size=len(norm2)))
    nested, disjoint = norm4_families(n)
    fam = nested | disjoint
    diff = norm4 ^ fam
    rep.add(check("quiver.norm4", {"d": d}, not diff, witness=_fmt(diff), size=len(norm4),
                  nested=len(nested), disjoint=len(disjoint)))
    # classify_root agrees with the norm on the finite sublattice
    bad = [v for v in box if (classify_root_form(C, v) == REAL) != (v in roots)]
    rep.add(check("quiver.kac_vs_norm", {"d": d}, not bad, witness=_fmt(bad[:5])))
    top = [v for v in fam if not any(w != v and leq(v, w) for w in fam)]
    want = add(alpha(n, 1, n), alpha(n, 2, n - 1))
    rep.add(check("quiver.norm4_maximal", {"d": d}, top == [want], witness=_fmt(top)))
    return rep


# ---- Sigma_lambda(v)


def _box(v):
    return product(*(range(x + 1) for x in v))


@lru_cache(maxsize=None)
def lambda_roots(d: int) -> tuple:
    """Positive roots beta <= v with lambda . beta = 0."""
    Q = FramedQuiver(d)
    lam = Q.lam()
    out = []
    for b in _box(Q.v()):
        if any(b) and dot(lam, b) == 0 and classify_root(Q, b) != NOT_A_ROOT:
            out.append(b)
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _p_table(d: int) -> dict:
    Q = FramedQuiver(d)
    return {b: p_value(Q, b) for b in lambda_roots(d)}


@lru_cache(maxsize=None)
def _best(d: int, g: tuple):
    """max sum p over decompositions of g into lambda-roots (the order of the
    parts does not affect the sum), with one optimal decomposition; None if g
    has no decomposition."""
    if not any(g):
        return 0, ()
    pv = _p_table(d)
    best = None
    for b in lambda_roots(d):
        if leq(b, g):
            r = _best(d, sub(g, b))
            if r is not None and (best is None or pv[b] + r[0] > best[0]):
                best = (pv[b] + r[0], tuple(sorted((b,) + r[1])))
    return best


def best_decomposition(d: int, target, proper: bool):
    """Best decomposition of target; ``proper`` excludes the one-part one."""
    target = tuple(target)
    if not proper:
        return _best(d, target)
    pv = _p_table(d)
    best = None
    for b in lambda_roots(d):
        if b != target and leq(b, target):
            r = _best(d, sub(target, b))
            if r is not None and (best is None or pv[b] + r[0] > best[0]):
                best = (pv[b] + r[0], tuple(sorted((b,) + r[1])))
    return best


def sigma_lambda(d: int) -> list:
    Q = FramedQuiver(d)
    out = []
    for a in lambda_roots(d):
        best = best_decomposition(d, a, proper=True)
        if best is None or p_value(Q, a) > best[0]:
            out.append(a)
    return sorted(out)


def expected_sigma(d: int) -> list:
    Q = FramedQuiver(d)
    inf, r0 = Q.simple("inf"), Q.simple(0)
    base = add(inf, scale(r0, 2))
    a_h = tuple([0, 0] + [1] * (d - 1))
    rho = [Q.simple(i) for i in range(1, d)]
    return sorted([Q.v(), add(base, a_h), add(add(base, rho[0]), rho[-1])] + rho)


def verify_sigma(d: int, expected=None) -> VerificationReport:
    got = sigma_lambda(d)
    want = sorted(expected if expected is not None else expected_sigma(d))
    rep = VerificationReport()
    diff = set(got) ^ set(want)
    wit = []
    for a in sorted(diff):
        wit.append({"vector": list(a), "in_computed": a in got,
                    "best_proper": best_decomposition(d, a, proper=True)})
    rep.add(check("quiver.sigma", {"d": d}, not diff, witness=wit, size=len(got)))
    rep.add(check("quiver.sigma.size", {"d": d}, len(got) == d + 2, witness={"size": len(got)}))
    return rep


# ---- representation types


def _partitions(n: int, maxpart: int | None = None):
    maxpart = n if maxpart is None else maxpart
    if n == 0:
        yield ()
        return
    for k in range(min(n, maxpart), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def representation_types(d: int, sigma=None) -> list[dict]:
    """Every way to write v = sum n_i beta_i with beta_i in Sigma; a real root
    is one list entry (any n), an imaginary root may split into several
    entries.  Leaf dimension is sum over entries of 2 p(beta_i)."""
    Q = FramedQuiver(d)
    sig = sorted(sigma if sigma is not None else sigma_lambda(d))
    v = Q.v()
    out = []

    def rec(idx, left, counts):
        if not any(left):
            out.append(dict(counts))
            return
        if idx == len(sig):
            return
        b = sig[idx]
        k = 0
        cur = left
        while True:
            if k:
                counts[b] = k
            rec(idx + 1, cur, counts)
            counts.pop(b, None)
            if not leq(b, cur):
                break
            cur = sub(cur, b)
            k += 1

    rec(0, v, {})
    types = []
    for counts in out:
        splits = [[(b, (n,))] if classify_root(Q, b) == REAL else [(b, part) for part in _partitions(n)]
                  for b, n in sorted(counts.items())]
        for choice in product(*splits):
            entries = [(b, m) for b, part in choice for m in part]
            dim = sum(2 * p_value(Q, b) for b, _ in entries)
            types.append({"entries": [(list(b), m) for b, m in entries], "dimension": dim})
    types.sort(key=lambda t: (t["dimension"], t["entries"]))
    return types


def expected_types(d: int) -> list[list]:
    Q = FramedQuiver(d)
    inf, r0 = Q.simple("inf"), Q.simple(0)
    base = add(inf, scale(r0, 2))
    a_h = tuple([0, 0] + [1] * (d - 1))
    rho = [Q.simple(i) for i in range(1, d)]
    m_inf = add(add(base, rho[0]), rho[-1])
    tau0 = [(m_inf, 1), (rho[0], 1)] + [(r, 2) for r in rho[1:-1]] + [(rho[-1], 1)]
    tau2 = [(add(base, a_h), 1)] + [(r, 1) for r in rho]
    tau4 = [(Q.v(), 1)]
    return [sorted((list(b), m) for b, m in t) for t in (tau0, tau2, tau4)]


def verify_leaves(d: int, sigma=None) -> VerificationReport:
    types = representation_types(d, sigma)
    rep = VerificationReport()
    got = [sorted(t["entries"]) for t in types]
    want = expected_types(d)
    rep.add(check("quiver.types.count", {"d": d}, len(types) == 3, witness={"count": len(types)}))
    rep.add(check("quiver.types.match", {"d": d}, sorted(got) == sorted(want), witness=got))
    dims = [t["dimension"] for t in types]
    rep.add(check("quiver.types.dimensions", {"d": d}, dims == [0, 2, 4], witness=dims,
                  convention="sum over entries of 2p, not weighted by multiplicity"))
    bad = []
    Q = FramedQuiver(d)
    for t in types:
        total = (0,) * Q.size
        for b, m in t["entries"]:
            total = add(total, scale(tuple(b), m))
        if total != Q.v():
            bad.append(t)
    rep.add(check("quiver.types.sum_to_v", {"d": d}, not bad, witness=bad[:1]))
    return rep


# ---- local quiver at tau_0


def transpose_partition(parts) -> tuple[int, ...]:
    parts = [p for p in parts if p > 0]
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > k) for k in range(max(parts)))


def dominates(mu, lam) -> bool:
    """lam <= mu in dominance order (both partitions of the same n)."""
    if sum(mu) != sum(lam):
        return False
    a = b = 0
    for k in range(max(len(mu), len(lam))):
        a += mu[k] if k < len(mu) else 0
        b += lam[k] if k < len(lam) else 0
        if b > a:
            return False
    return True


def nakajima_partitions(v, w) -> tuple[tuple, tuple] | None:
    """For A_{n-1} data (v, w), n = len(v) + 1: lambda is the transpose of the
    weight sum w_i varpi_i and mu the transpose of that weight minus sum v_i alpha_i,
    both read in Z^n.  None if the shifted weight is not a partition."""
    n = len(v) + 1
    wt = [0] * n
    for i, wi in enumerate(w, 1):
        for k in range(i):
            wt[k] += wi
    nu = list(wt)
    for i, vi in enumerate(v, 1):
        nu[i - 1] -= vi
        nu[i] += vi
    if any(x < 0 for x in nu) or any(nu[k] < nu[k + 1] for k in range(n - 1)):
        return None
    return transpose_partition(wt), transpose_partition(nu)


def local_quiver(d: int) -> dict:
    Q = FramedQuiver(d)
    inf, r0 = Q.simple("inf"), Q.simple(0)
    rho = [Q.simple(i) for i in range(1, d)]
    m_inf = add(add(add(inf, scale(r0, 2)), rho[0]), rho[-1])
    w = [-Q.pair(m_inf, r) for r in rho]
    arrows = [[-Q.pair(a, b) if i != j else 0 for j, b in enumerate(rho)] for i, a in enumerate(rho)]
    loops = [p_value(Q, r) for r in rho] + [p_value(Q, m_inf)]
    v = [1] + [2] * (d - 3) + [1]
    C = type_a_form(d - 1)
    vv = sum(v[i] * C[i][j] * v[j] for i in range(d - 1) for j in range(d - 1))
    dim = 2 * sum(a * b for a, b in zip(v, w)) - vv
    return {"d": d, "w": w, "v": v, "arrows": arrows, "loops": loops, "dimension": dim,
            "m_inf": list(m_inf)}


def local_quiver_data(d: int) -> VerificationReport:
    """Framing and dimension data at the zero-dimensional leaf.  For d = 4 the two
    framed vertices coincide; the data are reported and only the d-independent
    statements are asserted."""
    if d < 4:
        raise ValueError("d must be >= 4")
    L = local_quiver(d)
    rep = VerificationReport()
    n = d - 1
    C = type_a_form(n)
    graph_ok = all(L["arrows"][i][j] == (-C[i][j] if i != j else 0) for i in range(n) for j in range(n))
    rep.add(check("quiver.local.type_A", {"d": d}, graph_ok, witness=L["arrows"]))
    rep.add(check("quiver.local.no_loops", {"d": d}, all(x == 0 for x in L["loops"]), witness=L["loops"]))
    if d >= 5:
        want_w = [int(i in (2, d - 2)) for i in range(1, d)]
        rep.add(check("quiver.local.framing", {"d": d}, L["w"] == want_w, witness=L["w"]))
    else:
        rep.add(check("quiver.local.framing_d4", {"d": d}, L["w"] == [0, 2, 0], witness=L["w"],
                      note="w_2 and w_(d-2) coincide"))
    rep.add(check("quiver.local.dimension", {"d": d}, L["dimension"] == 4, witness={"dimension": L["dimension"]}))
    parts = nakajima_partitions(L["v"], L["w"])
    ok = parts is not None and parts[0] == (d - 2, 2) and parts[1] == (d,) and dominates(parts[1], parts[0])
    rep.add(check("quiver.local.partitions", {"d": d}, ok, witness=parts))
    return rep


def quiver_suite(d: int) -> VerificationReport:
    rep = VerificationReport()
    rep.extend(norm_sets(d))
    rep.extend(verify_sigma(d))
    rep.extend(verify_leaves(d))
    rep.extend(local_quiver_data(d))
    return rep


__all__ = [
    "FramedQuiver", "p_value", "classify_root", "classify_root_form", "norm_sets", "norm4_families",
    "norm4_families_strict", "sigma_lambda", "verify_sigma", "representation_types", "verify_leaves",
    "local_quiver", "local_quiver_data", "nakajima_partitions", "quiver_suite", "expected_sigma",
    "REAL", "IMAGINARY", "NOT_A_ROOT", "a_norm", "type_a_form", "positive_roots_a", "alpha",
]
