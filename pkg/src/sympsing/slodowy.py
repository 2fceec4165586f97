"""The sl2-triple of Jordan type (d-2, 2), its Slodowy slice, and the
nilpotent-cone equations restricted to the slice."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .exactcore import MultiPoly, PolyRing, derivative, evaluate, exact_rank, nullspace
from .report import SKIPPED, CheckResult, VerificationReport, check

Matrix = list  # list of rows


def zeros(n: int) -> Matrix:
    return [[0] * n for _ in range(n)]


def mmul(A: Matrix, B: Matrix) -> Matrix:
    n, m, k = len(A), len(B[0]), len(B)
    out = []
    for i in range(n):
        row = A[i]
        out.append([sum(row[t] * B[t][j] for t in range(k) if row[t]) for j in range(m)])
    return out


def msub(A: Matrix, B: Matrix) -> Matrix:
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mscale(A: Matrix, c) -> Matrix:
    return [[c * a for a in r] for r in A]


def commutator(A: Matrix, B: Matrix) -> Matrix:
    return msub(mmul(A, B), mmul(B, A))


def is_zero(A: Matrix) -> bool:
    return not any(v for r in A for v in r)


@dataclass
class SL2Triple:
    e: Matrix
    h: Matrix
    f: Matrix
    blocks: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.e)

    def residuals(self) -> dict[str, Matrix]:
        return {
            "[h,e]-2e": msub(commutator(self.h, self.e), mscale(self.e, 2)),
            "[h,f]+2f": msub(commutator(self.h, self.f), mscale(self.f, -2)),
            "[e,f]-h": msub(commutator(self.e, self.f), self.h),
        }


def build_triple(d: int, blocks: tuple[int, ...] | None = None) -> SL2Triple:
    """Standard triple: per Jordan block of size k, e = sum E_{i,i+1},
    h = diag(k-1, k-3, ..., 1-k), f = sum i(k-i) E_{i+1,i}."""
    if d < 4:
        raise ValueError("d must be >= 4")
    blocks = blocks or (d - 2, 2)
    if sum(blocks) != d:
        raise ValueError("block sizes must sum to d")
    e, h, f = zeros(d), zeros(d), zeros(d)
    off = 0
    for k in blocks:
        for i in range(k):
            h[off + i][off + i] = k - 1 - 2 * i
        for i in range(1, k):
            e[off + i - 1][off + i] = 1
            f[off + i][off + i - 1] = i * (k - i)
        off += k
    return SL2Triple(e, h, f, tuple(blocks))


def transpose_partition(parts) -> list[int]:
    return [sum(1 for p in parts if p > k) for k in range(max(parts))]


def expected_slice_dim(blocks) -> int:
    return sum(c * c for c in transpose_partition(blocks)) - 1


def slice_basis(T: SL2Triple) -> list[Matrix]:
    """Basis of the traceless part of ker(ad f), one ad-h eigenspace at a time."""
    n = T.n
    hd = [T.h[i][i] for i in range(n)]
    by_weight: dict[int, list[tuple[int, int]]] = {}
    for i in range(n):
        for j in range(n):
            by_weight.setdefault(hd[i] - hd[j], []).append((i, j))
    basis = []
    for w in sorted(by_weight):
        cells = by_weight[w]
        # [f, X] for X = E_{ij} is f E_ij - E_ij f
        rows: dict[tuple[int, int], list] = {}
        for k, (i, j) in enumerate(cells):
            for a in range(n):
                if T.f[a][i]:
                    rows.setdefault((a, j), [0] * len(cells))[k] += T.f[a][i]
            for b in range(n):
                if T.f[j][b]:
                    rows.setdefault((i, b), [0] * len(cells))[k] -= T.f[j][b]
        eqs = [r for r in rows.values() if any(r)]
        if w == 0:
            eqs.append([1 if i == j else 0 for (i, j) in cells])
        for vec in nullspace(eqs, len(cells)):
            M = zeros(n)
            for (i, j), c in zip(cells, vec):
                M[i][j] = c
            basis.append(M)
    return basis


@dataclass
class SlicePresentation:
    d: int
    triple: SL2Triple
    basis: list[Matrix]
    ring: PolyRing
    equations: list[MultiPoly]  # p_2..p_d

    def generic(self) -> list[list[MultiPoly]]:
        R = self.ring
        z = R.gens()
        M = [[R(v) for v in row] for row in self.triple.e]
        for zi, B in zip(z, self.basis):
            for i, row in enumerate(B):
                for j, c in enumerate(row):
                    if c:
                        M[i][j] = M[i][j] + zi * c
        return M

    def at(self, point: list) -> Matrix:
        M = [list(r) for r in self.triple.e]
        for c, B in zip(point, self.basis):
            if c:
                M = [[a + c * b for a, b in zip(ra, rb)] for ra, rb in zip(M, B)]
        return M

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "blocks": list(self.triple.blocks),
            "basis": [[[str(v) for v in r] for r in B] for B in self.basis],
            "equations": [p.to_str() for p in self.equations],
        }


def _poly_mmul(A, B, ring):
    n = len(A)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = ring.zero()
            for t in range(n):
                if not A[i][t].is_zero() and not B[t][j].is_zero():
                    acc = acc + A[i][t] * B[t][j]
            row.append(acc)
        out.append(row)
    return out


def char_poly_coefficients(M, ring: PolyRing) -> list[MultiPoly]:
    """e_1..e_n of the eigenvalues via Newton's identities; det(tI - M) = sum (-1)^k e_k t^(n-k)."""
    n = len(M)
    power_sums = []
    P = M
    for k in range(1, n + 1):
        if k > 1:
            P = _poly_mmul(P, M, ring)
        tr = ring.zero()
        for i in range(n):
            tr = tr + P[i][i]
        power_sums.append(tr)
    e = [ring.one()]
    for k in range(1, n + 1):
        acc = ring.zero()
        for i in range(1, k + 1):
            term = e[k - i] * power_sums[i - 1]
            acc = acc + term if i % 2 else acc - term
        e.append(acc / k)
    return e[1:]


def slice_equations(d: int, blocks: tuple[int, ...] | None = None) -> SlicePresentation:
    T = build_triple(d, blocks)
    basis = slice_basis(T)
    want = expected_slice_dim(T.blocks)
    if len(basis) != want:
        raise AssertionError(f"slice dimension {len(basis)} != {want}")
    ring = PolyRing([f"z{i}" for i in range(1, len(basis) + 1)])
    pres = SlicePresentation(d, T, basis, ring, [])
    coeffs = char_poly_coefficients(pres.generic(), ring)
    if not coeffs[0].is_zero():
        raise AssertionError("generic slice element is not traceless")
    pres.equations = coeffs[1:]
    return pres


def jacobian_at(pres: SlicePresentation, point: list) -> list[list]:
    names = pres.ring.names
    pt = dict(zip(names, point))
    return [[evaluate(derivative(p, n), pt) for n in names] for p in pres.equations]


def is_nilpotent(M: Matrix) -> bool:
    P = M
    for _ in range(len(M) - 1):
        P = mmul(P, M)
    return is_zero(P)


def find_regular_point(pres: SlicePresentation, max_support: int = 3, values=(-1, 1), budget: int = 200_000):
    """Smallest-support z over ``values`` with e + sum z_i B_i regular nilpotent
    (nilpotent of rank d-1).  Returns (z, evaluations) or (None, evaluations)."""
    n = len(pres.basis)
    d = pres.d
    evals = 0
    for k in range(1, max_support + 1):
        for support in combinations(range(n), k):
            for vals in product(values, repeat=k):
                evals += 1
                if evals > budget:
                    return None, evals
                z = [0] * n
                for i, v in zip(support, vals):
                    z[i] = v
                M = pres.at(z)
                if exact_rank(M) == d - 1 and is_nilpotent(M):
                    return z, evals
    return None, evals


def verify_slice_geometry(d: int, trials: int = 1, max_support: int = 3,
                          blocks: tuple[int, ...] | None = None) -> VerificationReport:
    """Triple relations, slice dimension, equation count and shape, the singular
    point at z = 0 and a smooth regular nilpotent point.  ``blocks`` swaps in
    another Jordan type (negative control)."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rep = VerificationReport()
    T = build_triple(d, blocks)
    for name, R in T.residuals().items():
        rep.add(check("slodowy.triple", {"d": d, "relation": name}, is_zero(R), witness=R))
    r = exact_rank(T.e)
    rep.add(check("slodowy.rank_e", {"d": d}, r == d - 2, witness={"rank": r}))
    pres = slice_equations(d, blocks)
    rep.add(check("slodowy.slice_dim", {"d": d}, len(pres.basis) == d + 3, witness={"dim": len(pres.basis)}))
    rep.add(check("slodowy.equation_count", {"d": d}, len(pres.equations) == d - 1,
                  witness={"count": len(pres.equations)}))
    bad = [k for k, p in enumerate(pres.equations, 2) if p.constant_term() or p.total_degree() > k]
    rep.add(check("slodowy.equation_shape", {"d": d}, not bad, witness=bad))
    zero = [0] * len(pres.basis)
    r0 = exact_rank(jacobian_at(pres, zero))
    rep.add(check("slodowy.singular_at_e", {"d": d}, r0 < d - 1, witness={"rank": r0}))
    found = 0
    evals_total = 0
    for t in range(trials):
        z, evals = find_regular_point(pres, max_support=max_support + t)
        evals_total += evals
        if z is None:
            break
        vals = [evaluate(p, dict(zip(pres.ring.names, z))) for p in pres.equations]
        rk = exact_rank(jacobian_at(pres, z))
        ok = not any(vals) and rk == d - 1
        rep.add(check("slodowy.smooth_regular_point", {"d": d, "trial": t}, ok,
                      witness={"z": z, "rank": rk, "values": vals},
                      local_dimension=len(pres.basis) - (d - 1)))
        found += 1
        break
    if not found:
        rep.add(CheckResult("slodowy.smooth_regular_point", {"d": d, "trial": 0}, SKIPPED,
                            details={"reason": f"no regular point with support <= {max_support}",
                                     "evaluations": evals_total}))
    rep.add(check("slodowy.dimension_bookkeeping", {"d": d}, (d + 3) - (d - 1) == 4, witness={"slice": d + 3, "equations": d - 1}))
    return rep


__all__ = [
    "SL2Triple", "build_triple", "slice_basis", "slice_equations", "SlicePresentation",
    "char_poly_coefficients", "jacobian_at", "find_regular_point", "verify_slice_geometry",
    "expected_slice_dim", "commutator", "is_nilpotent",
]
