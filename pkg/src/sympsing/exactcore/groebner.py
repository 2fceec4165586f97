"""Buchberger's algorithm over Q with the product and chain criteria and sugar
pair selection, plus the things a reduced basis gives for free: normal forms,
ideal membership, and quotient dimensions via the staircase.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction

from .order import DEGREVLEX, MonomialOrder
from .poly import QQ, CoefficientFieldMismatch, MultiPoly, PolyRing
from .scalars import normalize


class BudgetExceeded(RuntimeError):
    """A configured resource limit was hit; the computation has no answer."""

    def __init__(self, what: str, limit: int):
        super().__init__(f"{what} exceeded budget {limit}")
        self.what = what
        self.limit = limit


@dataclass(frozen=True)
class Budget:
    max_basis: int = 2000
    max_terms: int = 200_000
    max_pairs: int = 200_000
    max_staircase: int = 1_000_000


DEFAULT_BUDGET = Budget()


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


class _Engine:
    """Works on raw term dicts (exponent tuple -> rational) under one order."""

    def __init__(self, order: MonomialOrder, budget: Budget):
        self.order = order
        self.budget = budget
        self._keys: dict = {}

    def key(self, e):
        k = self._keys.get(e)
        if k is None:
            k = self.order.key(e)
            self._keys[e] = k
        return k

    def lead(self, p: dict):
        return max(p, key=self.key)

    def monic(self, p: dict) -> dict:
        lc = p[self.lead(p)]
        if lc == 1:
            return p
        inv = Fraction(1) / Fraction(lc)
        return {e: normalize(c * inv) for e, c in p.items()}

    def normal_form(self, p: dict, basis: list, leads: list, full: bool = True) -> dict:
        """Remainder of p on division by the monic polynomials in ``basis``."""
        p = dict(p)
        rem: dict = {}
        heap = [(tuple(-k for k in self.key(e)), e) for e in p]
        heapq.heapify(heap)
        queued = set(p)
        max_terms = self.budget.max_terms
        while heap:
            _, e = heapq.heappop(heap)
            queued.discard(e)
            c = p.pop(e, 0)
            if not c:
                continue
            for g, lm in zip(basis, leads):
                if _divides(lm, e):
                    shift = _sub(e, lm)
                    for ge, gc in g.items():
                        if ge == lm:
                            continue
                        t = _add(ge, shift)
                        v = normalize(p.get(t, 0) - c * gc)
                        if v:
                            p[t] = v
                            if t not in queued:
                                queued.add(t)
                                heapq.heappush(heap, (tuple(-k for k in self.key(t)), t))
                        else:
                            p.pop(t, None)
                    if len(p) > max_terms:
                        raise BudgetExceeded("term count", max_terms)
                    break
            else:
                rem[e] = c
                if not full:
                    rem.update(p)
                    return rem
        return rem

    def spoly(self, f: dict, lf, g: dict, lg) -> dict:
        m = _lcm(lf, lg)
        sf, sg = _sub(m, lf), _sub(m, lg)
        out = {}
        for e, c in f.items():
            out[_add(e, sf)] = c
        for e, c in g.items():
            t = _add(e, sg)
            v = normalize(out.get(t, 0) - c)
            if v:
                out[t] = v
            else:
                out.pop(t, None)
        return out

    def buchberger(self, polys: list) -> list:
        deg = self.order.degree
        basis: list = []
        leads: list = []
        sugar: list = []
        alive: list = []
        pairs: list = []
        done: set = set()
        counter = 0

        def add(h: dict, s: int):
            nonlocal counter
            h = self.monic(h)
            lh = self.lead(h)
            k = len(basis)
            if k >= self.budget.max_basis:
                raise BudgetExceeded("basis size", self.budget.max_basis)
            basis.append(h)
            leads.append(lh)
            sugar.append(s)
            alive.append(True)
            for i in range(k):
                if not alive[i]:
                    continue
                li = leads[i]
                m = _lcm(li, lh)
                if all(a == 0 or b == 0 for a, b in zip(li, lh)):
                    done.add((i, k))  # product criterion
                    continue
                ps = max(sugar[i] + deg(_sub(m, li)), s + deg(_sub(m, lh)))
                counter += 1
                if counter > self.budget.max_pairs:
                    raise BudgetExceeded("pair count", self.budget.max_pairs)
                heapq.heappush(pairs, (ps, self.key(m), counter, i, k))
            # old elements whose lead is a multiple of the new lead are redundant
            for i in range(k):
                if alive[i] and _divides(lh, leads[i]):
                    alive[i] = False

        for p in polys:
            if p:
                r = self.normal_form(p, [basis[i] for i in range(len(basis)) if alive[i]],
                                     [leads[i] for i in range(len(basis)) if alive[i]])
                if r:
                    add(r, max(deg(e) for e in p))

        while pairs:
            ps, _, _, i, j = heapq.heappop(pairs)
            done.add((i, j))
            m = _lcm(leads[i], leads[j])
            # chain criterion
            skip = False
            for k in range(len(basis)):
                if k in (i, j) or not _divides(leads[k], m):
                    continue
                a, b = (min(i, k), max(i, k)), (min(j, k), max(j, k))
                if a in done and b in done:
                    skip = True
                    break
            if skip:
                continue
            s = self.spoly(basis[i], leads[i], basis[j], leads[j])
            if not s:
                continue
            live = [n for n in range(len(basis)) if alive[n]]
            r = self.normal_form(s, [basis[n] for n in live], [leads[n] for n in live])
            if r:
                add(r, ps)
        return [(basis[n], leads[n]) for n in range(len(basis)) if alive[n]]

    def reduce_basis(self, gl: list) -> list:
        gl = sorted(gl, key=lambda t: self.key(t[1]))
        minimal = []
        for g, lg in gl:
            if not any(_divides(lh, lg) for _, lh in minimal):
                minimal.append((g, lg))
        out = []
        for idx, (g, lg) in enumerate(minimal):
            others = [h for n, (h, _) in enumerate(minimal) if n != idx]
            olead = [lh for n, (_, lh) in enumerate(minimal) if n != idx]
            r = self.monic(self.normal_form(g, others, olead))
            out.append((r, lg))
        out.sort(key=lambda t: self.key(t[1]), reverse=True)
        return out


def _raw(p: MultiPoly) -> dict:
    for c in p.terms.values():
        if not isinstance(c, (int, Fraction)):
            raise CoefficientFieldMismatch(f"Groebner kernels need rational coefficients, got {c!r}")
    return dict(p.terms)


def _ring_of(polys) -> PolyRing:
    rings = {p.ring for p in polys}
    if len(rings) != 1:
        raise ValueError("generators must live in one ring")
    ring = rings.pop()
    if ring.field is not QQ:
        raise CoefficientFieldMismatch("Groebner kernels work over QQ only")
    return ring


def groebner_basis(gens, order: MonomialOrder = DEGREVLEX, budget: Budget = DEFAULT_BUDGET,
                   check: bool = True) -> list[MultiPoly]:
    """Reduced Groebner basis, highest leading monomial first.

    With ``check`` the output is verified confluent (all S-polynomials reduce
    to zero) before it is returned.
    """
    gens = list(gens)
    if not gens:
        return []
    ring = _ring_of(gens)
    eng = _Engine(order, budget)
    raw = [_raw(g) for g in gens if not g.is_zero()]
    if not raw:
        return []
    red = eng.reduce_basis(eng.buchberger(raw))
    out = [MultiPoly(ring, g) for g, _ in red]
    if check and not is_groebner(out, order):
        raise AssertionError("Buchberger output failed the confluence check")
    return out


def is_groebner(basis, order: MonomialOrder = DEGREVLEX) -> bool:
    """Every S-polynomial of ``basis`` reduces to zero modulo ``basis``."""
    if not basis:
        return True
    eng = _Engine(order, Budget(max_terms=10**9))
    polys = [eng.monic(_raw(b)) for b in basis if not b.is_zero()]
    leads = [eng.lead(p) for p in polys]
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            s = eng.spoly(polys[i], leads[i], polys[j], leads[j])
            if s and eng.normal_form(s, polys, leads, full=False):
                return False
    return True


def normal_form(p: MultiPoly, basis, order: MonomialOrder = DEGREVLEX) -> MultiPoly:
    """Fully reduced remainder of ``p`` on division by ``basis``."""
    eng = _Engine(order, Budget(max_terms=10**9))
    polys = [eng.monic(_raw(b)) for b in basis if not b.is_zero()]
    leads = [eng.lead(g) for g in polys]
    return MultiPoly(p.ring, eng.normal_form(_raw(p), polys, leads))


reduce = normal_form


def ideal_contains(p: MultiPoly, basis, order: MonomialOrder = DEGREVLEX) -> bool:
    return normal_form(p, basis, order).is_zero()


def ideal_contains_one(gens, order: MonomialOrder = DEGREVLEX, budget: Budget = DEFAULT_BUDGET) -> bool:
    gb = groebner_basis(gens, order, budget)
    return len(gb) == 1 and gb[0].is_constant() and not gb[0].is_zero()


def staircase(basis, order: MonomialOrder = DEGREVLEX, budget: Budget = DEFAULT_BUDGET):
    """Standard monomials of a Groebner basis, or None if there are infinitely many."""
    if not basis:
        return None
    n = basis[0].ring.nvars
    leads = [b.lead(order)[0] for b in basis if not b.is_zero()]
    for i in range(n):
        if not any(lm[i] > 0 and sum(lm) == lm[i] for lm in leads):
            return None
    if any(sum(lm) == 0 for lm in leads):
        return []
    out = []
    stack = [tuple([0] * n)]
    seen = {stack[0]}
    while stack:
        e = stack.pop()
        if any(_divides(lm, e) for lm in leads):
            continue
        out.append(e)
        if len(out) > budget.max_staircase:
            raise BudgetExceeded("staircase size", budget.max_staircase)
        for i in range(n):
            t = e[:i] + (e[i] + 1,) + e[i + 1:]
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return sorted(out, key=order.key)


def quotient_dimension(gens, order: MonomialOrder = DEGREVLEX, budget: Budget = DEFAULT_BUDGET):
    """dim_Q of k[vars]/(gens); ``math.inf`` when the quotient is infinite-dimensional."""
    gb = groebner_basis(gens, order, budget)
    st = staircase(gb, order, budget)
    return math.inf if st is None else len(st)
