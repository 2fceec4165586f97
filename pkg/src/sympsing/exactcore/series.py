from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import MultiPoly
from .scalars import rational_sqrt


def truncate(p: MultiPoly, order: int, variables=None) -> MultiPoly:
    """Drop every term of weighted degree > order.

    With ``variables`` only those variables count towards the degree; the
    others are treated as coefficients.
    """
    w = p.ring.weights
    if variables is not None:
        keep = {p.ring.index(n) for n in variables}
        w = tuple(x if i in keep else 0 for i, x in enumerate(w))
    return MultiPoly(
        p.ring, {e: c for e, c in p.terms.items() if sum(a * b for a, b in zip(e, w)) <= order}
    )


@dataclass(frozen=True)
class TruncatedSeries:
    """A polynomial carrier taken modulo all terms of weighted degree > order."""

    poly: MultiPoly
    order: int

    def __post_init__(self):
        object.__setattr__(self, "poly", truncate(self.poly, self.order))

    def _other(self, other):
        if isinstance(other, TruncatedSeries):
            return other.poly, min(self.order, other.order)
        return self.poly.ring(other) if not isinstance(other, MultiPoly) else other, self.order

    def __add__(self, other):
        p, n = self._other(other)
        return TruncatedSeries(self.poly + p, n)

    __radd__ = __add__

    def __sub__(self, other):
        p, n = self._other(other)
        return TruncatedSeries(self.poly - p, n)

    def __rsub__(self, other):
        p, n = self._other(other)
        return TruncatedSeries(p - self.poly, n)

    def __neg__(self):
        return TruncatedSeries(-self.poly, self.order)

    def __mul__(self, other):
        p, n = self._other(other)
        return TruncatedSeries(truncate(self.poly, n) * truncate(p, n), n)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = TruncatedSeries(self.poly.ring.one(), self.order)
        for _ in range(k):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            return truncate(self.poly, n) == truncate(other.poly, n)
        return (self - other).is_zero()

    def __repr__(self):
        return f"TruncatedSeries({self.poly}, O(deg>{self.order}))"


def series_inv_sqrt(f: MultiPoly, order: int) -> TruncatedSeries:
    """S with S^2 * f == 1 modulo terms of weighted degree > order.

    The constant term of ``f`` must be the square of a nonzero rational; all
    other terms need positive weighted degree (automatic for a graded ring).
    """
    c = f.constant_term()
    if not c:
        raise ValueError("constant term is zero; no power-series inverse square root")
    r = rational_sqrt(c) if isinstance(c, (int, Fraction)) else None
    if r is None:
        raise ValueError(f"constant term {c} is not the square of a rational")
    u = (f - c) / c
    if u.terms and min(u.weighted_degrees()) <= 0:
        raise ValueError("non-constant terms must have positive weighted degree")
    min_deg = min(u.weighted_degrees(), default=order + 1)
    # (1 + u)^(-1/2) = sum_k binom(-1/2, k) u^k
    ring = f.ring
    total = ring.one()
    upow = TruncatedSeries(ring.one(), order)
    coeff = Fraction(1)
    k = 0
    while (k + 1) * min_deg <= order:
        coeff = coeff * (Fraction(-1, 2) - k) / (k + 1)
        k += 1
        upow = upow * u
        total = total + upow.poly.scale(coeff)
    return TruncatedSeries(total.scale(1 / r), order)
