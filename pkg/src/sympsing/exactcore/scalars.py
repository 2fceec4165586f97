"""Exact scalar fields: rationals, cyclotomic fields Q(zeta_d), and Q(sqrt 2).

Rationals are plain ``int`` / ``fractions.Fraction`` values.  The two
extension fields have small element classes that interoperate with them.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache


def normalize(c):
    """Collapse an integral Fraction to int (keeps the polynomial kernels on ints)."""
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def is_rational(c) -> bool:
    return isinstance(c, (int, Fraction))


def rational_sqrt(c) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if it is not a square."""
    c = Fraction(c)
    if c < 0:
        return None
    n, d = c.numerator, c.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn != n or rd * rd != d:
        return None
    return Fraction(rn, rd)


# --- univariate helpers over Q; coefficient lists are low degree first ---

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _upoly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _upoly_divmod(a, b):
    a = [Fraction(x) for x in _trim(a)]
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] -= c * y
        a = _trim(a)
    return _trim(q), a


def _upoly_sub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> tuple[int, ...]:
    """Integer coefficients (low degree first) of Phi_d, by dividing z^d - 1
    by Phi_k for every proper divisor k of d."""
    if d < 1:
        raise ValueError("d must be >= 1")
    num = [-1] + [0] * (d - 1) + [1]
    for k in range(1, d):
        if d % k == 0:
            num, rem = _upoly_divmod(num, cyclotomic_polynomial(k))
            assert not rem
    return tuple(int(c) for c in num)


class CyclotomicField:
    """Q(zeta_d) as Q[z]/(Phi_d); elements are coefficient vectors of length phi(d)."""

    def __init__(self, d: int):
        self.d = d
        self.modulus = cyclotomic_polynomial(d)
        self.degree = len(self.modulus) - 1
        self.name = f"QQ(zeta_{d})"

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.d == self.d

    def __hash__(self):
        return hash(("cyclotomic", self.d))

    def reduce(self, coeffs) -> tuple:
        c = list(coeffs)
        m = self.modulus
        n = self.degree
        for i in range(len(c) - 1, n - 1, -1):
            lead = c[i]
            if lead:
                for j in range(n + 1):
                    c[i - n + j] -= lead * m[j]
        c = c[:n] + [0] * (n - len(c))
        return tuple(normalize(x) for x in c)

    def __call__(self, value) -> "CycElt":
        if isinstance(value, CycElt):
            if value.field != self:
                raise TypeError(f"element of {value.field} is not in {self}")
            return value
        return CycElt(self, (normalize(value),) + (0,) * (self.degree - 1))

    def zeta(self, k: int = 1) -> "CycElt":
        k %= self.d
        return CycElt(self, self.reduce([0] * k + [1]))

    def reduction_rules(self) -> dict[int, tuple]:
        """z^k for deg(Phi_d) <= k < d written in the power basis."""
        return {k: self.zeta(k).coeffs for k in range(self.degree, self.d + 1)}


@lru_cache(maxsize=None)
def cyclotomic_field(d: int) -> CyclotomicField:
    if d < 1:
        raise ValueError("d must be >= 1")
    return CyclotomicField(d)


class CycElt:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: CyclotomicField, coeffs):
        self.field = field
        self.coeffs = tuple(coeffs)

    def _coerce(self, other):
        if isinstance(other, CycElt):
            if other.field != self.field:
                raise TypeError(f"cannot mix {self.field} and {other.field}")
            return other.coeffs
        if isinstance(other, (int, Fraction)):
            return (other,) + (0,) * (self.field.degree - 1)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycElt(self.field, tuple(normalize(a + b) for a, b in zip(self.coeffs, o)))

    __radd__ = __add__

    def __neg__(self):
        return CycElt(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycElt(self.field, tuple(normalize(a - b) for a, b in zip(self.coeffs, o)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycElt(self.field, tuple(normalize(a * other) for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycElt(self.field, self.field.reduce(_upoly_mul(self.coeffs, o) or [0]))

    __rmul__ = __mul__

    def inverse(self) -> "CycElt":
        # extended Euclid in Q[z]: s*self + t*Phi = 1
        a, b = _trim(self.coeffs), list(self.field.modulus)
        if not a:
            raise ZeroDivisionError("inverse of zero")
        s0, s1 = [Fraction(1)], []
        while b:
            q, r = _upoly_divmod(a, b)
            a, b = b, r
            s0, s1 = s1, _upoly_sub(s0, _upoly_mul(q, s1))
        # a is a nonzero constant
        inv = Fraction(1) / Fraction(a[0])
        return CycElt(self.field, self.field.reduce([c * inv for c in s0] or [0]))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / other)
        if isinstance(other, CycElt):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == tuple(o)

    def __hash__(self):
        return hash((self.field.d, self.coeffs))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
                if k == 0:
                    parts.append(str(c))
                elif c == 1:
                    parts.append(mono)
                else:
                    parts.append(f"{c}*{mono}")
        return "(" + " + ".join(parts) + ")" if parts else "0"

    __repr__ = __str__


class Sqrt2Elt:
    """a + b*sqrt(2) with a, b rational."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = normalize(Fraction(a))
        self.b = normalize(Fraction(b))

    @staticmethod
    def _parts(x):
        if isinstance(x, Sqrt2Elt):
            return x.a, x.b
        if isinstance(x, (int, Fraction)):
            return x, 0
        return None

    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return Sqrt2Elt(self.a + p[0], self.b + p[1])

    __radd__ = __add__

    def __neg__(self):
        return Sqrt2Elt(-self.a, -self.b)

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return Sqrt2Elt(self.a - p[0], self.b - p[1])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        a, b = p
        return Sqrt2Elt(self.a * a + 2 * self.b * b, self.a * b + self.b * a)

    __rmul__ = __mul__

    def conjugate(self):
        return Sqrt2Elt(self.a, -self.b)

    def norm(self) -> Fraction:
        return Fraction(self.a) ** 2 - 2 * Fraction(self.b) ** 2

    def __truediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        o = Sqrt2Elt(*p)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in QQ(sqrt2)")
        num = self * o.conjugate()
        return Sqrt2Elt(Fraction(num.a) / n, Fraction(num.b) / n)

    def __rtruediv__(self, other):
        return Sqrt2Elt(other) / self

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return self.a == p[0] and self.b == p[1]

    def __hash__(self):
        return hash((self.a, self.b))

    def __str__(self):
        if not self.b:
            return str(self.a)
        rt = "sqrt2" if self.b == 1 else f"{self.b}*sqrt2"
        return f"{self.a} + {rt}" if self.a else rt

    __repr__ = __str__


SQRT2 = Sqrt2Elt(0, 1)
