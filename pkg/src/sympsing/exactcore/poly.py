"""Sparse multivariate polynomials over an exact coefficient field.

A :class:`PolyRing` fixes the ordered variable table (names and positive
grading weights) and the coefficient field; a :class:`MultiPoly` is a dict
from exponent tuples to nonzero coefficients.
"""

from __future__ import annotations

import operator
import re
from fractions import Fraction

from .order import DEGREVLEX, MonomialOrder
from .scalars import CycElt, Sqrt2Elt, normalize


class SubstitutionError(KeyError):
    pass


class CoefficientFieldMismatch(TypeError):
    pass


class _Rationals:
    name = "QQ"

    def __repr__(self):
        return "QQ"

    def __call__(self, value):
        return normalize(Fraction(value))


class _Sqrt2Field:
    name = "QQ(sqrt2)"

    def __repr__(self):
        return self.name

    def __call__(self, value):
        return value if isinstance(value, Sqrt2Elt) else Sqrt2Elt(value)


QQ = _Rationals()
QQ_SQRT2 = _Sqrt2Field()

_add = operator.add


def _field_embeds(src, dst) -> bool:
    return src is QQ or src == dst


def _check_coeff(field, c):
    if isinstance(c, CycElt):
        if field != c.field:
            raise CoefficientFieldMismatch(f"{c.field} coefficient in a ring over {field}")
    elif isinstance(c, Sqrt2Elt):
        if field is not QQ_SQRT2:
            raise CoefficientFieldMismatch(f"sqrt2 coefficient in a ring over {field}")
    elif not isinstance(c, (int, Fraction)):
        raise TypeError(f"unsupported coefficient {c!r}")


class PolyRing:
    """Ordered variable table with grading weights plus a coefficient field."""

    def __init__(self, names, weights=None, field=QQ):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        self.weights = tuple(weights) if weights is not None else (1,) * len(self.names)
        if len(self.weights) != len(self.names) or any(w <= 0 for w in self.weights):
            raise ValueError("need one positive weight per variable")
        self.field = field
        self.nvars = len(self.names)
        self._index = {n: i for i, n in enumerate(self.names)}
        self._zero_exp = (0,) * self.nvars

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.weights == other.weights
            and (self.field is other.field or self.field == other.field)
        )

    def __hash__(self):
        return hash((self.names, self.weights))

    def __repr__(self):
        vs = ", ".join(f"{n}:{w}" for n, w in zip(self.names, self.weights))
        return f"PolyRing[{vs}] over {self.field!r}"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise SubstitutionError(f"no variable {name!r} in {self.names}") from None

    def var(self, name: str) -> "MultiPoly":
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return MultiPoly(self, {tuple(e): 1})

    def gens(self) -> list["MultiPoly"]:
        return [self.var(n) for n in self.names]

    def __call__(self, c) -> "MultiPoly":
        if isinstance(c, MultiPoly):
            if c.ring != self:
                raise CoefficientFieldMismatch(f"{c.ring} is not {self}")
            return c
        c = normalize(c)
        _check_coeff(self.field, c)
        return MultiPoly(self, {self._zero_exp: c} if c else {})

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return MultiPoly(self, {self._zero_exp: 1})

    def monomial(self, exp, coeff=1) -> "MultiPoly":
        return MultiPoly(self, {tuple(exp): coeff} if coeff else {})

    def parse(self, text: str) -> "MultiPoly":
        """Build a polynomial from an arithmetic expression in the variable names.

        ``^`` means power; rational literals like ``3/2`` are exact.
        """
        expr = text.replace("^", "**")
        expr = re.sub(r"(?<![\w.])(?<!\*\*)(\d+)(?![\w.])", r"_F(\1)", expr)
        env = {n: self.var(n) for n in self.names}
        env["_F"] = lambda k: self(int(k))
        return self(eval(expr, {"__builtins__": {}}, env))  # noqa: S307 - internal expressions only

    def extend(self, names, weights=None) -> "PolyRing":
        names = tuple(names)
        weights = tuple(weights) if weights is not None else (1,) * len(names)
        return PolyRing(self.names + names, self.weights + weights, self.field)

    def with_field(self, field) -> "PolyRing":
        return PolyRing(self.names, self.weights, field)


class MultiPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms=None):
        self.ring = ring
        # public entry point: drop zero coefficients, keep integral values as int
        self.terms = {tuple(k): normalize(v) for k, v in (terms or {}).items() if v}

    # ---- construction helpers
    def _new(self, terms):
        # internal results are already clean
        out = MultiPoly.__new__(MultiPoly)
        out.ring = self.ring
        out.terms = terms
        return out

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise CoefficientFieldMismatch(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        return self.ring(other)

    # ---- arithmetic
    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                s = normalize(v + c)
                if s:
                    out[e] = s
                else:
                    del out[e]
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = normalize(c)
        if not c:
            return self._new({})
        return self._new({e: normalize(v * c) for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, Fraction, CycElt, Sqrt2Elt)):
                _check_coeff(self.ring.field, other)
                return self.scale(other)
            return NotImplemented
        other = self._lift(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = tuple(map(_add, e1, e2))
                v = get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return self._new({e: normalize(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, c):
        if isinstance(c, MultiPoly):
            if c.is_constant():
                c = c.constant_term()
            else:
                raise TypeError("polynomial division is not exact; use a Groebner reduction")
        if isinstance(c, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(c))
        return self.scale(1 / c)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction, CycElt, Sqrt2Elt)):
            return self == self.ring(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    # ---- inspection
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring._zero_exp in self.terms)

    def constant_term(self):
        return self.terms.get(self.ring._zero_exp, 0)

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), 0)

    def weighted_degree_of(self, exp) -> int:
        return sum(a * w for a, w in zip(exp, self.ring.weights))

    def weighted_degrees(self) -> set[int]:
        w = self.ring.weights
        return {sum(a * b for a, b in zip(e, w)) for e in self.terms}

    def degree(self) -> int:
        """Maximal weighted degree (-1 for the zero polynomial)."""
        return max(self.weighted_degrees(), default=-1)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.weighted_degrees()) <= 1

    def homogeneous_part(self, deg: int) -> "MultiPoly":
        w = self.ring.weights
        return self._new({e: c for e, c in self.terms.items() if sum(a * b for a, b in zip(e, w)) == deg})

    def variables(self) -> list[str]:
        used = set()
        for e in self.terms:
            used.update(i for i, a in enumerate(e) if a)
        return [self.ring.names[i] for i in sorted(used)]

    def degree_in(self, name: str) -> int:
        i = self.ring.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def lead(self, order: MonomialOrder = DEGREVLEX):
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def map_coeffs(self, fn, ring=None) -> "MultiPoly":
        ring = ring or self.ring
        out = {}
        for e, c in self.terms.items():
            c = normalize(fn(c))
            if c:
                out[e] = c
        return MultiPoly(ring, out)

    def content_free(self) -> "MultiPoly":
        """Scale so the leading (degrevlex) coefficient is 1."""
        if not self.terms:
            return self
        _, c = self.lead()
        return self / c

    # ---- ring maps
    def substitute(self, binding) -> "MultiPoly":
        return poly_substitute(self, binding)

    def subs(self, **values) -> "MultiPoly":
        """Partially evaluate: replace the named variables by scalars or polynomials
        of this ring; the result stays in this ring."""
        binding = {}
        for n in self.ring.names:
            v = values.get(n)
            binding[n] = self.ring.var(n) if v is None else self.ring(v)
        return poly_substitute(self, binding)

    def to_ring(self, ring: PolyRing) -> "MultiPoly":
        """Re-embed into a ring containing all used variables (by name)."""
        idx = [ring.index(n) for n in self.ring.names]
        out = {}
        for e, c in self.terms.items():
            ne = [0] * ring.nvars
            for i, a in zip(idx, e):
                ne[i] = a
            out[tuple(ne)] = c
        if not _field_embeds(self.ring.field, ring.field):
            raise CoefficientFieldMismatch(f"{self.ring.field} does not embed in {ring.field}")
        return MultiPoly(ring, out)

    # ---- formatting
    def sorted_terms(self, order: MonomialOrder = DEGREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def to_str(self, order: MonomialOrder = DEGREVLEX) -> str:
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms(order):
            mono = "*".join(
                n if a == 1 else f"{n}^{a}" for n, a in zip(self.ring.names, e) if a
            )
            neg = False
            if isinstance(c, (int, Fraction)):
                neg = c < 0
                ac = -c if neg else c
                cs = "" if (ac == 1 and mono) else str(ac)
            else:
                cs = "" if (c == 1 and mono) else f"({c})" if mono else str(c)
            body = f"{cs}*{mono}" if cs and mono else (cs or mono)
            if not out:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(out)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"MultiPoly({self.to_str()})"


def poly_substitute(p: MultiPoly, binding, target_ring: PolyRing | None = None) -> MultiPoly:
    """Image of ``p`` under the ring map sending each variable to ``binding[name]``.

    Every variable occurring in ``p`` must be bound.  All images must live in
    one ring whose field contains the field of ``p``.
    """
    used = p.variables()
    missing = [n for n in used if n not in binding]
    if missing:
        raise SubstitutionError(f"unbound variable(s) {missing}")
    images = {}
    ring = target_ring
    for n in used:
        v = binding[n]
        if isinstance(v, MultiPoly):
            if ring is None:
                ring = v.ring
            elif v.ring != ring:
                raise CoefficientFieldMismatch(f"binding for {n} lives in {v.ring}, expected {ring}")
        images[n] = v
    if ring is None:
        # only constants or no variables: stay in a ring over p's field
        ring = next((v.ring for v in binding.values() if isinstance(v, MultiPoly)), p.ring)
    if not _field_embeds(p.ring.field, ring.field):
        raise CoefficientFieldMismatch(f"cannot map coefficients of {p.ring.field} into {ring.field}")
    idx = [(p.ring.index(n), ring(images[n])) for n in used]
    powers = {i: [ring.one(), img] for i, img in idx}

    def power(i, k):
        lst = powers[i]
        while len(lst) <= k:
            lst.append(lst[-1] * lst[1])
        return lst[k]

    out = ring.zero()
    acc = {}
    for e, c in p.terms.items():
        term = None
        for i, _ in idx:
            if e[i]:
                f = power(i, e[i])
                term = f if term is None else term * f
        if term is None:
            term = ring.one()
        for te, tc in term.terms.items():
            v = acc.get(te)
            acc[te] = tc * c if v is None else v + tc * c
    out.terms = {e: normalize(c) for e, c in acc.items() if c}
    return out


def derivative(p: MultiPoly, name: str) -> MultiPoly:
    """Partial derivative with respect to the named variable."""
    i = p.ring.index(name)
    out = {}
    for e, c in p.terms.items():
        if e[i]:
            out[e[:i] + (e[i] - 1,) + e[i + 1:]] = c * e[i]
    return MultiPoly(p.ring, out)


def evaluate(p: MultiPoly, point: dict):
    """Value of p at a point given as name -> scalar (every used variable bound)."""
    ring = PolyRing(("_",), field=p.ring.field)
    return poly_substitute(p, {n: point[n] for n in p.variables()} or {}, ring).constant_term()
