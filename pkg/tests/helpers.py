"""Bridges to sympy, used only as an independent oracle in tests."""

from fractions import Fraction

import sympy


def symbols_for(ring):
    return {n: sympy.Symbol(n) for n in ring.names}


def to_sympy(p):
    syms = symbols_for(p.ring)
    out = sympy.Integer(0)
    for exp, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator) if not isinstance(c, int) else sympy.Integer(c)
        for n, k in zip(p.ring.names, exp):
            if k:
                term *= syms[n] ** k
        out += term
    return sympy.expand(out)


def from_sympy(expr, ring):
    syms = symbols_for(ring)
    poly = sympy.Poly(sympy.expand(expr), *[syms[n] for n in ring.names])
    out = ring.zero()
    for exp, c in poly.terms():
        c = sympy.Rational(c)
        out = out + ring.monomial(exp, int(c.p) if c.q == 1 else Fraction(int(c.p), int(c.q)))
    return out
