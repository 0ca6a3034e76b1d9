"""Shared fixtures and independent-oracle helpers.

The sympy bridge converts package values into sympy expressions so that
expected values can be computed by a fully independent path (series division,
rational simplification) and frozen into the tests.
"""

import sympy

from iqrep.exactring import LaurentPoly, QScalar, RatFn

Q = sympy.Symbol("q")


def qscalar_to_sympy(c: QScalar):
    num = sum(co * Q**k for k, co in enumerate(c.num))
    den = sum(co * Q**k for k, co in enumerate(c.den))
    return sympy.together(sympy.Rational(1) * num / den)


def laurent_to_sympy(f: LaurentPoly, symbols):
    expr = sympy.Integer(0)
    for exps, coeff in f.terms.items():
        mono = qscalar_to_sympy(coeff)
        for s, e in zip(symbols, exps):
            mono *= s**e
        expr += mono
    return expr


def ratfn_to_sympy(r: RatFn, symbols):
    return laurent_to_sympy(r.num, symbols) / laurent_to_sympy(r.den, symbols)


def sym_zero(expr) -> bool:
    return sympy.simplify(sympy.together(expr)) == 0
