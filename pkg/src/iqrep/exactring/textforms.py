"""Canonical text rendering and versioned JSON serialization.

Renderings sort terms by descending exponent tuples and spell q-powers
explicitly, so identical values always print identically.  The JSON form
stores Q(q) scalars as a pair of integer coefficient arrays and Laurent
polynomials as sorted (exponents, scalar) pairs, under a format version tag.
"""

from __future__ import annotations

from .laurent import LaurentPoly
from .scalars import QScalar

SERIAL_VERSION = 1


def render_qscalar(c: QScalar) -> str:
    return str(c)


def render_laurent(f: LaurentPoly, varnames=None) -> str:
    if f.is_zero():
        return "0"
    if varnames is None:
        varnames = [f"x{i+1}" for i in range(f.nvars)]
    parts = []
    for exps, coeff in f.sorted_terms():
        mono = "*".join(
            (name if e == 1 else f"{name}^{e}")
            for name, e in zip(varnames, exps)
            if e
        )
        cs = str(coeff)
        negated = False
        if cs.startswith("-") and "+" not in cs and " - " not in cs[1:]:
            cs = cs[1:]
            negated = True
        if not mono:
            body = cs if _is_atomic(cs) else f"({cs})"
        elif cs == "1":
            body = mono
        else:
            cfac = cs if _is_atomic(cs) else f"({cs})"
            body = f"{cfac}*{mono}"
        if not parts:
            parts.append(("-" if negated else "") + body)
        else:
            parts.append((" - " if negated else " + ") + body)
    return "".join(parts)


def _is_atomic(s: str) -> bool:
    return "+" not in s and " - " not in s and "/" not in s


def qscalar_to_json(c: QScalar):
    return [list(c.num), list(c.den)]


def qscalar_from_json(data) -> QScalar:
    num, den = data
    return QScalar(tuple(num), tuple(den))


def laurent_to_json(f: LaurentPoly):
    return {
        "v": SERIAL_VERSION,
        "nvars": f.nvars,
        "terms": [
            [list(exps), qscalar_to_json(coeff)] for exps, coeff in f.sorted_terms()
        ],
    }


def laurent_from_json(data) -> LaurentPoly:
    if data.get("v") != SERIAL_VERSION:
        raise ValueError(f"unsupported serialization version {data.get('v')!r}")
    terms = {
        tuple(exps): qscalar_from_json(coeff) for exps, coeff in data["terms"]
    }
    return LaurentPoly(data["nvars"], terms)
