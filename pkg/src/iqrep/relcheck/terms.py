"""Formal-distribution terms and finite mode extraction.

A term is a scalar times a monomial offset in the formal variables, times
delta factors (doubly infinite geometric sums), one-sided geometric factors
(expanded in nonnegative powers of the written monomial), and an ordered word
of generator-series factors.  Extracting the coefficient of a fixed
multidegree solves a small integer system; boundedness is established by
interval propagation before any enumeration, so extraction is provably finite
or fails loudly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..exactring import QONE, QScalar, q_power

INF = None  # open interval end


class UnboundedExtractionError(ValueError):
    """The requested mode extraction is not structurally finite."""


@dataclass(frozen=True)
class Delta:
    """delta(scalar * monomial): contributes an integer summation index."""

    exps: tuple  # ((var, exponent), ...)
    base: QScalar  # scalar raised to the summation index


@dataclass(frozen=True)
class Geom:
    """(1 - alpha * monomial)^(-1), expanded in nonnegative powers of the
    monomial as written."""

    exps: tuple
    alpha: QScalar


@dataclass(frozen=True)
class OpB:
    i: int
    var: str


@dataclass(frozen=True)
class OpTheta:
    i: int
    var: str


@dataclass(frozen=True)
class OpK:
    i: int
    power: int = 1


@dataclass(frozen=True)
class OpH:
    i: int
    k: int


@dataclass
class Term:
    """coeff * prod(monomial offsets) * prod(deltas, geoms) * word(ops)."""

    coeff: QScalar = QONE
    offsets: tuple = ()  # ((var, exponent), ...), merged
    scalars: tuple = ()  # Delta and Geom factors
    ops: tuple = ()  # OpB / OpTheta / OpK / OpH in product order

    def times(self, other: "Term") -> "Term":
        off = dict(self.offsets)
        for v, e in other.offsets:
            off[v] = off.get(v, 0) + e
        return Term(
            self.coeff * other.coeff,
            tuple(sorted((v, e) for v, e in off.items() if e)),
            self.scalars + other.scalars,
            self.ops + other.ops,
        )

    def scaled(self, c: QScalar) -> "Term":
        return Term(self.coeff * c, self.offsets, self.scalars, self.ops)

    def swap_vars(self, a: str, b: str) -> "Term":
        def sw(v):
            return b if v == a else a if v == b else v

        def swe(exps):
            return tuple(sorted((sw(v), e) for v, e in exps))

        scalars = tuple(
            Delta(swe(s.exps), s.base)
            if isinstance(s, Delta)
            else Geom(swe(s.exps), s.alpha)
            for s in self.scalars
        )
        ops = tuple(
            OpB(o.i, sw(o.var))
            if isinstance(o, OpB)
            else OpTheta(o.i, sw(o.var))
            if isinstance(o, OpTheta)
            else o
            for o in self.ops
        )
        return Term(self.coeff, swe(self.offsets), scalars, ops)


# -- term-sum algebra ----------------------------------------------------------


def one() -> list:
    return [Term()]


def scal(c: QScalar) -> list:
    return [Term(coeff=c)]


def mono(c: QScalar, **exps) -> list:
    return [Term(coeff=c, offsets=tuple(sorted(exps.items())))]


def delta(base: QScalar, **exps) -> list:
    return [Term(scalars=(Delta(tuple(sorted(exps.items())), base),))]


def geom(alpha: QScalar, **exps) -> list:
    return [Term(scalars=(Geom(tuple(sorted(exps.items())), alpha),))]


def opB(i: int, var: str) -> list:
    return [Term(ops=(OpB(i, var),))]


def opTheta(i: int, var: str) -> list:
    return [Term(ops=(OpTheta(i, var),))]


def opK(i: int, power: int = 1) -> list:
    return [Term(ops=(OpK(i, power),))]


def tmul(*sums) -> list:
    out = [Term()]
    for s in sums:
        out = [a.times(b) for a in out for b in s]
    return out


def tadd(*sums) -> list:
    out = []
    for s in sums:
        out.extend(s)
    return out


def tneg(s) -> list:
    minus_one = QScalar(-1)
    return [t.scaled(minus_one) for t in s]


def tscale(s, c: QScalar) -> list:
    return [t.scaled(c) for t in s]


def tsub(a, b) -> list:
    return tadd(a, tneg(b))


def sym_w1w2(s) -> list:
    """Symmetrize in the formal variables w1 and w2: f + f(w1 <-> w2)."""
    return tadd(s, [t.swap_vars("w1", "w2") for t in s])


# -- extraction ------------------------------------------------------------------


def _interval_add(a, b):
    lo = None if a[0] is INF or b[0] is INF else a[0] + b[0]
    hi = None if a[1] is INF or b[1] is INF else a[1] + b[1]
    return (lo, hi)


def _interval_scale(iv, c):
    lo, hi = iv
    if c >= 0:
        return (
            None if lo is INF else c * lo,
            None if hi is INF else c * hi,
        )
    return (
        None if hi is INF else c * hi,
        None if lo is INF else c * lo,
    )


def _ceil_div(a, b):
    return -((-a) // b)


def _bound_quotient(ck: int, lo, hi):
    """Integer bounds on x given ck*x in [lo, hi] (None = unbounded)."""
    if ck > 0:
        nlo = None if lo is INF else _ceil_div(lo, ck)
        nhi = None if hi is INF else hi // ck
    else:
        c = -ck
        nlo = None if hi is INF else _ceil_div(-hi, c)
        nhi = None if lo is INF else (-lo) // c
    return nlo, nhi


def _extract_term(term: Term, degrees: dict):
    """Yield (scalar, op-word) pairs realizing the requested multidegree."""
    # Unknown summation indices: deltas and geoms first (in scalar-factor
    # order), then one index per B (integer) or Theta (nonnegative) factor.
    unknowns = []  # (kind, payload, nonneg, per-variable coefficient)
    for s in term.scalars:
        if isinstance(s, Delta):
            unknowns.append(("delta", s, False, dict(s.exps)))
        else:
            unknowns.append(("geom", s, True, dict(s.exps)))
    for o in term.ops:
        if isinstance(o, OpB):
            unknowns.append(("B", o, False, {o.var: 1}))
        elif isinstance(o, OpTheta):
            unknowns.append(("Theta", o, True, {o.var: 1}))

    offsets = dict(term.offsets)
    variables = sorted(
        set(degrees) | set(offsets) | {v for *_, col in unknowns for v in col}
    )
    targets = {v: degrees.get(v, 0) - offsets.get(v, 0) for v in variables}
    eqs = []
    for v in variables:
        cols = [col.get(v, 0) for *_, col in unknowns]
        if any(cols):
            eqs.append((cols, targets[v]))
        elif targets[v] != 0:
            return  # the term cannot reach this multidegree

    m = len(unknowns)
    dom = [(0, None) if u[2] else (None, None) for u in unknowns]
    for _ in range(4 * m + 8):
        changed = False
        for cols, tgt in eqs:
            for k in range(m):
                ck = cols[k]
                if ck == 0:
                    continue
                rest = (0, 0)
                for t in range(m):
                    if t != k and cols[t]:
                        rest = _interval_add(rest, _interval_scale(dom[t], cols[t]))
                lo = None if rest[1] is INF else tgt - rest[1]
                hi = None if rest[0] is INF else tgt - rest[0]
                lo, hi = _bound_quotient(ck, lo, hi)
                cur = dom[k]
                nlo = cur[0] if lo is INF else (lo if cur[0] is INF else max(cur[0], lo))
                nhi = cur[1] if hi is INF else (hi if cur[1] is INF else min(cur[1], hi))
                if nlo is not INF and nhi is not INF and nlo > nhi:
                    return  # inconsistent: no contribution
                if (nlo, nhi) != cur:
                    dom[k] = (nlo, nhi)
                    changed = True
        if not changed:
            break
    if any(lo is INF or hi is INF for lo, hi in dom):
        raise UnboundedExtractionError(
            "mode extraction is not structurally finite for this term"
        )

    qm1 = q_power(1) - q_power(-1)
    n_scalar = sum(1 for u in unknowns if u[0] in ("delta", "geom"))
    for assignment in itertools.product(*(range(lo, hi + 1) for lo, hi in dom)):
        if not all(
            sum(c * x for c, x in zip(cols, assignment)) == tgt
            for cols, tgt in eqs
        ):
            continue
        scalar = term.coeff
        for (kind, payload, _, _), val in zip(unknowns, assignment):
            if val and kind == "delta":
                scalar = scalar * payload.base**val
            elif val and kind == "geom":
                scalar = scalar * payload.alpha**val
        word = []
        pos = n_scalar
        for o in term.ops:
            if isinstance(o, OpB):
                r = assignment[pos]
                pos += 1
                scalar = scalar * q_power(r * o.i)
                word.append(("B", o.i, r))
            elif isinstance(o, OpTheta):
                s = assignment[pos]
                pos += 1
                if s:
                    scalar = scalar * qm1
                    word.append(("T", o.i, s))
            elif isinstance(o, OpK):
                word.append(("K", o.i, o.power))
            elif isinstance(o, OpH):
                word.append(("H", o.i, o.k))
        if not scalar.is_zero():
            yield scalar, tuple(word)


def extract_mode(terms, degrees: dict):
    """Finite operator combination equal to the requested coefficient.

    Returns a canonically ordered list of (scalar, word) pairs with identical
    words merged; an empty list is the zero combination.
    """
    acc: dict = {}
    for term in terms:
        for scalar, word in _extract_term(term, degrees):
            cur = acc.get(word)
            acc[word] = scalar if cur is None else cur + scalar
    out = [(c, w) for w, c in acc.items() if not c.is_zero()]
    out.sort(key=lambda p: p[1])
    return out
