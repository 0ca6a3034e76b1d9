"""Exact arithmetic in Q(q), the field of rational functions in one parameter.

A value is a reduced fraction of integer-coefficient polynomials in q.  The
representation is canonical: numerator and denominator share no polynomial or
integer factor and the denominator has positive leading coefficient, so two
equal values are structurally identical (and hash equal).

Polynomials are stored as dense tuples of ints, lowest degree first, with no
trailing zeros; the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from math import gcd as _igcd

IntPoly = tuple

PZERO: IntPoly = ()
PONE: IntPoly = (1,)


def ptrim(cs) -> IntPoly:
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def padd(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return ptrim(out)


def pneg(a: IntPoly) -> IntPoly:
    return tuple(-c for c in a)


def psub(a: IntPoly, b: IntPoly) -> IntPoly:
    return padd(a, pneg(b))


def pmul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return PZERO
    if a == PONE:
        return b
    if b == PONE:
        return a
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, e in enumerate(b):
                if e:
                    out[i + j] += c * e
    return ptrim(out)


def pscale(a: IntPoly, k: int) -> IntPoly:
    if k == 0:
        return PZERO
    if k == 1:
        return a
    return tuple(c * k for c in a)


def pcontent(a: IntPoly) -> int:
    """Positive gcd of the coefficients (0 for the zero polynomial)."""
    g = 0
    for c in a:
        g = _igcd(g, c)
        if g == 1:
            return 1
    return g


def pdivexact(a: IntPoly, b: IntPoly) -> IntPoly:
    """Quotient a // b assuming the division is exact over Z[q]."""
    if not a:
        return PZERO
    if b == PONE:
        return a
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db, lb = len(b) - 1, b[-1]
    dq = len(a) - 1 - db
    if dq < 0:
        raise ArithmeticError("inexact polynomial division")
    quot = [0] * (dq + 1)
    for k in range(dq, -1, -1):
        c = rem[k + db]
        if c % lb:
            raise ArithmeticError("inexact polynomial division")
        c //= lb
        quot[k] = c
        if c:
            for j, e in enumerate(b):
                rem[k + j] -= c * e
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return ptrim(quot)


def _prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder of a by b (both nonzero, deg a >= deg b)."""
    rem = list(a)
    db, lb = len(b) - 1, b[-1]
    for k in range(len(a) - 1 - db, -1, -1):
        c = rem[k + db]
        if c:
            for i in range(len(rem)):
                rem[i] *= lb
            c = rem[k + db]
            for j, e in enumerate(b):
                rem[k + j] -= (c // lb) * e
    return ptrim(rem)


def pgcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Gcd in Z[q], primitive with positive leading coefficient."""
    if not a:
        g = b
    elif not b:
        g = a
    else:
        ca, cb = pcontent(a), pcontent(b)
        a = tuple(c // ca for c in a)
        b = tuple(c // cb for c in b)
        while b:
            if len(a) < len(b):
                a, b = b, a
                continue
            r = _prem(a, b)
            if r:
                cr = pcontent(r)
                r = tuple(c // cr for c in r)
            a, b = b, r
        g = pscale(a, _igcd(ca, cb)) if a else PZERO
    if g and g[-1] < 0:
        g = pneg(g)
    return g


class QScalar:
    """An element of Q(q) in canonical reduced form.

    >>> (Q_GEN + Q_GEN.inverse()) * Q_GEN
    QScalar('q^2 + 1')
    >>> q_integer(2)
    QScalar('q + q^-1')
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=PONE, *, _reduced=False):
        if isinstance(num, int):
            num = PZERO if num == 0 else (num,)
        if isinstance(den, int):
            den = PZERO if den == 0 else (den,)
        if not den:
            raise ZeroDivisionError("zero denominator in Q(q)")
        if not _reduced:
            num = ptrim(num)
            den = ptrim(den)
            if not num:
                den = PONE
            elif den != PONE:
                g = pgcd(num, den)
                if g != PONE:
                    num = pdivexact(num, g)
                    den = pdivexact(den, g)
                if den[-1] < 0:
                    num, den = pneg(num), pneg(den)
        self.num = num
        self.den = den
        self._hash = None

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == PONE and self.den == PONE

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if not isinstance(other, QScalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash((self.num, self.den))
        return h

    def __add__(self, other):
        if not isinstance(other, QScalar):
            return NotImplemented
        if self.den == PONE and other.den == PONE:
            s = padd(self.num, other.num)
            return QScalar(s if s else PZERO, PONE, _reduced=True)
        return QScalar(
            padd(pmul(self.num, other.den), pmul(other.num, self.den)),
            pmul(self.den, other.den),
        )

    def __neg__(self):
        return QScalar(pneg(self.num), self.den, _reduced=True)

    def __sub__(self, other):
        if not isinstance(other, QScalar):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, QScalar):
            return NotImplemented
        if self.den == PONE and other.den == PONE:
            return QScalar(pmul(self.num, other.num), PONE, _reduced=True)
        return QScalar(pmul(self.num, other.num), pmul(self.den, other.den))

    def __truediv__(self, other):
        if not isinstance(other, QScalar):
            return NotImplemented
        return self * other.inverse()

    def inverse(self) -> "QScalar":
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(q)")
        num, den = self.den, self.num
        if den[-1] < 0:
            num, den = pneg(num), pneg(den)
        return QScalar(num, den, _reduced=True)

    def __pow__(self, k: int):
        if k == 0:
            return QONE
        base = self if k > 0 else self.inverse()
        out = QONE
        for _ in range(abs(k)):
            out = out * base
        return out

    def __repr__(self):
        return f"QScalar('{self}')"

    def __str__(self):
        if not self.num:
            return "0"
        num = _poly_str(self.num)
        if self.den == PONE:
            return num
        if len(self.den) == 1 or sum(1 for c in self.den if c) == 1:
            # monomial denominator folds into negative powers of q
            k = next(i for i, c in enumerate(self.den) if c)
            c = self.den[k]
            shifted = _poly_str(self.num, shift=-k, div=c)
            if shifted is not None:
                return shifted
        den = _poly_str(self.den)

        def atomic(s):
            return "+" not in s and " - " not in s and "*" not in s

        nstr = num if atomic(num) else f"({num})"
        dstr = den if atomic(den) else f"({den})"
        return f"{nstr}/{dstr}"


def _poly_str(cs, shift=0, div=1):
    parts = []
    for e in range(len(cs) - 1, -1, -1):
        c = cs[e]
        if not c:
            continue
        if div != 1:
            if c % div:
                return None
            c //= div
        deg = e + shift
        if deg == 0:
            term = str(abs(c))
        else:
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            term = f"{mag}q" if deg == 1 else f"{mag}q^{deg}"
        if not parts:
            parts.append(("-" if c < 0 else "") + term)
        else:
            parts.append((" - " if c < 0 else " + ") + term)
    return "".join(parts) if parts else "0"


QZERO = QScalar(0)
QONE = QScalar(1)
Q_GEN = QScalar((0, 1))  # the parameter q itself


def from_int(k: int) -> QScalar:
    return QScalar(k)


def q_power(k: int) -> QScalar:
    """q**k for any integer k."""
    if k >= 0:
        return QScalar((0,) * k + (1,), PONE, _reduced=True)
    return QScalar(PONE, (0,) * (-k) + (1,), _reduced=True)


def q_integer(k: int) -> QScalar:
    """The balanced q-integer [k] = (q^k - q^-k)/(q - q^-1)."""
    if k < 0:
        return -q_integer(-k)
    if k == 0:
        return QZERO
    num = tuple(1 if i % 2 == 0 else 0 for i in range(2 * k - 1))
    return QScalar(num) * q_power(1 - k)


def q_binomial(m: int, k: int) -> QScalar:
    """The balanced q-binomial coefficient [m choose k]."""
    if k < 0:
        return QZERO
    out = QONE
    for j in range(1, k + 1):
        out = out * q_integer(m - j + 1) / q_integer(j)
    return out
