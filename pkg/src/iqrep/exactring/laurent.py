"""Sparse multivariate Laurent polynomials over Q(q), and their fractions.

A ``LaurentPoly`` in ``nvars`` variables maps exponent vectors in Z^nvars to
nonzero ``QScalar`` coefficients.  Only the first d variables x_1..x_d of the
ambient 2d-variable coordinate system are ever stored: a reference to the
mirror variable x_{r'} with r' = 2d+1-r is resolved to exponent -1 on
x_{2d+1-r} at construction time, so the identification x_{r'} = x_r^{-1} can
never be violated downstream.

``RatFn`` is a quotient of two Laurent polynomials.  Equality is decided by
cross-multiplication; a best-effort monomial normalization keeps term counts
bounded but no multivariate gcd is attempted.
"""

from __future__ import annotations

from .scalars import QONE, QZERO, QScalar


class DenominatorError(ArithmeticError):
    """A rational function failed to reduce to a Laurent polynomial."""


class LaurentPoly:
    """Immutable sparse Laurent polynomial over Q(q).

    >>> x = LaurentPoly.variable(0, 1)
    >>> print((x + x.inv_var(0)) * x)
    x1^2 + 1
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms=None, *, _clean=False):
        self.nvars = nvars
        if terms is None:
            terms = {}
        if not _clean:
            terms = {e: c for e, c in terms.items() if not c.is_zero()}
        self.terms = terms
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {}, _clean=True)

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: QONE}, _clean=True)

    @classmethod
    def const(cls, nvars: int, c: QScalar) -> "LaurentPoly":
        if c.is_zero():
            return cls.zero(nvars)
        return cls(nvars, {(0,) * nvars: c}, _clean=True)

    @classmethod
    def monomial(cls, exps, c: QScalar = QONE) -> "LaurentPoly":
        if c.is_zero():
            return cls.zero(len(exps))
        return cls(len(exps), {tuple(exps): c}, _clean=True)

    @classmethod
    def variable(cls, index: int, nvars: int, power: int = 1) -> "LaurentPoly":
        e = [0] * nvars
        e[index] = power
        return cls.monomial(tuple(e))

    def inv_var(self, index: int) -> "LaurentPoly":
        return LaurentPoly.variable(index, self.nvars, -1)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        if len(self.terms) != 1:
            return False
        ((e, c),) = self.terms.items()
        return c.is_one() and not any(e)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return h

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            cur = out.get(e)
            if cur is None:
                out[e] = c
            else:
                s = cur + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
        return LaurentPoly(self.nvars, out, _clean=True)

    def __neg__(self):
        return LaurentPoly(
            self.nvars, {e: -c for e, c in self.terms.items()}, _clean=True
        )

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.terms or not other.terms:
            return LaurentPoly.zero(self.nvars)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(i + j for i, j in zip(ea, eb))
                p = ca * cb
                cur = out.get(e)
                if cur is None:
                    out[e] = p
                else:
                    s = cur + p
                    if s.is_zero():
                        del out[e]
                    else:
                        out[e] = s
        return LaurentPoly(self.nvars, out, _clean=True)

    def scale(self, c: QScalar) -> "LaurentPoly":
        if c.is_zero():
            return LaurentPoly.zero(self.nvars)
        if c.is_one():
            return self
        return LaurentPoly(
            self.nvars, {e: k * c for e, k in self.terms.items()}, _clean=True
        )

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials are invertible")
            ((e, c),) = self.terms.items()
            return LaurentPoly.monomial(tuple(-x for x in e), c.inverse()) ** (-k)
        out = LaurentPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- structure helpers ---------------------------------------------------

    def substitute_signed(self, images) -> "LaurentPoly":
        """Replace variable k by x_{|images[k]|}^{sign(images[k])} (1-based)."""
        out: dict = {}
        n = self.nvars
        for e, c in self.terms.items():
            ne = [0] * n
            for k, ek in enumerate(e):
                if ek:
                    img = images[k]
                    if img > 0:
                        ne[img - 1] += ek
                    else:
                        ne[-img - 1] -= ek
            ne = tuple(ne)
            cur = out.get(ne)
            if cur is None:
                out[ne] = c
            else:
                s = cur + c
                if s.is_zero():
                    del out[ne]
                else:
                    out[ne] = s
        return LaurentPoly(n, out, _clean=True)

    def lift(self, extra: int = 1) -> "LaurentPoly":
        """View in nvars+extra variables (new trailing variables unused)."""
        pad = (0,) * extra
        return LaurentPoly(
            self.nvars + extra,
            {e + pad: c for e, c in self.terms.items()},
            _clean=True,
        )

    def drop_last_var(self) -> "LaurentPoly":
        """Forget a trailing variable that occurs with exponent 0 everywhere."""
        for e in self.terms:
            if e[-1]:
                raise ValueError("trailing variable occurs with nonzero exponent")
        return LaurentPoly(
            self.nvars - 1, {e[:-1]: c for e, c in self.terms.items()}, _clean=True
        )

    def coeffs_in_last_var(self) -> dict:
        """Split into {exponent of last variable: LaurentPoly in the rest}."""
        out: dict = {}
        for e, c in self.terms.items():
            out.setdefault(e[-1], {})[e[:-1]] = c
        return {
            k: LaurentPoly(self.nvars - 1, d, _clean=True)
            for k, d in sorted(out.items())
        }

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def leading(self):
        """Leading (exponent, coefficient) under degree-then-lex order."""
        e = max(self.terms, key=lambda t: (sum(t), t))
        return e, self.terms[e]

    def exponent_range(self):
        """Per-variable (min, max) exponent over the support."""
        lo = [0] * self.nvars
        hi = [0] * self.nvars
        first = True
        for e in self.terms:
            if first:
                lo, hi = list(e), list(e)
                first = False
            else:
                for k, x in enumerate(e):
                    if x < lo[k]:
                        lo[k] = x
                    elif x > hi[k]:
                        hi[k] = x
        return lo, hi

    def __repr__(self):
        from .textforms import render_laurent

        return f"LaurentPoly({self.nvars}, '{render_laurent(self)}')"

    def __str__(self):
        from .textforms import render_laurent

        return render_laurent(self)


def resolve_index(r: int, d: int):
    """Map a coordinate index 1..2d to (0-based variable, exponent sign)."""
    if not 1 <= r <= 2 * d:
        raise ValueError(f"coordinate index {r} outside [1, {2*d}]")
    if r <= d:
        return r - 1, 1
    return 2 * d - r, -1


def xvar(r: int, d: int, nvars=None, power: int = 1) -> LaurentPoly:
    """The coordinate x_r (1 <= r <= 2d) as a Laurent monomial."""
    idx, sign = resolve_index(r, d)
    return LaurentPoly.variable(idx, nvars if nvars is not None else d, sign * power)


def divide_exact(f: LaurentPoly, g: LaurentPoly):
    """Exact quotient f/g in the Laurent ring, or None if g does not divide f.

    Uses leading-term reduction under a degree-then-lex order with the
    quotient support confined to the Newton-box f - g, which guarantees
    termination over Laurent exponents.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return LaurentPoly.zero(f.nvars)
    if g.is_monomial():
        ((eg, cg),) = g.terms.items()
        inv = cg.inverse()
        return LaurentPoly(
            f.nvars,
            {
                tuple(i - j for i, j in zip(e, eg)): c * inv
                for e, c in f.terms.items()
            },
            _clean=True,
        )
    flo, fhi = f.exponent_range()
    glo, ghi = g.exponent_range()
    box_lo = [a - b for a, b in zip(flo, ghi)]
    box_hi = [a - b for a, b in zip(fhi, glo)]
    eg, cg = g.leading()
    cg_inv = cg.inverse()
    rem = f
    quot: dict = {}
    while not rem.is_zero():
        er, cr = rem.leading()
        eq = tuple(i - j for i, j in zip(er, eg))
        if any(x < lo or x > hi for x, lo, hi in zip(eq, box_lo, box_hi)):
            return None
        cq = cr * cg_inv
        quot[eq] = quot.get(eq, QZERO) + cq
        rem = rem - LaurentPoly.monomial(eq, cq) * g
    return LaurentPoly(f.nvars, quot)


class RatFn:
    """Quotient of two Laurent polynomials; equality by cross-multiplication.

    The denominator is normalized so its leading term is 1 (a harmless unit
    rescale), which keeps representations stable without multivariate gcd.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        if den is None:
            den = LaurentPoly.one(num.nvars)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = LaurentPoly.zero(num.nvars), LaurentPoly.one(num.nvars)
        elif den.is_monomial():
            num = divide_exact(num, den)
            den = LaurentPoly.one(num.nvars)
        else:
            ed, cd = den.leading()
            unit = LaurentPoly.monomial(ed, cd)
            num = divide_exact(num, unit)
            den = divide_exact(den, unit)
        self.num = num
        self.den = den

    @classmethod
    def from_laurent(cls, f: LaurentPoly) -> "RatFn":
        return cls(f)

    @classmethod
    def one(cls, nvars: int) -> "RatFn":
        return cls(LaurentPoly.one(nvars))

    @classmethod
    def zero(cls, nvars: int) -> "RatFn":
        return cls(LaurentPoly.zero(nvars))

    @property
    def nvars(self) -> int:
        return self.num.nvars

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, RatFn):
            return NotImplemented
        return (self.num * other.den) == (other.num * self.den)

    def __add__(self, other):
        if not isinstance(other, RatFn):
            return NotImplemented
        if self.den == other.den:
            return RatFn(self.num + other.num, self.den)
        return RatFn(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __neg__(self):
        return RatFn(-self.num, self.den)

    def __sub__(self, other):
        if not isinstance(other, RatFn):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, RatFn):
            return NotImplemented
        return RatFn(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if not isinstance(other, RatFn):
            return NotImplemented
        return self * other.reciprocal()

    def reciprocal(self) -> "RatFn":
        if self.num.is_zero():
            raise ZeroDivisionError("reciprocal of zero")
        return RatFn(self.den, self.num)

    def scale(self, c: QScalar) -> "RatFn":
        return RatFn(self.num.scale(c), self.den)

    def __pow__(self, k: int):
        out = RatFn.one(self.nvars)
        base = self if k >= 0 else self.reciprocal()
        for _ in range(abs(k)):
            out = out * base
        return out

    def substitute_signed(self, images) -> "RatFn":
        return RatFn(
            self.num.substitute_signed(images), self.den.substitute_signed(images)
        )

    def as_laurent(self) -> LaurentPoly:
        """Collapse to a Laurent polynomial; DenominatorError if impossible."""
        if self.den.is_one():
            return self.num
        q = divide_exact(self.num, self.den)
        if q is None:
            raise DenominatorError(
                "denominator does not cancel: " f"({self.num}) / ({self.den})"
            )
        return q

    def try_laurent(self):
        if self.den.is_one():
            return self.num
        return divide_exact(self.num, self.den)

    def __repr__(self):
        return f"RatFn(({self.num}) / ({self.den}))"
