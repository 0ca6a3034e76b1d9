"""Theta factors, Phi products, and one-variable series expansion.

The auxiliary series variable is always the *last* variable of the ambient
Laurent ring; expansion coefficients are returned with it dropped.
"""

from __future__ import annotations

from .laurent import LaurentPoly, RatFn, divide_exact, xvar
from .scalars import q_power


class ExpansionError(ArithmeticError):
    """Series expansion impossible under the stated contract."""


def theta_factor(m: int, u: RatFn) -> RatFn:
    """theta_m(u) = (q^m*u - 1)/(u - q^m), with no attempt at cancellation."""
    qm = q_power(m)
    return RatFn(u.num.scale(qm) - u.den, u.num - u.den.scale(qm))


def phi_product(indices, u: RatFn, d: int) -> RatFn:
    """Prod over t in ``indices`` of theta_1(u / x_t).

    Indices live in {1..2d} and are resolved through the mirror rule; the
    ambient ring of ``u`` (which may carry a trailing series variable) is
    respected.
    """
    out = RatFn.one(u.nvars)
    for t in indices:
        xt = RatFn(xvar(t, d, u.nvars))
        out = out * theta_factor(1, u / xt)
    return out


def expand_series(r: RatFn, point: str, order: int):
    """Exact series coefficients c_0..c_order of ``r`` in its last variable.

    ``point`` is "zero" (expansion in nonnegative powers) or "infinity"
    (nonpositive powers; c_k is then the coefficient of z^-k).  The expansion
    must have no pole at the chosen point, and every requested coefficient
    must be a Laurent polynomial; otherwise ExpansionError is raised.
    """
    if order < 0:
        raise ValueError("negative truncation order")
    if point == "infinity":
        flip = lambda f: LaurentPoly(
            f.nvars,
            {e[:-1] + (-e[-1],): c for e, c in f.terms.items()},
            _clean=True,
        )
        r = RatFn(flip(r.num), flip(r.den))
    elif point != "zero":
        raise ValueError("expansion point must be 'zero' or 'infinity'")

    nvars = r.nvars
    zero_coeff = LaurentPoly.zero(nvars - 1)
    if r.num.is_zero():
        return [zero_coeff] * (order + 1)

    num_c = r.num.coeffs_in_last_var()
    den_c = r.den.coeffs_in_last_var()
    v_den = min(den_c)
    v_num = min(num_c)
    if v_num < v_den:
        raise ExpansionError("pole at the expansion point")
    dlow = den_c[v_den]
    coeffs = []
    for k in range(order + 1):
        acc = num_c.get(k + v_den, zero_coeff)
        for t, prev in enumerate(coeffs):
            dt = den_c.get(v_den + k - t)
            if dt is not None and not prev.is_zero():
                acc = acc - dt * prev
        if acc.is_zero():
            coeffs.append(zero_coeff)
            continue
        q = divide_exact(acc, dlow)
        if q is None:
            raise ExpansionError(
                "series coefficient is not a Laurent polynomial "
                "(lowest denominator coefficient is not invertible here)"
            )
        coeffs.append(q)
    return coeffs


def series_multiply(a, b, order: int):
    """Truncated product of two coefficient lists (index = power)."""
    n = min(order + 1, len(a) + len(b) - 1) if a and b else 0
    if not a or not b:
        return []
    zero = LaurentPoly.zero(a[0].nvars)
    out = [zero] * (order + 1)
    for i, ca in enumerate(a):
        if ca.is_zero() or i > order:
            continue
        for j, cb in enumerate(b):
            if i + j > order:
                break
            if not cb.is_zero():
                out[i + j] = out[i + j] + ca * cb
    return out
