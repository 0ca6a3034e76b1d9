"""Independent verification of the middle-index commutation identity and the
theta-factor vanishing identities.

The identity equates, mode by mode, an x-indexed pair-of-deltas expression
(built directly from theta-factor products in the ring variables) with a
K-Theta expression (built directly from the generating rational functions).
Neither side goes through the operator evaluator, so this path is independent
of the generic relation checker; a separate consistency hook compares its
right-hand side with the checker's evaluation of the matching catalogued
relation.
"""

from __future__ import annotations

from functools import lru_cache

from ..combinat import Variant, blocks, enum_compositions
from ..exactring import (
    LaurentPoly,
    RatFn,
    expand_series,
    phi_product,
    q_integer,
    q_power,
    xvar,
)
from ..polyrep import ModuleElement, spanning_set
from .checker import CheckReport
from .terms import extract_mode


def _qc(k: int, nvars: int) -> RatFn:
    return RatFn(LaurentPoly.const(nvars, q_power(k)))


@lru_cache(maxsize=None)
def _middle_series(var: Variant, v, order: int):
    """Series coefficient lists of the two K-Theta rational functions at the
    middle indices, built straight from the theta-factor products."""
    d, n = var.d, var.n
    nv = d + 1
    I = blocks(var, v)
    aux_inv = RatFn(LaurentPoly.variable(d, nv)).reciprocal()
    g_n = phi_product(I[n - 1], _qc(1 - n, nv) * aux_inv, d) / phi_product(
        I[n], _qc(-1 - n, nv) * aux_inv, d
    )
    one = LaurentPoly.one(nv)
    z2 = LaurentPoly.variable(d, nv, 2)
    g_mid = (
        phi_product(I[n], _qc(-n, nv) * aux_inv, d)
        / phi_product(I[n + 1], _qc(-2 - n, nv) * aux_inv, d)
        * RatFn(one - z2.scale(q_power(2 * n)), one - z2.scale(q_power(2 * n + 2)))
    ).scale(q_power(1))
    return (
        tuple(expand_series(g_n, "zero", order)),
        tuple(expand_series(g_mid, "zero", order)),
    )


def _series_coeff(coeffs, m: int) -> LaurentPoly:
    if m < 0:
        return LaurentPoly.zero(coeffs[0].nvars)
    return coeffs[m]


def theta_lemma_sides(var: Variant, v, a: int, b: int):
    """Both sides of the middle-index identity at mode (a, b), as rational
    functions in the ring variables (the test vector is not yet applied)."""
    if var.kind != C_ODD:
        raise ValueError("the identity is stated for the odd variant")
    d, n = var.d, var.n
    I = blocks(var, v)
    lhs = RatFn.zero(d)
    for r in I[n - 1]:
        pre = LaurentPoly.zero(d)
        pre = pre + xvar(r, d, power=a - 1 - b).scale(
            q_power(n * (a - 1) + (n + 1) * b)
        )
        pre = pre - xvar(r, d, power=a + 1 - b).scale(
            q_power(n * a + (n + 1) * (b - 1) - 1)
        )
        xr = RatFn(xvar(r, d))
        term = phi_product([t for t in I[n - 1] if t != r], xr.scale(q_power(1)), d)
        term = term * phi_product(I[n], xr.reciprocal().scale(q_power(1)), d)
        lhs = lhs + term * RatFn(pre)
    for s in I[n]:
        pre = LaurentPoly.zero(d)
        pre = pre + xvar(s, d, power=b - a + 1).scale(
            q_power(n * (a - 1) + (n + 1) * b)
        )
        pre = pre - xvar(s, d, power=b - a - 1).scale(
            q_power(n * a + (n + 1) * (b - 1) - 1)
        )
        xs = RatFn(xvar(s, d))
        term = phi_product(I[n - 1], xs.reciprocal().scale(q_power(1)), d)
        term = term * phi_product([t for t in I[n] if t != s], xs.scale(q_power(1)), d)
        lhs = lhs - term * RatFn(pre)

    order = max(abs(a) + abs(b) + 2, 2)
    g_n, g_mid = _middle_series(var, v, order)
    rhs_poly = (
        _series_coeff(g_n, a - b + 1).scale(q_power((2 * n + 1) * (b - 1)))
        - _series_coeff(g_n, a - b - 1).scale(q_power((2 * n + 1) * b + 1))
        + _series_coeff(g_mid, b - a + 1).scale(q_power((2 * n + 1) * (a - 1)))
        - _series_coeff(g_mid, b - a - 1).scale(q_power((2 * n + 1) * a + 1))
    )
    scale = (q_power(0) - q_power(2)).inverse()
    return lhs, RatFn(rhs_poly.scale(scale))


def check_theta_lemma(
    var: Variant, mode_window: int = 2, degree_bound: int = 3, evaluator=None
):
    """Verify the middle-index identity mode-wise on spanning vectors, and
    (when an evaluator is supplied) that its right side agrees with the
    catalogued middle-index relation evaluated through the generic checker."""
    if var.kind != C_ODD:
        raise ValueError("the identity is stated for the odd variant")
    from .catalogue import build_instance

    n = var.n
    reports = []
    rel_rhs = build_instance(var, "R_BB_taum1", (n,)).clauses[0].rhs
    for v in enum_compositions(var):
        vectors = spanning_set(var, v, degree_bound)
        for a in range(-mode_window, mode_window + 1):
            for b in range(-mode_window, mode_window + 1):
                lhs, rhs = theta_lemma_sides(var, v, a, b)
                status = "pass"
                first = "*"
                extra = 0
                wl = wr = ""
                for idx, f in enumerate(vectors):
                    ff = RatFn(f)
                    if lhs * ff != rhs * ff:
                        if status == "pass":
                            status = "fail"
                            first = f"{','.join(map(str, v))}#{idx}"
                            wl, wr = repr(lhs * ff), repr(rhs * ff)
                        else:
                            extra += 1
                if evaluator is not None and status == "pass":
                    combo = extract_mode(rel_rhs, {"z": a, "w": b})
                    rhs_poly = rhs.as_laurent()
                    for idx, f in enumerate(vectors):
                        direct = ModuleElement.vector(var, v, rhs_poly * f)
                        via_ops = evaluator.eval_combination(
                            combo, ModuleElement.vector(var, v, f)
                        )
                        if direct != via_ops:
                            status = "fail"
                            first = f"{','.join(map(str, v))}#{idx}(paths)"
                            wl, wr = direct.render(), via_ops.render()
                            break
                reports.append(
                    CheckReport(
                        relation="L_theta_mid",
                        variant=var.kind,
                        n=var.n,
                        d=var.d,
                        params=(tuple(v),),
                        clause="lemma",
                        mode=(a, b),
                        status=status,
                        vectors=len(vectors),
                        vector_id=first,
                        extra_failures=extra,
                        witness_lhs=wl,
                        witness_rhs=wr,
                    )
                )
    return reports


def _theta1(u: RatFn) -> RatFn:
    from ..exactring import theta_factor

    return theta_factor(1, u)


def check_theta1_identities(d: int = 3):
    """The two vanishing combinations of theta factors in three independent
    variables, plus the two-term constant identity; all must be exactly zero."""
    if d < 3:
        raise ValueError("three independent variables are required")
    xr = RatFn(LaurentPoly.variable(0, d))
    xs = RatFn(LaurentPoly.variable(1, d))
    xt = RatFn(LaurentPoly.variable(2, d))
    two = q_integer(2)

    def th(u):
        return _theta1(u.scale(q_power(1)))

    one = RatFn.one(d)
    a = th(xt / xr)
    b = th(xt / xs)
    c = th(xr / xs)
    cinv = th(xs / xr)
    tr = th(xt * xr)
    ts = th(xt * xs)

    bracket = a * b - c * a - cinv * b + one
    full = (
        c * (a * tr * b * ts - (tr * a * ts).scale(two) + tr * ts)
        + cinv * (a * tr * b * ts - (b * tr * ts).scale(two) + tr * ts)
    )
    rr = th(xr * xr)
    second = (
        c * rr * c * th(xr * xs)
        + cinv * rr * c * th(xr * xs)
        - (c * th(xs * xr) * rr).scale(two)
    )
    const = th(xr) + th(xr.reciprocal()) - RatFn(LaurentPoly.const(d, two))

    checks = [
        ("theta1_bracket", bracket),
        ("theta1_first_vanishing", full),
        ("theta1_second_vanishing", second),
        ("theta1_two_term", const),
    ]
    reports = []
    for name, value in checks:
        ok = value.is_zero()
        reports.append(
            CheckReport(
                relation=name,
                variant="c-odd",
                n=0,
                d=d,
                params=(),
                clause="identity",
                mode=(),
                status="pass" if ok else "fail",
                vectors=1,
                witness_lhs="" if ok else repr(value),
            )
        )
    return reports
