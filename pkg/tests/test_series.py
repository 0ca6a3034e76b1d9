"""Theta factors, Phi products, and series expansion, with an independent
sympy long-division oracle for the derived expected values."""

import pytest
import sympy
from conftest import Q, laurent_to_sympy, ratfn_to_sympy, sym_zero
from hypothesis import given, settings
from hypothesis import strategies as st

from iqrep.exactring import (
    ExpansionError,
    LaurentPoly,
    QScalar,
    RatFn,
    expand_series,
    phi_product,
    q_integer,
    q_power,
    series_multiply,
    theta_factor,
)


def _const(nvars, c):
    return RatFn(LaurentPoly.const(nvars, c))


def test_theta_at_one():
    one = RatFn.one(1)
    for m in (1, 2, 3):
        assert theta_factor(m, one) == _const(1, QScalar(-1))


def test_theta_inverse_identity():
    # theta_1(z)^-1 = theta_1(z^-1)
    z = RatFn(LaurentPoly.variable(0, 1))
    assert theta_factor(1, z).reciprocal() == theta_factor(1, z.reciprocal())


def test_theta_two_term_identity():
    # theta_1(qz) + theta_1(q z^-1) = [2]
    z = RatFn(LaurentPoly.variable(0, 1))
    lhs = theta_factor(1, z.scale(q_power(1))) + theta_factor(
        1, z.reciprocal().scale(q_power(1))
    )
    assert lhs == _const(1, q_integer(2))


def test_phi_empty_product():
    u = RatFn(LaurentPoly.variable(0, 1))
    assert phi_product([], u, 1) == RatFn.one(1)


def test_phi_single_factor_example():
    # Phi_{1}(q x_2) = (q^2 x_2 - x_1) / (q x_2 - q x_1)
    d = 2
    x1 = LaurentPoly.variable(0, d)
    x2 = LaurentPoly.variable(1, d)
    u = RatFn(x2.scale(q_power(1)))
    out = phi_product([1], u, d)
    expected = RatFn(x2.scale(q_power(2)) - x1, (x2 - x1).scale(q_power(1)))
    assert out == expected


def test_phi_definition_unrolling():
    d = 2
    nv = d + 1
    z = RatFn(LaurentPoly.variable(d, nv))
    assert phi_product([1, 2], z, d) == theta_factor(
        1, z / RatFn(LaurentPoly.variable(0, nv))
    ) * theta_factor(1, z / RatFn(LaurentPoly.variable(1, nv)))


def _sympy_series_oracle(rf: RatFn, xsyms, order):
    """Independent expansion oracle: sympy series division at z = 0."""
    z = sympy.Symbol("zz")
    expr = ratfn_to_sympy(rf, xsyms + [z])
    series = sympy.series(expr, z, 0, order + 1).removeO()
    return [sympy.expand(series.coeff(z, k)) for k in range(order + 1)]


def test_expand_geometric():
    # 1/(1 - qz) at zero: [1, q, q^2]
    nv = 1
    one = LaurentPoly.one(nv)
    z = LaurentPoly.variable(0, nv)
    r = RatFn(one, one - z.scale(q_power(1)))
    out = expand_series(r, "zero", 2)
    assert [str(c) for c in out] == ["1", "q", "q^2"]


def test_expand_derived_examples_against_oracle():
    # (q - x1 z)/(1 - q x1 z) at zero, order 1 -> [q, (q^2-1) x1]
    nv = 2
    one = LaurentPoly.one(nv)
    x1 = LaurentPoly.variable(0, nv)
    z = LaurentPoly.variable(1, nv)
    r = RatFn(one.scale(q_power(1)) - x1 * z, one - (x1 * z).scale(q_power(1)))
    out = expand_series(r, "zero", 1)
    x1s = sympy.Symbol("x1")
    oracle = _sympy_series_oracle(r, [x1s], 1)
    for mine, ref in zip(out, oracle):
        assert sym_zero(laurent_to_sympy(mine, [x1s]) - ref)
    assert str(out[0]) == "q"
    assert str(out[1]) == "(q^2 - 1)*x1"

    # (1 - q^-1 x1 z)/(1 - q x1 z) at zero, order 2
    r2 = RatFn(one - (x1 * z).scale(q_power(-1)), one - (x1 * z).scale(q_power(1)))
    out2 = expand_series(r2, "zero", 2)
    oracle2 = _sympy_series_oracle(r2, [x1s], 2)
    for mine, ref in zip(out2, oracle2):
        assert sym_zero(laurent_to_sympy(mine, [x1s]) - ref)
    assert str(out2[1]) == "(q - q^-1)*x1"
    assert str(out2[2]) == "(q^2 - 1)*x1^2"


def test_expand_at_infinity():
    # z/(z - q) at infinity: geometric in z^-1: coefficients q^k
    nv = 1
    z = LaurentPoly.variable(0, nv)
    r = RatFn(z, z - LaurentPoly.const(nv, q_power(1)))
    out = expand_series(r, "infinity", 3)
    assert [str(c) for c in out] == ["1", "q", "q^2", "q^3"]


def test_expand_pole_raises():
    nv = 1
    one = LaurentPoly.one(nv)
    z = LaurentPoly.variable(0, nv)
    with pytest.raises(ExpansionError):
        expand_series(RatFn(one, z), "zero", 1)


coeffs = st.builds(
    QScalar,
    st.lists(st.integers(-4, 4), min_size=1, max_size=2).map(tuple),
    st.just((1,)),
)


@st.composite
def unit_low_ratfns(draw):
    """Rational functions in (x1, z) whose denominator has a unit z-constant."""
    nv = 2
    exps = st.tuples(st.integers(-2, 2), st.integers(0, 2))
    num = draw(st.dictionaries(exps, coeffs, min_size=0, max_size=3))
    den = draw(st.dictionaries(exps.filter(lambda e: e[1] > 0), coeffs, max_size=2))
    den[(draw(st.integers(-1, 1)), 0)] = QScalar((1,))
    return RatFn(LaurentPoly(nv, num), LaurentPoly(nv, den))


@settings(max_examples=60, deadline=None)
@given(unit_low_ratfns(), unit_low_ratfns())
def test_expansion_is_multiplicative(a, b):
    order = 3
    ca = expand_series(a, "zero", order)
    cb = expand_series(b, "zero", order)
    cprod = expand_series(a * b, "zero", order)
    ref = series_multiply(ca, cb, order)
    assert cprod == ref
