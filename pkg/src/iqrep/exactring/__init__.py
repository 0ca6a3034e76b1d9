"""Exact arithmetic layer: Q(q) scalars, Laurent polynomials, rational
functions, signed-permutation actions, coset sums, and series expansion."""

from .laurent import (
    DenominatorError,
    LaurentPoly,
    RatFn,
    divide_exact,
    resolve_index,
    xvar,
)
from .scalars import (
    QONE,
    QZERO,
    Q_GEN,
    QScalar,
    from_int,
    q_binomial,
    q_integer,
    q_power,
)
from .series import ExpansionError, expand_series, phi_product, series_multiply, theta_factor
from .textforms import (
    SERIAL_VERSION,
    laurent_from_json,
    laurent_to_json,
    qscalar_from_json,
    qscalar_to_json,
    render_laurent,
    render_qscalar,
)
from .weyl import ParabolicSpec, WeylElement, coset_symmetrize, weyl_act

__all__ = [
    "DenominatorError",
    "ExpansionError",
    "LaurentPoly",
    "ParabolicSpec",
    "QONE",
    "QZERO",
    "Q_GEN",
    "QScalar",
    "RatFn",
    "SERIAL_VERSION",
    "WeylElement",
    "coset_symmetrize",
    "divide_exact",
    "expand_series",
    "from_int",
    "laurent_from_json",
    "laurent_to_json",
    "phi_product",
    "q_binomial",
    "q_integer",
    "q_power",
    "qscalar_from_json",
    "qscalar_to_json",
    "render_laurent",
    "render_qscalar",
    "resolve_index",
    "series_multiply",
    "theta_factor",
    "weyl_act",
    "xvar",
]
