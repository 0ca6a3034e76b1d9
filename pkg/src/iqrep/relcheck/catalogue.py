"""The catalogued generating-function relations.

Each relation is a family of clauses (pairs of term sums) parameterized by
generator indices, together with an applicability predicate.  Geometric
prefactors written (1 - alpha*mu)^(-1) are expanded in nonnegative powers of
mu exactly as written; denominators written (a*u - b*w) are factored as
a*u*(1 - (b/a)*w/u) first, preserving that convention.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..combinat import C_ODD, D_EVEN, Variant
from ..exactring import QONE, QScalar, q_integer, q_power
from .terms import (
    delta,
    geom,
    mono,
    one,
    opB,
    opK,
    opTheta,
    scal,
    sym_w1w2,
    tadd,
    tmul,
    tneg,
    tscale,
    tsub,
)

RELATION_IDS = (
    "R_KK",
    "R_KB",
    "R_TT",
    "R_BT",
    "R_BB_tau0",
    "R_BB_offdiag",
    "R_BB_comm",
    "R_Serre",
    "R_BB_taum1",
    "R_iSerre",
    "R_iSerre_simplified",
    "A_BnBn",
    "A_SerreN",
)


@dataclass(frozen=True)
class Clause:
    name: str
    variables: tuple
    lhs: tuple
    rhs: tuple

    @property
    def three_variable(self) -> bool:
        return len(self.variables) >= 3


@dataclass(frozen=True)
class RelationInstance:
    relation: str
    params: tuple
    clauses: tuple


def _q(k: int) -> QScalar:
    return q_power(k)


def _sym_series(i: int, j: int):
    """S_{i,j}(w1, w2 | z): the symmetrized two-B-one-B combination."""
    two = q_integer(2)
    inner = tadd(
        tmul(opB(i, "w1"), opB(i, "w2"), opB(j, "z")),
        tneg(tscale(tmul(opB(i, "w1"), opB(j, "z"), opB(i, "w2")), two)),
        tmul(opB(j, "z"), opB(i, "w1"), opB(i, "w2")),
    )
    return sym_w1w2(inner)


def _bt_prefactor(var: Variant, i: int, j: int):
    """The rational prefactor carried across B_j(w) Theta_i(z)."""
    C = var.central_scalar()
    c = var.cartan(i, j)
    ct = var.cartan(var.tau_node(i), j)
    num1 = tsub(one(), mono(_q(c), z=1, w=-1))
    num2 = tsub(one(), mono(_q(-ct) * C, z=1, w=1))
    den1 = geom(_q(-c), z=1, w=-1)
    den2 = geom(_q(ct) * C, z=1, w=1)
    return tmul(num1, num2, den1, den2)


def build_instance(var: Variant, rel: str, params: tuple) -> RelationInstance:
    n = var.n
    C = var.central_scalar()
    two = q_integer(2)
    qm1 = _q(1) - _q(-1)
    minus = QScalar(-1)

    if rel == "R_KK":
        i, j = params
        clauses = [
            Clause(
                "kk",
                (),
                tuple(tmul(opK(i), opK(j))),
                tuple(tmul(opK(j), opK(i))),
            ),
            Clause(
                "kkinv",
                (),
                tuple(tmul(opK(i), opK(i, -1))),
                tuple(one()),
            ),
            Clause(
                "ktheta",
                ("w",),
                tuple(tmul(opK(i), opTheta(j, "w"))),
                tuple(tmul(opTheta(j, "w"), opK(i))),
            ),
        ]
    elif rel == "R_KB":
        i, j = params
        scale = _q(var.cartan(var.tau_node(i), j) - var.cartan(i, j))
        clauses = [
            Clause(
                "kb",
                ("z",),
                tuple(tmul(opK(i), opB(j, "z"))),
                tuple(tscale(tmul(opB(j, "z"), opK(i)), scale)),
            )
        ]
    elif rel == "R_TT":
        i, j = params
        clauses = [
            Clause(
                "tt",
                ("z", "w"),
                tuple(tmul(opTheta(i, "z"), opTheta(j, "w"))),
                tuple(tmul(opTheta(j, "w"), opTheta(i, "z"))),
            )
        ]
    elif rel == "R_BT":
        i, j = params
        clauses = [
            Clause(
                "bt",
                ("z", "w"),
                tuple(tmul(opB(j, "w"), opTheta(i, "z"))),
                tuple(
                    tmul(
                        _bt_prefactor(var, i, j),
                        opTheta(i, "z"),
                        opB(j, "w"),
                    )
                ),
            )
        ]
    elif rel == "R_BB_tau0":
        (i,) = params
        ti = var.tau(i)
        lhs = tsub(
            tmul(opB(i, "z"), opB(ti, "w")), tmul(opB(ti, "w"), opB(i, "z"))
        )
        rhs = tmul(
            delta(C, z=1, w=1),
            tsub(
                tmul(opK(ti), opTheta(i, "z")),
                tmul(opK(i), opTheta(ti, "w")),
            ),
        )
        clauses = [
            Clause("bbtau0", ("z", "w"), tuple(lhs), tuple(tscale(rhs, qm1.inverse())))
        ]
    elif rel == "R_BB_offdiag":
        i, j = params
        c = _q(var.cartan(i, j))
        lhs = tadd(
            tmul(
                tsub(mono(c, z=1), mono(QONE, w=1)),
                opB(i, "z"),
                opB(j, "w"),
            ),
            tmul(
                tsub(mono(c, w=1), mono(QONE, z=1)),
                opB(j, "w"),
                opB(i, "z"),
            ),
        )
        clauses = [Clause("bboff", ("z", "w"), tuple(lhs), tuple(scal(QScalar(0))))]
    elif rel == "R_BB_comm":
        i, j = params
        clauses = [
            Clause(
                "bbcomm",
                ("z", "w"),
                tuple(tmul(opB(i, "w"), opB(j, "z"))),
                tuple(tmul(opB(j, "z"), opB(i, "w"))),
            )
        ]
    elif rel == "R_Serre":
        i, j = params
        clauses = [
            Clause(
                "serre",
                ("w1", "w2", "z"),
                tuple(_sym_series(i, j)),
                tuple(scal(QScalar(0))),
            )
        ]
    elif rel == "R_BB_taum1":
        (i,) = params
        ti = var.tau(i)
        lhs = tadd(
            tmul(
                tsub(mono(_q(-1), z=1), mono(QONE, w=1)),
                opB(i, "z"),
                opB(ti, "w"),
            ),
            tmul(
                tsub(mono(_q(-1), w=1), mono(QONE, z=1)),
                opB(ti, "w"),
                opB(i, "z"),
            ),
        )
        rhs = tmul(
            delta(C, z=1, w=1),
            tadd(
                tmul(tsub(mono(QONE, z=1), mono(_q(1), w=1)), opK(i), opTheta(ti, "w")),
                tmul(tsub(mono(QONE, w=1), mono(_q(1), z=1)), opK(ti), opTheta(i, "z")),
            ),
        )
        scale = (QONE - _q(2)).inverse()
        clauses = [
            Clause("bbtaum1", ("z", "w"), tuple(lhs), tuple(tscale(rhs, scale)))
        ]
    elif rel == "R_iSerre":
        (i,) = params
        ti = var.tau(i)
        lhs = tscale(_sym_series(i, ti), qm1)
        t1 = tscale(
            sym_w1w2(
                tmul(
                    delta(C, w2=1, z=1),
                    tsub(one(), mono(_q(1), w2=-1, z=1)),
                    geom(_q(-2), w1=1, w2=-1),
                    opB(i, "w1"),
                    opTheta(ti, "z"),
                    opK(i),
                )
            ),
            minus * _q(-1) * two,
        )
        t2 = tscale(
            sym_w1w2(
                tmul(
                    delta(C, w2=1, z=1),
                    tsub(one(), mono(_q(1), w2=-1, z=1)),
                    geom(_q(2), w1=1, w2=-1),
                    opTheta(ti, "z"),
                    opK(i),
                    opB(i, "w1"),
                )
            ),
            two,
        )
        t3 = tscale(
            sym_w1w2(
                tmul(
                    delta(C, w2=1, z=1),
                    tsub(mono(QONE, w1=-1, z=1), mono(_q(1), w1=-1, w2=1)),
                    geom(_q(2), w1=-1, w2=1),
                    opB(i, "w1"),
                    opTheta(i, "w2"),
                    opK(ti),
                )
            ),
            _q(1) * two,
        )
        t4 = tscale(
            sym_w1w2(
                tmul(
                    delta(C, w2=1, z=1),
                    tsub(mono(_q(1), w1=-1, w2=1), mono(QONE, w1=-1, z=1)),
                    geom(_q(-2), w1=-1, w2=1),
                    opTheta(i, "w2"),
                    opK(ti),
                    opB(i, "w1"),
                )
            ),
            _q(-2) * two,
        )
        clauses = [
            Clause(
                "iserre",
                ("w1", "w2", "z"),
                tuple(lhs),
                tuple(tadd(t1, t2, t3, t4)),
            )
        ]
    elif rel == "R_iSerre_simplified":
        (i,) = params
        ti = var.tau(i)
        lhs = tscale(_sym_series(i, ti), qm1)
        # The two summands inherit different expansion directions from their
        # derivations.  For the Theta-on-z half:
        #   1/(q^2 w2 - w1) = q^-2 w2^-1 / (1 - q^-2 w1 w2^-1)
        #   1/(q w1 - z)    = q^-1 w1^-1 / (1 - q^-1 z w1^-1)
        denoms_z = tmul(
            mono(_q(-3), w2=-1, w1=-1),
            geom(_q(-2), w1=1, w2=-1),
            geom(_q(-1), z=1, w1=-1),
        )
        # For the Theta-on-w2 half:
        #   1/(q^2 w2 - w1) = -w1^-1 / (1 - q^2 w2 w1^-1)
        #   1/(q w1 - z)    = -z^-1  / (1 - q w1 z^-1)
        denoms_w2 = tmul(
            mono(QONE, w1=-1, z=-1),
            geom(_q(2), w2=1, w1=-1),
            geom(_q(1), w1=1, z=-1),
        )
        t1 = tscale(
            sym_w1w2(
                tmul(
                    delta(C, w2=1, z=1),
                    tsub(mono(QONE, w2=1), mono(_q(1), z=1)),
                    mono(QONE, w1=1),
                    denoms_z,
                    opB(i, "w1"),
                    opTheta(ti, "z"),
                    opK(i),
                )
            ),
            (QONE - _q(2)) * two,
        )
        t2 = tscale(
            sym_w1w2(
                tmul(
                    delta(C, w2=1, z=1),
                    tsub(mono(_q(1), w2=1), mono(QONE, z=1)),
                    mono(QONE, w1=1),
                    denoms_w2,
                    opB(i, "w1"),
                    opTheta(i, "w2"),
                    opK(ti),
                )
            ),
            (_q(2) - QONE) * two,
        )
        clauses = [
            Clause(
                "iserre_s",
                ("w1", "w2", "z"),
                tuple(lhs),
                tuple(tadd(t1, t2)),
            )
        ]
    elif rel == "A_BnBn":
        (i,) = params
        lhs = tadd(
            tmul(
                tsub(mono(_q(2), z=1), mono(QONE, w=1)),
                opB(n, "z"),
                opB(n, "w"),
            ),
            tmul(
                tsub(mono(_q(2), w=1), mono(QONE, z=1)),
                opB(n, "w"),
                opB(n, "z"),
            ),
        )
        rhs = tmul(
            delta(C, z=1, w=1),
            opK(n),
            tadd(
                tmul(tsub(mono(QONE, z=1), mono(_q(-2), w=1)), opTheta(n, "w")),
                tmul(tsub(mono(QONE, w=1), mono(_q(-2), z=1)), opTheta(n, "z")),
            ),
        )
        clauses = [
            Clause("abnbn", ("z", "w"), tuple(lhs), tuple(tscale(rhs, qm1.inverse())))
        ]
    elif rel == "A_SerreN":
        (j,) = params
        lhs = _sym_series(n, j)
        qc2 = _q(-2)

        def comm_q(a, b):
            return tsub(tmul(a, b), tscale(tmul(b, a), qc2))

        inner = tadd(
            tmul(
                mono(two, z=1, w1=-1),
                geom(_q(2), w2=1, w1=-1),
                comm_q(opTheta(n, "w2"), opB(j, "z")),
            ),
            tmul(
                tadd(one(), mono(QONE, w2=1, w1=-1)),
                geom(_q(2), w2=1, w1=-1),
                comm_q(opB(j, "z"), opTheta(n, "w2")),
            ),
        )
        rhs = tscale(
            tmul(opK(n), delta(C, w1=1, w2=1), sym_w1w2(inner)),
            minus * qm1.inverse(),
        )
        clauses = [
            Clause("aserren", ("w1", "w2", "z"), tuple(lhs), tuple(rhs))
        ]
    else:
        raise ValueError(f"unknown relation id {rel!r}")
    return RelationInstance(rel, params, tuple(clauses))


def applicable_params(var: Variant, rel: str):
    """All parameter tuples for which the relation is catalogued."""
    n, N = var.n, var.N
    gens = range(1, N)
    out = []
    if rel in ("R_KK", "R_KB", "R_TT", "R_BT"):
        out = [(i, j) for i in gens for j in gens]
    elif rel == "R_BB_tau0":
        out = [(i,) for i in gens if var.cartan(i, var.tau(i)) == 0]
    elif rel == "R_BB_offdiag":
        out = [(i, j) for i in gens for j in gens if j != var.tau(i)]
    elif rel == "R_BB_comm":
        out = [
            (i, j)
            for i in gens
            for j in gens
            if var.cartan(i, j) == 0 and var.tau(i) != j
        ]
    elif rel == "R_Serre":
        out = [
            (i, j)
            for i in gens
            for j in gens
            if var.cartan(i, j) == -1 and j != var.tau(i) and var.tau(i) != i
        ]
    elif rel in ("R_BB_taum1", "R_iSerre", "R_iSerre_simplified"):
        if var.kind == C_ODD:
            out = [(i,) for i in gens if var.cartan(i, var.tau(i)) == -1]
    elif rel == "A_BnBn":
        if var.kind == D_EVEN:
            out = [(n,)]
    elif rel == "A_SerreN":
        if var.kind == D_EVEN:
            out = [(j,) for j in (n - 1, n + 1) if 1 <= j <= N - 1]
    else:
        raise ValueError(f"unknown relation id {rel!r}")
    return tuple(out)


def suite_relations(var: Variant):
    """The relation ids catalogued for a variant, in canonical order."""
    if var.kind == C_ODD:
        return tuple(r for r in RELATION_IDS if r not in ("A_BnBn", "A_SerreN"))
    return tuple(
        r
        for r in RELATION_IDS
        if r not in ("R_BB_taum1", "R_iSerre", "R_iSerre_simplified")
    )
