"""Relation catalogue, formal-distribution term model, mode extraction, and
exact verification on spanning vectors."""

from .catalogue import (
    RELATION_IDS,
    Clause,
    RelationInstance,
    applicable_params,
    build_instance,
    suite_relations,
)
from .checker import (
    CheckReport,
    Evaluator,
    check_relation,
    run_relation_suite,
    select_vectors,
    summarize,
)
from .terms import (
    Term,
    UnboundedExtractionError,
    delta,
    extract_mode,
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
from .theta import check_theta1_identities, check_theta_lemma, theta_lemma_sides

__all__ = [
    "CheckReport",
    "Clause",
    "Evaluator",
    "RELATION_IDS",
    "RelationInstance",
    "Term",
    "UnboundedExtractionError",
    "applicable_params",
    "build_instance",
    "check_relation",
    "check_theta1_identities",
    "check_theta_lemma",
    "delta",
    "extract_mode",
    "geom",
    "mono",
    "one",
    "opB",
    "opK",
    "opTheta",
    "run_relation_suite",
    "scal",
    "select_vectors",
    "suite_relations",
    "summarize",
    "sym_w1w2",
    "tadd",
    "theta_lemma_sides",
    "tmul",
    "tneg",
    "tscale",
    "tsub",
]
