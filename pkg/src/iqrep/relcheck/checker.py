"""Relation verification on spanning vectors, with cached operator words.

Reports are aggregated per (relation, params, clause, mode): a passing report
covers every test vector at that mode; a failing one carries the first
failing vector id and both sides' canonical renderings, with any further
failures at the same mode only counted.
"""

from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass, field

from ..combinat import Variant
from ..polyrep import (
    ModuleElement,
    apply_B,
    apply_H,
    apply_K,
    apply_Kinv,
    apply_theta,
    spanning_vectors,
)
from .catalogue import applicable_params, build_instance, suite_relations
from .terms import extract_mode


@dataclass(frozen=True)
class CheckReport:
    relation: str
    variant: str
    n: int
    d: int
    params: tuple
    clause: str
    mode: tuple
    status: str  # "pass" | "fail"
    vectors: int
    vector_id: str = "*"
    extra_failures: int = 0
    witness_lhs: str = ""
    witness_rhs: str = ""

    def key(self):
        return (self.relation, self.params, self.clause, self.mode, self.vector_id)

    def to_json(self) -> dict:
        out = {
            "relation": self.relation,
            "variant": self.variant,
            "n": self.n,
            "d": self.d,
            "params": list(self.params),
            "clause": self.clause,
            "mode": list(self.mode),
            "status": self.status,
            "vectors": self.vectors,
            "vector_id": self.vector_id,
        }
        if self.status == "fail":
            out["extra_failures"] = self.extra_failures
            out["witness_lhs"] = self.witness_lhs
            out["witness_rhs"] = self.witness_rhs
        return out


class Evaluator:
    """Applies operator words to module elements with memoization."""

    def __init__(self, variant: Variant):
        self.variant = variant
        self._cache: dict = {}
        self.op_count = 0
        self.b_count = 0

    def apply_op(self, op, elem: ModuleElement) -> ModuleElement:
        key = (op, elem)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        kind = op[0]
        self.op_count += 1
        if kind == "B":
            self.b_count += 1
            out = apply_B(self.variant, op[1], op[2], elem)
        elif kind == "T":
            out = apply_theta(self.variant, op[1], op[2], elem)
        elif kind == "K":
            if op[2] >= 0:
                out = apply_K(self.variant, op[1], elem)
                for _ in range(op[2] - 1):
                    out = apply_K(self.variant, op[1], out)
            else:
                out = apply_Kinv(self.variant, op[1], elem)
                for _ in range(-op[2] - 1):
                    out = apply_Kinv(self.variant, op[1], out)
        elif kind == "H":
            out = apply_H(self.variant, op[1], op[2], elem)
        else:
            raise ValueError(f"unknown operator kind {kind!r}")
        self._cache[key] = out
        return out

    def eval_word(self, word, elem: ModuleElement) -> ModuleElement:
        for op in reversed(word):
            if elem.is_zero():
                return elem
            elem = self.apply_op(op, elem)
        return elem

    def eval_combination(self, combo, elem: ModuleElement) -> ModuleElement:
        acc = ModuleElement.zero(self.variant)
        for scalar, word in combo:
            val = self.eval_word(word, elem)
            if not val.is_zero():
                acc = acc + val.scale(scalar)
        return acc


def _modes(variables, window: int):
    if not variables:
        return [()]
    return list(itertools.product(range(-window, window + 1), repeat=len(variables)))


def check_relation(
    evaluator: Evaluator,
    rel: str,
    params: tuple,
    mode_window: int,
    vectors,
):
    """Verify one catalogued relation instance at every mode of the window on
    every vector; returns aggregated CheckReports."""
    var = evaluator.variant
    inst = build_instance(var, rel, params)
    reports = []
    for clause in inst.clauses:
        window = min(mode_window, 1) if clause.three_variable else mode_window
        for mode in _modes(clause.variables, window):
            degrees = dict(zip(clause.variables, mode))
            lhs_combo = extract_mode(clause.lhs, degrees)
            rhs_combo = extract_mode(clause.rhs, degrees)
            status = "pass"
            first_id = "*"
            extra = 0
            wit_l = wit_r = ""
            if lhs_combo or rhs_combo:
                for vid, vec in vectors:
                    lv = evaluator.eval_combination(lhs_combo, vec)
                    rv = evaluator.eval_combination(rhs_combo, vec)
                    if lv != rv:
                        if status == "pass":
                            status = "fail"
                            first_id = vid
                            wit_l = lv.render()
                            wit_r = rv.render()
                        else:
                            extra += 1
            reports.append(
                CheckReport(
                    relation=rel,
                    variant=var.kind,
                    n=var.n,
                    d=var.d,
                    params=params,
                    clause=clause.name,
                    mode=mode,
                    status=status,
                    vectors=len(vectors),
                    vector_id=first_id,
                    extra_failures=extra,
                    witness_lhs=wit_l,
                    witness_rhs=wit_r,
                )
            )
    return reports


def select_vectors(var: Variant, degree_bound: int, seed: int, max_vectors: int):
    """The deterministic spanning vectors, optionally subsampled with the
    seeded generator when a cap is requested."""
    vectors = spanning_vectors(var, degree_bound)
    if max_vectors and 0 < max_vectors < len(vectors):
        rng = random.Random(seed)
        idx = sorted(rng.sample(range(len(vectors)), max_vectors))
        vectors = [vectors[i] for i in idx]
    return vectors


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("IQREP_WORKERS", "1")))
    except ValueError:
        return 1


def _run_one(args):
    var, rel, params, window, degree_bound, seed, max_vectors = args
    evaluator = _worker_evaluator(var)
    vectors = select_vectors(var, degree_bound, seed, max_vectors)
    return check_relation(evaluator, rel, params, window, vectors)


_WORKER_EVALUATORS: dict = {}


def _worker_evaluator(var: Variant) -> Evaluator:
    ev = _WORKER_EVALUATORS.get(var)
    if ev is None:
        ev = _WORKER_EVALUATORS[var] = Evaluator(var)
    return ev


def run_relation_suite(
    var: Variant,
    relations=None,
    mode_window: int = 2,
    degree_bound: int = 3,
    seed: int = 0,
    max_vectors: int = 0,
    workers: int = 0,
):
    """Run the catalogued relations for a variant; returns sorted reports.

    Results are deterministic and independent of the worker count; reports are
    ordered by (relation, params, clause, mode).
    """
    if relations is None:
        relations = suite_relations(var)
    else:
        known = set(suite_relations(var))
        unknown = [r for r in relations if r not in known]
        if unknown:
            raise ValueError(
                f"relations not catalogued for this variant: {', '.join(unknown)}"
            )
    tasks = []
    for rel in relations:
        for params in applicable_params(var, rel):
            tasks.append((var, rel, params, mode_window, degree_bound, seed, max_vectors))
    workers = workers or default_workers()
    reports = []
    if workers > 1 and len(tasks) > 1:
        import multiprocessing as mp

        ctx = mp.get_context("fork") if hasattr(os, "fork") else mp.get_context()
        with ctx.Pool(workers) as pool:
            for chunk in pool.imap_unordered(_run_one, tasks):
                reports.extend(chunk)
    else:
        for task in tasks:
            reports.extend(_run_one(task))
    reports.sort(key=CheckReport.key)
    return reports


def summarize(reports) -> dict:
    passed = sum(1 for r in reports if r.status == "pass")
    failed = len(reports) - passed
    return {"checks": len(reports), "pass": passed, "fail": failed}
