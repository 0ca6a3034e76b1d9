"""Command-line front end: enumeration, operator application, relation
verification, and the geometric cross-check.

Reports are emitted as line-oriented text or deterministic JSON (sorted keys,
fixed layout); identical configurations produce byte-identical JSON.  Timing
is printed to stderr and stored in the report only when --timing is given,
keeping the default reports reproducible.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import kconv
from .combinat import (
    Variant,
    enum_compositions,
    enum_matrices,
    hasse,
    margin_class,
    ro,
    co,
)
from .exactring import render_laurent
from .polyrep import (
    ModuleElement,
    apply_B,
    apply_H,
    apply_K,
    apply_Kinv,
    apply_theta,
    spanning_set,
)
from .relcheck import (
    Evaluator,
    run_relation_suite,
    select_vectors,
    suite_relations,
    summarize,
)
from .relcheck.theta import check_theta1_identities, check_theta_lemma

SCHEMA_VERSION = 1
GUARD_N = 3
GUARD_D = 4


def _variant(args) -> Variant:
    kind = {"c-odd": "c-odd", "d-even": "d-even"}[args.variant]
    if args.n < 1 or args.d < 1:
        raise SystemExit("error: --n and --d must be positive")
    if (args.n > GUARD_N or args.d > GUARD_D) and not getattr(args, "force", False):
        raise SystemExit(
            f"error: n <= {GUARD_N} and d <= {GUARD_D} keep exact arithmetic "
            "at desk scale; pass --force to override"
        )
    if getattr(args, "force", False) and (args.n > GUARD_N or args.d > GUARD_D):
        print("warning: guardrails overridden; expect long runtimes", file=sys.stderr)
    return Variant(kind, args.n, args.d)


def _emit(report: dict, args) -> None:
    if args.format == "json":
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    else:
        text = report["_text"]
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _strip_text(report: dict) -> dict:
    return {k: v for k, v in report.items() if k != "_text"}


# -- enum -----------------------------------------------------------------------


def cmd_enum(args) -> int:
    var = _variant(args)
    comps = enum_compositions(var)
    lines = [f"compositions ({len(comps)}):"]
    for v in comps:
        lines.append("  (" + ",".join(map(str, v)) + ")")
    classes = []
    for rv in comps:
        for cv in comps:
            cls = margin_class(var, rv, cv)
            if not cls:
                continue
            edges = hasse(var, cls)
            classes.append(
                {
                    "ro": list(rv),
                    "co": list(cv),
                    "size": len(cls),
                    "matrices": [[list(row) for row in A] for A in cls],
                    "hasse": [
                        [[list(r) for r in A], [list(r) for r in B]]
                        for A, B in edges
                    ],
                }
            )
            lines.append(
                f"margin class ro=({','.join(map(str, rv))}) "
                f"co=({','.join(map(str, cv))}): {len(cls)} matrices, "
                f"{len(edges)} covering pairs"
            )
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "enum",
        "config": {"variant": var.kind, "n": var.n, "d": var.d},
        "compositions": [list(v) for v in comps],
        "matrix_count": len(enum_matrices(var)),
        "margin_classes": classes,
        "_text": "\n".join(lines) + "\n",
    }
    _emit(_strip_text(report) if args.format == "json" else report, args)
    return 0


# -- apply ----------------------------------------------------------------------


def parse_word(tokens):
    """Parse operator tokens like B:1:0, Theta:2:1, K:1, Kinv:1, H:1:2."""
    word = []
    for tok in tokens:
        parts = tok.split(":")
        kind = parts[0]
        try:
            if kind == "B" and len(parts) == 3:
                word.append(("B", int(parts[1]), int(parts[2])))
            elif kind in ("Theta", "T") and len(parts) == 3:
                word.append(("T", int(parts[1]), int(parts[2])))
            elif kind == "K" and len(parts) == 2:
                word.append(("K", int(parts[1]), 1))
            elif kind == "Kinv" and len(parts) == 2:
                word.append(("K", int(parts[1]), -1))
            elif kind == "H" and len(parts) == 3:
                word.append(("H", int(parts[1]), int(parts[2])))
            else:
                raise ValueError
        except ValueError:
            raise SystemExit(
                f"error: cannot parse operator token {tok!r} "
                "(expected B:i:r, Theta:i:m, K:i, Kinv:i, or H:i:k)"
            )
    return word


def cmd_apply(args) -> int:
    var = _variant(args)
    try:
        v = tuple(int(x) for x in args.component.split(","))
    except ValueError:
        raise SystemExit(f"error: bad composition {args.component!r}")
    vectors = spanning_set(var, v, args.degree_bound)
    if not 0 <= args.vector < len(vectors):
        raise SystemExit(
            f"error: vector index {args.vector} outside "
            f"[0, {len(vectors) - 1}] for this component"
        )
    elem = ModuleElement.vector(var, v, vectors[args.vector])
    word = parse_word(args.word)
    ev = Evaluator(var)
    result = ev.eval_word(tuple(word), elem)
    lines = [
        f"input  [{args.component}] {render_laurent(vectors[args.vector])}",
        f"word   {' '.join(args.word)} (rightmost acts first)",
        f"result {result.render()}",
    ]
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "apply",
        "config": {
            "variant": var.kind,
            "n": var.n,
            "d": var.d,
            "component": list(v),
            "vector": args.vector,
            "degree_bound": args.degree_bound,
            "word": list(args.word),
        },
        "result": {
            ",".join(map(str, comp)): render_laurent(poly)
            for comp, poly in sorted(result.components.items())
        },
        "_text": "\n".join(lines) + "\n",
    }
    _emit(_strip_text(report) if args.format == "json" else report, args)
    return 0


# -- verify ---------------------------------------------------------------------


def cmd_verify(args) -> int:
    var = _variant(args)
    t0 = time.monotonic()
    extra_ids = {"L_theta_mid", "theta1"}
    if args.relations == "all":
        relations = None
        extras_wanted = set(extra_ids)
    else:
        wanted = [r for r in args.relations.split(",") if r]
        extras_wanted = {r for r in wanted if r in extra_ids}
        relations = [r for r in wanted if r not in extra_ids]
    reports = []
    if relations is None or relations:
        reports = run_relation_suite(
            var,
            relations=relations,
            mode_window=args.mode_window,
            degree_bound=args.degree_bound,
            seed=args.seed,
            max_vectors=args.max_vectors,
            workers=args.workers,
        )
    rows = [r.to_json() for r in reports]

    extras = []
    if "L_theta_mid" in extras_wanted and var.kind == "c-odd":
        extras.extend(
            check_theta_lemma(
                var,
                mode_window=args.mode_window,
                degree_bound=args.degree_bound,
                evaluator=Evaluator(var),
            )
        )
    if "theta1" in extras_wanted and var.d >= 3:
        extras.extend(check_theta1_identities(var.d))
    rows.extend(r.to_json() for r in extras)

    cross_entries, comparisons = kconv.crosscheck_suite(
        var, r_window=2, degree_bound=min(args.degree_bound, 3)
    )
    all_pass = all(r["status"] == "pass" for r in rows) and all(
        e["status"] == "pass" for e in cross_entries
    )
    elapsed_ms = int((time.monotonic() - t0) * 1000)
    summary = {
        "checks": len(rows) + len(cross_entries),
        "pass": sum(1 for r in rows if r["status"] == "pass")
        + sum(1 for e in cross_entries if e["status"] == "pass"),
        "fail": sum(1 for r in rows if r["status"] != "pass")
        + sum(1 for e in cross_entries if e["status"] != "pass"),
        "crosscheck_comparisons": comparisons,
        "wall_time_ms": elapsed_ms if args.timing else None,
    }
    print(f"verify: {summary['pass']}/{summary['checks']} checks passed "
          f"({elapsed_ms} ms)", file=sys.stderr)
    lines = []
    for r in rows:
        lines.append(
            f"{r['status']:4s} {r['relation']} params={tuple(r['params'])} "
            f"clause={r['clause']} mode={tuple(r['mode'])}"
        )
    for e in cross_entries:
        lines.append(
            f"{e['status']:4s} crosscheck i={e['i']} v=({','.join(map(str, e['v']))}) "
            f"r={e['r']}"
        )
    lines.append(
        f"summary: {summary['pass']} pass, {summary['fail']} fail"
    )
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
        "config": {
            "variant": var.kind,
            "n": var.n,
            "d": var.d,
            "relations": args.relations,
            "mode_window": args.mode_window,
            "degree_bound": args.degree_bound,
            "seed": args.seed,
            "max_vectors": args.max_vectors,
        },
        "results": rows,
        "crosscheck": cross_entries,
        "summary": summary,
        "_text": "\n".join(lines) + "\n",
    }
    _emit(_strip_text(report) if args.format == "json" else report, args)
    return 0 if all_pass else 1


# -- crosscheck -------------------------------------------------------------------


def cmd_crosscheck(args) -> int:
    var = _variant(args)
    entries, comparisons = kconv.crosscheck_suite(
        var, r_window=args.r_window, degree_bound=args.degree_bound
    )
    all_pass = all(e["status"] == "pass" for e in entries)
    lines = [
        f"{e['status']:4s} i={e['i']} v=({','.join(map(str, e['v']))}) r={e['r']} "
        f"({e['vectors']} vectors)"
        for e in entries
    ]
    lines.append(
        f"summary: {sum(1 for e in entries if e['status'] == 'pass')}"
        f"/{len(entries)} agree, {comparisons} comparisons"
    )
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "crosscheck",
        "config": {
            "variant": var.kind,
            "n": var.n,
            "d": var.d,
            "r_window": args.r_window,
            "degree_bound": args.degree_bound,
        },
        "results": entries,
        "summary": {
            "cases": len(entries),
            "pass": sum(1 for e in entries if e["status"] == "pass"),
            "fail": sum(1 for e in entries if e["status"] != "pass"),
            "comparisons": comparisons,
        },
        "_text": "\n".join(lines) + "\n",
    }
    _emit(_strip_text(report) if args.format == "json" else report, args)
    return 0 if all_pass else 1


# -- argument plumbing -------------------------------------------------------------


def _add_common(p, *, force=True):
    p.add_argument("--variant", choices=["c-odd", "d-even"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", default=None, help="write the report to this path")
    if force:
        p.add_argument("--force", action="store_true", help="override guardrails")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="iqrep",
        description=(
            "Exact engine for polynomial representations of quasi-split "
            "affine iquantum groups: enumeration, operators, relation "
            "verification, geometric cross-checks."
        ),
    )
    ap.add_argument(
        "--config",
        default=None,
        help="JSON file with default option values (flags take precedence)",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enum", help="compositions, matrices, closure order")
    _add_common(p)

    p = sub.add_parser("apply", help="apply an operator word to a spanning vector")
    _add_common(p)
    p.add_argument("--component", required=True, help="composition, e.g. 0,2,0")
    p.add_argument("--vector", type=int, default=0, help="spanning vector index")
    p.add_argument("--degree-bound", type=int, default=1)
    p.add_argument("word", nargs="+", help="tokens like B:1:0 Theta:1:2 K:2")

    p = sub.add_parser("verify", help="run the relation suite and cross-check")
    _add_common(p)
    p.add_argument("--relations", default="all", help="comma list of ids, or 'all'")
    p.add_argument("--mode-window", type=int, default=2)
    p.add_argument("--degree-bound", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--max-vectors",
        type=int,
        default=0,
        help="seeded subsample cap on spanning vectors (0 = all)",
    )
    p.add_argument(
        "--workers",
        type=int,
        default=0,
        help="worker processes (0 = honor IQREP_WORKERS, default serial)",
    )
    p.add_argument(
        "--timing",
        action="store_true",
        help="record wall time in the report (off keeps reports byte-stable)",
    )

    p = sub.add_parser("crosscheck", help="geometric vs combinatorial operators")
    _add_common(p)
    p.add_argument("--r-window", type=int, default=2)
    p.add_argument("--degree-bound", type=int, default=3)
    return ap


def _apply_config_file(ap: argparse.ArgumentParser, argv):
    """flags > config file > parser defaults."""
    ns, _ = ap.parse_known_args(argv)
    path = getattr(ns, "config", None)
    if not path:
        return argv
    with open(path) as fh:
        conf = json.load(fh)
    extra = []
    given = set()
    for a in argv:
        if a.startswith("--"):
            given.add(a.split("=")[0])
    for key, val in conf.items():
        flag = "--" + key.replace("_", "-")
        if flag in given:
            continue
        if isinstance(val, bool):
            if val:
                extra.append(flag)
        else:
            extra.extend([flag, str(val)])
    # config-provided flags go first so explicit flags win on conflicts
    return extra + list(argv)


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    ap = build_parser()
    argv = _apply_config_file(ap, argv)
    args = ap.parse_args(argv)
    if getattr(args, "workers", None) == 0:
        args.workers = max(1, int(os.environ.get("IQREP_WORKERS", "1")))
    handler = {
        "enum": cmd_enum,
        "apply": cmd_apply,
        "verify": cmd_verify,
        "crosscheck": cmd_crosscheck,
    }[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
