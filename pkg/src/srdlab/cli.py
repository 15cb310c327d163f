"""Command-line front end: solve, verify, reduce, generate, analyze, bench.

All commands emit JSON on stdout except bench, which emits CSV.  Exit
codes: 0 success, 2 invalid input, 3 solver timed out without certifying
the optimum, 4 solvers disagreed on an optimum.
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import math
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from .graph import GENERATOR_KINDS, Graph, GraphFormatError, generate, parse_graph, write_graph
from .nd import nd_partition
from .reductions import (
    BipartitionWitness,
    FvsWitness,
    ReductionOutput,
    SplitWitness,
    VertexCoverWitness,
    parse_mrss_json,
    parse_rbds_text,
    reduce_ds_cubic_to_split,
    reduce_ds_gadget,
    reduce_mrss_to_fvs,
    reduce_rbds_to_vc,
)
from .solvers import CapExceeded, SolveResult, solve_with
from .srdf import as_labels, is_valid_srdf, lower_bound_degree, weight

ALGOS = ("brute", "bb", "nd-ilp")


class Disagreement(Exception):
    """Two exact solvers reported different optima: a hard failure."""


def _digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _load_graph(path: Path) -> Graph:
    return parse_graph(path.read_text())


def _report(ns: argparse.Namespace, digest: str, payload: dict, wall_ms: float, certified: bool = True) -> dict:
    return {
        "command": ns.command,
        "input_sha256": digest,
        "wall_ms": round(wall_ms, 3),
        "certified": certified,
        "result": payload,
    }


def _emit(ns: argparse.Namespace, text: str) -> None:
    print(text)
    if getattr(ns, "out", None):
        Path(ns.out).write_text(text + "\n")


def _solve(g: Graph, algo: str, timeout_s: Optional[float]) -> SolveResult:
    kwargs = {}
    if algo == "bb":
        kwargs["timeout_s"] = timeout_s
    return solve_with(g, algo, **kwargs)


def _result_payload(res: SolveResult) -> dict:
    return {
        "algo": res.algo,
        "optimum": res.optimum,
        "witness": {"labels": list(res.witness)},
        "explored": res.explored,
        "certified": res.certified,
    }


def cmd_solve(ns: argparse.Namespace) -> int:
    g = _load_graph(Path(ns.graph))
    t0 = time.monotonic()
    res = _solve(g, ns.algo, ns.timeout_s)
    wall = (time.monotonic() - t0) * 1000
    payload = _result_payload(res)
    if ns.k is not None:
        payload["decision"] = {"k": ns.k, "answer": res.optimum <= ns.k}
    _emit(ns, json.dumps(_report(ns, _digest(Path(ns.graph)), payload, wall, res.certified), indent=2))
    return 0 if res.certified else 3


def cmd_verify(ns: argparse.Namespace) -> int:
    g = _load_graph(Path(ns.graph))
    raw = json.loads(Path(ns.labeling).read_text())
    if not isinstance(raw, dict) or "labels" not in raw:
        raise ValueError("labeling file must be a JSON object with a 'labels' array")
    labels = as_labels(raw["labels"], g.n)
    t0 = time.monotonic()
    verdict = is_valid_srdf(g, labels)
    wall = (time.monotonic() - t0) * 1000
    payload = {
        "valid": verdict.valid,
        "weight": weight(labels),
        "violations": [[v, reason] for v, reason in verdict.violations],
    }
    report = _report(ns, _digest(Path(ns.graph)), payload, wall)
    report["labeling_sha256"] = _digest(Path(ns.labeling))
    _emit(ns, json.dumps(report, indent=2))
    return 0


def _witness_json(witness: object) -> Optional[dict]:
    if witness is None:
        return None
    if isinstance(witness, SplitWitness):
        return {
            "kind": "split",
            "clique": sorted(witness.clique),
            "independent": sorted(witness.independent),
        }
    if isinstance(witness, BipartitionWitness):
        return {"kind": "bipartition", "left": sorted(witness.left), "right": sorted(witness.right)}
    if isinstance(witness, FvsWitness):
        return {"kind": "feedback_vertex_set", "vertices": sorted(witness.vertices)}
    if isinstance(witness, VertexCoverWitness):
        return {"kind": "vertex_cover", "vertices": sorted(witness.vertices)}
    raise TypeError(f"unknown witness type {type(witness).__name__}")


def cmd_reduce(ns: argparse.Namespace) -> int:
    path = Path(ns.instance)
    out: ReductionOutput
    try:
        if ns.problem in ("ds-split", "ds-gadget"):
            if ns.k is None:
                raise ValueError("a budget --k is required")
            g = _load_graph(path)
            if ns.problem == "ds-split":
                out = reduce_ds_cubic_to_split(g, ns.k)
            else:
                out = reduce_ds_gadget(g, ns.k)
        elif ns.problem == "mrss-fvs":
            out = reduce_mrss_to_fvs(parse_mrss_json(path.read_text()))
        elif ns.problem == "rbds-vc":
            out = reduce_rbds_to_vc(parse_rbds_text(path.read_text()))
        else:
            raise ValueError(f"unknown reduction {ns.problem!r}")
    except ValueError as exc:
        raise ValueError(f"{ns.problem}: {exc}") from None
    prefix = Path(ns.out_prefix)
    graph_file = prefix.with_suffix(".gr")
    sidecar_file = prefix.with_suffix(".json")
    graph_file.write_text(write_graph(out.graph))
    sidecar = {
        "k_prime": out.k_prime,
        "roles": {str(v): [tag, list(idx)] for v, (tag, idx) in sorted(out.roles.items())},
        "witness": _witness_json(out.witness),
    }
    sidecar_file.write_text(json.dumps(sidecar, indent=2) + "\n")
    summary = {
        "problem": ns.problem,
        "n": out.graph.n,
        "m": out.graph.m,
        "k_prime": out.k_prime,
        "witness_kind": None if out.witness is None else _witness_json(out.witness)["kind"],
        "graph_file": str(graph_file),
        "sidecar_file": str(sidecar_file),
    }
    print(json.dumps(summary, indent=2))
    return 0


def cmd_generate(ns: argparse.Namespace) -> int:
    params = [int(x) for x in ns.params.split(",")] if ns.params else []
    g = generate(ns.kind, params, seed=ns.seed)
    text = write_graph(g)
    if ns.out:
        Path(ns.out).write_text(text)
        print(json.dumps({"kind": ns.kind, "n": g.n, "m": g.m, "file": ns.out}))
    else:
        sys.stdout.write(text)
    return 0


def cmd_analyze(ns: argparse.Namespace) -> int:
    g = _load_graph(Path(ns.graph))
    t0 = time.monotonic()
    p = nd_partition(g)
    if g.n >= 1:
        bound = lower_bound_degree(g)
        bound_json = {"exact": f"{bound.numerator}/{bound.denominator}", "ceiling": math.ceil(bound)}
    else:
        bound_json = None
    wall = (time.monotonic() - t0) * 1000
    payload = {
        "n": g.n,
        "m": g.m,
        "max_degree": g.max_degree,
        "min_degree": g.min_degree,
        "nd_t": p.t,
        "class_sizes": [len(c) for c in p.classes],
        "class_kinds": list(p.kinds),
        "lower_bound": bound_json,
    }
    _emit(ns, json.dumps(_report(ns, _digest(Path(ns.graph)), payload, wall), indent=2))
    return 0


def cmd_bench(ns: argparse.Namespace) -> int:
    algos = [a.strip() for a in ns.algos.split(",") if a.strip()]
    for a in algos:
        if a not in ALGOS:
            raise ValueError(f"unknown algorithm {a!r}; choose from {', '.join(ALGOS)}")
    corpus = sorted(p for p in Path(ns.corpus).iterdir() if p.suffix == ".gr")
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["instance", "n", "m", "t", "algo", "optimum", "time_ms", "certified"])
    for path in corpus:
        try:
            g = parse_graph(path.read_text())
        except GraphFormatError as exc:
            raise GraphFormatError(f"{path}: {exc}") from None
        t = nd_partition(g).t
        seen: dict[str, int] = {}
        for algo in algos:
            t0 = time.monotonic()
            res = _solve(g, algo, ns.timeout_s)
            wall = (time.monotonic() - t0) * 1000
            writer.writerow(
                [path.name, g.n, g.m, t, algo, res.optimum, f"{wall:.3f}", res.certified]
            )
            if res.certified:
                seen[algo] = res.optimum
        if len(set(seen.values())) > 1:
            raise Disagreement(f"{path.name}: certified optima disagree: {seen}")
    text = buf.getvalue().rstrip("\n")
    print(text)
    if ns.out:
        Path(ns.out).write_text(text + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="srdlab",
        description="Exact solving and reductions for signed Roman domination.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute the optimal weight of a graph")
    p.add_argument("graph", help="edge-list graph file")
    p.add_argument("--algo", choices=ALGOS, default="bb")
    p.add_argument("--k", type=int, default=None, help="also decide optimum <= k")
    p.add_argument("--timeout-s", type=float, default=60.0)
    p.add_argument("--out", default=None, help="also write the JSON report here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a labeling file against a graph")
    p.add_argument("graph")
    p.add_argument("labeling", help='JSON file {"labels": [-1|1|2, ...]}')
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", help="build a hardness-reduction instance")
    p.add_argument("problem", choices=("ds-split", "ds-gadget", "mrss-fvs", "rbds-vc"))
    p.add_argument("instance", help="source instance file")
    p.add_argument("--k", type=int, default=None, help="budget for the ds reductions")
    p.add_argument("--out-prefix", required=True, help="write <prefix>.gr and <prefix>.json")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("generate", help="emit a graph from a named family")
    p.add_argument("--kind", choices=GENERATOR_KINDS, required=True)
    p.add_argument("--params", default="", help="comma-separated integers")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("analyze", help="structural parameters and the degree bound")
    p.add_argument("graph")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("bench", help="solve every .gr file in a directory")
    p.add_argument("corpus", help="directory of .gr files")
    p.add_argument("--algos", default="brute,bb,nd-ilp")
    p.add_argument("--timeout-s", type=float, default=60.0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.func(ns)
    except Disagreement as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (GraphFormatError, CapExceeded, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
