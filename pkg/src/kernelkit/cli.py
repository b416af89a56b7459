"""Command-line front end.

Subcommands: analyze | kernel | closure | substitute | verify | generate.
Exit codes: 0 pass, 1 property failure, 2 usage/parse error, 3 resource bound.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .campaigns import CAMPAIGNS, CampaignParams, run_campaign
from .cycles import (
    DEFAULT_BUDGET,
    CycleHypothesisVariant,
    check_circuit_hypothesis,
    check_cycle_hypothesis,
    enumerate_cycles,
    every_cycle_has_symmetric_arc,
)
from .digraph import Digraph, directed_cycle
from .errors import (
    BudgetExceededError,
    KernelKitError,
    NoBaseKernelError,
    SizeBoundError,
    SubkernelMissingError,
)
from .generators import (
    enumerate_labeled_digraphs,
    random_digraph,
    random_strongly_connected,
)
from .kernels import KernelQuery, find_kernel_via_closure, find_kl_kernel, k_closure
from .substitution import (
    check_additive_inverse_property,
    check_pre_kernel_properties,
    check_unique_short_chord,
    find_road,
    intermediate_sets,
    run_substitution_method,
)
from .errors import NoRoadFoundError
from .textio import format_digraph_text, parse_digraph_text

EXIT_PASS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _load(path: str) -> Digraph:
    return parse_digraph_text(Path(path).read_text(encoding="utf-8"))


def _emit(payload: dict, fmt: str, out: str | None) -> None:
    if fmt == "json":
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        lines = []

        def walk(prefix: str, value) -> None:
            if isinstance(value, dict):
                for key in value:
                    walk(f"{prefix}{key}." if prefix else f"{key}.", value[key])
            else:
                lines.append(f"{prefix[:-1]}: {value}")

        walk("", payload)
        text = "\n".join(lines) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _hypothesis_summary(report) -> dict:
    return {
        "satisfied": report.satisfied,
        "violations": [
            {"vertices": list(v.subject), "reason": v.reason} for v in report.violations
        ],
        "examined": report.cycles_examined,
    }


def _cmd_analyze(args) -> int:
    d = _load(args.file)
    cycles = list(enumerate_cycles(d))
    payload = {
        "n": d.vertex_count,
        "m": len(d.arcs),
        "strongly_connected": d.is_strongly_connected(),
        "cycles": len(cycles),
        "duchet": _hypothesis_summary(every_cycle_has_symmetric_arc(d)),
        "cycle_hypothesis_two_consecutive": _hypothesis_summary(
            check_cycle_hypothesis(
                d, CycleHypothesisVariant.TWO_CONSECUTIVE, args.min_cycle_len
            )
        ),
        "cycle_hypothesis_three_with_crossing": _hypothesis_summary(
            check_cycle_hypothesis(
                d, CycleHypothesisVariant.THREE_WITH_CROSSING, args.min_cycle_len
            )
        ),
        "circuit_hypothesis": _hypothesis_summary(
            check_circuit_hypothesis(
                d,
                max_len=args.max_circuit_len if args.max_circuit_len else len(d.arcs),
                budget=args.budget,
            )
        ),
    }
    _emit(payload, args.format, args.out)
    return EXIT_PASS


def _cmd_kernel(args) -> int:
    d = _load(args.file)
    ell = args.l if args.l is not None else args.k - 1
    if args.via_closure:
        result = find_kernel_via_closure(d, args.k)
        if args.emit_closure:
            Path(args.emit_closure).write_text(
                format_digraph_text(k_closure(d, args.k - 1)), encoding="utf-8"
            )
    else:
        result = find_kl_kernel(d, KernelQuery(args.k, ell))
    payload = {
        "k": args.k,
        "l": ell,
        "via_closure": args.via_closure,
        "found": result.found,
        "witness": list(result.witness) if result.found else None,
        "subsets_examined": result.subsets_examined,
    }
    _emit(payload, args.format, args.out)
    return EXIT_PASS


def _cmd_closure(args) -> int:
    d = _load(args.file)
    text = format_digraph_text(k_closure(d, args.k))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_PASS


def _trace_document(outcome) -> dict:
    trace = outcome.trace
    rounds = []
    for k in range(trace.p + 1):
        rounds.append(
            {
                "k": k,
                "added": list(trace.added[k]),
                "removed_one": list(trace.removed_one[k]),
                "removed_two": list(trace.removed_two[k]),
                "m_set": list(trace.m_sets[k]),
            }
        )
    intermediates = [
        {"k": k, "first": list(first), "second": list(second)}
        for k, (first, second) in enumerate(intermediate_sets(trace))
    ]
    roads = []
    road_checks = {"unique_chord": True, "additive_inverse": True}
    for s in range(3 * trace.p + 1):
        for v in trace.set_at(s):
            try:
                road = find_road(trace, v, s)
            except NoRoadFoundError:
                roads.append({"s": s, "v": v, "path": None, "labels": None})
                continue
            roads.append(
                {"s": s, "v": v, "path": list(road.path), "labels": list(road.labels)}
            )
            if not check_unique_short_chord(trace, road).passed:
                road_checks["unique_chord"] = False
            if not check_additive_inverse_property(trace, road).passed:
                road_checks["additive_inverse"] = False
    pre_report = check_pre_kernel_properties(trace)
    return {
        "x0": trace.x0,
        "base_kernel": list(trace.base_kernel),
        "p": trace.p,
        "rounds": rounds,
        "intermediates": intermediates,
        "pre_3_kernel": list(outcome.pre_3_kernel),
        "is_3_kernel": outcome.is_3_kernel,
        "roads": roads,
        "checks": {
            "pre_kernel_2_absorbent": not pre_report.absorption_violations,
            "pre_kernel_path_shape": not pre_report.shape_violations,
            **road_checks,
        },
    }


def _cmd_substitute(args) -> int:
    d = _load(args.file)
    outcome = run_substitution_method(d, args.x0)
    payload = {
        "x0": args.x0,
        "pre_3_kernel": list(outcome.pre_3_kernel),
        "is_3_kernel": outcome.is_3_kernel,
        "failure_witness": (
            list(outcome.failure_witness) if outcome.failure_witness else None
        ),
        "p": outcome.trace.p,
    }
    if args.trace:
        Path(args.trace).write_text(
            json.dumps(_trace_document(outcome), sort_keys=True, indent=2) + "\n",
            encoding="utf-8",
        )
    _emit(payload, args.format, args.out)
    return EXIT_PASS


def _cmd_verify(args) -> int:
    params = CampaignParams(
        n=args.n,
        trials=args.trials,
        seed=args.seed,
        exhaustive=args.exhaustive,
        max_failures=args.max_failures,
        budget=args.budget,
        min_cycle_len=args.min_cycle_len,
        arc_prob=args.p,
        extra_arc_prob=args.p,
    )
    report = run_campaign(args.property_id, params)
    text = report.to_json() + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_PASS if report.passed else EXIT_FAILURE


def _cmd_generate(args) -> int:
    out = Path(args.out)
    if args.kind == "cycle":
        out.write_text(format_digraph_text(directed_cycle(args.n)), encoding="utf-8")
    elif args.kind == "random":
        out.write_text(
            format_digraph_text(random_digraph(args.n, args.p, args.seed)),
            encoding="utf-8",
        )
    elif args.kind == "random-sc":
        out.write_text(
            format_digraph_text(random_strongly_connected(args.n, args.p, args.seed)),
            encoding="utf-8",
        )
    elif args.kind == "exhaustive":
        out.mkdir(parents=True, exist_ok=True)
        for index, d in enumerate(enumerate_labeled_digraphs(args.n)):
            (out / f"digraph_{index:06d}.txt").write_text(
                format_digraph_text(d), encoding="utf-8"
            )
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kernelkit",
        description="Digraph kernel workbench: kernels, closures, chord "
        "conditions, the 3-substitution method, and a verification harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--out", default=None)
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = sub.add_parser("analyze", help="summarize a digraph file")
    p.add_argument("file")
    p.add_argument("--min-cycle-len", type=int, default=2)
    p.add_argument("--max-circuit-len", type=int, default=None)
    common(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("kernel", help="find a (k,l)-kernel")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--via-closure", action="store_true")
    p.add_argument("--emit-closure", default=None)
    common(p)
    p.set_defaults(func=_cmd_kernel)

    p = sub.add_parser("closure", help="emit the k-closure of a digraph")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("substitute", help="run the 3-substitution method")
    p.add_argument("file")
    p.add_argument("--x0", type=int, required=True)
    p.add_argument("--trace", default=None, help="write the full trace document here")
    common(p)
    p.set_defaults(func=_cmd_substitute)

    p = sub.add_parser("verify", help="run a theorem-verification campaign")
    p.add_argument("property_id", choices=sorted(CAMPAIGNS))
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--min-cycle-len", type=int, default=2)
    p.add_argument("--p", type=float, default=0.15, help="arc probability")
    p.add_argument("--max-failures", type=int, default=10)
    common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("generate", help="write digraph documents")
    p.add_argument("--kind", choices=["cycle", "random", "random-sc", "exhaustive"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_generate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        return args.func(args)
    except (SizeBoundError, BudgetExceededError) as exc:
        print(f"resource bound: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (NoBaseKernelError, SubkernelMissingError) as exc:
        print(f"substitution cannot run: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except (KernelKitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
