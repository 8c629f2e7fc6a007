"""Command-line interface: ``annigraph info|graph|genus|verify|survey``."""

from __future__ import annotations

import argparse
import json
import sys

from .ag import annihilator_graph, zero_divisor_graph
from .classify import predict_classification
from .errors import AnnigraphError, Exhausted
from .graph import graph_stats, recognize_shape
from .parse import ring_from_text
from .rings import local_decomposition, structure_predicates
from .topology import Budget, is_planar, min_genus
from .verify import (
    builtin_corpus,
    emit_report,
    export_graph,
    load_corpus,
    report_format,
    run_corpus,
    run_survey,
)

EXIT_INCONCLUSIVE = 3


def _labels(ring, idx) -> list[str]:
    return [ring.label(i) for i in sorted(idx)]


def cmd_info(args) -> int:
    ring = ring_from_text(args.ring)
    cls = ring.classes
    sp = structure_predicates(ring)
    info = {
        "ring": ring.name,
        "order": ring.order,
        "units": len(cls.units),
        "nilradical": _labels(ring, cls.nilpotents),
        "zero_divisors": _labels(ring, cls.zero_divisors),
        "local_factor_orders": [f.ring.order for f in local_decomposition(ring)],
        "is_field": sp.is_field,
        "is_local": sp.is_local,
        "is_reduced": sp.is_reduced,
        "minimal_prime_orders": list(sp.minimal_prime_orders),
    }
    if not sp.is_field:
        pred = predict_classification(ring)
        info["predicted"] = {"planar": pred.planar, "toroidal": pred.toroidal, "rule": pred.rule}
    if args.json:
        print(json.dumps(info, indent=2))
        return 0
    for key, value in info.items():
        if key in ("nilradical", "zero_divisors"):
            value = "{" + ", ".join(value) + "}"
        if isinstance(value, dict):
            value = ", ".join(f"{k}={v}" for k, v in value.items())
        print(f"{key}: {value}")
    return 0


def cmd_graph(args) -> int:
    ring = ring_from_text(args.ring)
    g = zero_divisor_graph(ring) if args.zero_divisor_graph else annihilator_graph(ring)
    sys.stdout.write(export_graph(g, args.format))
    return 0


def cmd_genus(args) -> int:
    ring = ring_from_text(args.ring)
    g = annihilator_graph(ring)
    stats = graph_stats(g)
    print(f"graph: AG({ring.name}), {stats.order} vertices, {stats.size} edges")
    shape = recognize_shape(g).descriptor
    if shape:
        print(f"shape: {shape}")
    budget = Budget(max_genus=args.max_genus, node_limit=args.node_limit)
    try:
        res = min_genus(g, budget)
    except Exhausted as exc:
        print(f"genus: INCONCLUSIVE (node limit reached after {exc.nodes} nodes)")
        return EXIT_INCONCLUSIVE
    if res.genus is None:
        print(f"genus: > {args.max_genus} (at least {res.lower})")
    else:
        print(f"genus: {res.genus}")
        print(f"embedding: {res.embedding.faces} faces")
        if args.rotation:
            for v, cyc in res.embedding.rotation.to_labels(g).items():
                print(f"  {v}: {' '.join(cyc)}")
    planar, cert = is_planar(g)
    if not planar:
        branch = ", ".join(g.labels[v] for v in cert.branch)
        print(f"kuratowski: {cert.name} on {branch}")
    print(f"search nodes: {res.nodes}")
    return 0


def _write_report(report, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(emit_report(report, report_format(path)))
    sys.stdout.write(emit_report(report, "markdown"))


def cmd_verify(args) -> int:
    entries = load_corpus(args.corpus) if args.corpus else builtin_corpus()
    report = run_corpus(entries, Budget(max_genus=args.max_genus, node_limit=args.node_limit))
    _write_report(report, args.report)
    return report.exit_code


def cmd_survey(args) -> int:
    report = run_survey(args.max_order, Budget(max_genus=1, node_limit=args.node_limit))
    _write_report(report, args.report)
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="annigraph", description="Annihilator graphs of finite commutative rings.")
    sub = parser.add_subparsers(dest="command", required=True)
    defaults = Budget()

    p = sub.add_parser("info", help="ring statistics")
    p.add_argument("ring", help='ring expression, e.g. "Z4 x GF(4)"')
    p.add_argument("--json", action="store_true", help="print JSON")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("graph", help="export AG(R) or the zero-divisor graph")
    p.add_argument("ring")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--zero-divisor-graph", action="store_true", help="export the zero-divisor graph instead")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("genus", help="exact genus of AG(R)")
    p.add_argument("ring")
    p.add_argument("--max-genus", type=int, default=defaults.max_genus)
    p.add_argument("--node-limit", type=int, default=defaults.node_limit)
    p.add_argument("--rotation", action="store_true", help="print the rotation system found")
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("verify", help="run a classification corpus")
    p.add_argument("--corpus", help="JSONL corpus file (built-in corpus when omitted)")
    p.add_argument("--report", help="write a report to this .md, .csv or .json file")
    p.add_argument("--max-genus", type=int, default=defaults.max_genus)
    p.add_argument("--node-limit", type=int, default=defaults.node_limit)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("survey", help="compare predictions with computed genus over a ring family")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--report", help="write a report to this .md, .csv or .json file")
    p.add_argument("--node-limit", type=int, default=defaults.node_limit)
    p.set_defaults(func=cmd_survey)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (AnnigraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
