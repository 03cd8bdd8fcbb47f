"""Command-line front end.

Verbs: construct, shifts, chi, core, hom, iso, verify, probe. Exit codes:
0 all requested checks pass (or a definitive answer was produced), 2 some
check failed, 3 only budget exhaustion stood in the way, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import coloring, dihedral, harness, homsolver
from .budget import BudgetExhausted, SearchBudget
from .dimacs import dimacs_dumps, read_dimacs
from .families import parse_family_spec
from .graphs import Graph
from .isomorphism import are_isomorphic

EXIT_OK = 0
EXIT_FAIL = 2
EXIT_EXHAUSTED = 3
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load_graph(text: str) -> Graph:
    """A family spec like "stable:n=8,k=2,s=3", or a DIMACS file path."""
    try:
        return parse_family_spec(text).build()
    except ValueError:
        path = Path(text)
        if path.exists():
            return read_dimacs(path)
        raise


def _parse_range(text: str) -> list[int]:
    lo, _, hi = text.partition(":")
    if hi:
        return list(range(int(lo), int(hi) + 1))
    return [int(lo)]


def _budget_from(args) -> SearchBudget | None:
    if getattr(args, "budget", None):
        return SearchBudget.from_text(args.budget)
    return None


def _cmd_construct(args) -> int:
    g = _load_graph(args.spec)
    print(f"{args.spec}: {g.order} vertices, {g.edge_count} edges")
    if args.out:
        text = dimacs_dumps(g)
        if args.out == "-":
            sys.stdout.write(text)
        else:
            Path(args.out).write_text(text)
            print(f"wrote {args.out}")
    return EXIT_OK


def _cmd_shifts(args) -> int:
    spec = parse_family_spec(args.spec)
    if spec.kind != "stable":
        print("shifts are defined for stable Kneser specs only", file=sys.stderr)
        return EXIT_USAGE
    g = spec.build()
    brute = dihedral.enumerate_shifts(g)
    print(f"brute-force: {{{', '.join(brute.texts())}}}")
    if args.predict:
        predicted = dihedral.predicted_shifts(spec.n, spec.k, spec.s)
        print(f"formula:     {{{', '.join(predicted.texts())}}}")
        agree = brute.members == predicted.members
        print(f"agree: {agree}")
        if not agree:
            return EXIT_FAIL
    return EXIT_OK


def _cmd_chi(args) -> int:
    g = _load_graph(args.spec)
    try:
        result = coloring.chromatic_number(g, _budget_from(args))
    except BudgetExhausted as stop:
        print(f"exhausted after {stop.nodes} nodes")
        return EXIT_EXHAUSTED
    cert = homsolver.certificate(
        "coloring", data=result.coloring, source=g, verified=True, nodes=result.nodes
    )
    print(f"chi = {result.chi}")
    print(homsolver.certificate_dumps(cert))
    return EXIT_OK


def _cmd_core(args) -> int:
    g = _load_graph(args.spec)
    outcome = homsolver.is_core(g, _budget_from(args))
    print(outcome.status)
    if outcome.witness is not None:
        cert = homsolver.certificate(
            "homomorphism",
            data=outcome.witness.mapping,
            source=g,
            target=g,
            verified=outcome.witness.verified,
            nodes=outcome.nodes,
        )
        print(homsolver.certificate_dumps(cert))
    return EXIT_EXHAUSTED if outcome.status == "exhausted" else EXIT_OK


def _cmd_hom(args) -> int:
    g = _load_graph(args.source)
    h = _load_graph(args.target)
    outcome = homsolver.find_homomorphism(g, h, _budget_from(args))
    print(outcome.status)
    if outcome.found:
        cert = homsolver.certificate(
            "homomorphism",
            data=outcome.homomorphism.mapping,
            source=g,
            target=h,
            verified=outcome.homomorphism.verified,
            nodes=outcome.nodes,
            seconds=outcome.seconds,
        )
        print(homsolver.certificate_dumps(cert))
    return EXIT_EXHAUSTED if outcome.status == "exhausted" else EXIT_OK


def _cmd_iso(args) -> int:
    g = _load_graph(args.first)
    h = _load_graph(args.second)
    mapping = are_isomorphic(g, h)
    if mapping is None:
        print("not isomorphic")
    else:
        print("isomorphic")
        print(json.dumps(list(mapping)))
    return EXIT_OK


def _cmd_verify(args) -> int:
    budget = _budget_from(args)
    manifest = harness.load_manifest(args.manifest) if args.manifest else None
    if args.suite == "all":
        reports = harness.run_all(
            budget=budget, manifest=manifest, include_square_search=args.square
        )
    else:
        reports = harness.run_suite(
            args.suite,
            budget=budget,
            manifest=manifest,
            include_square_search=args.square,
        )
    for r in reports:
        print(harness.format_report_line(r))
    counts = {
        "pass": sum(r.status == "pass" for r in reports),
        "fail": sum(r.status == "fail" for r in reports),
        "exhausted": sum(r.status == "exhausted" for r in reports),
    }
    print(f"total={len(reports)} pass={counts['pass']} fail={counts['fail']} "
          f"exhausted={counts['exhausted']}")
    if args.json:
        Path(args.json).write_text(
            json.dumps(harness.reports_to_json(reports), indent=2, sort_keys=True) + "\n"
        )
        print(f"wrote {args.json}")
    return harness.exit_code_for(reports)


def _cmd_probe(args) -> int:
    reports = harness.probe_conjectures(
        _parse_range(args.n),
        _parse_range(args.k),
        _parse_range(args.s),
        budget=_budget_from(args),
        square_order_cap=args.square_cap,
    )
    for r in reports:
        print(harness.format_report_line(r))
    if args.json:
        Path(args.json).write_text(
            json.dumps(harness.reports_to_json(reports), indent=2, sort_keys=True) + "\n"
        )
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="kneser-lab", description=__doc__)
    parser.add_argument(
        "--budget",
        metavar="NODES,SECONDS",
        help="solver budget override (also via KNESER_LAB_BUDGET)",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("construct", help="build a family graph, optionally write DIMACS")
    p.add_argument("spec")
    p.add_argument("--out", metavar="PATH", help="DIMACS output path, '-' for stdout")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("shifts", help="enumerate the shifts of a stable Kneser graph")
    p.add_argument("spec")
    p.add_argument("--predict", action="store_true", help="compare with the closed form")
    p.set_defaults(fn=_cmd_shifts)

    p = sub.add_parser("chi", help="exact chromatic number with certificate")
    p.add_argument("spec", help="family spec or DIMACS file")
    p.set_defaults(fn=_cmd_chi)

    p = sub.add_parser("core", help="decide the core property")
    p.add_argument("spec", help="family spec or DIMACS file")
    p.set_defaults(fn=_cmd_core)

    p = sub.add_parser("hom", help="decide homomorphism existence")
    p.add_argument("source")
    p.add_argument("target")
    p.set_defaults(fn=_cmd_hom)

    p = sub.add_parser("iso", help="decide isomorphism")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(fn=_cmd_iso)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(harness.SUITES) + ["all"])
    p.add_argument("--json", metavar="PATH", help="write the report as JSON")
    p.add_argument("--manifest", metavar="PATH", help="alternative instance manifest")
    p.add_argument(
        "--square",
        action="store_true",
        help="also run the optional direct square searches (may exhaust)",
    )
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("probe", help="run conjecture probes (never gate anything)")
    p.add_argument("--n", default="9:10", help="range a:b or single value")
    p.add_argument("--k", default="2:2")
    p.add_argument("--s", default="3:3")
    p.add_argument(
        "--square-cap",
        type=int,
        default=150,
        metavar="N",
        help="largest cartesian-square order the probes will search",
    )
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(fn=_cmd_probe)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as err:
        print(f"kneser-lab: error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
