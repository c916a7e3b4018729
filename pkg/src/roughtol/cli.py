"""Command-line interface: analyze, export, verify, report.

Inputs are relation JSON files or information-system CSV tables (the
latter need ``--construction``).  All output is canonical, so identical
inputs produce byte-identical results.  Exit codes: 0 success, 1 parse or
validation trouble (including failed verification), 2 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .analysis import analyze_relation
from .approximations import ApproximationSpace
from .completions import (
    disjoint_poset,
    disjoint_rough_pairs,
    increasing_poset,
)
from .errors import CapExceededError, RoughtolError
from .fca import bridge_context, concept_lattice
from .infosystems import (
    parse_information_system,
    rb_tolerance,
    sim_tolerance,
    wind_tolerance,
)
from .lattices import (
    enumerate_down_family,
    enumerate_up_family,
    pair_label,
    rough_poset,
)
from .posets import FinitePoset
from .relations import DEFAULT_CAP, Relation
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_CAP = 2

CARRIERS = ("rs", "down", "up", "irs", "drs", "fca", "relation")


def load_relation(args: argparse.Namespace) -> Relation:
    text = Path(args.input).read_text(encoding="utf-8")
    if args.input.endswith(".csv") or args.construction:
        if not args.construction:
            raise ValueError("CSV inputs need --construction {sim,rb,wind}")
        system = parse_information_system(text)
        attrs = args.attrs.split(",") if args.attrs else None
        build = {
            "sim": sim_tolerance,
            "rb": rb_tolerance,
            "wind": wind_tolerance,
        }[args.construction]
        return build(system, attrs)
    return Relation.from_json(text)


def tolerance_space(relation: Relation) -> ApproximationSpace:
    if not relation.is_tolerance():
        missing = relation.irreflexive_elements()
        detail = f"; elements without reflexive pairs: {list(missing)}" if missing else ""
        raise RoughtolError(f"the input relation is not a tolerance{detail}")
    return ApproximationSpace(relation)


def carrier_poset(space: ApproximationSpace, what: str, cap: int) -> tuple[FinitePoset, object]:
    """The requested carrier plus a label function for its points."""
    universe = space.universe
    if what == "rs":
        return rough_poset(space, cap), lambda p: pair_label(universe, p)
    if what == "down":
        return enumerate_down_family(space, cap).as_poset(), universe.format_subset
    if what == "up":
        return enumerate_up_family(space, cap).as_poset(), universe.format_subset
    if what == "irs":
        return increasing_poset(space, cap), lambda p: pair_label(universe, p)
    if what == "drs":
        pairs = disjoint_rough_pairs(space, cap)
        return disjoint_poset(space, pairs), lambda p: pair_label(universe, p)
    if what == "fca":
        from .lattices import RoughPair

        poset = concept_lattice(bridge_context(space.relation), cap)
        return poset, lambda c: pair_label(universe, RoughPair(c.extent, c.intent))
    raise ValueError(f"unknown carrier {what!r}")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_analyze(args: argparse.Namespace) -> int:
    relation = load_relation(args)
    space = tolerance_space(relation)
    report = analyze_relation(space.relation, args.max_universe)
    if args.format == "json":
        _emit(report.to_json() + "\n", args.out)
    else:
        _emit(report.to_text(), args.out)
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    relation = load_relation(args)
    space = tolerance_space(relation)
    if args.what == "relation":
        # materialize the (possibly table-derived) tolerance itself
        if args.format != "json":
            raise ValueError("the relation carrier only exports as json")
        _emit(relation.to_json() + "\n", args.out)
        return EXIT_OK
    poset, label = carrier_poset(space, args.what, args.max_universe)
    if args.format == "dot":
        text = poset.to_dot(label=label, name=args.what)
    else:
        payload = {
            "schema": "roughtol-carrier/1",
            "what": args.what,
            "points": [label(p) for p in poset.points],
            "covers": sorted(poset.covers()),
        }
        if args.what == "irs":
            # membership provenance: which completion points are rough pairs
            rs_points = set(rough_poset(space, args.max_universe).points)
            payload["completion_only"] = [
                i for i, p in enumerate(poset.points) if p not in rs_points
            ]
        text = json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    relation = load_relation(args)
    space = tolerance_space(relation)
    checks = run_suite(space, args.suite, args.max_universe)
    failures = 0
    for name, ok, detail in checks:
        if ok:
            print(f"PASS {name}")
        else:
            failures += 1
            suffix = f": {detail}" if detail else ""
            print(f"FAIL {name}{suffix}")
    print(f"{len(checks) - failures}/{len(checks)} checks passed")
    return EXIT_OK if failures == 0 else EXIT_INVALID


def cmd_report(args: argparse.Namespace) -> int:
    from .plotting import hasse_figure

    relation = load_relation(args)
    space = tolerance_space(relation)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    report = analyze_relation(space.relation, args.max_universe)
    written = []
    json_path = outdir / "report.json"
    json_path.write_text(report.to_json() + "\n", encoding="utf-8")
    written.append(json_path)
    summary_path = outdir / "summary.tsv"
    lines = [f"{key}\t{value}" for key, value in report.flat_items()]
    summary_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    written.append(summary_path)
    for what in ("rs", "down", "up", "irs"):
        poset, label = carrier_poset(space, what, args.max_universe)
        figure_path = outdir / f"{what}.png"
        hasse_figure(poset, figure_path, label=label, title=what)
        written.append(figure_path)
    for path in written:
        print(path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="roughtol",
        description="rough-set analysis over tolerance relations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", help="relation JSON file or information-system CSV")
        p.add_argument(
            "--construction",
            choices=("sim", "rb", "wind"),
            help="tolerance construction for CSV inputs",
        )
        p.add_argument("--attrs", help="comma-separated attribute subset")
        p.add_argument(
            "--max-universe",
            type=int,
            default=DEFAULT_CAP,
            help="cap for exhaustive subset sweeps (default %(default)s)",
        )

    p_analyze = sub.add_parser("analyze", help="full pipeline report")
    add_common(p_analyze)
    p_analyze.add_argument("--format", choices=("json", "text"), default="json")
    p_analyze.add_argument("--out", help="write to a file instead of stdout")
    p_analyze.set_defaults(func=cmd_analyze)

    p_export = sub.add_parser("export", help="dump a carrier as DOT or JSON")
    add_common(p_export)
    p_export.add_argument("--what", choices=CARRIERS, required=True)
    p_export.add_argument("--format", choices=("dot", "json"), default="dot")
    p_export.add_argument("--out", help="write to a file instead of stdout")
    p_export.set_defaults(func=cmd_export)

    p_verify = sub.add_parser("verify", help="run a property suite")
    add_common(p_verify)
    p_verify.add_argument("--suite", choices=SUITES + ("all",), required=True)
    p_verify.set_defaults(func=cmd_verify)

    p_report = sub.add_parser(
        "report", help="write the JSON report, a TSV summary, and Hasse figures"
    )
    add_common(p_report)
    p_report.add_argument("--outdir", default="roughtol-report")
    p_report.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (RoughtolError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
