"""Command-line entry point: ``python -m src.cli <command> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from src import __version__
from src.arith.factorization import squarefree_decompose
from src.cli.config import FILTERS, FORMATS, build_config, load_config_file
from src.cli.paper_examples import run_checklist
from src.cli.report import render, summary_line
from src.core.constants import BUDGETS, DIOPHANTINE_BOUNDS, Budgets
from src.core.errors import QuadClassError
from src.core.logging_setup import configure_logging
from src.diophantine.bugeaud_shorey import (
    BSInstance,
    classify_bs,
    count_solutions_D1x2_plus_D2_eq_g2py,
)
from src.diophantine.equations import (
    lemma32_solutions,
    solve_2x2_plus_1_eq_3y,
    solve_x2_plus_1_eq_2kz,
    solve_x2_plus_1_eq_2y4,
    solve_x4_minus_2y2,
)
from src.diophantine.sequences import lucas_squares_upto
from src.quadfield import properties
from src.quadfield.classgroup import class_group
from src.theorems.sweep import exit_code, sweep
from src.theorems.verdict import TheoremId

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

PARAM_NAMES = ("k", "n", "q", "e", "x", "l")
EQUATIONS = ("x2+1=2kz", "x2+1=2y4", "x4-2y2", "2x2+1=3y", "lemma32", "lucas-squares")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None)
    common.add_argument("--out", type=Path, default=None, help="write the report here")
    common.add_argument("--strict", action="store_true", default=None,
                        help="skipped points also fail the run")
    common.add_argument("--workers", type=int, default=None)
    common.add_argument("--budget-factor", type=int, default=None, dest="budget_factor")
    common.add_argument("--budget-disc", type=int, default=None, dest="budget_disc")
    common.add_argument("--witness-bound", type=int, default=None, dest="witness_bound")
    common.add_argument("-v", "--verbose", action="count", default=0)
    return common


def _range_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("parameters", "single value, lo..hi[/step] or a comma list")
    for name in PARAM_NAMES:
        group.add_argument(f"--{name}", default=None, dest=f"p_{name}")
        for keep in FILTERS:
            group.add_argument(f"--{name}-{keep}", default=None, dest=f"p_{name}_{keep}")


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="quadclass",
        description="Verify class-number divisibility for Q(sqrt(x^2 - 4k^n)).",
    )
    parser.add_argument("--version", action="version", version=f"quadclass {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classnum", parents=[common], help="class number and reduced forms")
    p.add_argument("d", type=int)

    p = sub.add_parser("squarefree", parents=[common], help="write m = a^2 d")
    p.add_argument("m", type=int)

    p = sub.add_parser("verify", parents=[common], help="check one theorem at a point or grid")
    p.add_argument("theorem", choices=[t.value for t in TheoremId])
    p.add_argument("--config", type=Path, default=None)
    _range_flags(p)

    p = sub.add_parser("sweep", parents=[common], help="run a sweep from a config file")
    p.add_argument("--config", type=Path, required=True)
    _range_flags(p)

    p = sub.add_parser("dioph", parents=[common], help="bounded Diophantine enumerations")
    p.add_argument("equation", choices=EQUATIONS)
    p.add_argument("--k", type=int, default=13, dest="k")
    p.add_argument("--rhs", type=int, default=1)
    p.add_argument("--d1", type=int, default=None)
    p.add_argument("--e", type=int, default=None, dest="e")
    p.add_argument("--q", type=int, default=None, dest="q")
    p.add_argument("--bound", type=int, default=None)

    p = sub.add_parser("bs-classify", parents=[common], help="exceptional-family membership")
    p.add_argument("--gamma-sq", type=int, required=True, dest="gamma_sq")
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)
    p.add_argument("--p", type=int, required=True, dest="p")
    p.add_argument("--y-max", type=int, default=60, dest="y_max")

    sub.add_parser("paper-examples", parents=[common], help="reproduce every published value")

    p = sub.add_parser("properties", parents=[common], help="run the property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=25, help="random elements per field")
    return parser


def _budgets(args: argparse.Namespace) -> Budgets:
    return BUDGETS.replace(
        factor_cap=args.budget_factor,
        disc_cap=args.budget_disc,
        witness_bound=args.witness_bound,
    )


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    logger.info("wrote %s", out)


def _dump(payload: object) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_classnum(args: argparse.Namespace) -> int:
    if args.d >= 0:
        raise UsageError(f"classnum needs a negative integer, got {args.d}")
    budgets = _budgets(args)
    dec = squarefree_decompose(args.d, budgets)
    summary = class_group(dec.d, budgets)
    if args.format == "json":
        _emit(_dump({
            "input": str(args.d),
            "d": str(dec.d),
            "a": str(dec.a),
            "D": str(summary.D),
            "h": str(summary.h),
            "forms": [[str(c) for c in f.as_tuple()] for f in summary.forms],
        }), args.out)
        return EXIT_OK
    lines = []
    if dec.a != 1:
        lines.append(f"{args.d} is not squarefree: {args.d} = {dec.a}^2 * {dec.d}")
    lines.append(f"h({dec.d}) = {summary.h}")
    lines.append(f"reduced forms of discriminant {summary.D}:")
    lines.extend(f"  {f}" for f in summary.forms)
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_squarefree(args: argparse.Namespace) -> int:
    if args.m == 0:
        raise UsageError("0 has no squarefree part")
    dec = squarefree_decompose(args.m, _budgets(args))
    if args.format == "json":
        _emit(_dump({k: str(v) for k, v in dec.to_dict().items()}), args.out)
    else:
        _emit(f"{dec.m} = {dec.a}^2 * {dec.d}\n", args.out)
    return EXIT_OK


def _settings(args: argparse.Namespace, theorem: Optional[str]) -> Dict[str, str]:
    """Config file values overridden by command-line flags."""
    settings: Dict[str, str] = {}
    if getattr(args, "config", None) is not None:
        settings.update(load_config_file(args.config))
    if theorem is not None:
        settings["theorem"] = theorem
    for name in PARAM_NAMES:
        given = {f"{name}": getattr(args, f"p_{name}")}
        given.update({f"{name}-{keep}": getattr(args, f"p_{name}_{keep}") for keep in FILTERS})
        given = {key: value for key, value in given.items() if value is not None}
        if given:
            for stale in [key for key in settings if key == name or key.startswith(f"{name}-")]:
                del settings[stale]
            settings.update(given)
    flags = {
        "format": args.format,
        "out": str(args.out) if args.out is not None else None,
        "workers": args.workers,
        "budget-factor": args.budget_factor,
        "budget-disc": args.budget_disc,
        "witness-bound": args.witness_bound,
        "strict": "true" if args.strict else None,
    }
    settings.update({key: str(value) for key, value in flags.items() if value is not None})
    if theorem is not None:
        settings.setdefault("format", "text")
    return settings


def cmd_verify(args: argparse.Namespace, theorem: Optional[str] = None) -> int:
    config = build_config(_settings(args, theorem))
    report = sweep(config.grid(), config.budgets, config.workers)
    _emit(render(config.output_format, config.to_dict(), report), config.out)
    if config.out is not None:
        print(summary_line(report))
    return exit_code(report, config.strict)


def cmd_dioph(args: argparse.Namespace) -> int:
    eq = args.equation
    if eq == "x2+1=2kz":
        found = solve_x2_plus_1_eq_2kz(args.k, args.bound or DIOPHANTINE_BOUNDS["x2_plus_1_eq_2kz"])
    elif eq == "x2+1=2y4":
        found = solve_x2_plus_1_eq_2y4(args.bound or DIOPHANTINE_BOUNDS["x2_plus_1_eq_2y4"])
    elif eq == "x4-2y2":
        found = solve_x4_minus_2y2(args.rhs, args.bound or DIOPHANTINE_BOUNDS["x4_minus_2y2"])
    elif eq == "2x2+1=3y":
        found = solve_2x2_plus_1_eq_3y(args.bound or DIOPHANTINE_BOUNDS["2x2_plus_1_eq_3y"])
    elif eq == "lemma32":
        if None in (args.d1, args.e, args.q):
            raise UsageError("lemma32 needs --d1, --e and --q")
        found = lemma32_solutions(args.d1, args.e, args.q, args.bound or 60)
    else:
        found = lucas_squares_upto(args.bound or DIOPHANTINE_BOUNDS["lucas_squares"])

    if args.format == "json":
        _emit(_dump({"equation": eq, "solutions": _stringify(found)}), args.out)
    else:
        _emit(f"{eq}: {found if found else 'no solutions'}\n", args.out)
    return EXIT_OK


def _stringify(values: Sequence[object]) -> List[object]:
    return [[str(c) for c in v] if isinstance(v, tuple) else str(v) for v in values]


def cmd_bs_classify(args: argparse.Namespace) -> int:
    budgets = _budgets(args)
    inst = BSInstance(args.gamma_sq, args.d1, args.d2, args.p)
    result = classify_bs(inst, budgets.witness_bound)
    solutions = count_solutions_D1x2_plus_D2_eq_g2py(inst, args.y_max)
    if args.format == "json":
        payload = {k: str(v) if isinstance(v, int) and not isinstance(v, bool) else v
                   for k, v in result.to_dict().items()}
        payload["solutions"] = _stringify(solutions)
        _emit(_dump(payload), args.out)
        return EXIT_OK
    lines = [
        f"instance (gamma^2, D1, D2, p) = {inst.as_tuple()}",
        f"  E: {result.in_E}",
        f"  F: {result.in_F if result.in_F is not None else 'no witness'}",
        f"  G: {result.in_G if result.in_G is not None else 'no witness'}",
        f"  H: {result.in_H if result.in_H is not None else 'no witness'}",
        f"  witness bound: {result.search_bound}",
        f"  solutions with y <= {args.y_max}: {solutions}",
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_paper_examples(args: argparse.Namespace) -> int:
    results = run_checklist(_budgets(args))
    if args.format == "json":
        _emit(_dump([
            {"claim": r.label, "expected": str(r.expected), "computed": str(r.computed),
             "match": r.matched}
            for r in results
        ]), args.out)
    else:
        _emit("\n".join(str(r) for r in results) + "\n", args.out)
    return EXIT_OK if all(r.matched for r in results) else EXIT_FAILURE


def cmd_properties(args: argparse.Namespace) -> int:
    reports = properties.run_all(args.seed, args.samples, _budgets(args))
    lines = []
    for report in reports:
        lines.append(str(report))
        lines.extend(f"  {item}" for item in report.failures[:10])
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if all(r.holds for r in reports) else EXIT_FAILURE


COMMANDS = {
    "classnum": cmd_classnum,
    "squarefree": cmd_squarefree,
    "verify": lambda args: cmd_verify(args, args.theorem),
    "sweep": cmd_verify,
    "dioph": cmd_dioph,
    "bs-classify": cmd_bs_classify,
    "paper-examples": cmd_paper_examples,
    "properties": cmd_properties,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"quadclass: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (QuadClassError, ValueError) as exc:
        print(f"quadclass: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
