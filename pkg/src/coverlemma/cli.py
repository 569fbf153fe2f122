"""Command-line front end.

    coverlemma decompose PROBLEM [--method ...] [--report PATH] [--format text|machine]
    coverlemma enumerate PROBLEM [--list]
    coverlemma verify PROBLEM

With ``--report report.txt`` the decompose command also writes the machine
report to ``report.json``.

Exit codes: 0 success, 1 a verification failed, 2 bad input, 3 the relations
are not a relational morphism, 4 an enumeration exceeded its budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .core import BudgetExceeded, TransformationSemigroup
from .problem import METHODS, Problem, ProblemError, load_problem
from .relmorph import MorphismError
from .report import decompose, render_json, render_text
from .verify import DEFAULT_BUDGET

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_MORPHISM = 3
EXIT_BUDGET = 4

BUDGET_ENV = "COVERLEMMA_BUDGET"


def _default_budget() -> int:
    value = os.environ.get(BUDGET_ENV)
    if value is None:
        return DEFAULT_BUDGET
    try:
        budget = int(value)
    except ValueError:
        raise ProblemError(f"{BUDGET_ENV} must be an integer, got {value!r}") from None
    if budget < 1:
        raise ProblemError(f"{BUDGET_ENV} must be positive")
    return budget


def _json_option(text: str, name: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemError(f"--{name}: invalid JSON: {exc}") from None


def _configure(args) -> tuple[Problem, int]:
    problem = load_problem(args.problem)
    method = getattr(args, "method", None)
    if method is not None and method != problem.method:
        problem.method = method
        problem.options = {}
    if getattr(args, "seed_classes", None) is not None:
        problem.options["seed"] = _json_option(args.seed_classes, "seed-classes")
    if getattr(args, "idempotent", None) is not None:
        problem.options["idempotent"] = _json_option(args.idempotent, "idempotent")
    budget = args.budget or problem.budget or _default_budget()
    return problem, budget


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def companion_path(path: str, fmt: str) -> Path:
    """Where the other report format goes when ``--report`` is given."""
    p = Path(path)
    suffix = ".txt" if fmt == "machine" else ".json"
    if p.suffix == suffix:
        return p.with_name(p.name + suffix)
    return p.with_suffix(suffix)


def cmd_decompose(args) -> int:
    problem, budget = _configure(args)
    report = decompose(problem, budget, oracle=args.verify)
    text = render_json(report) if args.format == "machine" else render_text(report)
    _emit(text, args.report)
    if args.report:
        other = render_text(report) if args.format == "machine" else render_json(report)
        companion_path(args.report, args.format).write_text(other, encoding="utf-8")
    return EXIT_OK if report["passed"] else EXIT_VERIFY_FAILED


def cmd_enumerate(args) -> int:
    problem, budget = _configure(args)
    S = TransformationSemigroup(problem.generators, budget)
    lines = [f"elements: {len(S)}", f"aperiodic: {str(S.is_aperiodic()).lower()}"]
    if args.list:
        for s, w in zip(S.elements, S.words):
            lines.append(f"{s}  word {' '.join(str(k + 1) for k in w)}")
    _emit("\n".join(lines) + "\n", args.report)
    return EXIT_OK


def cmd_verify(args) -> int:
    problem, budget = _configure(args)
    report = decompose(problem, budget, oracle=True)
    if args.format == "machine":
        text = render_json({"verification": report["verification"], "passed": report["passed"]})
    else:
        ver = report["verification"]
        lines = []
        for c in ver["checks"]:
            line = f"[{c['status']}] {c['name']}"
            if c["note"]:
                line += f" ({c['note']})"
            lines.append(line)
            if c["counterexample"] is not None:
                lines.append(f"    counterexample: {json.dumps(c['counterexample'], separators=(',', ':'))}")
        for comp in report["local_components"]:
            status = "pass" if comp["verified"] else "FAIL"
            lines.append(f"[{status}] U_{comp['y']} embeds into the source semigroup")
        lines.append("RESULT: " + ("PASS" if report["passed"] else "FAIL"))
        text = "\n".join(lines) + "\n"
    _emit(text, args.report)
    return EXIT_OK if report["passed"] else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coverlemma",
        description="Two-level cascade decompositions of finite transformation semigroups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, methods=True):
        p.add_argument("problem", help="problem file (JSON or plain text)")
        p.add_argument("--budget", type=int, help=f"element budget for enumerations (default ${BUDGET_ENV} or {DEFAULT_BUDGET})")
        p.add_argument("--report", metavar="PATH", help="write the report here instead of stdout")
        if methods:
            p.add_argument("--method", choices=METHODS, help="override the problem's method")
            p.add_argument("--seed-classes", metavar="JSON", help="seed classes for congruence, e.g. '[[1,2],[3,4]]'")
            p.add_argument("--idempotent", metavar="JSON", help="idempotent image list for local-monoid")
            p.add_argument("--format", choices=("text", "machine"), default="text")

    p = sub.add_parser("decompose", help="build and report the decomposition")
    common(p)
    p.add_argument("--verify", action="store_true", help="also run the flattened-word oracle")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("enumerate", help="count the elements of the generated semigroup")
    common(p, methods=False)
    p.add_argument("--list", action="store_true", help="list elements with their generator words")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run every verification on the configured decomposition")
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ProblemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except MorphismError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(f"counterexample: {json.dumps(exc.counterexample.to_dict(), separators=(',', ':'))}", file=sys.stderr)
        return EXIT_MORPHISM
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
