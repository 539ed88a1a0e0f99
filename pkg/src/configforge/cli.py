"""Command-line interface.

Exit codes: 0 success, 1 logical failure (unsatisfiable, invalid
configuration), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import ConfigForgeError, ResourceLimitExceededError
from .formula import Assignment, encode_model, evaluate, statement_formula
from .generators import generate_config_h, generate_config_mk
from .graph import to_dot
from .heuristic import infer_heuristic
from .inference import COMPLETE, ENGINES, Verdict
from .parser import DepsModel, format_statement, parse_deps
from .session import Session
from .solver import CompleteSolver, Valuation

OK = 0
FAILURE = 1
USAGE = 2


class _CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _load_model(path: str) -> DepsModel:
    try:
        source = Path(path).read_text()
    except OSError as err:
        raise _CliError(f"cannot read {path}: {err}", USAGE)
    try:
        return parse_deps(source)
    except ConfigForgeError as err:
        raise _CliError(f"{path}: {err}", USAGE)


def _parse_set_flags(model: DepsModel, flags: list[str]) -> Assignment:
    forced_true: set[str] = set()
    forced_false: set[str] = set()
    for flag in flags:
        name, eq, value = flag.partition("=")
        if not eq or value not in ("0", "1"):
            raise _CliError(f"--set expects id=0 or id=1, got '{flag}'", USAGE)
        if name not in model.options:
            raise _CliError(f"unknown option '{name}'", USAGE)
        (forced_true if value == "1" else forced_false).add(name)
    if forced_true & forced_false:
        clash = ", ".join(sorted(forced_true & forced_false))
        raise _CliError(f"options forced both ways: {clash}", USAGE)
    return Assignment(frozenset(forced_true), frozenset(forced_false))


def _load_config_file(model: DepsModel, path: str) -> Valuation:
    try:
        text = Path(path).read_text()
    except OSError as err:
        raise _CliError(f"cannot read {path}: {err}", USAGE)
    valuation: Valuation = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, eq, value = line.partition("=")
        name = name.strip()
        value = value.strip()
        if not eq or value not in ("0", "1"):
            raise _CliError(
                f"{path}:{line_no}: expected id=0 or id=1, got '{raw}'", FAILURE
            )
        if name not in model.options:
            raise _CliError(f"{path}:{line_no}: unknown option '{name}'", FAILURE)
        if name in valuation:
            raise _CliError(f"{path}:{line_no}: duplicate option '{name}'", FAILURE)
        valuation[name] = value == "1"
    missing = [opt for opt in model.options if opt not in valuation]
    if missing:
        raise _CliError(f"{path}: missing options: " + ", ".join(missing), FAILURE)
    return valuation


def _ordered(names: frozenset[str] | set[str], model: DepsModel) -> list[str]:
    return [opt for opt in model.options if opt in names]


def _fmt_names(names: list[str]) -> str:
    return " ".join(names) if names else "(none)"


def _cmd_check(args: argparse.Namespace) -> int:
    model = _load_model(args.deps)
    solver = CompleteSolver(encode_model(model), model.options)
    witness = solver.satisfiable()
    print(f"options: {len(model.options)}")
    print(f"statements: {len(model.statements)}")
    print(f"satisfiable: {'yes' if witness is not None else 'no'}")
    if witness is None:
        print("the model admits no configuration at all")
        return FAILURE
    return OK


def _cmd_solve(args: argparse.Namespace) -> int:
    model = _load_model(args.deps)
    assignment = _parse_set_flags(model, args.set or [])
    formula = encode_model(model)
    if args.engine == COMPLETE:
        result = CompleteSolver(formula, model.options).forced_sets(assignment)
    else:
        result = infer_heuristic(formula, assignment)
    enforced = [
        f"{opt}={int(assignment.value_of(opt))}"  # type: ignore[arg-type]
        for opt in model.options
        if assignment.value_of(opt) is not None
    ]
    determined = (
        assignment.options() | result.implied_true | result.implied_false
    )
    free = [opt for opt in model.options if opt not in determined]
    print("enforced: " + (" ".join(enforced) if enforced else "(none)"))
    print("implied true: " + _fmt_names(_ordered(result.implied_true, model)))
    print("implied false: " + _fmt_names(_ordered(result.implied_false, model)))
    print("free: " + _fmt_names(free))
    print(f"verdict: {result.verdict.value}")
    return FAILURE if result.verdict is Verdict.UNSATISFIABLE else OK


def _cmd_generate(args: argparse.Namespace) -> int:
    model = _load_model(args.deps)
    valuation = _load_config_file(model, args.config)
    for statement in model.statements:
        f = statement_formula(statement)
        if f is not None and not evaluate(f, valuation):
            raise _CliError(
                "configuration violates: " + format_statement(statement), FAILURE
            )
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    header = out_dir / "config.h"
    makefile = out_dir / "config.mk"
    header.write_text(generate_config_h(model, valuation))
    makefile.write_text(generate_config_mk(model, valuation))
    print(f"wrote {header}")
    print(f"wrote {makefile}")
    return OK


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if args.limit < 1:
        raise _CliError("--limit must be at least 1", USAGE)
    model = _load_model(args.deps)
    assignment = _parse_set_flags(model, args.set or [])
    solver = CompleteSolver(encode_model(model), model.options)
    rows = solver.enumerate(assignment, limit=args.limit + 1)
    truncated = len(rows) > args.limit
    for valuation in rows[: args.limit]:
        print(",".join(f"{opt}={int(valuation[opt])}" for opt in model.options))
    if truncated:
        print(f"total: {args.limit}+ (limit reached)")
    else:
        print(f"total: {len(rows)}")
    return OK


def _cmd_export_dot(args: argparse.Namespace) -> int:
    model = _load_model(args.deps)
    assignment = _parse_set_flags(model, args.set or [])
    session = Session(model, engine=args.engine)
    for opt in model.options:
        value = assignment.value_of(opt)
        if value is None:
            continue
        session.click(opt)
        if value is False:
            session.click(opt)
    sys.stdout.write(to_dot(model, session.statuses()))
    return OK


def _cmd_serve(args: argparse.Namespace) -> int:
    from .server import serve

    serve(args.deps, port=args.port, engine=args.engine)
    return OK


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="configforge",
        description="dependency-aware static configuration tool",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_deps(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("deps", help="path to the deps file")
        return p

    def with_set_flag(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument(
            "--set",
            action="append",
            metavar="ID=0|1",
            help="enforce an option (repeatable)",
        )
        return p

    def with_solve_flags(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        with_set_flag(p)
        p.add_argument("--engine", choices=ENGINES, default=COMPLETE)
        return p

    p = with_deps(sub.add_parser("check", help="parse and test satisfiability"))
    p.set_defaults(func=_cmd_check)

    p = with_solve_flags(with_deps(sub.add_parser("solve", help="infer forced options")))
    p.set_defaults(func=_cmd_solve)

    p = with_deps(sub.add_parser("generate", help="write config.h and config.mk"))
    p.add_argument("config", help="saved configuration (id=0|1 lines)")
    p.add_argument("--out-dir", default=".", help="output directory")
    p.set_defaults(func=_cmd_generate)

    p = with_set_flag(
        with_deps(sub.add_parser("enumerate", help="list all configurations"))
    )
    p.add_argument("--limit", type=int, default=1000)
    p.set_defaults(func=_cmd_enumerate)

    p = with_solve_flags(
        with_deps(sub.add_parser("export-dot", help="print the graph in DOT form"))
    )
    p.set_defaults(func=_cmd_export_dot)

    p = with_deps(sub.add_parser("serve", help="run the HTTP service"))
    p.add_argument("--port", type=int, default=None)
    p.add_argument("--engine", choices=ENGINES, default=COMPLETE)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_arg_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return USAGE if err.code not in (0, None) else OK
    try:
        return args.func(args)
    except _CliError as err:
        print(f"error: {err}", file=sys.stderr)
        return err.code
    except ResourceLimitExceededError as err:
        print(f"error: {err}", file=sys.stderr)
        return FAILURE


def entry() -> None:
    sys.exit(main(sys.argv[1:]))
