"""Command-line front end.

Subcommands: ``compile`` renders a table's equation, ``truth-table`` and
``surface`` export CSV grids of its values, ``eval`` evaluates it against
explicit bindings, and ``simulate`` runs the soccer demo.  Every command is
deterministic: identical inputs produce byte-identical output.

Exit codes: 0 success, 1 document parse error, 2 unknown table (argparse
also uses 2 for usage errors), 3 table not Boolean, 4 missing or malformed
binding, 5 wrong input arity, 6 unwritable output path.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .dnf import (
    NonBooleanTableError,
    RenderStyle,
    UnboundNameError,
    Bindings,
    compile_dnf_not,
    compile_dnf_xnor,
    compile_with_unknowns,
    evaluate,
    format_number,
    render,
    truth_table,
)
from .logic import Kind, LogicValue, OrSemantics
from .table import LogicTable
from .tabledoc import TableDocument, TableDocumentError, load_document
from .soccer import SimConfig, SoccerSim

__all__ = ["main", "run"]

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_UNKNOWN_TABLE = 2
EXIT_NON_BOOLEAN = 3
EXIT_MISSING_BINDING = 4
EXIT_BAD_ARITY = 5
EXIT_UNWRITABLE = 6


class _CliError(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        self.message = message


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logictables",
        description="Compile logic tables to continuous DNF equations, "
        "evaluate them, and run the soccer demo.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, spec_required: bool = True) -> None:
        p.add_argument("spec_pos", nargs="?", metavar="SPEC", default=None,
                       help="table document path")
        p.add_argument("--spec", dest="spec_flag", default=None,
                       help="table document path (alternative to the positional)")
        p.add_argument("--out", default="-", help="output path, '-' for stdout")
        p.set_defaults(spec_required=spec_required)

    p = sub.add_parser("compile", help="render a table's compiled equation")
    add_common(p)
    p.add_argument("--table", required=True, help="table name")
    p.add_argument("--style", choices=["not", "xnor", "continuous"], required=True)
    p.add_argument("--or", dest="or_mode", choices=["capped", "probsum"],
                   default="capped")
    p.set_defaults(handler=_cmd_compile)

    p = sub.add_parser("truth-table", help="CSV of all Boolean evaluations")
    add_common(p)
    p.add_argument("--table", required=True)
    p.set_defaults(handler=_cmd_truth_table)

    p = sub.add_parser("eval", help="evaluate a table against bindings")
    add_common(p)
    p.add_argument("--table", required=True)
    p.add_argument("--bind", action="append", default=[], metavar="NAME=VALUE",
                   help="bind an input or external name (repeatable)")
    p.add_argument("--or", dest="or_mode", choices=["capped", "probsum"],
                   default="capped")
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("surface", help="CSV value grid over the unit square")
    add_common(p)
    p.add_argument("--table", required=True)
    p.add_argument("--res", type=int, required=True, help="grid resolution >= 1")
    p.add_argument("--or", dest="or_mode", choices=["capped", "probsum"],
                   default="capped")
    p.set_defaults(handler=_cmd_surface)

    p = sub.add_parser("simulate", help="run the soccer demo headlessly")
    add_common(p, spec_required=False)
    p.add_argument("--ticks", type=int, default=20000)
    p.add_argument("--trace", default=None, help="write the tick trace here")
    p.set_defaults(handler=_cmd_simulate)

    return parser


def _spec_path(args: argparse.Namespace, parser: argparse.ArgumentParser) -> str | None:
    if args.spec_pos and args.spec_flag:
        parser.error("give the table document either positionally or via --spec")
    path = args.spec_pos or args.spec_flag
    if path is None and args.spec_required:
        parser.error("a table document path is required")
    return path


def _load(path: str) -> TableDocument:
    try:
        return load_document(path)
    except TableDocumentError as exc:
        raise _CliError(EXIT_PARSE, str(exc)) from None
    except OSError as exc:
        raise _CliError(EXIT_PARSE, f"cannot read {path}: {exc}") from None


def _find_table(doc: TableDocument, name: str) -> LogicTable:
    try:
        return doc.table(name)
    except KeyError:
        raise _CliError(EXIT_UNKNOWN_TABLE, f"unknown table {name!r}") from None


def _write(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise _CliError(EXIT_UNWRITABLE, f"cannot write {out}: {exc}") from None


def _cmd_compile(args: argparse.Namespace) -> int:
    doc = _load(args.spec)
    table = _find_table(doc, args.table)
    semantics = OrSemantics(args.or_mode)
    try:
        if args.style == "not":
            expr = compile_dnf_not(table, semantics)
        elif args.style == "xnor":
            expr = compile_dnf_xnor(table, semantics)
        else:
            expr = compile_with_unknowns(table, semantics)
    except NonBooleanTableError as exc:
        raise _CliError(EXIT_NON_BOOLEAN, str(exc)) from None
    _write(render(expr, RenderStyle(args.style)) + "\n", args.out)
    return EXIT_OK


def _cmd_truth_table(args: argparse.Namespace) -> int:
    doc = _load(args.spec)
    table = _find_table(doc, args.table)
    try:
        expr = compile_dnf_xnor(table)
    except NonBooleanTableError as exc:
        raise _CliError(EXIT_NON_BOOLEAN, str(exc)) from None
    lines = [",".join(table.input_names + ("out",))]
    for bits, value in truth_table(expr, table.input_names):
        lines.append(",".join([str(b) for b in bits] + [format_number(value)]))
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _parse_binds(
    pairs: Sequence[str], table: LogicTable
) -> Bindings:
    kinds = {col.name: col.kind for col in table.inputs}
    inputs: dict[str, LogicValue] = {}
    externals: dict[str, float] = {}
    for pair in pairs:
        name, sep, raw = pair.partition("=")
        if not sep or not name:
            raise _CliError(EXIT_MISSING_BINDING, f"malformed binding {pair!r}")
        try:
            value = float(raw)
        except ValueError:
            raise _CliError(
                EXIT_MISSING_BINDING, f"binding {name!r} is not a number: {raw!r}"
            ) from None
        if name in kinds:
            try:
                if kinds[name] is Kind.STATE:
                    inputs[name] = LogicValue.state(int(value))
                else:
                    inputs[name] = LogicValue.continuous(value)
            except ValueError as exc:
                raise _CliError(EXIT_MISSING_BINDING, f"binding {name!r}: {exc}") from None
        else:
            externals[name] = value
    missing = [name for name in table.input_names if name not in inputs]
    if missing:
        raise _CliError(
            EXIT_MISSING_BINDING, f"missing bindings for inputs: {', '.join(missing)}"
        )
    return Bindings(inputs, externals)


def _cmd_eval(args: argparse.Namespace) -> int:
    doc = _load(args.spec)
    table = _find_table(doc, args.table)
    bindings = _parse_binds(args.bind, table)
    expr = compile_with_unknowns(table, OrSemantics(args.or_mode))
    try:
        value = evaluate(expr, bindings)
    except UnboundNameError as exc:
        raise _CliError(EXIT_MISSING_BINDING, str(exc)) from None
    _write(format_number(value) + "\n", args.out)
    return EXIT_OK


def _cmd_surface(args: argparse.Namespace) -> int:
    doc = _load(args.spec)
    table = _find_table(doc, args.table)
    if len(table.inputs) != 2 or any(
        col.kind is not Kind.CONTINUOUS for col in table.inputs
    ):
        raise _CliError(
            EXIT_BAD_ARITY,
            f"table {table.name!r} must have exactly 2 continuous inputs",
        )
    expr = compile_with_unknowns(table, OrSemantics(args.or_mode))
    res = args.res
    xname, yname = table.input_names
    lines = [f"{xname},{yname},out"]
    for i in range(res + 1):
        x = i / res
        for j in range(res + 1):
            y = j / res
            value = evaluate(expr, Bindings.continuous({xname: x, yname: y}))
            lines.append(
                f"{format_number(x)},{format_number(y)},{format_number(value)}"
            )
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_simulate(args: argparse.Namespace) -> int:
    config = SimConfig(tables_path=args.spec) if args.spec else SimConfig()
    try:
        sim = SoccerSim(config)
    except TableDocumentError as exc:
        raise _CliError(EXIT_PARSE, str(exc)) from None
    except OSError as exc:
        raise _CliError(EXIT_PARSE, f"cannot read tables: {exc}") from None
    trace = sim.run(args.ticks)
    if args.trace is not None:
        _write(trace.canonical_text(), args.trace)
    _write(trace.summary.as_csv() + f"trace_hash={trace.trace_hash()}\n", args.out)
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point; returns the process exit code."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "surface" and args.res < 1:
        parser.error("--res must be >= 1")
    if args.command == "simulate" and args.ticks < 1:
        parser.error("--ticks must be >= 1")
    args.spec = _spec_path(args, parser)
    try:
        return args.handler(args)
    except _CliError as exc:
        print(exc.message, file=sys.stderr)
        return exc.code


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
