"""Read and write the JSON table-document format.

A document is either a plain list of tables or an object with a ``tables``
list and an optional ``sensors`` section describing fuzzifier pipelines:

    [
      {"name": "xor",
       "inputs": [{"name": "X", "kind": "continuous"}, ...],
       "rows": [{"m": [0, 1], "o": 1}, ...]}
    ]

Matrix cells are numbers or "UNK"; outputs are numbers or "$name" bindings.
Integer and decimal literals are distinct on purpose: they choose between
compact Boolean rendering and decimal rendering of compiled equations, and
they round-trip through serialization unchanged.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

from .fuzz import ClampStep, Fuzzifier, MapRangeStep, Step
from .logic import Kind
from .table import (
    Binding,
    Cell,
    InputColumn,
    LogicTable,
    TableRow,
    Violation,
    make_cell,
    make_output,
    validate,
)

__all__ = [
    "TableDocument",
    "TableDocumentError",
    "TableSyntaxError",
    "TableValidationError",
    "parse_document",
    "parse_tables",
    "serialize_document",
    "load_document",
]


class TableDocumentError(Exception):
    """Base error for table-document parsing."""


class TableSyntaxError(TableDocumentError):
    """The document text is not well-formed JSON."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class TableValidationError(TableDocumentError):
    """The document parsed but violates the schema or a table invariant."""

    def __init__(self, violations: Sequence[Violation]):
        self.violations = list(violations)
        lines = "; ".join(v.message for v in self.violations)
        super().__init__(f"invalid table document: {lines}")


@dataclass(frozen=True)
class TableDocument:
    """A parsed document: tables in source order plus optional fuzzifiers."""

    tables: tuple[LogicTable, ...]
    sensors: Mapping[str, Fuzzifier] = field(default_factory=dict)
    warnings: tuple[Violation, ...] = ()

    def table(self, name: str) -> LogicTable:
        for t in self.tables:
            if t.name == name:
                return t
        raise KeyError(f"no table named {name!r} in document")


_KINDS = {"continuous": Kind.CONTINUOUS, "state": Kind.STATE}


def parse_document(text: str) -> TableDocument:
    """Parse a document; raise TableSyntaxError or TableValidationError.

    Parsing is all-or-nothing: a document with any error yields no tables.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TableSyntaxError(exc.msg, exc.lineno, exc.colno) from None

    problems: list[Violation] = []
    if isinstance(data, list):
        raw_tables, raw_sensors = data, {}
    elif isinstance(data, dict):
        raw_tables = data.get("tables")
        raw_sensors = data.get("sensors", {})
        if not isinstance(raw_tables, list):
            raise TableValidationError(
                [Violation("error", 'document object needs a "tables" list')]
            )
        if not isinstance(raw_sensors, dict):
            problems.append(Violation("error", '"sensors" must be an object'))
            raw_sensors = {}
    else:
        raise TableValidationError(
            [Violation("error", "document must be a list of tables or an object")]
        )

    tables: list[LogicTable] = []
    names_seen: set[str] = set()
    for idx, raw in enumerate(raw_tables):
        table = _parse_table(raw, idx, problems)
        if table is not None:
            if table.name in names_seen:
                problems.append(
                    Violation("error", f"duplicate table name {table.name!r}")
                )
            names_seen.add(table.name)
            tables.append(table)

    sensors = _parse_sensors(raw_sensors, problems)

    warnings: list[Violation] = []
    for table in tables:
        for violation in validate(table):
            (problems if violation.is_error else warnings).append(violation)

    if any(v.is_error for v in problems):
        raise TableValidationError([v for v in problems if v.is_error])
    return TableDocument(tuple(tables), sensors, tuple(warnings))


def parse_tables(text: str) -> list[LogicTable]:
    """Parse a document and return its tables in source order."""
    return list(parse_document(text).tables)


def load_document(path: str | Path) -> TableDocument:
    return parse_document(Path(path).read_text(encoding="utf-8"))


def _parse_table(raw: object, idx: int, problems: list[Violation]) -> LogicTable | None:
    where = f"tables[{idx}]"
    if not isinstance(raw, dict):
        problems.append(Violation("error", f"{where} must be an object"))
        return None
    name = raw.get("name")
    if not isinstance(name, str) or not name:
        problems.append(Violation("error", f"{where} needs a non-empty string name"))
        return None
    where = f"table {name!r}"

    extra = set(raw) - {"name", "inputs", "rows", "output_kind"}
    if extra:
        problems.append(
            Violation("error", f"{where} has unknown fields {sorted(extra)}")
        )

    output_kind = raw.get("output_kind", "continuous")
    if output_kind not in _KINDS:
        problems.append(
            Violation("error", f'{where}: output_kind must be "continuous" or "state"')
        )
        output_kind = "continuous"

    inputs = _parse_inputs(raw.get("inputs"), where, problems)
    rows = _parse_rows(raw.get("rows"), inputs, _KINDS[output_kind], where, problems)
    if inputs is None or rows is None:
        return None
    return LogicTable(name, inputs, rows)


def _parse_inputs(
    raw: object, where: str, problems: list[Violation]
) -> tuple[InputColumn, ...] | None:
    if not isinstance(raw, list):
        problems.append(Violation("error", f'{where} needs an "inputs" list'))
        return None
    cols = []
    for i, entry in enumerate(raw):
        if (
            not isinstance(entry, dict)
            or not isinstance(entry.get("name"), str)
            or entry.get("kind") not in _KINDS
        ):
            problems.append(
                Violation(
                    "error",
                    f"{where} inputs[{i}] must be "
                    '{"name": str, "kind": "continuous"|"state"}',
                )
            )
            return None
        cols.append(InputColumn(entry["name"], _KINDS[entry["kind"]]))
    return tuple(cols)


def _parse_rows(
    raw: object,
    inputs: tuple[InputColumn, ...] | None,
    output_kind: Kind,
    where: str,
    problems: list[Violation],
) -> tuple[TableRow, ...] | None:
    if not isinstance(raw, list):
        problems.append(Violation("error", f'{where} needs a "rows" list'))
        return None
    rows = []
    bad = False
    for j, entry in enumerate(raw):
        if not isinstance(entry, dict) or "m" not in entry or "o" not in entry:
            problems.append(
                Violation("error", f'{where} rows[{j}] must be {{"m": [...], "o": ...}}')
            )
            bad = True
            continue
        raw_cells = entry["m"]
        if not isinstance(raw_cells, list):
            problems.append(Violation("error", f'{where} rows[{j}]: "m" must be a list'))
            bad = True
            continue
        row_bad = False
        cells = []
        for i, raw_cell in enumerate(raw_cells):
            kind = inputs[i].kind if inputs and i < len(inputs) else Kind.CONTINUOUS
            try:
                cells.append(make_cell(raw_cell, kind))
            except ValueError as exc:
                problems.append(Violation("error", f"{where} rows[{j}] m[{i}]: {exc}"))
                row_bad = True
        try:
            output = make_output(entry["o"], output_kind)
        except ValueError as exc:
            problems.append(Violation("error", f"{where} rows[{j}] output: {exc}"))
            row_bad = True
        if row_bad:
            bad = True
        else:
            rows.append(TableRow(tuple(cells), output))
    return None if bad else tuple(rows)


def _parse_sensors(
    raw: dict, problems: list[Violation]
) -> dict[str, Fuzzifier]:
    sensors: dict[str, Fuzzifier] = {}
    for name, entry in raw.items():
        where = f"sensor {name!r}"
        if not isinstance(entry, dict) or not isinstance(entry.get("source"), str):
            problems.append(Violation("error", f'{where} needs a "source" string'))
            continue
        steps: list[Step] = []
        ok = True
        for i, step in enumerate(entry.get("steps", [])):
            parsed = _parse_step(step, f"{where} steps[{i}]", problems)
            if parsed is None:
                ok = False
            else:
                steps.append(parsed)
        if not ok:
            continue
        try:
            sensors[name] = Fuzzifier(entry["source"], tuple(steps))
        except ValueError as exc:
            problems.append(Violation("error", f"{where}: {exc}"))
    return sensors


def _parse_step(raw: object, where: str, problems: list[Violation]) -> Step | None:
    if not isinstance(raw, dict):
        problems.append(Violation("error", f"{where} must be an object"))
        return None
    kind = raw.get("kind")
    try:
        if kind == "clamp":
            return ClampStep(float(raw["min"]), float(raw["max"]))
        if kind == "map_range":
            return MapRangeStep(
                float(raw["min1"]),
                float(raw["max1"]),
                float(raw["min2"]),
                float(raw["max2"]),
            )
    except (KeyError, TypeError, ValueError) as exc:
        problems.append(Violation("error", f"{where}: {exc}"))
        return None
    problems.append(Violation("error", f'{where}: kind must be "clamp" or "map_range"'))
    return None


def _literal_to_json(literal: str) -> object:
    if literal == "UNK":
        return "UNK"
    if any(ch in literal for ch in ".eE"):
        return float(literal)
    return int(literal)


def serialize_document(
    doc: TableDocument | Sequence[LogicTable],
    sensors: Mapping[str, Fuzzifier] | None = None,
) -> str:
    """Serialize tables (and fuzzifiers) back to document text.

    Round-trips: parsing the result yields structurally identical tables,
    including the integer-vs-decimal spelling of each constant.
    """
    if isinstance(doc, TableDocument):
        tables = doc.tables
        sensors = dict(doc.sensors) if sensors is None else sensors
    else:
        tables = tuple(doc)

    raw_tables = []
    for table in tables:
        raw_rows = []
        for row in table.rows:
            out = row.output
            raw_rows.append(
                {
                    "m": [_literal_to_json(c.literal) for c in row.cells],
                    "o": f"${out.name}" if isinstance(out, Binding)
                    else _literal_to_json(out.literal),
                }
            )
        entry: dict[str, object] = {
            "name": table.name,
            "inputs": [
                {"name": col.name, "kind": col.kind.value} for col in table.inputs
            ],
            "rows": raw_rows,
        }
        output_kinds = {
            row.output.value.kind
            for row in table.rows
            if isinstance(row.output, Cell)
        }
        if output_kinds == {Kind.STATE}:
            entry["output_kind"] = "state"
        raw_tables.append(entry)

    if sensors:
        raw_sensors = {
            name: {
                "source": f.source,
                "steps": [_step_to_json(step) for step in f.steps],
            }
            for name, f in sensors.items()
        }
        payload: object = {"tables": raw_tables, "sensors": raw_sensors}
    else:
        payload = raw_tables
    return json.dumps(payload, indent=2) + "\n"


def _step_to_json(step: Step) -> dict:
    if isinstance(step, ClampStep):
        return {"kind": "clamp", "min": step.lo, "max": step.hi}
    return {
        "kind": "map_range",
        "min1": step.min1,
        "max1": step.max1,
        "min2": step.min2,
        "max2": step.max2,
    }
