"""The logic-table data model and its validation rules.

A table names its inputs, declares each input column continuous or state,
and lists rows: a matrix of recognition values plus one output per row.
Outputs are either constants or ``$name`` bindings resolved at evaluation
time (used when a row should emit an external quantity such as a position).

Constants remember their source literal ("1" vs "1.0") so that compiled
equations render exactly as written: Boolean tables print compact integer
constants, continuous tables print decimals.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence, Union

from .logic import UNKNOWN, Kind, LogicValue

__all__ = [
    "Binding",
    "Cell",
    "InputColumn",
    "TableRow",
    "LogicTable",
    "Violation",
    "validate",
]

_BINDING_RE = re.compile(r"\$(\w+)$")


@dataclass(frozen=True, slots=True)
class Binding:
    """A named external multiplier, resolved when the equation is evaluated."""

    name: str

    def __post_init__(self) -> None:
        if not re.fullmatch(r"\w+", self.name):
            raise ValueError(f"binding name must be a word, got {self.name!r}")


@dataclass(frozen=True, slots=True)
class Cell:
    """A constant logic value plus the canonical literal it was written as."""

    value: LogicValue
    literal: str


@dataclass(frozen=True, slots=True)
class InputColumn:
    name: str
    kind: Kind

    def __post_init__(self) -> None:
        if self.kind is Kind.UNKNOWN:
            raise ValueError("an input column must be continuous or state")


Output = Union[Cell, Binding]


@dataclass(frozen=True, slots=True)
class TableRow:
    cells: tuple[Cell, ...]
    output: Output


@dataclass(frozen=True, slots=True)
class LogicTable:
    name: str
    inputs: tuple[InputColumn, ...]
    rows: tuple[TableRow, ...]

    @property
    def input_names(self) -> tuple[str, ...]:
        return tuple(col.name for col in self.inputs)

    def matrix_is_boolean(self) -> bool:
        """True when every matrix cell is exactly the continuous 0 or 1."""
        return all(cell.value.is_boolean for row in self.rows for cell in row.cells)

    def is_boolean(self) -> bool:
        """True when every cell and every output is exactly 0 or 1."""
        return self.matrix_is_boolean() and all(
            isinstance(row.output, Cell) and row.output.value.is_boolean
            for row in self.rows
        )

    @classmethod
    def build(
        cls,
        name: str,
        input_names: Sequence[str],
        rows: Sequence[tuple[Sequence[object], object]],
        *,
        kinds: Sequence[Kind] | None = None,
        output_kind: Kind = Kind.CONTINUOUS,
    ) -> "LogicTable":
        """Construct a table from raw cell values.

        Integers become compact Boolean-style constants, floats decimal
        ones, the string "UNK" an Unknown cell, and "$name" outputs become
        bindings.  Columns default to continuous.
        """
        if kinds is None:
            kinds = [Kind.CONTINUOUS] * len(input_names)
        inputs = tuple(InputColumn(n, k) for n, k in zip(input_names, kinds))
        built = []
        for raw_cells, raw_output in rows:
            # Do not zip against inputs: a row of the wrong arity must
            # survive construction so that validate() can report it.
            cells = tuple(
                make_cell(raw, inputs[i].kind if i < len(inputs) else Kind.CONTINUOUS)
                for i, raw in enumerate(raw_cells)
            )
            built.append(TableRow(cells, make_output(raw_output, output_kind)))
        return cls(name, inputs, tuple(built))


def canonical_literal(raw: int | float) -> str:
    """The canonical source spelling of a numeric constant.

    Integers keep their compact form ("0", "1"); floats use the shortest
    decimal that round-trips ("1.0", "0.75").
    """
    if isinstance(raw, bool):
        raise ValueError("booleans are not table constants; use 0/1")
    if isinstance(raw, int):
        return str(raw)
    return repr(float(raw))


def make_cell(raw: object, kind: Kind) -> Cell:
    """Build a matrix cell of the column's kind from a raw scalar or "UNK"."""
    if isinstance(raw, Cell):
        return raw
    if isinstance(raw, str):
        if raw == "UNK":
            return Cell(UNKNOWN, "UNK")
        raise ValueError(f'cell must be a number or "UNK", got {raw!r}')
    if isinstance(raw, bool) or not isinstance(raw, (int, float)):
        raise ValueError(f'cell must be a number or "UNK", got {raw!r}')
    literal = canonical_literal(raw)
    if kind is Kind.STATE:
        if not isinstance(raw, int):
            raise ValueError(f"state cells must be whole-number literals, got {raw!r}")
        return Cell(LogicValue.state(raw), literal)
    return Cell(LogicValue.continuous(float(raw)), literal)


def make_output(raw: object, kind: Kind = Kind.CONTINUOUS) -> Output:
    """Build a row output: a constant of the given kind or a "$name" binding."""
    if isinstance(raw, (Cell, Binding)):
        return raw
    if isinstance(raw, str):
        m = _BINDING_RE.fullmatch(raw)
        if m:
            return Binding(m.group(1))
        raise ValueError(f'output must be a number or "$name" binding, got {raw!r}')
    return make_cell(raw, kind)


@dataclass(frozen=True, slots=True)
class Violation:
    """One finding from validation; only "error" severity blocks use."""

    severity: str  # "error" | "warning"
    message: str

    @property
    def is_error(self) -> bool:
        return self.severity == "error"


def _err(message: str) -> Violation:
    return Violation("error", message)


def _warn(message: str) -> Violation:
    return Violation("warning", message)


def validate(table: LogicTable) -> list[Violation]:
    """Check every table invariant; an empty report means the table is valid.

    Duplicate rows in an all-Boolean matrix only warn: they break the
    exact-recall guarantee but still compile.
    """
    report: list[Violation] = []
    name = table.name

    if not table.inputs:
        report.append(_err(f"table {name!r} declares no inputs"))
    if not table.rows:
        report.append(_err(f"table {name!r} has no rows"))
    seen: dict[str, int] = {}
    for col in table.inputs:
        if col.name in seen:
            report.append(_err(f"table {name!r} repeats input name {col.name!r}"))
        seen[col.name] = 1

    arity = len(table.inputs)
    for j, row in enumerate(table.rows):
        if len(row.cells) != arity:
            report.append(
                _err(
                    f"table {name!r} row {j} has {len(row.cells)} cells "
                    f"for {arity} inputs"
                )
            )
            continue
        for col, cell in zip(table.inputs, row.cells):
            kind = cell.value.kind
            if kind is not Kind.UNKNOWN and kind is not col.kind:
                report.append(
                    _err(
                        f"table {name!r} row {j}: {kind.value} cell in "
                        f"{col.kind.value} column {col.name!r}"
                    )
                )

    kinds_of_output = {isinstance(row.output, Binding) for row in table.rows}
    if len(kinds_of_output) > 1:
        report.append(
            _err(
                f"table {name!r} mixes constant and binding outputs; "
                "split it into separate tables"
            )
        )

    if table.matrix_is_boolean() and not any(v.is_error for v in report):
        seen_rows: dict[tuple[float, ...], int] = {}
        for j, row in enumerate(table.rows):
            key = tuple(cell.value.value for cell in row.cells)
            if key in seen_rows:
                report.append(
                    _warn(
                        f"table {name!r} rows {seen_rows[key]} and {j} have "
                        "identical Boolean matrices; exact recall is not "
                        "guaranteed"
                    )
                )
            else:
                seen_rows[key] = j
    return report
