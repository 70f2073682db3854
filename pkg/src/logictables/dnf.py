"""Compile logic tables into DNF expressions; evaluate and render them.

Three compilation strategies share one shape: an OR across the table's
rows, one AND-term per row with nonzero output.

* ``compile_dnf_not``   - Boolean tables; factors are X or NOT(X).
* ``compile_dnf_xnor``  - Boolean tables; factors are XNOR(X, m) against the
  matrix constant, which makes the recognized pattern explicit per factor.
* ``compile_continuous`` / ``compile_with_unknowns`` - arbitrary tables;
  each term is the row's output multiplier times a product of EQ factors,
  which turns the table into a multidimensional interpolator.  Unknown
  cells simply contribute no factor.

Tables whose outputs are ``$name`` bindings evaluate OR as plain summation
instead of capped addition: their EQ factors form a partition of unity over
a selector input, so the sum is a convex combination of the bound values
(world coordinates, typically), which must not be capped at 1.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union

from .logic import (
    Kind,
    LogicValue,
    MixedKindError,
    OrSemantics,
    UnknownOperandError,
    eq_extended,
)
from .table import Binding, Cell, LogicTable

__all__ = [
    "Expr",
    "Const",
    "InputRef",
    "Not",
    "And",
    "Or",
    "Eq",
    "Scaled",
    "Bindings",
    "RenderStyle",
    "CompileError",
    "NonBooleanTableError",
    "UnknownCellError",
    "UnboundNameError",
    "NonDnfShapeError",
    "TooManyInputsError",
    "compile_dnf_not",
    "compile_dnf_xnor",
    "compile_continuous",
    "compile_with_unknowns",
    "evaluate",
    "render",
    "truth_table",
    "format_number",
]


class CompileError(ValueError):
    """A table cannot be compiled by the requested strategy."""


class NonBooleanTableError(CompileError):
    """Boolean DNF compilation needs every cell and output to be 0 or 1."""


class UnknownCellError(CompileError):
    """Unknown cells require compile_with_unknowns."""


class UnboundNameError(LookupError):
    """Evaluation hit a name with no binding."""


class NonDnfShapeError(ValueError):
    """The expression is not an OR of AND/scaled terms."""


class TooManyInputsError(ValueError):
    """Truth-table expansion would be too large."""


class Expr:
    """Base class for expression nodes.  Nodes are immutable values."""

    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Const(Expr):
    value: LogicValue
    literal: str


@dataclass(frozen=True, slots=True)
class InputRef(Expr):
    name: str


@dataclass(frozen=True, slots=True)
class Not(Expr):
    child: Expr


@dataclass(frozen=True, slots=True)
class And(Expr):
    children: tuple[Expr, ...]

    def __post_init__(self) -> None:
        if not self.children:
            raise ValueError("AND needs at least one child")


@dataclass(frozen=True, slots=True)
class Or(Expr):
    children: tuple[Expr, ...]
    semantics: OrSemantics = OrSemantics.CAPPED_ADD
    # Interpolating ORs (binding-output tables) sum their terms uncapped.
    interpolating: bool = False

    def __post_init__(self) -> None:
        if not self.children:
            raise ValueError("OR needs at least one child")


@dataclass(frozen=True, slots=True)
class Eq(Expr):
    left: InputRef
    right: Const


@dataclass(frozen=True, slots=True)
class Scaled(Expr):
    multiplier: Union[Const, Binding]
    child: Expr


@dataclass(frozen=True)
class Bindings:
    """Values for evaluation: table inputs plus external multipliers."""

    inputs: Mapping[str, LogicValue]
    externals: Mapping[str, float] = field(default_factory=dict)

    @classmethod
    def continuous(cls, values: Mapping[str, float], externals: Mapping[str, float] | None = None) -> "Bindings":
        return cls(
            {name: LogicValue.continuous(v) for name, v in values.items()},
            externals or {},
        )


_BOOL_ZERO = Const(LogicValue.continuous(0.0), "0")
_CONT_ZERO = Const(LogicValue.continuous(0.0), "0.0")
_CONT_ONE = Const(LogicValue.continuous(1.0), "1.0")


def _require_boolean(table: LogicTable) -> None:
    if not table.is_boolean():
        raise NonBooleanTableError(
            f"table {table.name!r} has cells or outputs that are not the "
            "Boolean constants 0/1"
        )


def compile_dnf_not(
    table: LogicTable, semantics: OrSemantics = OrSemantics.CAPPED_ADD
) -> Expr:
    """Classical DNF over a Boolean table: terms of X and NOT(X) factors.

    Rows with output 0 contribute nothing; a table with no contributing
    rows compiles to the constant 0.
    """
    _require_boolean(table)
    terms = []
    for row in table.rows:
        if row.output.value.value == 0.0:
            continue
        factors = tuple(
            InputRef(col.name) if cell.value.value == 1.0 else Not(InputRef(col.name))
            for col, cell in zip(table.inputs, row.cells)
        )
        terms.append(And(factors))
    if not terms:
        return _BOOL_ZERO
    return Or(tuple(terms), semantics)


def compile_dnf_xnor(
    table: LogicTable, semantics: OrSemantics = OrSemantics.CAPPED_ADD
) -> Expr:
    """DNF over a Boolean table with XNOR(input, matrix-constant) factors.

    Evaluates identically to compile_dnf_not on every Boolean input; the
    matrix values become explicit operands instead of choosing between X
    and NOT(X).
    """
    _require_boolean(table)
    terms = []
    for row in table.rows:
        if row.output.value.value == 0.0:
            continue
        factors = tuple(
            Eq(InputRef(col.name), Const(cell.value, cell.literal))
            for col, cell in zip(table.inputs, row.cells)
        )
        terms.append(And(factors))
    if not terms:
        return _BOOL_ZERO
    return Or(tuple(terms), semantics)


def compile_continuous(
    table: LogicTable, semantics: OrSemantics = OrSemantics.CAPPED_ADD
) -> Expr:
    """Continuous form: each term is the row output scaling its EQ product.

    Requires a fully specified matrix; tables with Unknown cells belong to
    compile_with_unknowns.
    """
    for j, row in enumerate(table.rows):
        for col, cell in zip(table.inputs, row.cells):
            if cell.value.kind is Kind.UNKNOWN:
                raise UnknownCellError(
                    f"table {table.name!r} row {j} column {col.name!r} is "
                    "Unknown; use compile_with_unknowns"
                )
    return compile_with_unknowns(table, semantics)


def compile_with_unknowns(
    table: LogicTable, semantics: OrSemantics = OrSemantics.CAPPED_ADD
) -> Expr:
    """Continuous form where Unknown cells contribute no EQ factor.

    A row whose cells are all Unknown degenerates to its bare multiplier.
    Rows with constant output 0 are dropped (they add nothing under either
    OR); rows with binding outputs always stay, since their multiplier is
    only known at evaluation time.
    """
    has_bindings = any(isinstance(row.output, Binding) for row in table.rows)
    if has_bindings and any(isinstance(row.output, Cell) for row in table.rows):
        raise CompileError(
            f"table {table.name!r} mixes constant and binding outputs"
        )
    terms = []
    for row in table.rows:
        output = row.output
        if isinstance(output, Cell):
            if output.value.value == 0:
                continue
            multiplier: Union[Const, Binding] = Const(output.value, output.literal)
        else:
            multiplier = output
        factors = tuple(
            Eq(InputRef(col.name), Const(cell.value, cell.literal))
            for col, cell in zip(table.inputs, row.cells)
            if cell.value.kind is not Kind.UNKNOWN
        )
        child: Expr = And(factors) if factors else _CONT_ONE
        terms.append(Scaled(multiplier, child))
    if not terms:
        return _CONT_ZERO
    return Or(tuple(terms), semantics, interpolating=has_bindings)


def _lookup(bindings: Bindings, name: str) -> LogicValue:
    try:
        return bindings.inputs[name]
    except KeyError:
        raise UnboundNameError(f"no binding for input {name!r}") from None


def evaluate(expr: Expr, bindings: Bindings) -> float:
    """Evaluate an expression against bound inputs and externals.

    With constant multipliers in [0,1] and a non-interpolating OR the
    result stays in [0,1]; interpolating ORs return plain sums of their
    scaled terms.
    """
    t = type(expr)
    if t is Eq:
        return eq_extended(_lookup(bindings, expr.left.name), expr.right.value)
    if t is And:
        out = 1.0
        for child in expr.children:
            out *= evaluate(child, bindings)
        return out
    if t is Or:
        children = expr.children
        acc = evaluate(children[0], bindings)
        if expr.interpolating:
            for child in children[1:]:
                acc += evaluate(child, bindings)
        elif expr.semantics is OrSemantics.CAPPED_ADD:
            for child in children[1:]:
                acc = min(acc + evaluate(child, bindings), 1.0)
        else:
            for child in children[1:]:
                v = evaluate(child, bindings)
                acc = acc + v - acc * v
        return acc
    if t is Scaled:
        m = expr.multiplier
        if type(m) is Binding:
            try:
                mv = bindings.externals[m.name]
            except KeyError:
                raise UnboundNameError(f"no binding for external {m.name!r}") from None
        else:
            mv = m.value.as_float()
        return mv * evaluate(expr.child, bindings)
    if t is Not:
        return 1.0 - evaluate(expr.child, bindings)
    if t is InputRef:
        value = _lookup(bindings, expr.name)
        if value.kind is Kind.UNKNOWN:
            raise UnknownOperandError(f"input {expr.name!r} is bound to Unknown")
        if value.kind is not Kind.CONTINUOUS:
            raise MixedKindError(
                f"input {expr.name!r} holds a state value but is used as a "
                "continuous operand"
            )
        return value.value
    if t is Const:
        return expr.value.as_float()
    raise TypeError(f"not an expression node: {expr!r}")


class RenderStyle(enum.Enum):
    """Canonical text styles for DNF expressions."""

    NOT = "not"
    XNOR = "xnor"
    CONTINUOUS = "continuous"


def render(expr: Expr, style: RenderStyle) -> str:
    """Deterministic canonical text: terms in row order, factors in input order.

    The continuous style joins factors with ``*`` and terms with the capped
    addition sign, and prints each term's multiplier.  Multipliers written
    as the Boolean literal ``1`` are elided and their term parenthesized;
    decimal multipliers like ``1.0`` always print, unparenthesized.
    """
    _check_dnf(expr)
    if type(expr) is Const:
        return expr.literal
    terms = expr.children if type(expr) is Or else (expr,)
    joiner = " ⊕ " if style is RenderStyle.CONTINUOUS else " OR "
    return joiner.join(_render_term(term, style) for term in terms)


def _render_term(term: Expr, style: RenderStyle) -> str:
    factor_join = " * " if style is RenderStyle.CONTINUOUS else " AND "
    if type(term) is Scaled:
        child = term.child
        factors = (
            []
            if type(child) is Const
            else [_render_factor(f, style) for f in child.children]
        )
        m = term.multiplier
        if isinstance(m, Binding):
            head = m.name
        elif m.literal == "1":
            head = None
        else:
            head = m.literal
        if head is None:
            if not factors:
                return "1"
            return "(" + factor_join.join(factors) + ")"
        return " * ".join([head, *factors])
    factors = [_render_factor(f, style) for f in term.children]
    return "(" + factor_join.join(factors) + ")"


def _render_factor(factor: Expr, style: RenderStyle) -> str:
    t = type(factor)
    if t is InputRef:
        return factor.name
    if t is Not:
        return f"NOT({factor.child.name})"
    name = factor.left.name
    literal = factor.right.literal
    op = "EQ" if style is RenderStyle.CONTINUOUS else "XNOR"
    if literal in ("0", "1"):
        return f"{op}({name},{literal})"
    return f"{op}({name}, {literal})"


def _check_dnf(expr: Expr) -> None:
    t = type(expr)
    if t is Const:
        return
    if t is Or:
        terms: tuple[Expr, ...] = expr.children
    elif t in (And, Scaled):
        terms = (expr,)
    else:
        raise NonDnfShapeError(f"top node must be OR, a term, or a constant: {expr!r}")
    for term in terms:
        tt = type(term)
        if tt is Scaled:
            if not isinstance(term.multiplier, (Const, Binding)):
                raise NonDnfShapeError("scaled multiplier must be constant or binding")
            child = term.child
            if type(child) is Const:
                continue
            if type(child) is not And:
                raise NonDnfShapeError("scaled child must be AND or a constant")
            _check_factors(child)
        elif tt is And:
            _check_factors(term)
        else:
            raise NonDnfShapeError(f"OR children must be terms: {term!r}")


def _check_factors(node: And) -> None:
    for factor in node.children:
        t = type(factor)
        if t is InputRef:
            continue
        if t is Not and type(factor.child) is InputRef:
            continue
        if t is Eq and type(factor.left) is InputRef and type(factor.right) is Const:
            continue
        raise NonDnfShapeError(f"AND factors must be leaves: {factor!r}")


def truth_table(
    expr: Expr, input_names: Sequence[str]
) -> list[tuple[tuple[int, ...], float]]:
    """Evaluate over all 2^n Boolean inputs, rows in binary counting order.

    The first input name is the most significant bit.
    """
    n = len(input_names)
    if n > 20:
        raise TooManyInputsError(f"{n} inputs would expand to 2^{n} rows")
    rows = []
    for i in range(1 << n):
        bits = tuple((i >> (n - 1 - k)) & 1 for k in range(n))
        bindings = Bindings(
            {
                name: LogicValue.continuous(float(bit))
                for name, bit in zip(input_names, bits)
            }
        )
        rows.append((bits, evaluate(expr, bindings)))
    return rows


def format_number(v: float) -> str:
    """Decimal text at 12 significant digits (round-half-even)."""
    return format(v, ".12g")
