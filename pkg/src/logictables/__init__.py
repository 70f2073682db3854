"""Declarative logic tables compiled into continuous DNF equations.

A logic table maps recognized input situations to outputs.  Compiled to
disjunctive normal form over continuous operators (product AND, capped-add
OR, EQ = 1-|x-y|), the table becomes a smooth multidimensional interpolator
that still reproduces every configured row exactly.  The ``soccer`` module
demonstrates the full fuzzify / evaluate / defuzzify control cycle as a
deterministic headless game.
"""
from .logic import (
    Kind,
    LogicValue,
    UNKNOWN,
    OrSemantics,
    LogicDomainError,
    MixedKindError,
    UnknownOperandError,
    not_c,
    and_c,
    or_c,
    eq,
    eq_extended,
    boolean_g,
    boolean_f,
)
from .table import (
    Binding,
    Cell,
    InputColumn,
    LogicTable,
    TableRow,
    Violation,
    validate,
)
from .tabledoc import (
    TableDocument,
    TableDocumentError,
    TableSyntaxError,
    TableValidationError,
    parse_document,
    parse_tables,
    serialize_document,
    load_document,
)
from .dnf import (
    Expr,
    Const,
    InputRef,
    Not,
    And,
    Or,
    Eq,
    Scaled,
    Bindings,
    RenderStyle,
    CompileError,
    NonBooleanTableError,
    UnknownCellError,
    UnboundNameError,
    NonDnfShapeError,
    TooManyInputsError,
    compile_dnf_not,
    compile_dnf_xnor,
    compile_continuous,
    compile_with_unknowns,
    evaluate,
    render,
    truth_table,
    format_number,
)
from .fuzz import (
    ClampStep,
    MapRangeStep,
    Fuzzifier,
    InvertedBoundsError,
    DegenerateRangeError,
    clamp,
    map_range,
    defuzz_threshold,
    defuzz_scale,
)
from .soccer import (
    Vec2,
    WorldState,
    SensorVector,
    DecisionVector,
    BallPhase,
    SimEvent,
    TickRecord,
    SimSummary,
    SimTrace,
    SimConfig,
    DecisionEngine,
    SoccerSim,
    NonFiniteStateError,
    compute_world,
    compute_sensors,
    forward_from_angle,
    default_document,
    run_simulation,
)

__version__ = "0.1.0"
