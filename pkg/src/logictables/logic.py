"""Logic values and the continuous operator set.

A logic value is a Boolean embedded in [0,1], a continuous degree of truth
in [0,1], a crisp whole-number state, or the special Unknown marker.  The
continuous operators (complement, product AND, capped-add OR, EQ) reproduce
the classical Boolean operators exactly on {0,1} inputs, and interpolate
smoothly in between.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

__all__ = [
    "Kind",
    "LogicValue",
    "UNKNOWN",
    "OrSemantics",
    "LogicDomainError",
    "MixedKindError",
    "UnknownOperandError",
    "not_c",
    "and_c",
    "or_c",
    "eq",
    "eq_extended",
    "boolean_g",
    "boolean_f",
]


class LogicDomainError(ValueError):
    """An operand lies outside an operator's domain."""


class MixedKindError(LogicDomainError):
    """A state value was compared against a continuous one.

    This signals an authoring bug in a table: a column declared with one
    kind was evaluated against a binding of the other.
    """


class UnknownOperandError(LogicDomainError):
    """Unknown reached an operator; it should have been elided upstream."""


class Kind(enum.Enum):
    CONTINUOUS = "continuous"
    STATE = "state"
    UNKNOWN = "unknown"


@dataclass(frozen=True, slots=True)
class LogicValue:
    """A single logic value, tagged by kind.

    Continuous payloads must lie in [0,1]; state payloads are whole numbers
    >= 0; Unknown carries no payload.  Out-of-range payloads are rejected at
    construction, never clamped (clamping is the fuzzification layer's job).
    """

    kind: Kind
    value: float | int | None = None

    def __post_init__(self) -> None:
        if self.kind is Kind.CONTINUOUS:
            v = self.value
            if not isinstance(v, (int, float)) or isinstance(v, bool):
                raise ValueError(f"continuous value must be a real number, got {v!r}")
            if not (math.isfinite(v) and 0.0 <= v <= 1.0):
                raise ValueError(f"continuous value must lie in [0, 1], got {v!r}")
        elif self.kind is Kind.STATE:
            n = self.value
            if not isinstance(n, int) or isinstance(n, bool):
                raise ValueError(f"state value must be an integer, got {n!r}")
            if n < 0:
                raise ValueError(f"state value must be >= 0, got {n}")
        elif self.value is not None:
            raise ValueError("Unknown carries no payload")

    @classmethod
    def continuous(cls, v: float) -> "LogicValue":
        return cls(Kind.CONTINUOUS, float(v))

    @classmethod
    def state(cls, n: int) -> "LogicValue":
        return cls(Kind.STATE, n)

    @property
    def is_boolean(self) -> bool:
        """True for the continuous values 0 and 1 exactly."""
        return self.kind is Kind.CONTINUOUS and self.value in (0.0, 1.0)

    def as_float(self) -> float:
        if self.kind is Kind.UNKNOWN:
            raise UnknownOperandError("Unknown has no numeric value")
        return float(self.value)


UNKNOWN = LogicValue(Kind.UNKNOWN)


class OrSemantics(enum.Enum):
    """How OR combines two continuous logic values.

    CAPPED_ADD is min(x+y, 1); PROB_SUM is x + y - x*y.  Both agree with
    Boolean OR on {0,1} inputs; capped addition is the default because it
    behaves less warped between the corners.
    """

    CAPPED_ADD = "capped"
    PROB_SUM = "probsum"

    def combine(self, x: float, y: float) -> float:
        if self is OrSemantics.CAPPED_ADD:
            return min(x + y, 1.0)
        return x + y - x * y


def not_c(x: float) -> float:
    """Complement of a continuous logic value: 1 - x."""
    return 1.0 - x


def and_c(x: float, y: float) -> float:
    """Mutual contribution of two continuous logic values: x * y."""
    return x * y


def or_c(x: float, y: float, semantics: OrSemantics = OrSemantics.CAPPED_ADD) -> float:
    """Independent contribution of two continuous logic values toward truth."""
    return semantics.combine(x, y)


def eq(x: float, y: float) -> float:
    """Degree to which two continuous logic values agree: 1 - |x - y|."""
    return 1.0 - abs(x - y)


def eq_extended(x: LogicValue, y: LogicValue) -> float:
    """EQ over full logic values: exact match for states, eq() for continuous.

    Unknown operands and state/continuous mixes are errors; Unknown cells
    are supposed to be elided at compile time, and kinds are declared per
    table column, so either failure points at a bug upstream.
    """
    if x.kind is Kind.UNKNOWN or y.kind is Kind.UNKNOWN:
        raise UnknownOperandError("EQ cannot compare Unknown operands")
    if x.kind is Kind.STATE and y.kind is Kind.STATE:
        return 1.0 if x.value == y.value else 0.0
    if x.kind is Kind.CONTINUOUS and y.kind is Kind.CONTINUOUS:
        return eq(x.value, y.value)
    raise MixedKindError(f"cannot compare {x.kind.value} with {y.kind.value}")


def _check_bit(v: int, label: str) -> None:
    if v not in (0, 1) or isinstance(v, bool):
        raise ValueError(f"{label} must be the bit 0 or 1, got {v!r}")


def boolean_g(n: int, x: int, y: int) -> int:
    """The n-th two-input Boolean operator, n in 1..16.

    Column n's output bits are the 4-bit big-endian encoding of n-1, read
    down the rows (0,0), (0,1), (1,0), (1,1).  Under this numbering g2 is
    AND, g8 is OR, g10 is XNOR and g13 ignores y and negates x.
    """
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= 16:
        raise ValueError(f"operator index must be in 1..16, got {n!r}")
    _check_bit(x, "x")
    _check_bit(y, "y")
    row = 2 * x + y
    return (n - 1) >> (3 - row) & 1


# One-input operators expressed through two-input ones; the second operand
# is ignored by these four columns, so any bit works there.
_F_AS_G = {1: 1, 2: 4, 3: 13, 4: 16}


def boolean_f(n: int, x: int, i: int = 0) -> int:
    """The n-th one-input Boolean operator, n in 1..4 (f2 = identity, f3 = NOT).

    The result does not depend on the auxiliary bit ``i``.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n not in _F_AS_G:
        raise ValueError(f"operator index must be in 1..4, got {n!r}")
    return boolean_g(_F_AS_G[n], x, i)
