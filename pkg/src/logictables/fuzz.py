"""Fuzzification and defuzzification helpers.

World values arrive in arbitrary units; a fuzzifier pipeline normalizes one
of them into logic space [0,1] through clamp / affine-remap steps.  The
defuzzifiers convert a decision value back into an actuation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Union

__all__ = [
    "InvertedBoundsError",
    "DegenerateRangeError",
    "clamp",
    "map_range",
    "defuzz_threshold",
    "defuzz_scale",
    "ClampStep",
    "MapRangeStep",
    "Fuzzifier",
]


class InvertedBoundsError(ValueError):
    """Clamp bounds given in the wrong order."""


class DegenerateRangeError(ValueError):
    """Affine remap with an empty source range."""


def clamp(x: float, lo: float, hi: float) -> float:
    """Restrict x to [lo, hi]."""
    if lo > hi:
        raise InvertedBoundsError(f"clamp bounds inverted: {lo} > {hi}")
    if x < lo:
        return lo
    if x > hi:
        return hi
    return x


def map_range(x: float, min1: float, max1: float, min2: float, max2: float) -> float:
    """Affine remap of x from [min1, max1] onto [min2, max2].

    The output is NOT clamped: x outside the source range maps outside the
    target range.  Compose with clamp() when the result must stay bounded.
    """
    if max1 == min1:
        raise DegenerateRangeError("source range is empty: max1 == min1")
    return min2 + ((x - min1) / (max1 - min1)) * (max2 - min2)


def defuzz_threshold(z: float, threshold: float) -> bool:
    """True iff the decision value strictly exceeds the threshold."""
    return z > threshold


def defuzz_scale(z: float, gain: float) -> float:
    """Scale a decision value by an actuation gain."""
    return gain * z


@dataclass(frozen=True, slots=True)
class ClampStep:
    lo: float
    hi: float

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise InvertedBoundsError(f"clamp bounds inverted: {self.lo} > {self.hi}")

    def apply(self, x: float) -> float:
        return clamp(x, self.lo, self.hi)


@dataclass(frozen=True, slots=True)
class MapRangeStep:
    min1: float
    max1: float
    min2: float
    max2: float

    def __post_init__(self) -> None:
        if self.max1 == self.min1:
            raise DegenerateRangeError("source range is empty: max1 == min1")

    def apply(self, x: float) -> float:
        return map_range(x, self.min1, self.max1, self.min2, self.max2)


Step = Union[ClampStep, MapRangeStep]


@dataclass(frozen=True, slots=True)
class Fuzzifier:
    """Pipeline mapping one named world value into logic space.

    ``source`` names a scalar world value; a leading ``-`` negates it before
    the steps run.  An empty step list passes the source through unchanged
    (for flags that are already 0/1).  Construction requires the final step
    to land in [0,1]: a clamp into a subrange of [0,1], or a remap whose
    targets both lie in [0,1].
    """

    source: str
    steps: tuple[Step, ...] = ()

    def __post_init__(self) -> None:
        name = self.source[1:] if self.source.startswith("-") else self.source
        if not name:
            raise ValueError("fuzzifier source must name a world value")
        if self.steps:
            last = self.steps[-1]
            if isinstance(last, ClampStep):
                ok = 0.0 <= last.lo and last.hi <= 1.0
            else:
                ok = 0.0 <= last.min2 <= 1.0 and 0.0 <= last.max2 <= 1.0
            if not ok:
                raise ValueError(
                    f"fuzzifier for {self.source!r} does not land in [0, 1]; "
                    "end the pipeline with a clamp into [0, 1]"
                )

    def apply(self, world: Mapping[str, float]) -> float:
        """Run the pipeline against a mapping of world-value names."""
        negate = self.source.startswith("-")
        name = self.source[1:] if negate else self.source
        if name not in world:
            raise ValueError(f"unknown world value {name!r}")
        x = float(world[name])
        if negate:
            x = -x
        for step in self.steps:
            x = step.apply(x)
        if not 0.0 <= x <= 1.0:
            raise ValueError(
                f"fuzzifier for {self.source!r} produced {x!r}, outside [0, 1]"
            )
        return x
