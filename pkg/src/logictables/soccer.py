"""Headless, deterministic soccer-playing robot driven by logic tables.

Each tick runs one full contemplation cycle: world values are computed from
the scene, fuzzified into sensors, the compiled decision tables are
evaluated, and the results are defuzzified into motion.  The robot seeks
the ball, carries it toward the goal, and throws when close enough; the
ball bounces inside the field, scores when it reaches the goal mouth, and
resets so play continues forever.

There is no randomness anywhere: two runs of equal length produce byte-
identical traces.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .dnf import Bindings, compile_with_unknowns, evaluate, format_number
from .fuzz import clamp, defuzz_scale, defuzz_threshold, map_range
from .logic import LogicValue, OrSemantics
from .tabledoc import TableDocument, load_document, parse_document

__all__ = [
    "NonFiniteStateError",
    "Vec2",
    "WorldState",
    "SensorVector",
    "DecisionVector",
    "BallPhase",
    "SimEvent",
    "TickRecord",
    "SimSummary",
    "SimTrace",
    "SimConfig",
    "DecisionEngine",
    "SoccerSim",
    "compute_world",
    "compute_sensors",
    "forward_from_angle",
    "default_document",
    "run_simulation",
    "fnv1a64",
]

# The rotation constant keeps this truncated pi literal on purpose; a more
# precise value would change every trace downstream.
DEG_TO_RAD = 2.0 * 3.14159265358 / 360.0


class NonFiniteStateError(ValueError):
    """A world value is NaN or infinite; the scene state is corrupt."""


@dataclass(frozen=True, slots=True)
class Vec2:
    x: float
    y: float

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def scaled(self, k: float) -> "Vec2":
        return Vec2(self.x * k, self.y * k)

    def dot(self, other: "Vec2") -> float:
        return self.x * other.x + self.y * other.y

    def length(self) -> float:
        return math.hypot(self.x, self.y)

    def is_finite(self) -> bool:
        return math.isfinite(self.x) and math.isfinite(self.y)


def forward_from_angle(angle_deg: float) -> Vec2:
    """Unit heading for an angle in degrees; 0 points up, positive turns right."""
    r = angle_deg * DEG_TO_RAD
    return Vec2(math.sin(r), -math.cos(r))


@dataclass(frozen=True, slots=True)
class WorldState:
    """Everything the robot can perceive, one snapshot per tick."""

    robot_pos: Vec2
    robot_forward: Vec2
    robot_right: Vec2
    target_pos: Vec2
    target_dist: float
    ball_pos: Vec2
    goal_pos: Vec2
    held: bool
    target_dir: Vec2
    fwd_dot: float
    right_dot: float

    def scalars(self) -> dict[str, float]:
        """The scalar world values addressable by fuzzifier sources."""
        return {
            "w4": self.target_dist,
            "w7": 1.0 if self.held else 0.0,
            "w9": self.fwd_dot,
            "w10": self.right_dot,
        }


@dataclass(frozen=True, slots=True)
class SensorVector:
    """Fuzzified perception, all values in [0,1]."""

    s0: float  # target in front
    s1: float  # target behind
    s2: float  # target near
    s3: float  # target to the right
    s4: float  # target to the left
    s5: float  # holding the ball (exactly 0 or 1)

    def as_tuple(self) -> tuple[float, ...]:
        return (self.s0, self.s1, self.s2, self.s3, self.s4, self.s5)

    def as_bindings(self) -> dict[str, LogicValue]:
        return {
            name: LogicValue.continuous(v)
            for name, v in zip(("s0", "s1", "s2", "s3", "s4", "s5"), self.as_tuple())
        }


@dataclass(frozen=True, slots=True)
class DecisionVector:
    """Evaluated decision tables; the four logic fields stay in [0,1]."""

    drive_forward: float
    throw_ball: float
    turn_right: float
    turn_left: float
    target_x: float
    target_y: float

    def as_tuple(self) -> tuple[float, ...]:
        return (
            self.drive_forward,
            self.throw_ball,
            self.turn_right,
            self.turn_left,
            self.target_x,
            self.target_y,
        )


class BallPhase(enum.Enum):
    IDLE = "idle"
    HELD = "held"


class SimEvent(enum.Enum):
    PICKUP = "pickup"
    THROW = "throw"
    GOAL = "goal"
    RESET = "reset"


@dataclass(frozen=True, slots=True)
class TickRecord:
    tick: int
    world: WorldState
    sensors: SensorVector
    decisions: DecisionVector
    events: tuple[SimEvent, ...]


@dataclass(frozen=True, slots=True)
class SimSummary:
    pickups: int
    throws: int
    goals: int
    ticks: int

    def as_csv(self) -> str:
        return (
            "pickups,throws,goals,ticks\n"
            f"{self.pickups},{self.throws},{self.goals},{self.ticks}\n"
        )


def fnv1a64(data: bytes) -> int:
    """64-bit FNV-1a hash."""
    h = 0xCBF29CE484222325
    for byte in data:
        h = ((h ^ byte) * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return h


class SimTrace:
    """The per-tick records of a run plus their canonical text form.

    Each canonical line is a JSON object with fixed field order (tick,
    positions, held flag, sensors, decisions, events); the trace hash is
    64-bit FNV-1a over the concatenated lines.
    """

    def __init__(self, records: list[TickRecord]):
        self.records = records

    def __len__(self) -> int:
        return len(self.records)

    @property
    def summary(self) -> SimSummary:
        counts = {event: 0 for event in SimEvent}
        for record in self.records:
            for event in record.events:
                counts[event] += 1
        return SimSummary(
            pickups=counts[SimEvent.PICKUP],
            throws=counts[SimEvent.THROW],
            goals=counts[SimEvent.GOAL],
            ticks=len(self.records),
        )

    @staticmethod
    def _line(r: TickRecord) -> str:
        def vec(v: Vec2) -> str:
            return f"[{format_number(v.x)},{format_number(v.y)}]"

        def nums(values: tuple[float, ...]) -> str:
            return ",".join(format_number(v) for v in values)

        w = r.world
        events = ",".join(f'"{e.value}"' for e in r.events)
        return (
            f'{{"tick":{r.tick},"robot":{vec(w.robot_pos)},"ball":{vec(w.ball_pos)},'
            f'"target":{vec(w.target_pos)},"held":{1 if w.held else 0},'
            f'"sensors":[{nums(r.sensors.as_tuple())}],'
            f'"decisions":[{nums(r.decisions.as_tuple())}],'
            f'"events":[{events}]}}'
        )

    def canonical_text(self) -> str:
        return "".join(self._line(r) + "\n" for r in self.records)

    def trace_hash(self) -> str:
        return format(fnv1a64(self.canonical_text().encode("utf-8")), "016x")


@dataclass(frozen=True)
class SimConfig:
    """Field geometry, actuation gains, and ball physics constants."""

    field_width: float = 512.0
    field_height: float = 512.0
    robot_start: tuple[float, float] = (128.0, 128.0)
    robot_start_angle: float = 0.0
    ball_start: tuple[float, float] = (500.0, 256.0)
    goal_pos: tuple[float, float] = (256.0, 512.0)
    pickup_radius: float = 24.0
    goal_radius: float = 20.0
    pickup_cooldown: int = 100
    throw_threshold: float = 0.90
    throw_speed: float = 30.0
    friction: float = 0.95
    drive_gain: float = 1.75
    drive_min: float = -0.5
    drive_max: float = 1.0
    turn_gain: float = 2.75
    turn_scale: float = 0.5
    turn_limit: float = 1.0
    or_semantics: OrSemantics = OrSemantics.CAPPED_ADD
    tables_path: str | Path | None = None


def default_document() -> TableDocument:
    """The bundled soccer behavior tables."""
    text = resources.files("logictables").joinpath("data/soccer.tables").read_text(
        encoding="utf-8"
    )
    return parse_document(text)


def compute_world(
    robot_pos: Vec2,
    robot_forward: Vec2,
    target_pos: Vec2,
    ball_pos: Vec2,
    goal_pos: Vec2,
    held: bool,
) -> WorldState:
    """Derive the full perception snapshot from scene geometry.

    The right vector is the forward vector rotated a quarter turn; a target
    at zero distance yields a zero direction vector and zero dot products.
    """
    for label, v in (
        ("robot position", robot_pos),
        ("robot forward", robot_forward),
        ("target position", target_pos),
        ("ball position", ball_pos),
        ("goal position", goal_pos),
    ):
        if not v.is_finite():
            raise NonFiniteStateError(f"{label} is not finite: {v}")
    right = Vec2(-robot_forward.y, robot_forward.x)
    offset = target_pos - robot_pos
    dist = offset.length()
    direction = offset.scaled(1.0 / dist) if dist > 0.0 else Vec2(0.0, 0.0)
    return WorldState(
        robot_pos=robot_pos,
        robot_forward=robot_forward,
        robot_right=right,
        target_pos=target_pos,
        target_dist=dist,
        ball_pos=ball_pos,
        goal_pos=goal_pos,
        held=held,
        target_dir=direction,
        fwd_dot=robot_forward.dot(direction),
        right_dot=right.dot(direction),
    )


# Nearness fades linearly from 1 at distance 0 to 0 at this distance.
NEAR_RANGE = 400.0


def compute_sensors(w: WorldState) -> SensorVector:
    """Fuzzify a world snapshot into the six sensors.

    The nearness remap goes negative beyond NEAR_RANGE, so it gets an outer
    clamp; the directional dots are clamped one-sided pairs.
    """
    return SensorVector(
        s0=clamp(w.fwd_dot, 0.0, 1.0),
        s1=clamp(-w.fwd_dot, 0.0, 1.0),
        s2=clamp(map_range(w.target_dist, 0.0, NEAR_RANGE, 1.0, 0.0), 0.0, 1.0),
        s3=clamp(w.right_dot, 0.0, 1.0),
        s4=clamp(-w.right_dot, 0.0, 1.0),
        s5=1.0 if w.held else 0.0,
    )


class DecisionEngine:
    """The five behavior tables, compiled once and evaluated per tick.

    The target table is selector-style: its outputs are the bindings $w6
    (goal position) and $w5 (ball position), so it is evaluated twice per
    tick, once against the x components and once against the y components.
    """

    TABLE_NAMES = ("drive_forward", "throw_ball", "turn_right", "turn_left", "target")

    def __init__(
        self,
        document: TableDocument,
        semantics: OrSemantics = OrSemantics.CAPPED_ADD,
    ):
        self.document = document
        self.exprs = {
            name: compile_with_unknowns(document.table(name), semantics)
            for name in self.TABLE_NAMES
        }

    def decide(self, sensors: SensorVector, world: WorldState) -> DecisionVector:
        inputs = sensors.as_bindings()
        plain = Bindings(inputs)
        target = self.exprs["target"]
        return DecisionVector(
            drive_forward=evaluate(self.exprs["drive_forward"], plain),
            throw_ball=evaluate(self.exprs["throw_ball"], plain),
            turn_right=evaluate(self.exprs["turn_right"], plain),
            turn_left=evaluate(self.exprs["turn_left"], plain),
            target_x=evaluate(
                target,
                Bindings(inputs, {"w5": world.ball_pos.x, "w6": world.goal_pos.x}),
            ),
            target_y=evaluate(
                target,
                Bindings(inputs, {"w5": world.ball_pos.y, "w6": world.goal_pos.y}),
            ),
        )


class SoccerSim:
    """One robot, one ball, one goal; stepped a tick at a time."""

    def __init__(self, config: SimConfig | None = None):
        self.config = config or SimConfig()
        cfg = self.config
        if cfg.tables_path is not None:
            document = load_document(cfg.tables_path)
        else:
            document = default_document()
        self.engine = DecisionEngine(document, cfg.or_semantics)
        self.tick = 0
        self.robot_pos = Vec2(*cfg.robot_start)
        self.robot_angle = cfg.robot_start_angle
        self.ball_pos = Vec2(*cfg.ball_start)
        self.ball_vel = Vec2(0.0, 0.0)
        self.ball_phase = BallPhase.IDLE
        self.cooldown = 0
        self.goal = Vec2(*cfg.goal_pos)
        # The decision loop rewrites the target each tick; before the first
        # decision it aims at the ball.
        self.target = Vec2(*cfg.ball_start)

    def step(self) -> TickRecord:
        """Advance one control tick: perceive, decide, act, move the ball."""
        cfg = self.config
        self.tick += 1
        events: list[SimEvent] = []

        forward = forward_from_angle(self.robot_angle)
        world = compute_world(
            self.robot_pos,
            forward,
            self.target,
            self.ball_pos,
            self.goal,
            self.ball_phase is BallPhase.HELD,
        )
        sensors = compute_sensors(world)
        decisions = self.engine.decide(sensors, world)

        # Defuzzify.  The throw releases the ball before the robot moves,
        # at full strength, along the current heading.
        if (
            defuzz_threshold(decisions.throw_ball, cfg.throw_threshold)
            and self.ball_phase is BallPhase.HELD
        ):
            self.ball_vel = forward.scaled(cfg.throw_speed)
            self.ball_phase = BallPhase.IDLE
            self.cooldown = cfg.pickup_cooldown
            events.append(SimEvent.THROW)
        # Turn toward whichever side recommends more; an exact tie turns
        # neither way.
        turn_motion = 0.0
        if decisions.turn_right > decisions.turn_left:
            turn_motion = defuzz_scale(decisions.turn_right, cfg.turn_scale)
        elif decisions.turn_left > decisions.turn_right:
            turn_motion = -defuzz_scale(decisions.turn_left, cfg.turn_scale)
        self.target = Vec2(decisions.target_x, decisions.target_y)

        # Translate along the current heading, then rotate for next tick.
        amount = cfg.drive_gain * clamp(
            decisions.drive_forward, cfg.drive_min, cfg.drive_max
        )
        moved = self.robot_pos + forward.scaled(amount)
        self.robot_pos = Vec2(
            clamp(moved.x, 0.0, cfg.field_width),
            clamp(moved.y, 0.0, cfg.field_height),
        )
        self.robot_angle += cfg.turn_gain * clamp(
            turn_motion, -cfg.turn_limit, cfg.turn_limit
        )

        # Ball kinematics: drift, decay, bounce, then goal or pickup.
        self.ball_pos = self.ball_pos + self.ball_vel
        self.ball_vel = self.ball_vel.scaled(cfg.friction)
        if self.ball_phase is BallPhase.IDLE:
            x, y = self.ball_pos.x, self.ball_pos.y
            dx, dy = self.ball_vel.x, self.ball_vel.y
            if x < 0.0:
                x, dx = 0.0, -dx
            if x > cfg.field_width:
                x, dx = cfg.field_width, -dx
            if y < 0.0:
                y, dy = 0.0, -dy
            if y > cfg.field_height:
                y, dy = cfg.field_height, -dy
            self.ball_pos = Vec2(x, y)
            self.ball_vel = Vec2(dx, dy)
            if self.cooldown > 0:
                self.cooldown -= 1
            if (self.ball_pos - self.goal).length() <= cfg.goal_radius:
                events.append(SimEvent.GOAL)
                events.append(SimEvent.RESET)
                self.ball_pos = Vec2(*cfg.ball_start)
                self.ball_vel = Vec2(0.0, 0.0)
            elif (
                (self.ball_pos - self.robot_pos).length() <= cfg.pickup_radius
                and self.cooldown <= 0
            ):
                self.ball_phase = BallPhase.HELD
                events.append(SimEvent.PICKUP)
        if self.ball_phase is BallPhase.HELD:
            self.ball_pos = self.robot_pos

        return TickRecord(self.tick, world, sensors, decisions, tuple(events))

    def run(self, ticks: int) -> SimTrace:
        if ticks < 1:
            raise ValueError(f"ticks must be >= 1, got {ticks}")
        return SimTrace([self.step() for _ in range(ticks)])


def run_simulation(ticks: int, config: SimConfig | None = None) -> SimTrace:
    """Run a fresh simulation from the canonical initial state."""
    return SoccerSim(config).run(ticks)
