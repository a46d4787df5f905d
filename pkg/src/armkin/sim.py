"""Simulated servo arm: guarded Cartesian commands and time-stepped slewing.

The simulation is joint-space: an accepted command stores goal angles
and each step() moves every joint toward its goal at bounded velocity.
There is no internal clock; the caller owns time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import DomainError, SingularityError
from .forward import JointAngles, LinkParameters
from .guard import ClampReport, WorkspaceLimits, clamp_target
from .inverse import BranchMode, DomainMode, ik, reachable
from .transforms import CartesianTarget

# Two joint angles closer than this count as "already there".
MOTION_RESOLUTION = 1e-6


@dataclass(frozen=True)
class ServoModel:
    min_angle: float = 0.0  # rad
    max_angle: float = math.pi  # rad
    max_velocity: float = math.pi / 2  # rad/s
    pulse_min: float = 500.0  # us at min_angle
    pulse_max: float = 2500.0  # us at max_angle

    def __post_init__(self):
        for name in ("min_angle", "max_angle", "max_velocity", "pulse_min", "pulse_max"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"servo {name} must be finite")
        if not self.min_angle < self.max_angle:
            raise DomainError("servo needs min_angle < max_angle")
        if not self.pulse_min < self.pulse_max:
            raise DomainError("servo needs pulse_min < pulse_max")
        if not self.max_velocity > 0:
            raise DomainError("servo needs max_velocity > 0")

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.min_angle + self.max_angle)


ServoTriple = tuple[ServoModel, ServoModel, ServoModel]


@dataclass(frozen=True)
class ArmState:
    current: JointAngles
    goal: JointAngles
    moving: bool
    last_clamp: ClampReport | None
    sim_time: float


@dataclass(frozen=True)
class CommandOutcome:
    state: ArmState  # new state if accepted, the untouched input state if not
    accepted: bool
    clamp: ClampReport | None
    reason: str | None = None


def _is_moving(current: JointAngles, goal: JointAngles) -> bool:
    return any(abs(g - c) > MOTION_RESOLUTION for c, g in zip(current, goal))


def initial_state(servos: ServoTriple, home: JointAngles | None = None) -> ArmState:
    """Arm at rest; home defaults to each servo's midpoint."""
    if home is None:
        home = JointAngles(*(s.midpoint for s in servos))
    for name, angle, servo in zip(("t1", "t2", "t3"), home, servos):
        if not servo.min_angle <= angle <= servo.max_angle:
            raise DomainError(f"home angle {name}={angle:.6f} outside servo range")
    return ArmState(current=home, goal=home, moving=False, last_clamp=None, sim_time=0.0)


def command_target(
    state: ArmState,
    target: CartesianTarget,
    links: LinkParameters,
    workspace: WorkspaceLimits,
    servos: ServoTriple,
    domain: DomainMode = DomainMode.CLAMP,
    branch: BranchMode = BranchMode.ROBUST_ACOS,
) -> CommandOutcome:
    """Guarded command pipeline: clamp, reachability, IK, servo range, goal.

    Any rejection returns the input state object untouched.
    """
    report = clamp_target(target, workspace)
    r = reachable(links, report.clamped)
    if not r:
        return CommandOutcome(state, False, report, reason=r.reason)
    try:
        sol = ik(links, report.clamped, domain=domain, branch=branch)
    except SingularityError as exc:
        return CommandOutcome(state, False, report, reason=str(exc))
    for name, angle, servo in zip(("t1", "t2", "t3"), sol.angles, servos):
        if not servo.min_angle <= angle <= servo.max_angle:
            return CommandOutcome(
                state,
                False,
                report,
                reason=(
                    f"solution joint {name}={math.degrees(angle):.3f} deg outside servo range "
                    f"[{math.degrees(servo.min_angle):.3f}, {math.degrees(servo.max_angle):.3f}]"
                ),
            )
    new = replace(
        state,
        goal=sol.angles,
        moving=_is_moving(state.current, sol.angles),
        last_clamp=report,
    )
    return CommandOutcome(new, True, report)


def step(state: ArmState, dt: float, servos: ServoTriple) -> ArmState:
    """Advance simulated time; each joint slews at most max_velocity*dt.

    Joints land exactly on the goal, never past it.
    """
    if not (isinstance(dt, (int, float)) and math.isfinite(dt) and dt > 0):
        raise DomainError(f"dt must be a positive finite number, got {dt!r}")
    moved = []
    for current, goal, servo in zip(state.current, state.goal, servos):
        delta = goal - current
        limit = servo.max_velocity * dt
        if abs(delta) <= limit:
            moved.append(goal)
        else:
            moved.append(current + math.copysign(limit, delta))
    current = JointAngles(*moved)
    return replace(
        state,
        current=current,
        moving=_is_moving(current, state.goal),
        sim_time=state.sim_time + dt,
    )


def estop(state: ArmState) -> ArmState:
    """Freeze in place: the goal becomes the current pose."""
    return replace(state, goal=state.current, moving=False)


def servo_pulse(model: ServoModel, angle: float) -> float:
    """Linear angle-to-pulse map over the servo's travel, in microseconds."""
    if not (math.isfinite(angle) and model.min_angle <= angle <= model.max_angle):
        raise DomainError(
            f"angle {angle!r} outside servo range [{model.min_angle}, {model.max_angle}]"
        )
    span = model.max_angle - model.min_angle
    frac = (angle - model.min_angle) / span
    return model.pulse_min + frac * (model.pulse_max - model.pulse_min)
