"""Arm configuration: flat dotted-key text files and the built-in default.

Angles, velocities and pulses are human/servo units in the file
(degrees, deg/s, microseconds); the parsed ArmConfig holds radians.
Unknown keys are hard errors so a typo in a link length cannot silently
corrupt every result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConfigError, DomainError
from .forward import JointAngles, LinkParameters
from .guard import WorkspaceLimits
from .inverse import BranchMode, DomainMode
from .sim import ServoModel, ServoTriple

SERVO_NAMES = ("waist", "shoulder", "elbow")

_DOMAIN_BY_NAME = {"paper": DomainMode.PAPER_FRACTIONAL, "clamp": DomainMode.CLAMP}
_BRANCH_BY_NAME = {"paper": BranchMode.PAPER_ASIN, "robust": BranchMode.ROBUST_ACOS}


@dataclass(frozen=True)
class ArmConfig:
    links: LinkParameters
    limits: WorkspaceLimits
    servos: ServoTriple
    home: JointAngles  # radians, within servo ranges
    domain_mode: DomainMode = DomainMode.CLAMP
    branch_mode: BranchMode = BranchMode.ROBUST_ACOS

    def __post_init__(self):
        for name, angle, servo in zip(SERVO_NAMES, self.home, self.servos):
            if not servo.min_angle <= angle <= servo.max_angle:
                raise ConfigError(f"home.{name}_deg outside the servo range")

    def joint_limits(self) -> tuple[tuple[float, float], ...]:
        """Per-joint (min, max) radians taken from the servo ranges."""
        return tuple((s.min_angle, s.max_angle) for s in self.servos)


def default_config() -> ArmConfig:
    """Shipped example arm.

    Hobby-scale millimeter links; the ranges keep every in-limit pose
    solvable by the single elbow branch while the validation point
    (3, -5, -8) and the floor-clamped pose stay inside the servo travel.
    """
    return ArmConfig(
        links=LinkParameters(a0=70.0, a1=50.0, a2=100.0, a3=40.0),
        limits=WorkspaceLimits(),
        servos=(
            ServoModel(min_angle=-math.pi, max_angle=math.pi),
            ServoModel(min_angle=0.0, max_angle=math.radians(115.0)),
            ServoModel(min_angle=0.0, max_angle=math.radians(125.0)),
        ),
        home=JointAngles(0.0, math.radians(90.0), math.radians(90.0)),
    )


def _flatten(config: ArmConfig) -> dict[str, str]:
    def f(x: float) -> str:
        return repr(float(x))

    out: dict[str, str] = {
        "links.a0": f(config.links.a0),
        "links.a1": f(config.links.a1),
        "links.a2": f(config.links.a2),
        "links.a3": f(config.links.a3),
        "limits.z_floor": f(config.limits.z_floor),
        "limits.x_min_when_y_negative": f(config.limits.x_min_when_y_negative),
        "limits.x_threshold_when_y_positive": f(config.limits.x_threshold_when_y_positive),
        "limits.x_clamp_when_y_positive": f(config.limits.x_clamp_when_y_positive),
    }
    for name, servo in zip(SERVO_NAMES, config.servos):
        out[f"servos.{name}.min_deg"] = f(math.degrees(servo.min_angle))
        out[f"servos.{name}.max_deg"] = f(math.degrees(servo.max_angle))
        out[f"servos.{name}.max_velocity_deg_s"] = f(math.degrees(servo.max_velocity))
        out[f"servos.{name}.pulse_min_us"] = f(servo.pulse_min)
        out[f"servos.{name}.pulse_max_us"] = f(servo.pulse_max)
    for name, angle in zip(SERVO_NAMES, config.home):
        out[f"home.{name}_deg"] = f(math.degrees(angle))
    out["domain_mode"] = config.domain_mode.value
    out["branch_mode"] = config.branch_mode.value
    return out


VALID_KEYS = frozenset(_flatten(default_config()))


def dumps_config(config: ArmConfig) -> str:
    """Canonical text form; parse(dumps(c)) reproduces c."""
    return "".join(f"{key} = {value}\n" for key, value in _flatten(config).items())


def parse_config(text: str, base: ArmConfig | None = None) -> ArmConfig:
    """Parse the flat key-value format; unset keys keep the base (default) value."""
    values = _flatten(default_config() if base is None else base)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, _, value = (part.strip() for part in line.partition("="))
        if key not in VALID_KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        values[key] = value
    return _build(values)


def load_config(path: str, base: ArmConfig | None = None) -> ArmConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return parse_config(text, base=base)


def _number(values: dict[str, str], key: str) -> float:
    try:
        return float(values[key])
    except ValueError:
        raise ConfigError(f"key {key}: not a number: {values[key]!r}") from None


def _build(values: dict[str, str]) -> ArmConfig:
    try:
        links = LinkParameters(
            a0=_number(values, "links.a0"),
            a1=_number(values, "links.a1"),
            a2=_number(values, "links.a2"),
            a3=_number(values, "links.a3"),
        )
        limits = WorkspaceLimits(
            z_floor=_number(values, "limits.z_floor"),
            x_min_when_y_negative=_number(values, "limits.x_min_when_y_negative"),
            x_threshold_when_y_positive=_number(values, "limits.x_threshold_when_y_positive"),
            x_clamp_when_y_positive=_number(values, "limits.x_clamp_when_y_positive"),
        )
        servos = tuple(
            ServoModel(
                min_angle=math.radians(_number(values, f"servos.{name}.min_deg")),
                max_angle=math.radians(_number(values, f"servos.{name}.max_deg")),
                max_velocity=math.radians(_number(values, f"servos.{name}.max_velocity_deg_s")),
                pulse_min=_number(values, f"servos.{name}.pulse_min_us"),
                pulse_max=_number(values, f"servos.{name}.pulse_max_us"),
            )
            for name in SERVO_NAMES
        )
    except DomainError as exc:
        raise ConfigError(str(exc)) from exc
    home = JointAngles(*(math.radians(_number(values, f"home.{name}_deg")) for name in SERVO_NAMES))
    domain = values["domain_mode"].strip()
    branch = values["branch_mode"].strip()
    if domain not in _DOMAIN_BY_NAME:
        raise ConfigError(f"key domain_mode: expected paper|clamp, got {domain!r}")
    if branch not in _BRANCH_BY_NAME:
        raise ConfigError(f"key branch_mode: expected paper|robust, got {branch!r}")
    return ArmConfig(
        links=links,
        limits=limits,
        servos=servos,
        home=home,
        domain_mode=_DOMAIN_BY_NAME[domain],
        branch_mode=_BRANCH_BY_NAME[branch],
    )


def config_document(config: ArmConfig) -> dict:
    """JSON-friendly nested view of the active configuration (wire units)."""
    return {
        "links": {
            "a0": config.links.a0,
            "a1": config.links.a1,
            "a2": config.links.a2,
            "a3": config.links.a3,
        },
        "limits": {
            "z_floor": config.limits.z_floor,
            "x_min_when_y_negative": config.limits.x_min_when_y_negative,
            "x_threshold_when_y_positive": config.limits.x_threshold_when_y_positive,
            "x_clamp_when_y_positive": config.limits.x_clamp_when_y_positive,
        },
        "servos": {
            name: {
                "min_deg": math.degrees(servo.min_angle),
                "max_deg": math.degrees(servo.max_angle),
                "max_velocity_deg_s": math.degrees(servo.max_velocity),
                "pulse_min_us": servo.pulse_min,
                "pulse_max_us": servo.pulse_max,
            }
            for name, servo in zip(SERVO_NAMES, config.servos)
        },
        "home_deg": {
            name: math.degrees(angle) for name, angle in zip(SERVO_NAMES, config.home)
        },
        "domain_mode": config.domain_mode.value,
        "branch_mode": config.branch_mode.value,
    }
