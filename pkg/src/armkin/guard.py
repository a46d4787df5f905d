"""Workspace protection: rewrite out-of-bounds targets before the solve.

The protection is a coordinate box heuristic, not collision geometry:
a floor on Z plus two one-sided X rules that depend on the sign of Y.
The asymmetric X constants (threshold 53, rewrite to 52) are kept as-is;
deployments can override them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError
from .transforms import CartesianTarget


class ClampRule(Enum):
    Z_FLOOR = "Z_FLOOR"
    X_NEG_Y = "X_NEG_Y"
    X_POS_Y = "X_POS_Y"


@dataclass(frozen=True)
class WorkspaceLimits:
    z_floor: float = -60.0
    x_min_when_y_negative: float = -51.0
    x_threshold_when_y_positive: float = 53.0
    x_clamp_when_y_positive: float = 52.0

    def __post_init__(self):
        for name in ("z_floor", "x_min_when_y_negative", "x_threshold_when_y_positive", "x_clamp_when_y_positive"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"workspace limit {name} must be finite")
        if not self.x_min_when_y_negative < self.x_threshold_when_y_positive:
            raise DomainError("x_min_when_y_negative must be below x_threshold_when_y_positive")


@dataclass(frozen=True)
class ClampReport:
    original: CartesianTarget
    clamped: CartesianTarget
    rules_applied: tuple[ClampRule, ...]

    @property
    def intervened(self) -> bool:
        return bool(self.rules_applied)


def clamp_target(target: CartesianTarget, limits: WorkspaceLimits = WorkspaceLimits()) -> ClampReport:
    """Apply the protection rules independently to the original components.

    Y is never modified; y >= 0 counts as "Y positive" so the two X rules
    partition all Y values.
    """
    target = CartesianTarget(*target)
    if not all(math.isfinite(c) for c in target):
        raise DomainError(f"target components must be finite, got {target}")

    x, y, z = target
    rules: list[ClampRule] = []
    if z < limits.z_floor:
        z = limits.z_floor
        rules.append(ClampRule.Z_FLOOR)
    if y < 0 and x < limits.x_min_when_y_negative:
        x = limits.x_min_when_y_negative
        rules.append(ClampRule.X_NEG_Y)
    elif y >= 0 and x > limits.x_threshold_when_y_positive:
        x = limits.x_clamp_when_y_positive
        rules.append(ClampRule.X_POS_Y)
    return ClampReport(target, CartesianTarget(x, y, z), tuple(rules))
