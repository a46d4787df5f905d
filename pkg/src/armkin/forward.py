"""Forward kinematics of the 3-DOF arm.

Chain layout: a vertical base column of height a0, a waist joint t1
about the base Z axis, a horizontal boom a1, a shoulder joint t2, link
a2, an elbow joint t3, and the tool link a3. With all angles zero the
arm is fully extended along base +X at height a0; positive t2/t3 tilt
the links downward.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import transforms
from .errors import DomainError
from .transforms import Axis, CartesianTarget

HALF_PI = math.pi / 2

# Default joint range when no servo configuration applies.
DEFAULT_JOINT_LIMITS: tuple[tuple[float, float], ...] = (
    (-math.pi, math.pi),
    (-math.pi, math.pi),
    (-math.pi, math.pi),
)

JOINT_NAMES = ("t1", "t2", "t3")


@dataclass(frozen=True)
class LinkParameters:
    """Link lengths in millimeters: base column a0, then links a1..a3."""

    a0: float
    a1: float
    a2: float
    a3: float

    def __post_init__(self):
        for name in ("a0", "a1", "a2", "a3"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise DomainError(f"link length {name} must be strictly positive and finite, got {value!r}")

    @property
    def reach(self) -> float:
        """Maximum horizontal extension from the top of the base column."""
        return self.a1 + self.a2 + self.a3


class JointAngles(NamedTuple):
    """Waist, shoulder and elbow angles in radians."""

    t1: float
    t2: float
    t3: float


class LinkTransforms(NamedTuple):
    m01: np.ndarray
    m12: np.ndarray
    m23: np.ndarray
    m34: np.ndarray


class FkResult(NamedTuple):
    position: CartesianTarget
    m04: np.ndarray


def check_joint_limits(q: JointAngles, limits=DEFAULT_JOINT_LIMITS) -> None:
    """Raise DomainError naming the first joint outside its limits."""
    for name, angle, (lo, hi) in zip(JOINT_NAMES, q, limits):
        if not math.isfinite(angle):
            raise DomainError(f"joint {name} must be finite, got {angle!r}")
        if not lo <= angle <= hi:
            raise DomainError(
                f"joint {name}={angle:.6f} rad outside limits [{lo:.6f}, {hi:.6f}]"
            )


def link_transforms(links: LinkParameters, q: JointAngles) -> LinkTransforms:
    """The four frame-to-frame transforms of the chain.

    The tool link carries no actuated rotation, so the last transform is
    a pure translation of a3.
    """
    t1, t2, t3 = q
    m01 = transforms.trans(Axis.Z, links.a0)
    m12 = transforms.compose(
        transforms.compose(transforms.rot(Axis.Z, t1), transforms.rot(Axis.Y, HALF_PI)),
        transforms.compose(transforms.trans(Axis.Z, links.a1), transforms.rot(Axis.Y, t2)),
    )
    m23 = transforms.compose(transforms.trans(Axis.Z, links.a2), transforms.rot(Axis.Y, t3))
    m34 = transforms.trans(Axis.Z, links.a3)
    return LinkTransforms(m01, m12, m23, m34)


def fk(links: LinkParameters, q: JointAngles, limits=DEFAULT_JOINT_LIMITS) -> FkResult:
    """End-effector position and the full base-to-tool transform."""
    q = JointAngles(*q)
    check_joint_limits(q, limits)
    m01, m12, m23, m34 = link_transforms(links, q)
    m04 = transforms.compose(transforms.compose(m01, m12), transforms.compose(m23, m34))
    return FkResult(transforms.position_of(m04), m04)
