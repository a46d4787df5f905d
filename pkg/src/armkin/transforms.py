"""Homogeneous 4x4 transform algebra.

Right-handed frames, column-vector convention (p' = M @ p). Rotation
blocks are dimensionless, translation columns are millimeters. The
bottom row of every transform produced here is constructed as exactly
(0, 0, 0, 1), never computed.
"""

from __future__ import annotations

import math
from enum import Enum
from typing import NamedTuple

import numpy as np

from .errors import DomainError


class Axis(Enum):
    X = "X"
    Y = "Y"
    Z = "Z"

    @classmethod
    def parse(cls, value: "Axis | str") -> "Axis":
        if isinstance(value, Axis):
            return value
        try:
            return cls(str(value).upper())
        except ValueError:
            raise DomainError(f"unknown axis {value!r}, expected one of X, Y, Z") from None


class CartesianTarget(NamedTuple):
    """End-effector position in the base frame, millimeters, Z up."""

    x: float
    y: float
    z: float


BOTTOM_ROW = np.array([0.0, 0.0, 0.0, 1.0])


def identity() -> np.ndarray:
    return np.eye(4)


def rot(axis: Axis | str, angle: float) -> np.ndarray:
    """Elementary right-handed rotation about a base axis (radians)."""
    if not math.isfinite(angle):
        raise DomainError(f"rotation angle must be finite, got {angle!r}")
    c, s = math.cos(angle), math.sin(angle)
    m = np.eye(4)
    axis = Axis.parse(axis)
    if axis is Axis.X:
        m[1, 1], m[1, 2] = c, -s
        m[2, 1], m[2, 2] = s, c
    elif axis is Axis.Y:
        m[0, 0], m[0, 2] = c, s
        m[2, 0], m[2, 2] = -s, c
    else:
        m[0, 0], m[0, 1] = c, -s
        m[1, 0], m[1, 1] = s, c
    return m


_AXIS_ROW = {Axis.X: 0, Axis.Y: 1, Axis.Z: 2}


def trans(axis: Axis | str, d: float) -> np.ndarray:
    """Pure translation of d millimeters along a base axis."""
    if not math.isfinite(d):
        raise DomainError(f"translation distance must be finite, got {d!r}")
    m = np.eye(4)
    m[_AXIS_ROW[Axis.parse(axis)], 3] = d
    return m


def compose(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product a @ b with the bottom row pinned to (0,0,0,1)."""
    m = a @ b
    m[3, :] = BOTTOM_ROW
    return m


def position_of(t: np.ndarray) -> CartesianTarget:
    """Translation column of a transform: (m[0][3], m[1][3], m[2][3])."""
    return CartesianTarget(float(t[0, 3]), float(t[1, 3]), float(t[2, 3]))


def is_rigid_transform(m: np.ndarray, tol: float = 1e-12) -> bool:
    """True when the bottom row is exact and the rotation block is in SO(3)."""
    if m.shape != (4, 4):
        return False
    if not np.array_equal(m[3, :], BOTTOM_ROW):
        return False
    r = m[:3, :3]
    if np.max(np.abs(r.T @ r - np.eye(3))) > tol:
        return False
    return abs(np.linalg.det(r) - 1.0) <= tol
