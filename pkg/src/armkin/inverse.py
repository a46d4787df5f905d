"""Closed-form geometric inverse kinematics.

The solve works in the vertical plane selected by the waist angle. From
the top of the base column P1, the horizontal boom a1 ends at P2; the
triangle (a1, w', b) locates the target relative to P2, and the triangle
(a2, a3, b) splits the remaining reach between shoulder and elbow. The
construction yields a single elbow branch (elbow above the chord,
t3 in [0, pi]).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError, ReachabilityError, SingularityError
from .forward import JointAngles, LinkParameters
from .transforms import CartesianTarget


HALF_PI = math.pi / 2


class DomainMode(Enum):
    """How out-of-range asin/acos arguments are repaired."""

    PAPER_FRACTIONAL = "paper"  # keep only the signed fractional part
    CLAMP = "clamp"  # saturate at +/-1


class BranchMode(Enum):
    """Which trig form recovers the two triangle angles at P2."""

    PAPER_ASIN = "paper"  # law-of-sines asin forms; blind to obtuse angles
    ROBUST_ACOS = "robust"  # law-of-cosines acos forms


@dataclass(frozen=True)
class IkIntermediates:
    """Every intermediate quantity of the geometric construction."""

    w: float  # horizontal radial distance to the target
    w_prime: float  # straight-line distance from column top to target
    alpha: float  # angle at column top, from straight-down to the target
    alpha_prime: float  # signed depression of the target below the boom line
    b: float  # distance from boom tip P2 to the target
    alpha_dprime: float  # angle at P2 between the boom and the chord b
    gamma: float  # elbow opening angle (a2 vs a3)
    gamma_prime: float  # angle at P2 between chord b and link a2


@dataclass(frozen=True)
class IkSolution:
    angles: JointAngles
    intermediates: IkIntermediates
    domain_fixes: tuple[str, ...]  # names of the trig args that needed repair


@dataclass(frozen=True)
class Reachability:
    ok: bool
    reason: str | None  # names the violated triangle inequality
    b: float
    b_min: float
    b_max: float

    def __bool__(self) -> bool:
        return self.ok


def normalize_trig_arg(x: float, mode: DomainMode) -> float:
    """Bring an asin/acos argument into [-1, 1].

    In-range values pass through untouched. CLAMP saturates; fractional
    mode drops the integer part keeping the sign, so 1.3 -> 0.3 and
    -1.2 -> -0.2.
    """
    if not math.isfinite(x):
        raise DomainError(f"trig argument must be finite, got {x!r}")
    if -1.0 <= x <= 1.0:
        return x
    if mode is DomainMode.PAPER_FRACTIONAL:
        return x - math.trunc(x)
    return math.copysign(1.0, x)


def _check_target(target: CartesianTarget) -> CartesianTarget:
    target = CartesianTarget(*target)
    if not all(math.isfinite(c) for c in target):
        raise DomainError(f"target components must be finite, got {target}")
    return target


def _chord(links: LinkParameters, target: CartesianTarget):
    """w, w', alpha, alpha', b computed exactly as the construction states."""
    w = math.hypot(target.x, target.y)
    w_prime = math.hypot(w, links.a0 - target.z)
    alpha = math.atan2(w, links.a0 - target.z)
    alpha_prime = HALF_PI - alpha
    # cancellation near the boom tip can push the radicand a few ulp below 0
    radicand = links.a1 ** 2 + w_prime ** 2 - 2.0 * links.a1 * w_prime * math.cos(alpha_prime)
    b = math.sqrt(max(radicand, 0.0))
    return w, w_prime, alpha, alpha_prime, b


def reachable(links: LinkParameters, target: CartesianTarget) -> Reachability:
    """Triangle-inequality test |a2 - a3| <= b <= a2 + a3, no domain fixes."""
    target = _check_target(target)
    *_, b = _chord(links, target)
    b_min = abs(links.a2 - links.a3)
    b_max = links.a2 + links.a3
    if b > b_max:
        return Reachability(False, f"b={b:.6f} > a2+a3={b_max:.6f} (target beyond maximum reach)", b, b_min, b_max)
    if b < b_min:
        return Reachability(False, f"b={b:.6f} < |a2-a3|={b_min:.6f} (target inside minimum reach)", b, b_min, b_max)
    return Reachability(True, None, b, b_min, b_max)


def _wrap_pi(angle: float) -> float:
    """Wrap into (-pi, pi]."""
    while angle > math.pi:
        angle -= 2.0 * math.pi
    while angle <= -math.pi:
        angle += 2.0 * math.pi
    return angle


def ik(
    links: LinkParameters,
    target: CartesianTarget,
    domain: DomainMode = DomainMode.CLAMP,
    branch: BranchMode = BranchMode.ROBUST_ACOS,
    strict: bool = False,
) -> IkSolution:
    """Solve joint angles for a Cartesian target.

    strict=True refuses unreachable targets up front instead of letting
    the domain repair bend the trig arguments back into range.
    """
    target = _check_target(target)
    if strict:
        r = reachable(links, target)
        if not r:
            raise ReachabilityError(r.reason)

    fixes: list[str] = []

    def norm(x: float, name: str) -> float:
        y = normalize_trig_arg(x, domain)
        if y != x:
            fixes.append(name)
        return y

    w, w_prime, alpha, alpha_prime, b = _chord(links, target)
    t1 = math.atan2(target.y, target.x) if (target.x, target.y) != (0.0, 0.0) else 0.0

    if b == 0.0:
        raise SingularityError("target coincides with the boom tip (b = 0)")

    gamma = math.acos(norm((links.a2 ** 2 + links.a3 ** 2 - b ** 2) / (2.0 * links.a2 * links.a3), "gamma"))

    if branch is BranchMode.PAPER_ASIN:
        alpha_dprime = math.asin(norm(w_prime * math.sin(alpha_prime) / b, "alpha_dprime"))
        gamma_prime = math.asin(norm(links.a3 * math.sin(gamma) / b, "gamma_prime"))
    else:
        # The acos form alone returns the unsigned angle at P2; carry the
        # elevation sign from alpha' so targets above the boom line solve too.
        alpha_dprime = math.copysign(
            math.acos(norm((links.a1 ** 2 + b ** 2 - w_prime ** 2) / (2.0 * links.a1 * b), "alpha_dprime")),
            alpha_prime,
        )
        gamma_prime = math.acos(norm((links.a2 ** 2 + b ** 2 - links.a3 ** 2) / (2.0 * links.a2 * b), "gamma_prime"))

    t2 = _wrap_pi(math.pi - alpha_dprime - gamma_prime)
    t3 = math.pi - gamma

    inter = IkIntermediates(w, w_prime, alpha, alpha_prime, b, alpha_dprime, gamma, gamma_prime)
    return IkSolution(JointAngles(t1, t2, t3), inter, tuple(fixes))
