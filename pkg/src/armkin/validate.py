"""Round-trip validation: IK then FK, single points and seeded sweeps."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import ArmKinError
from .forward import JointAngles, LinkParameters, fk
from .inverse import BranchMode, DomainMode, IkIntermediates, ik, reachable
from .transforms import CartesianTarget

# Error histogram bucket upper bounds (mm); the last bucket is open.
HISTOGRAM_EDGES = (1e-12, 1e-9, 1e-6, 1e-3, 1.0)
HISTOGRAM_LABELS = ("<=1e-12", "<=1e-9", "<=1e-6", "<=1e-3", "<=1", ">1")

CSV_HEADER = "seed,samples,max_error,mean_error,failures"


@dataclass(frozen=True)
class RoundTripReport:
    target: CartesianTarget
    angles: JointAngles | None
    intermediates: IkIntermediates | None
    recovered: CartesianTarget | None
    error_norm: float | None
    domain_fixes_triggered: int
    failure_reason: str | None = None

    @property
    def ok(self) -> bool:
        return self.failure_reason is None


@dataclass(frozen=True)
class SweepSummary:
    samples: int
    max_error: float
    mean_error: float
    failures: int
    histogram: dict[str, int]

    def csv_row(self, seed: int) -> str:
        return f"{seed},{self.samples},{self.max_error:.9e},{self.mean_error:.9e},{self.failures}"


def roundtrip(
    links: LinkParameters,
    target: CartesianTarget,
    domain: DomainMode = DomainMode.CLAMP,
    branch: BranchMode = BranchMode.ROBUST_ACOS,
) -> RoundTripReport:
    """Solve IK for the target, push the angles back through FK, report.

    Unreachable targets come back as failure reports rather than
    exceptions so sweeps can aggregate them.
    """
    target = CartesianTarget(*target)
    r = reachable(links, target)
    if not r:
        return RoundTripReport(target, None, None, None, None, 0, failure_reason=r.reason)
    try:
        sol = ik(links, target, domain=domain, branch=branch)
        recovered = fk(links, sol.angles).position
    except ArmKinError as exc:
        return RoundTripReport(target, None, None, None, None, 0, failure_reason=str(exc))
    return RoundTripReport(
        target,
        sol.angles,
        sol.intermediates,
        recovered,
        math.dist(target, recovered),
        len(sol.domain_fixes),
    )


def _bucket(error: float) -> str:
    for edge, label in zip(HISTOGRAM_EDGES, HISTOGRAM_LABELS):
        if error <= edge:
            return label
    return HISTOGRAM_LABELS[-1]


def sweep(
    links: LinkParameters,
    sampler: str,
    n: int,
    seed: int,
    domain: DomainMode = DomainMode.CLAMP,
    branch: BranchMode = BranchMode.ROBUST_ACOS,
    limits=None,
    box=None,
) -> SweepSummary:
    """Seeded statistical round-trip over either sampler ("joint" or "box")."""
    if sampler == "joint":
        return sweep_joint_space(links, n, seed, limits=limits, domain=domain, branch=branch)
    if sampler == "box":
        return sweep_cartesian_box(links, n, seed, box=box, domain=domain, branch=branch)
    raise ValueError(f"unknown sampler {sampler!r}, expected 'joint' or 'box'")


def sweep_joint_space(
    links: LinkParameters,
    n: int,
    seed: int,
    limits=None,
    domain: DomainMode = DomainMode.CLAMP,
    branch: BranchMode = BranchMode.ROBUST_ACOS,
) -> SweepSummary:
    """Round-trip n targets produced by FK of uniformly drawn joint angles."""
    from .forward import DEFAULT_JOINT_LIMITS

    if n < 1:
        raise ValueError("sweep needs at least one sample")
    limits = DEFAULT_JOINT_LIMITS if limits is None else limits
    rng = random.Random(seed)
    targets = []
    for _ in range(n):
        q = JointAngles(*(rng.uniform(lo, hi) for lo, hi in limits))
        targets.append(fk(links, q, limits).position)
    return _aggregate(links, targets, domain, branch)


def sweep_cartesian_box(
    links: LinkParameters,
    n: int,
    seed: int,
    box: tuple[float, float, float, float, float, float] | None = None,
    domain: DomainMode = DomainMode.CLAMP,
    branch: BranchMode = BranchMode.ROBUST_ACOS,
) -> SweepSummary:
    """Round-trip n targets drawn uniformly in a box; unreachables count as failures."""
    if n < 1:
        raise ValueError("sweep needs at least one sample")
    if box is None:
        r = links.a0 + links.reach
        box = (-r, r, -r, r, -r, r)
    x0, x1, y0, y1, z0, z1 = box
    rng = random.Random(seed)
    targets = [
        CartesianTarget(rng.uniform(x0, x1), rng.uniform(y0, y1), rng.uniform(z0, z1))
        for _ in range(n)
    ]
    return _aggregate(links, targets, domain, branch)


def _aggregate(links, targets, domain, branch) -> SweepSummary:
    if not targets:
        raise ValueError("sweep needs at least one sample")
    histogram = {label: 0 for label in HISTOGRAM_LABELS}
    failures = 0
    max_error = 0.0
    total = 0.0
    successes = 0
    for target in targets:
        report = roundtrip(links, target, domain=domain, branch=branch)
        if not report.ok:
            failures += 1
            continue
        successes += 1
        err = report.error_norm
        max_error = max(max_error, err)
        total += err
        histogram[_bucket(err)] += 1
    mean = total / successes if successes else 0.0
    return SweepSummary(len(targets), max_error, mean, failures, histogram)
