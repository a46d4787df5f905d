"""Kinematics engine and simulated controller for a 3-DOF servo arm."""

from .config import ArmConfig, default_config, dumps_config, load_config, parse_config
from .errors import ArmKinError, ConfigError, DomainError, ReachabilityError, SingularityError
from .forward import FkResult, JointAngles, LinkParameters, fk, link_transforms
from .guard import ClampReport, ClampRule, WorkspaceLimits, clamp_target
from .inverse import (
    BranchMode,
    DomainMode,
    IkIntermediates,
    IkSolution,
    Reachability,
    ik,
    normalize_trig_arg,
    reachable,
)
from .sim import ArmState, CommandOutcome, ServoModel, command_target, estop, initial_state, servo_pulse, step
from .transforms import Axis, CartesianTarget, compose, identity, position_of, rot, trans
from .validate import RoundTripReport, SweepSummary, roundtrip, sweep, sweep_cartesian_box, sweep_joint_space

__version__ = "0.1.0"

__all__ = [
    "ArmConfig",
    "ArmKinError",
    "ArmState",
    "Axis",
    "BranchMode",
    "CartesianTarget",
    "ClampReport",
    "ClampRule",
    "CommandOutcome",
    "ConfigError",
    "DomainError",
    "DomainMode",
    "FkResult",
    "IkIntermediates",
    "IkSolution",
    "JointAngles",
    "LinkParameters",
    "Reachability",
    "ReachabilityError",
    "RoundTripReport",
    "ServoModel",
    "SingularityError",
    "SweepSummary",
    "WorkspaceLimits",
    "clamp_target",
    "command_target",
    "compose",
    "default_config",
    "dumps_config",
    "estop",
    "fk",
    "identity",
    "ik",
    "initial_state",
    "link_transforms",
    "load_config",
    "normalize_trig_arg",
    "parse_config",
    "position_of",
    "reachable",
    "rot",
    "roundtrip",
    "servo_pulse",
    "step",
    "sweep",
    "sweep_cartesian_box",
    "sweep_joint_space",
    "trans",
]
