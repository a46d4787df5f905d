"""Exception types shared across the package."""


class ArmKinError(Exception):
    """Base class for all armkin errors."""


class DomainError(ArmKinError):
    """An input value is outside the mathematical domain of an operation."""


class SingularityError(ArmKinError):
    """A geometric degeneracy (zero-length triangle side) blocks the solve."""


class ReachabilityError(ArmKinError):
    """Target violates the workspace triangle inequalities."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class ConfigError(ArmKinError):
    """Configuration file is malformed or inconsistent."""
