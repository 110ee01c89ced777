"""Exception types shared across the package."""


class DiskRendezvousError(Exception):
    """Base class for all package errors."""


class DegenerateInstanceError(DiskRendezvousError):
    """Reference distance rho <= sqrt(2) (equivalently alpha >= pi/4): no valid instance."""


class InvalidStrategyError(DiskRendezvousError):
    """Strategy parameters outside the evaluable range for the given instance."""


class NumericDomainError(DiskRendezvousError):
    """A numeric computation left its valid domain (carries diagnostics in args)."""
