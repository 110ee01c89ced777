"""Problem instances and per-round darting geometry.

Two agents sit on the perimeter of a unit disk at arc distance ``2*alpha``
with the disk center as their common reference point.  Equivalently, after
rescaling so the agents are Euclidean distance 2 apart, the reference point
is at distance ``rho = 1/sin(alpha)``.

A round of a darting strategy consists of a coin-flipped beta-darting to one
candidate meeting bisector followed by a deterministic gamma-darting to the
other.  Relative to the current disk radius, the round is described by four
lengths:

    w : travel of the first darting move
    y : radius of the agents after the first darting move
    d : travel of the second darting move
    x : radius after a full failed round (the per-round shrink factor)

All angles are radians.  All values here are pure functions of immutable
inputs, so everything is safe to call concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInstanceError, InvalidStrategyError

SQRT2 = math.sqrt(2.0)

#: Step count of a strategy that repeats its darting round forever.
UNBOUNDED = math.inf

# Slack for comparisons against angle-range endpoints.
_EDGE_TOL = 1e-12


@dataclass(frozen=True)
class Instance:
    """A rendezvous instance, stored canonically as the half arc distance alpha.

    Requires 0 < alpha < pi/4; the derived reference distance rho = 1/sin(alpha)
    is then always > sqrt(2).
    """

    alpha: float

    def __post_init__(self) -> None:
        if not (0.0 < self.alpha < math.pi / 4):
            raise DegenerateInstanceError(
                f"alpha must lie in (0, pi/4), got {self.alpha}"
            )

    @property
    def rho(self) -> float:
        return 1.0 / math.sin(self.alpha)


@dataclass(frozen=True)
class Strategy:
    """A k-round darting strategy with first/second darting angles beta, gamma.

    ``steps`` is a positive integer or :data:`UNBOUNDED`.  A 1-step strategy
    with gamma = 0 is the single-random-bit strategy (dart once, then go to
    the origin).  Angle ranges are checked at evaluation time, not here, so
    parametric families can be built before an instance is chosen.
    """

    steps: float
    beta: float
    gamma: float

    def __post_init__(self) -> None:
        if self.steps != UNBOUNDED and (
            not isinstance(self.steps, int) or self.steps < 1
        ):
            raise InvalidStrategyError(
                f"steps must be a positive integer or UNBOUNDED, got {self.steps!r}"
            )
        if not (math.isfinite(self.beta) and math.isfinite(self.gamma)):
            raise InvalidStrategyError("beta and gamma must be finite")

    @property
    def unbounded(self) -> bool:
        return self.steps == UNBOUNDED


@dataclass(frozen=True)
class DartingGeometry:
    """The four per-round lengths of a darting round on a unit-radius disk."""

    w: float
    y: float
    d: float
    x: float


def instance_from_rho(rho: float) -> Instance:
    """Build an instance from the reference distance rho > sqrt(2)."""
    if not rho > SQRT2:
        raise DegenerateInstanceError(f"rho must exceed sqrt(2), got {rho}")
    return Instance(alpha=math.asin(1.0 / rho))


def rho_of(instance: Instance) -> float:
    """Reference distance 1/sin(alpha) of the instance."""
    return instance.rho


def validate_strategy(instance: Instance, strategy: Strategy) -> None:
    """Check the darting angles are evaluable for this instance.

    Both angles must lie in [0, pi/2].  Note that the optimization box used
    by the closed-form optima is the tighter [0, pi/2 - alpha]; angles between
    the two still describe legal trajectories (they over-shrink past the
    bisector geometry and can make the shrink factor x exceed 1, which is
    what the energy-finiteness boundary is about).
    """
    for name, angle in (("beta", strategy.beta), ("gamma", strategy.gamma)):
        if not (-_EDGE_TOL <= angle <= math.pi / 2 + _EDGE_TOL):
            raise InvalidStrategyError(
                f"{name}={angle} outside [0, pi/2] for alpha={instance.alpha}"
            )


def darting_lengths(alpha, beta, gamma):
    """Vectorized (w, y, d, x) for a unit-radius disk.

        w = sin(alpha) / sin(alpha + beta)
        y = sin(beta)  / sin(alpha + beta)
        d = y sin(2 alpha) / sin(2 alpha + gamma)
        x = y sin(gamma)   / sin(2 alpha + gamma)

    Accepts scalars or broadcastable numpy arrays.  Valid whenever
    0 < alpha < pi/4 and 0 <= beta, gamma <= pi/2, which keeps both
    denominators strictly positive.
    """
    s_ab = np.sin(alpha + beta)
    s_dg = np.sin(2.0 * alpha + gamma)
    w = np.sin(alpha) / s_ab
    y = np.sin(beta) / s_ab
    d = y * np.sin(2.0 * alpha) / s_dg
    x = y * np.sin(gamma) / s_dg
    return w, y, d, x


def darting_geometry(instance: Instance, strategy: Strategy) -> DartingGeometry:
    """Per-round geometry of the strategy on this instance (unit radius)."""
    validate_strategy(instance, strategy)
    w, y, d, x = darting_lengths(instance.alpha, strategy.beta, strategy.gamma)
    return DartingGeometry(w=float(w), y=float(y), d=float(d), x=float(x))
