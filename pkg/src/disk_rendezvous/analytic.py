"""Closed-form expected rendezvous time, competitive ratio, and energy.

Times are reported in unit-disk units (the offline optimum is sin(alpha));
dividing by sin(alpha) gives the competitive ratio, which is also the
expected time in the rho-parameterization where the agents start distance 2
apart.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import (
    Instance,
    Strategy,
    darting_lengths,
    instance_from_rho,
    validate_strategy,
)

#: Best known competitive ratio for symmetric rendezvous on a line (external
#: constant; the 15-round strategy achieving it is not reproduced here).
LINE_BEST_KNOWN = 4.2574


@dataclass(frozen=True)
class PerformanceReport:
    """Expected time, competitive ratio, and energy of one strategy/instance pair.

    ``expected_time`` and ``energy`` are in unit-disk units; ``energy`` is
    ``inf`` when the worst-case time is unbounded.
    """

    expected_time: float
    competitive_ratio: float
    energy: float
    rho: float


def unbounded_time(alpha, beta, gamma):
    """Expected time of the repeat-forever strategy; vectorized.

    Equals (3d + 4w) / (2 (2 - x)).  The underlying series converges iff
    x < 2 (a failed round happens with probability 1/2 and scales the disk
    by x); for x >= 2 the expectation diverges and inf is returned.
    """
    w, _, d, x = darting_lengths(alpha, beta, gamma)
    val = (3.0 * d + 4.0 * w) / (2.0 * (2.0 - x))
    return np.where(x < 2.0, val, np.inf)


def finite_time(alpha, beta, gamma, k):
    """Expected time of the k-round strategy (go to origin after k failures).

    Regrouped form of (1/2)^(k+1) (x^k (3d+4w+2x-4) - 2^k (3d+4w)) / (x-2),
    stable for every k because only (x/2)^k <= 1 is exponentiated.
    Vectorized in the angle arguments.
    """
    w, _, d, x = darting_lengths(alpha, beta, gamma)
    s = 3.0 * d + 4.0 * w
    return ((x / 2.0) ** k * (s + 2.0 * x - 4.0) / 2.0 - s / 2.0) / (x - 2.0)


def expected_time(instance: Instance, strategy: Strategy) -> float:
    """Expected rendezvous time in unit-disk units."""
    validate_strategy(instance, strategy)
    if strategy.unbounded:
        return float(unbounded_time(instance.alpha, strategy.beta, strategy.gamma))
    return float(
        finite_time(instance.alpha, strategy.beta, strategy.gamma, strategy.steps)
    )


def competitive_ratio(instance: Instance, strategy: Strategy) -> float:
    """Expected time divided by the offline optimum sin(alpha)."""
    return expected_time(instance, strategy) / math.sin(instance.alpha)


def _geom_sum(x: float, k: float) -> float:
    """1 + x + ... + x^(k-1), with the x -> 1 limit handled."""
    if abs(1.0 - x) < 1e-12:
        return float(k)
    return (1.0 - x**k) / (1.0 - x)


def energy(instance: Instance, strategy: Strategy) -> float:
    """Worst-case (all coin flips fail) travel distance, unit-disk units.

    Unbounded strategies: (w + d) / (1 - x) when the shrink factor x < 1,
    computed from the direct trigonometric expression; inf otherwise.
    Finite k: (w + d)(1 - x^k)/(1 - x) + x^k, the k failed rounds plus the
    final leg to the origin.
    """
    validate_strategy(instance, strategy)
    a, b, g = instance.alpha, strategy.beta, strategy.gamma
    if strategy.unbounded:
        csc_ab = 1.0 / math.sin(a + b)
        csc_dg = 1.0 / math.sin(2.0 * a + g)
        denom = 1.0 - math.sin(b) * csc_ab * math.sin(g) * csc_dg
        if denom <= 0.0:
            return math.inf
        return (
            math.sin(a) * csc_ab + math.sin(b) * csc_ab * math.sin(2.0 * a) * csc_dg
        ) / denom
    w, _, d, x = darting_lengths(a, b, g)
    k = strategy.steps
    return float((w + d) * _geom_sum(float(x), k) + x**k)


def performance_report(instance: Instance, strategy: Strategy) -> PerformanceReport:
    t = expected_time(instance, strategy)
    return PerformanceReport(
        expected_time=t,
        competitive_ratio=t / math.sin(instance.alpha),
        energy=energy(instance, strategy),
        rho=instance.rho,
    )


def greedy_bisector_ratio(rho):
    """Competitive ratio of the always-halve-the-gap strategy; vectorized.

    (7 rho^2 + 8 rho sqrt(rho^2 - 1) - 3) / (3 rho^2 + 1).
    """
    return (7.0 * rho**2 + 8.0 * np.sqrt(rho**2 - 1.0) * rho - 3.0) / (
        3.0 * rho**2 + 1.0
    )


def one_rb_optimal_ratio(rho):
    """Competitive ratio of the optimal single-random-bit strategy; vectorized.

    (3 sqrt(rho^2 - 1) + sqrt(7)) / 4.
    """
    return (3.0 * np.sqrt(rho**2 - 1.0) + math.sqrt(7.0)) / 4.0


def benchmark_curves(rho: float) -> dict[str, float]:
    """The four closed-form benchmark competitive ratios at a given rho."""
    instance_from_rho(rho)  # raises for degenerate rho
    return {
        "naive": float(rho),
        "line_best_known": LINE_BEST_KNOWN,
        "greedy_bisector": float(greedy_bisector_ratio(rho)),
        "one_rb": float(one_rb_optimal_ratio(rho)),
    }


def _fixed_point(drift: float, retain: float) -> float:
    """Solve f = drift + retain * f and assert the residual vanishes."""
    f = drift / (1.0 - retain)
    assert abs(f - (drift + retain * f)) < 1e-12
    return f


def line_reference_times() -> dict[str, float]:
    """Expected times of the two classic line-rendezvous warm-up strategies.

    The out-and-back coin strategy satisfies f = 1/4 + 3/4 (2 + f), giving 7;
    the out-back-and-beyond refinement satisfies f = 1/4 + (1/4) 3
    + (1/2)(3 + f), giving 5.
    """
    return {
        "two_markov": _fixed_point(1.0 / 4.0 + (3.0 / 4.0) * 2.0, 3.0 / 4.0),
        "three_markov": _fixed_point(
            1.0 / 4.0 + (1.0 / 4.0) * 3.0 + (1.0 / 2.0) * 3.0, 1.0 / 2.0
        ),
    }


# Direct trigonometric forms of the one-step and repeat-forever expected
# times.  Redundant with finite_time / unbounded_time by design: the test
# suite checks the two routes agree.

def one_step_time_trig(alpha, beta, gamma):
    """(1/2) csc(a+b) (sin b csc(2a+g) (3 sin a cos a + sin g) + 2 sin a)."""
    a, b, g = alpha, beta, gamma
    return (
        0.5
        / np.sin(a + b)
        * (
            np.sin(b)
            / np.sin(2.0 * a + g)
            * (3.0 * np.sin(a) * np.cos(a) + np.sin(g))
            + 2.0 * np.sin(a)
        )
    )


def unbounded_time_trig(alpha, beta, gamma):
    """Expanded trigonometric form of the repeat-forever expected time."""
    a, b, g = alpha, beta, gamma
    num = np.sin(a) * (
        3.0 * np.sin(a - b) - 3.0 * np.sin(a + b) - 4.0 * np.sin(2.0 * a + g)
    )
    den = (
        -2.0 * np.cos(a - b + g)
        + 2.0 * np.cos(3.0 * a + b + g)
        + np.cos(b - g)
        - np.cos(b + g)
    )
    return num / den
