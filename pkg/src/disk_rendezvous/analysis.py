"""Derived analyses: effectiveness roots, asymptotics, and time-energy tradeoffs.

"Effectiveness" of a strategy family is the largest reference distance rho at
which its competitive ratio still beats 4.25, the conjectured optimal constant
for symmetric rendezvous on a line.  Asymptotic limits are checked by probing
at large rho rather than symbolically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from scipy.optimize import bisect

from . import analytic, optimize
from .geometry import SQRT2, UNBOUNDED, Instance, Strategy, instance_from_rho

EFFECTIVENESS_TARGET = 4.25
_RHO_MIN = SQRT2 + 1e-6
_RHO_MAX = 1e6

CurveFn = Callable[[float], float]
StrategyFamily = Callable[[Instance], Strategy]


class EnergyScaling(Enum):
    ENERGY_OVER_RHO_SQUARED = "energy/rho^2"
    ENERGY_OVER_RHO = "energy/rho"


@dataclass(frozen=True)
class TradeoffPoint:
    """One point of a time-energy tradeoff family.

    ``strategy_of`` builds the family's strategy for a concrete instance;
    the ``limit_*`` fields are the rho -> infinity values under ``scaling``.
    ``limit_scaled_cr_gap`` is the limit of rho^2 (CR - limit_competitive_ratio)
    where the family provides one (None otherwise).
    """

    epsilon: float
    strategy_of: StrategyFamily
    limit_competitive_ratio: float
    limit_scaled_energy: float
    scaling: EnergyScaling
    limit_scaled_cr_gap: float | None = None


def curve_of(family: StrategyFamily) -> CurveFn:
    """Competitive-ratio-vs-rho curve of a strategy family."""

    def curve(rho: float) -> float:
        inst = instance_from_rho(rho)
        return analytic.competitive_ratio(inst, family(inst))

    return curve


def effectiveness(curve: CurveFn, target: float = EFFECTIVENESS_TARGET) -> float:
    """Largest rho with curve(rho) <= target, for increasing curves.

    Returns 0.0 when the curve already exceeds the target at the degenerate
    end (the family never beats the target), and inf when the curve stays
    below the target all the way to rho = 1e6.  The crossing itself is found
    by doubling-bracket plus bisection to 1e-8 in rho.
    """
    lo = _RHO_MIN
    if curve(lo) >= target:
        return 0.0
    hi = min(2.0 * lo, _RHO_MAX)
    while curve(hi) < target:
        if hi >= _RHO_MAX:
            return math.inf
        hi = min(2.0 * hi, _RHO_MAX)
    return float(bisect(lambda r: curve(r) - target, lo, hi, xtol=1e-8))


# Canonical families keyed by how the CLI names them.


def family_one_rb(instance: Instance) -> Strategy:
    return optimize.optimal_1rb(instance)


def family_one_step(instance: Instance) -> Strategy:
    return optimize.optimal_1rb2(instance)


def family_unbounded(instance: Instance) -> Strategy:
    return optimize.optimal_inf(instance)


def family_greedy_bisector(instance: Instance) -> Strategy:
    half = math.pi / 2 - instance.alpha
    return Strategy(steps=UNBOUNDED, beta=half, gamma=half)


FAMILIES: dict[str, StrategyFamily] = {
    "one_rb": family_one_rb,
    "one_step": family_one_step,
    "unbounded": family_unbounded,
    "greedy_bisector": family_greedy_bisector,
}


@dataclass(frozen=True)
class AsymptoticsReport:
    """Large-rho probes of the optimal unbounded strategy's limit constants."""

    rho_probe: float
    beta_slope: float  # (pi/2 - beta) / arcsin(1/rho), limit 5
    gamma_slope: float  # (pi/2 - gamma) / arcsin(1/rho), limit 16/3
    cr_gap_scaled: float  # rho^2 (5 - CR), limit 289/6
    energy_scaled: float  # E / rho^2, limit 18/79
    references: tuple[float, float, float, float] = (5.0, 16.0 / 3.0, 289.0 / 6.0, 18.0 / 79.0)


def asymptotics_report(rho_probe: float) -> AsymptoticsReport:
    if rho_probe < 1e3:
        raise ValueError("probe rho must be at least 1e3 to be near the limit")
    inst = instance_from_rho(rho_probe)
    a = inst.alpha
    strat = optimize.optimal_inf(inst)
    cr = analytic.competitive_ratio(inst, strat)
    energy_rho = analytic.energy(inst, strat) / math.sin(a)
    return AsymptoticsReport(
        rho_probe=rho_probe,
        beta_slope=(math.pi / 2 - strat.beta) / a,
        gamma_slope=(math.pi / 2 - strat.gamma) / a,
        cr_gap_scaled=rho_probe**2 * (5.0 - cr),
        energy_scaled=energy_rho / rho_probe**2,
    )


def tradeoff_family_A(epsilon: float) -> TradeoffPoint:
    """Competitive ratio 5 in the limit, energy epsilon * rho^2.

    Uses beta = pi/2 - k alpha and gamma = pi/2 - m alpha with
    k = (31 eps + 18) / (22 eps) and m = (6 eps + 12) / (11 eps); these make
    the limiting scaled energy 6 / (2k + 4m - 5) equal epsilon while
    minimizing the scaled competitive-ratio gap
    27/(11 eps^2) - 237/(11 eps) - 39/44.
    """
    if epsilon <= 0.0:
        raise ValueError("epsilon must be positive")
    k = (31.0 * epsilon + 18.0) / (22.0 * epsilon)
    m = (6.0 * epsilon + 12.0) / (11.0 * epsilon)

    def strategy_of(instance: Instance) -> Strategy:
        a = instance.alpha
        return Strategy(steps=UNBOUNDED, beta=math.pi / 2 - k * a, gamma=math.pi / 2 - m * a)

    return TradeoffPoint(
        epsilon=epsilon,
        strategy_of=strategy_of,
        limit_competitive_ratio=5.0,
        limit_scaled_energy=epsilon,
        scaling=EnergyScaling.ENERGY_OVER_RHO_SQUARED,
        limit_scaled_cr_gap=27.0 / (11.0 * epsilon**2)
        - 237.0 / (11.0 * epsilon)
        - 39.0 / 44.0,
    )


def family_A_energy_coefficient(k: float, m: float) -> float:
    """Limiting E/rho^2 of the pi/2-linear-slope family: 6 / (2k + 4m - 5)."""
    return 6.0 / (2.0 * k + 4.0 * m - 5.0)


def tradeoff_family_B(epsilon: float, lam: float = 3.0 / 11.0) -> TradeoffPoint:
    """Competitive ratio 5 + epsilon in the limit with energy linear in rho.

    Fixed angles beta = arcsin(b), gamma = arcsin(c) with b = 2/(lam eps + 2)
    and c = 3/(eps - lam eps + 3); the identity 2/b + 3/c = 5 + eps holds for
    every lam in [0, 1].  lam = 3/11 minimizes the limiting energy
    (41 eps + 198) / (3 sqrt(3) sqrt(eps (3 eps + 44)) + 16 sqrt(eps (4 eps + 33)));
    lam = 2/5 recovers the simpler b = c = 5/(5 + eps) variant with limiting
    energy (eps + 5) / sqrt(eps (eps + 10)) <= 2/sqrt(eps).
    """
    if epsilon <= 0.0:
        raise ValueError("epsilon must be positive")
    if not 0.0 <= lam <= 1.0:
        raise ValueError(f"lambda must lie in [0, 1], got {lam}")
    b = 2.0 / (lam * epsilon + 2.0)
    c = 3.0 / (-lam * epsilon + epsilon + 3.0)
    beta, gamma = math.asin(b), math.asin(c)
    # E/rho limit of any fixed-(beta, gamma) family:
    limit_energy = (c + 2.0 * b) / (
        c * math.sqrt(1.0 - b * b) + 2.0 * b * math.sqrt(1.0 - c * c)
    )

    def strategy_of(instance: Instance) -> Strategy:
        return Strategy(steps=UNBOUNDED, beta=beta, gamma=gamma)

    return TradeoffPoint(
        epsilon=epsilon,
        strategy_of=strategy_of,
        limit_competitive_ratio=2.0 / b + 3.0 / c,
        limit_scaled_energy=limit_energy,
        scaling=EnergyScaling.ENERGY_OVER_RHO,
    )


def family_B_sines(epsilon: float, lam: float) -> tuple[float, float]:
    """(sin beta, sin gamma) of the family-B strategy."""
    return 2.0 / (lam * epsilon + 2.0), 3.0 / (-lam * epsilon + epsilon + 3.0)


@dataclass(frozen=True)
class CurveRow:
    """One rho sample of the five competitive-ratio curves."""

    rho: float
    naive: float
    one_rb: float
    one_step: float
    greedy_bisector: float
    unbounded: float


def curve_table(rho_values: list[float]) -> list[CurveRow]:
    """All five benchmark/optimal curves sampled at the given rho values."""
    rows = []
    for rho in rho_values:
        inst = instance_from_rho(rho)
        rows.append(
            CurveRow(
                rho=rho,
                naive=rho,
                one_rb=float(analytic.one_rb_optimal_ratio(rho)),
                one_step=analytic.competitive_ratio(inst, optimize.optimal_1rb2(inst)),
                greedy_bisector=float(analytic.greedy_bisector_ratio(rho)),
                unbounded=analytic.competitive_ratio(inst, optimize.optimal_inf(inst)),
            )
        )
    return rows
