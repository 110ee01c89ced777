"""Optimal darting angles per strategy class, and their certification.

The closed-form optima are certified two independent ways: by the residuals
of the critical-point equations, and by a grid-plus-refinement search that
never looks at the closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .analytic import finite_time, unbounded_time
from .errors import NumericDomainError
from .geometry import UNBOUNDED, Instance, Strategy

_GAMMA_REGIME_ALPHA = 0.5 * math.acos(2.0 / 3.0)  # one-step gamma=0 boundary


def unbounded_gamma_clamped(alpha: float) -> bool:
    """True when the repeat-forever interior critical point has gamma < 0.

    At gamma = 0 the optimal beta satisfies cos(alpha + beta) = 3/4, and the
    interior gamma arccos((2/3) cos beta) - 2 alpha turns negative exactly
    when (2/3) cos(arccos(3/4) - alpha) >= cos(2 alpha); past that the box
    optimum sits on the gamma = 0 edge.  The boundary is alpha ~ 0.43823
    (rho ~ 2.35659).
    """
    return (2.0 / 3.0) * math.cos(math.acos(0.75) - alpha) >= math.cos(2.0 * alpha)


@dataclass(frozen=True)
class CriticalPointReport:
    """Critical-point angles with equation residuals and Hessian eigenvalues."""

    beta_bar: float
    gamma_bar: float
    residual_1: float
    residual_2: float
    hessian_eigenvalues: tuple[float, float]


def optimal_1rb(instance: Instance) -> Strategy:
    """Optimal single-random-bit strategy: one darting move, then the origin.

    beta = arccos(3/4) - alpha, clamped at 0 (for alpha past arccos(3/4) the
    expected time is increasing in beta and going straight to the origin wins).
    """
    beta = max(0.0, math.acos(3.0 / 4.0) - instance.alpha)
    return Strategy(steps=1, beta=beta, gamma=0.0)


def optimal_1rb2(instance: Instance) -> Strategy:
    """Optimal one-round two-darting strategy.

    For alpha above half of arccos(2/3) (small rho) the interior critical
    point leaves the admissible box and the optimum clamps to gamma = 0,
    coinciding with :func:`optimal_1rb`.  Otherwise
    gamma = arccos(2/3) - 2 alpha and beta = arccos((3/4) cos gamma) - alpha.
    """
    a = instance.alpha
    if a > _GAMMA_REGIME_ALPHA:
        return optimal_1rb(instance)
    gamma = math.acos(2.0 / 3.0) - 2.0 * a
    beta = math.acos(0.75 * math.cos(gamma)) - a
    return Strategy(steps=1, beta=beta, gamma=gamma)


def residuals_inf(instance: Instance, strategy: Strategy) -> tuple[float, float]:
    """Signed defects of the repeat-forever critical-point equations.

    ((3/4) cos gamma - cos(alpha + beta), (2/3) cos beta - cos(2 alpha + gamma));
    both vanish exactly at the interior optimum.
    """
    a, b, g = instance.alpha, strategy.beta, strategy.gamma
    return (
        0.75 * math.cos(g) - math.cos(a + b),
        (2.0 / 3.0) * math.cos(b) - math.cos(2.0 * a + g),
    )


def residuals_1rb2(instance: Instance, strategy: Strategy) -> tuple[float, float]:
    """Signed defects of the one-round critical-point equations.

    (cos(2 alpha + gamma) - 2/3, cos(alpha + beta) - (3/4) cos gamma).
    """
    a, b, g = instance.alpha, strategy.beta, strategy.gamma
    return (
        math.cos(2.0 * a + g) - 2.0 / 3.0,
        math.cos(a + b) - 0.75 * math.cos(g),
    )


def _unbounded_seed(alpha: float) -> float:
    """Analytic root approximation for the repeat-forever optimal beta.

    Exact in the alpha -> 0 limit and within ~5e-3 rad over the working
    range; a few Newton steps on the critical-point system finish the job.
    """
    v = (2.0 * math.cos(alpha) - math.cos(2.0 * alpha)) / math.sin(2.0 * alpha)
    a_coef = 2.25 * math.cos(alpha) ** 2 - 1.0
    disc = v * v - a_coef * (1.25 - v * v)
    if disc < 0.0:
        raise NumericDomainError(
            f"negative discriminant {disc} in beta seed at alpha={alpha}"
        )
    return math.atan((-v + math.sqrt(disc)) / a_coef)


def optimal_inf(instance: Instance) -> Strategy:
    """Optimal repeat-forever strategy.

    Solves the critical-point system
        (3/4) cos gamma = cos(alpha + beta)
        (2/3) cos beta  = cos(2 alpha + gamma)
    by Newton iteration from the analytic seed.  The two equivalent closed
    forms for gamma (arccos((4/3) cos(alpha+beta)) and
    arccos((2/3) cos beta) - 2 alpha) are both evaluated and must agree.

    Past the clamp boundary (:func:`unbounded_gamma_clamped`) the interior
    gamma is negative and the box optimum sits at gamma = 0 with
    beta = max(0, arccos(3/4) - alpha), from the reduced 1-D stationarity
    condition cos(alpha + beta) = 3/4.
    """
    a = instance.alpha
    if unbounded_gamma_clamped(a):
        return Strategy(
            steps=UNBOUNDED, beta=max(0.0, math.acos(0.75) - a), gamma=0.0
        )

    b = _unbounded_seed(a)
    g = math.acos(min(1.0, max(-1.0, (4.0 / 3.0) * math.cos(a + b))))
    for _ in range(50):
        r1 = 0.75 * math.cos(g) - math.cos(a + b)
        r2 = (2.0 / 3.0) * math.cos(b) - math.cos(2.0 * a + g)
        if abs(r1) < 1e-14 and abs(r2) < 1e-14:
            break
        j11 = math.sin(a + b)
        j12 = -0.75 * math.sin(g)
        j21 = -(2.0 / 3.0) * math.sin(b)
        j22 = math.sin(2.0 * a + g)
        det = j11 * j22 - j12 * j21
        b -= (r1 * j22 - r2 * j12) / det
        g -= (r2 * j11 - r1 * j21) / det
    else:
        raise NumericDomainError(
            f"critical-point Newton iteration did not converge at alpha={a}"
        )

    g_alt = math.acos((2.0 / 3.0) * math.cos(b)) - 2.0 * a
    g_direct = math.acos((4.0 / 3.0) * math.cos(a + b))
    if abs(g_alt - g_direct) > 1e-10:
        raise NumericDomainError(
            f"gamma routes disagree at alpha={a}: {g_direct} vs {g_alt}"
        )
    return Strategy(steps=UNBOUNDED, beta=b, gamma=g)


def _objective(instance: Instance, steps):
    a = instance.alpha
    if steps == UNBOUNDED:
        return lambda b, g: unbounded_time(a, b, g)
    return lambda b, g: finite_time(a, b, g, steps)


def grid_refine(instance: Instance, steps) -> Strategy:
    """Independent optimality oracle: coarse grid plus coordinate descent.

    Evaluates the expected time on a 200x200 grid over the admissible box
    [0, pi/2 - alpha]^2, then alternates bounded scalar minimizations per
    coordinate until neither angle moves by more than 1e-10.  Ties on the
    grid break toward the lowest beta, then gamma.
    """
    f = _objective(instance, steps)
    hi = math.pi / 2 - instance.alpha
    grid = np.linspace(0.0, hi, 200)
    bb, gg = np.meshgrid(grid, grid, indexing="ij")
    vals = f(bb, gg)
    i, j = np.unravel_index(np.argmin(vals), vals.shape)
    b, g = float(grid[i]), float(grid[j])

    span = hi / 199.0
    for _ in range(200):
        res_b = minimize_scalar(
            lambda t: float(f(t, g)),
            bounds=(max(0.0, b - span), min(hi, b + span)),
            method="bounded",
            options={"xatol": 1e-12},
        )
        res_g = minimize_scalar(
            lambda t: float(f(res_b.x, t)),
            bounds=(max(0.0, g - span), min(hi, g + span)),
            method="bounded",
            options={"xatol": 1e-12},
        )
        moved = max(abs(res_b.x - b), abs(res_g.x - g))
        b, g = float(res_b.x), float(res_g.x)
        if moved < 1e-10:
            break
    return Strategy(steps=steps, beta=b, gamma=g)


def _hessian_fd(func, b: float, g: float, h: float) -> np.ndarray:
    """Central finite-difference 2x2 Hessian with step h."""
    f = func
    hbb = (f(b + h, g) - 2.0 * f(b, g) + f(b - h, g)) / h**2
    hgg = (f(b, g + h) - 2.0 * f(b, g) + f(b, g - h)) / h**2
    hbg = (
        f(b + h, g + h) - f(b + h, g - h) - f(b - h, g + h) + f(b - h, g - h)
    ) / (4.0 * h**2)
    return np.array([[hbb, hbg], [hbg, hgg]])


def hessian_check_inf(instance: Instance) -> CriticalPointReport:
    """Second-order certificate at the repeat-forever optimum.

    Finite-difference Hessian (h = 1e-5 rad, one Richardson refinement) of
    the expected time at the closed-form optimum; both eigenvalues must come
    out positive for the point to be a minimum.  In the clamped regime the
    optimum is an edge point, so the residuals in the report are nonzero
    there while the Hessian stays positive definite.
    """
    strat = optimal_inf(instance)
    b, g = strat.beta, strat.gamma
    f = lambda bb, gg: float(unbounded_time(instance.alpha, bb, gg))
    h = 1e-5
    hess = (4.0 * _hessian_fd(f, b, g, h) - _hessian_fd(f, b, g, 2.0 * h)) / 3.0
    eigs = np.linalg.eigvalsh(hess)
    r1, r2 = residuals_inf(instance, strat)
    return CriticalPointReport(
        beta_bar=b,
        gamma_bar=g,
        residual_1=r1,
        residual_2=r2,
        hessian_eigenvalues=(float(eigs[0]), float(eigs[1])),
    )


def gradient_norm_inf(instance: Instance, strategy: Strategy, h: float = 1e-6) -> float:
    """Central-difference gradient norm of the repeat-forever expected time."""
    a, b, g = instance.alpha, strategy.beta, strategy.gamma
    f = lambda bb, gg: float(unbounded_time(a, bb, gg))
    db = (f(b + h, g) - f(b - h, g)) / (2.0 * h)
    dg = (f(b, g + h) - f(b, g - h)) / (2.0 * h)
    return math.hypot(db, dg)
