import math

import numpy as np
import pytest

from disk_rendezvous.errors import DegenerateInstanceError, InvalidStrategyError
from disk_rendezvous.geometry import (
    UNBOUNDED,
    Instance,
    Strategy,
    darting_geometry,
    darting_lengths,
    instance_from_rho,
    rho_of,
    validate_strategy,
)


def test_instance_accepts_open_interval():
    Instance(alpha=1e-6)
    Instance(alpha=math.pi / 4 - 1e-6)


@pytest.mark.parametrize("alpha", [0.0, -0.1, math.pi / 4, 1.0])
def test_instance_rejects_degenerate_alpha(alpha):
    with pytest.raises(DegenerateInstanceError):
        Instance(alpha=alpha)


@pytest.mark.parametrize("rho", [math.sqrt(2), 1.0, 0.0, -3.0])
def test_instance_from_rho_rejects_small_rho(rho):
    with pytest.raises(DegenerateInstanceError):
        instance_from_rho(rho)


def test_rho_alpha_round_trip():
    for rho in np.linspace(1.5, 100.0, 57):
        inst = instance_from_rho(float(rho))
        assert rho_of(inst) == pytest.approx(rho, abs=1e-12)
        assert math.sin(inst.alpha) * inst.rho == pytest.approx(1.0, abs=1e-14)


def test_strategy_steps_validation():
    Strategy(steps=1, beta=0.1, gamma=0.2)
    Strategy(steps=UNBOUNDED, beta=0.1, gamma=0.2)
    with pytest.raises(InvalidStrategyError):
        Strategy(steps=0, beta=0.1, gamma=0.2)
    with pytest.raises(InvalidStrategyError):
        Strategy(steps=2.5, beta=0.1, gamma=0.2)
    with pytest.raises(InvalidStrategyError):
        Strategy(steps=1, beta=math.nan, gamma=0.0)


def test_validate_strategy_bounds():
    inst = Instance(alpha=0.3)
    validate_strategy(inst, Strategy(steps=1, beta=0.0, gamma=math.pi / 2))
    with pytest.raises(InvalidStrategyError):
        validate_strategy(inst, Strategy(steps=1, beta=-0.01, gamma=0.0))
    with pytest.raises(InvalidStrategyError):
        validate_strategy(inst, Strategy(steps=1, beta=0.0, gamma=math.pi / 2 + 0.01))


def test_darting_length_ratios():
    # w / y = sin(alpha) / sin(beta) and d / x = sin(2 alpha) / sin(gamma)
    rng = np.random.default_rng(1)
    for _ in range(200):
        a = rng.uniform(0.01, math.pi / 4 - 0.01)
        b = rng.uniform(0.05, math.pi / 2 - 0.05)
        g = rng.uniform(0.05, math.pi / 2 - 0.05)
        w, y, d, x = darting_lengths(a, b, g)
        assert w / y == pytest.approx(math.sin(a) / math.sin(b), rel=1e-12)
        assert d / x == pytest.approx(math.sin(2 * a) / math.sin(g), rel=1e-12)


def test_darting_lengths_vectorized_matches_scalar():
    alphas = np.linspace(0.05, 0.7, 9)
    w, y, d, x = darting_lengths(alphas, 0.8, 0.6)
    for i, a in enumerate(alphas):
        ws, ys, ds, xs = darting_lengths(float(a), 0.8, 0.6)
        assert w[i] == ws and y[i] == ys and d[i] == ds and x[i] == xs


def test_mirror_strategy_shrink_factor():
    # beta = gamma = pi/2 - alpha collapses the round to a single reflected
    # geometry with shrink factor cos(alpha): both darting triangles become
    # right triangles at the bisector.
    for a in np.linspace(0.02, 0.7, 25):
        inst = Instance(alpha=float(a))
        strat = Strategy(steps=UNBOUNDED, beta=math.pi / 2 - float(a), gamma=math.pi / 2 - float(a))
        geo = darting_geometry(inst, strat)
        assert geo.x == pytest.approx(math.cos(a), abs=1e-12)
        assert geo.y == pytest.approx(math.cos(a), abs=1e-12)
        assert geo.w == pytest.approx(math.sin(a), abs=1e-12)


def test_degenerate_angles_give_trivial_round():
    # beta = 0: the first darting goes straight to the reference point.
    inst = Instance(alpha=0.4)
    geo = darting_geometry(inst, Strategy(steps=1, beta=0.0, gamma=0.0))
    assert geo.w == pytest.approx(1.0)
    assert geo.y == pytest.approx(0.0)
    assert geo.d == pytest.approx(0.0)
    assert geo.x == pytest.approx(0.0)


def test_geometry_is_scale_free_in_steps():
    inst = Instance(alpha=0.25)
    g1 = darting_geometry(inst, Strategy(steps=1, beta=0.7, gamma=0.5))
    g2 = darting_geometry(inst, Strategy(steps=UNBOUNDED, beta=0.7, gamma=0.5))
    assert g1 == g2
