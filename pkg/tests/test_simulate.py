import itertools
import math

import numpy as np
import pytest
from scipy.stats import chisquare

from disk_rendezvous import analytic, simulate
from disk_rendezvous.geometry import (
    UNBOUNDED,
    Instance,
    Strategy,
    darting_geometry,
    darting_lengths,
)


def bits(*pairs):
    return iter(list(pairs))


def test_meet_at_first_darting():
    inst = Instance(alpha=0.3)
    strat = Strategy(steps=UNBOUNDED, beta=0.9, gamma=0.7)
    geo = darting_geometry(inst, strat)
    out = simulate.simulate_trial(inst, strat, bits((True, True)))
    assert out.met_at is simulate.MetAt.FIRST_DARTING
    assert out.rounds_elapsed == 1
    assert out.total_time == pytest.approx(geo.w, abs=1e-12)


def test_meet_at_second_darting():
    inst = Instance(alpha=0.3)
    strat = Strategy(steps=UNBOUNDED, beta=0.9, gamma=0.7)
    geo = darting_geometry(inst, strat)
    out = simulate.simulate_trial(inst, strat, bits((False, False)))
    assert out.met_at is simulate.MetAt.SECOND_DARTING
    assert out.total_time == pytest.approx(geo.w + geo.d, abs=1e-12)


def test_failed_rounds_shrink_then_meet():
    inst = Instance(alpha=0.25)
    strat = Strategy(steps=UNBOUNDED, beta=0.8, gamma=0.5)
    geo = darting_geometry(inst, strat)
    out = simulate.simulate_trial(
        inst, strat, bits((True, False), (False, True), (True, True))
    )
    assert out.met_at is simulate.MetAt.FIRST_DARTING
    assert out.rounds_elapsed == 3
    expected = (geo.w + geo.d) * (1.0 + geo.x) + geo.x**2 * geo.w
    assert out.total_time == pytest.approx(expected, abs=1e-12)


def test_finite_strategy_origin_fallback():
    inst = Instance(alpha=0.25)
    strat = Strategy(steps=2, beta=0.8, gamma=0.5)
    geo = darting_geometry(inst, strat)
    out = simulate.simulate_trial(inst, strat, bits((True, False), (False, True)))
    assert out.met_at is simulate.MetAt.ORIGIN
    expected = (geo.w + geo.d) * (1.0 + geo.x) + geo.x**2
    assert out.total_time == pytest.approx(expected, abs=1e-12)
    assert out.total_time == pytest.approx(
        simulate.worst_case_time(inst, strat), abs=1e-12
    )


def test_all_four_bit_patterns_round_one():
    inst = Instance(alpha=0.2)
    strat = Strategy(steps=1, beta=0.7, gamma=0.4)
    results = {}
    for pa, pb in itertools.product((False, True), repeat=2):
        out = simulate.simulate_trial(inst, strat, bits((pa, pb)))
        results[(pa, pb)] = out.met_at
    assert results[(True, True)] is simulate.MetAt.FIRST_DARTING
    assert results[(False, False)] is simulate.MetAt.SECOND_DARTING
    assert results[(True, False)] is simulate.MetAt.ORIGIN
    assert results[(False, True)] is simulate.MetAt.ORIGIN


def test_coin_stream_matches_coin_bits():
    stream = simulate.coin_stream(seed=9, trial=4)
    for round_no, (a, b) in zip(range(1, 30), stream):
        assert a == bool(simulate._coin_bits(9, 4, round_no, 0))
        assert b == bool(simulate._coin_bits(9, 4, round_no, 1))


def test_coin_bits_are_balanced():
    vals = simulate._coin_bits(3, np.arange(200_000), 1, 0)
    assert abs(vals.mean() - 0.5) < 0.005


def test_monte_carlo_deterministic():
    inst = Instance(alpha=0.3)
    strat = Strategy(steps=UNBOUNDED, beta=0.9, gamma=0.7)
    s1 = simulate.monte_carlo(inst, strat, trials=5000, seed=11)
    s2 = simulate.monte_carlo(inst, strat, trials=5000, seed=11)
    assert s1 == s2
    s3 = simulate.monte_carlo(inst, strat, trials=5000, seed=12)
    assert s3.mean_time != s1.mean_time


def test_monte_carlo_matches_scalar_simulator():
    inst = Instance(alpha=0.28)
    strat = Strategy(steps=UNBOUNDED, beta=0.85, gamma=0.55)
    seed, trials = 21, 400
    summary = simulate.monte_carlo(inst, strat, trials=trials, seed=seed)
    times = [
        simulate.simulate_trial(inst, strat, simulate.coin_stream(seed, t)).total_time
        for t in range(trials)
    ]
    assert summary.mean_time == pytest.approx(float(np.mean(times)), abs=1e-12)


def test_monte_carlo_histogram_sums_to_trials():
    inst = Instance(alpha=0.3)
    strat = Strategy(steps=3, beta=0.9, gamma=0.7)
    summary = simulate.monte_carlo(inst, strat, trials=10_000, seed=0)
    assert sum(summary.round_histogram.values()) == 10_000
    assert summary.truncated == 0
    assert max(summary.round_histogram) <= 3


def test_monte_carlo_deterministic_strategy():
    # beta = gamma = 0 walks straight to the reference point: time exactly 1
    inst = Instance(alpha=math.pi / 6)
    strat = Strategy(steps=1, beta=0.0, gamma=0.0)
    summary = simulate.monte_carlo(inst, strat, trials=1000, seed=5)
    assert summary.mean_time == pytest.approx(1.0, abs=1e-12)
    assert summary.std_error == pytest.approx(0.0, abs=1e-12)


def test_round_counts_geometric():
    inst = Instance(alpha=0.3)
    strat = Strategy(steps=UNBOUNDED, beta=0.9, gamma=0.7)
    summary = simulate.monte_carlo(inst, strat, trials=200_000, seed=17)
    max_r = max(summary.round_histogram)
    observed, expected = [], []
    tail_obs = 0.0
    for r in range(1, max_r + 1):
        count = summary.round_histogram.get(r, 0)
        if r <= 12:
            observed.append(count)
            expected.append(200_000 * 0.5**r)
        else:
            tail_obs += count
    observed.append(tail_obs)
    expected.append(200_000 * 0.5**12)
    _, p = chisquare(observed, expected)
    assert p > 0.001


def test_exact_enumeration_one_round():
    inst = Instance(alpha=0.3)
    strat = Strategy(steps=1, beta=0.9, gamma=0.7)
    w, _, d, x = darting_lengths(0.3, 0.9, 0.7)
    assert simulate.exact_enumeration(inst, strat) == pytest.approx(
        w + 0.75 * d + 0.5 * x, abs=1e-14
    )


def test_exact_enumeration_matches_closed_form():
    rng = np.random.default_rng(8)
    for _ in range(50):
        a = rng.uniform(0.02, math.pi / 4 - 0.02)
        b = rng.uniform(0.0, math.pi / 2)
        g = rng.uniform(0.0, math.pi / 2)
        k = int(rng.integers(1, 13))
        inst = Instance(alpha=a)
        strat = Strategy(steps=k, beta=b, gamma=g)
        assert simulate.exact_enumeration(inst, strat) == pytest.approx(
            analytic.expected_time(inst, strat), abs=1e-10
        )


def test_exact_enumeration_refuses_long_strategies():
    inst = Instance(alpha=0.3)
    with pytest.raises(ValueError):
        simulate.exact_enumeration(inst, Strategy(steps=13, beta=0.5, gamma=0.5))
    with pytest.raises(ValueError):
        simulate.exact_enumeration(inst, Strategy(steps=UNBOUNDED, beta=0.5, gamma=0.5))


def test_worst_case_matches_energy():
    rng = np.random.default_rng(9)
    for _ in range(100):
        a = rng.uniform(0.02, math.pi / 4 - 0.02)
        b = rng.uniform(0.0, math.pi / 2)
        g = rng.uniform(0.0, math.pi / 2)
        steps = UNBOUNDED if rng.random() < 0.5 else int(rng.integers(1, 20))
        inst = Instance(alpha=a)
        strat = Strategy(steps=steps, beta=b, gamma=g)
        wc = simulate.worst_case_time(inst, strat)
        en = analytic.energy(inst, strat)
        if math.isinf(wc):
            assert math.isinf(en)
        else:
            assert wc == pytest.approx(en, rel=1e-9)


def test_energy_finiteness_boundary_grid():
    # unbounded energy is finite iff sin b sin g < sin(a+b) sin(2a+g)
    n = 50
    alphas = np.linspace(0.02, math.pi / 4 - 0.02, n)
    betas = np.linspace(0.0, math.pi / 2, n)
    gammas = np.linspace(0.0, math.pi / 2, n)
    aa, bb, gg = np.meshgrid(alphas, betas, gammas, indexing="ij")
    _, _, _, x = darting_lengths(aa, bb, gg)
    condition = np.sin(bb) * np.sin(gg) < np.sin(aa + bb) * np.sin(2 * aa + gg)
    assert np.array_equal(condition, x < 1.0)


def test_trace_trajectory_spiral_length():
    inst = Instance(alpha=0.2)
    strat = Strategy(steps=UNBOUNDED, beta=0.9, gamma=0.7)
    pts = simulate.trace_trajectory(inst, strat, simulate.constant_bits(True, False))
    assert pts[-1][2] == pytest.approx(simulate.worst_case_time(inst, strat), abs=1e-6)


def test_trace_trajectory_random_matches_trial():
    inst = Instance(alpha=0.3)
    strat = Strategy(steps=UNBOUNDED, beta=0.9, gamma=0.7)
    out = simulate.simulate_trial(inst, strat, simulate.coin_stream(3, 5))
    pts = simulate.trace_trajectory(inst, strat, simulate.coin_stream(3, 5))
    assert pts[-1][2] == pytest.approx(out.total_time, abs=1e-12)
