"""Trajectory-level verification oracle for the darting strategies.

The scalar simulator plays a single trial by actually moving both agents in
the plane: each darting move is a ray shot from the agent's position, rotated
off the inward direction by the darting angle, intersected with the target
bisector.  Leg lengths are Euclidean distances, and meetings are detected by
position coincidence of the two independently tracked agents, so nothing
here reuses the closed-form expectation.

The vectorized Monte Carlo estimator replays the same coin flips (identical
bit-splitting rule) over the per-round lengths, which makes it exactly
reproducible and lets the test suite check it trial-for-trial against the
geometric simulator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator

import numpy as np

from .geometry import Instance, Strategy, darting_geometry

#: Safety cap on rounds per trial; meetings fire with probability 1/2 per
#: round so this is unreachable for honest inputs.
ROUND_CAP = 10**6

_MEET_TOL = 1e-9


class MetAt(Enum):
    FIRST_DARTING = "first_darting"
    SECOND_DARTING = "second_darting"
    ORIGIN = "origin"


@dataclass(frozen=True)
class TrialOutcome:
    rounds_elapsed: int
    met_at: MetAt
    total_time: float


@dataclass(frozen=True)
class SimulationSummary:
    mean_time: float
    std_error: float
    trials: int
    seed: int
    round_histogram: dict[int, int] = field(default_factory=dict)
    truncated: int = 0


# ---------------------------------------------------------------------------
# Deterministic coin splitting: one 64-bit hash per (seed, trial, round,
# agent), so the bit stream of any trial can be regenerated independently of
# evaluation order or batching.

_SM_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_SM_M1 = np.uint64(0xBF58476D1CE4E5B9)
_SM_M2 = np.uint64(0x94D049BB133111EB)


def _splitmix64(z):
    with np.errstate(over="ignore"):  # uint64 wraparound is the point
        z = np.asarray(z, dtype=np.uint64) + _SM_GAMMA
        z = (z ^ (z >> np.uint64(30))) * _SM_M1
        z = (z ^ (z >> np.uint64(27))) * _SM_M2
        return z ^ (z >> np.uint64(31))


def _coin_bits(seed: int, trial, round_no: int, agent: int):
    """True = dart toward the peer's side; vectorized over ``trial``."""
    s = np.uint64(seed & 0xFFFFFFFFFFFFFFFF)
    t = np.asarray(trial, dtype=np.uint64)
    h = _splitmix64(_splitmix64(_splitmix64(s) ^ t) ^ np.uint64(2 * round_no + agent))
    return (h >> np.uint64(63)).astype(bool)


def coin_stream(seed: int, trial: int) -> Iterator[tuple[bool, bool]]:
    """Per-round (agent A toward, agent B toward) coin pairs for one trial."""
    round_no = 1
    while True:
        yield (
            bool(_coin_bits(seed, trial, round_no, 0)),
            bool(_coin_bits(seed, trial, round_no, 1)),
        )
        round_no += 1


# ---------------------------------------------------------------------------
# Geometric single-trial simulator.


def _unit(angle: float) -> np.ndarray:
    return np.array([math.cos(angle), math.sin(angle)])


def _dart(pos: np.ndarray, bisector_angle: float, deviation: float) -> tuple[np.ndarray, float]:
    """Shoot a ray from ``pos`` and intersect it with a bisector ray.

    The ray leaves ``pos`` in the inward (toward-origin) direction rotated by
    ``deviation`` (positive = counterclockwise).  Returns the intersection
    point and the traveled distance.
    """
    inward = -pos / np.hypot(*pos)
    c, s = math.cos(deviation), math.sin(deviation)
    direction = np.array([c * inward[0] - s * inward[1], s * inward[0] + c * inward[1]])
    e = _unit(bisector_angle)
    denom = direction[0] * e[1] - direction[1] * e[0]
    leg = -(pos[0] * e[1] - pos[1] * e[0]) / denom
    return pos + leg * direction, leg


def simulate_trial(
    instance: Instance, strategy: Strategy, bit_source: Iterator[tuple[bool, bool]]
) -> TrialOutcome:
    """Play one randomized trial with both agents tracked in the plane.

    ``bit_source`` yields one (A toward, B toward) pair per round, where
    "toward" means the agent darts to the bisector on its peer's side.  The
    agents meet at the first darting iff both darted toward each other, and
    at the second iff both darted away; position coincidence is asserted
    whenever a meeting fires.
    """
    darting_geometry(instance, strategy)  # angle validation only
    a = instance.alpha
    beta, gamma = strategy.beta, strategy.gamma
    theta_a, theta_b = 0.0, 2.0 * a
    pos_a, pos_b = _unit(theta_a), _unit(theta_b)
    total = 0.0
    round_no = 0
    while strategy.unbounded or round_no < strategy.steps:
        round_no += 1
        if round_no > ROUND_CAP:
            raise RuntimeError(f"trial exceeded {ROUND_CAP} rounds")
        a_toward, b_toward = next(bit_source)
        # A's peer is counterclockwise (+), B's is clockwise (-).
        s_a = 1.0 if a_toward else -1.0
        s_b = -1.0 if b_toward else 1.0
        pos_a, leg_a = _dart(pos_a, theta_a + s_a * a, -s_a * beta)
        pos_b, leg_b = _dart(pos_b, theta_b + s_b * a, -s_b * beta)
        total += leg_a
        if a_toward and b_toward:
            assert np.hypot(*(pos_a - pos_b)) < _MEET_TOL
            return TrialOutcome(round_no, MetAt.FIRST_DARTING, float(total))
        theta_a += s_a * a
        theta_b += s_b * a
        pos_a, leg_a = _dart(pos_a, theta_a - 2.0 * s_a * a, s_a * gamma)
        pos_b, leg_b = _dart(pos_b, theta_b - 2.0 * s_b * a, s_b * gamma)
        total += leg_a
        if not a_toward and not b_toward:
            assert np.hypot(*(pos_a - pos_b)) < _MEET_TOL
            return TrialOutcome(round_no, MetAt.SECOND_DARTING, float(total))
        theta_a -= 2.0 * s_a * a
        theta_b -= 2.0 * s_b * a
    # Finite strategy out of rounds: both head to the origin.
    total += float(np.hypot(*pos_a))
    return TrialOutcome(round_no, MetAt.ORIGIN, float(total))


def trace_trajectory(
    instance: Instance,
    strategy: Strategy,
    bit_source: Iterator[tuple[bool, bool]],
    r_min: float = 1e-9,
) -> list[tuple[float, float, float]]:
    """Agent A's darting endpoints as (x, y, cumulative distance) triples.

    Replays rounds from ``bit_source`` exactly like :func:`simulate_trial`
    but records every endpoint of agent A, starting with the initial
    position at distance 0.  Stops at a meeting, at the origin leg of a
    finite strategy, or once A's radius drops below ``r_min`` (feeding an
    all-failure bit stream to an unbounded strategy then yields the full
    shrinking spiral).
    """
    darting_geometry(instance, strategy)
    a = instance.alpha
    beta, gamma = strategy.beta, strategy.gamma
    theta_a, theta_b = 0.0, 2.0 * a
    pos_a = _unit(theta_a)
    total = 0.0
    points = [(float(pos_a[0]), float(pos_a[1]), 0.0)]
    round_no = 0
    while strategy.unbounded or round_no < strategy.steps:
        round_no += 1
        if round_no > ROUND_CAP:
            break
        a_toward, b_toward = next(bit_source)
        s_a = 1.0 if a_toward else -1.0
        pos_a, leg = _dart(pos_a, theta_a + s_a * a, -s_a * beta)
        total += leg
        points.append((float(pos_a[0]), float(pos_a[1]), total))
        if a_toward and b_toward:
            return points
        theta_a += s_a * a
        pos_a, leg = _dart(pos_a, theta_a - 2.0 * s_a * a, s_a * gamma)
        total += leg
        points.append((float(pos_a[0]), float(pos_a[1]), total))
        if not a_toward and not b_toward:
            return points
        theta_a -= 2.0 * s_a * a
        if float(np.hypot(*pos_a)) < r_min:
            return points
    total += float(np.hypot(*pos_a))
    points.append((0.0, 0.0, total))
    return points


def constant_bits(a_toward: bool, b_toward: bool) -> Iterator[tuple[bool, bool]]:
    """Endless stream of one fixed coin pair; (True, False) never meets."""
    while True:
        yield (a_toward, b_toward)


# ---------------------------------------------------------------------------
# Vectorized Monte Carlo.


def monte_carlo(
    instance: Instance, strategy: Strategy, trials: int, seed: int = 0
) -> SimulationSummary:
    """Mean trial time over ``trials`` independent coin streams.

    Deterministic for fixed (seed, trials): trial i, round j, agent g draws
    its coin from the (seed, i, j, g) hash regardless of batching.  Trials
    still unresolved after :data:`ROUND_CAP` rounds are counted in
    ``truncated`` and excluded from the mean (this cannot happen for honest
    strategies, whose meeting probability is 1/2 per round).
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    geo = darting_geometry(instance, strategy)
    w, d, x = geo.w, geo.d, geo.x
    idx = np.arange(trials, dtype=np.uint64)
    total = np.zeros(trials)
    radius = np.ones(trials)
    meet_round = np.zeros(trials, dtype=np.int64)
    active = np.ones(trials, dtype=bool)
    truncated = 0
    round_no = 0
    while active.any():
        if not strategy.unbounded and round_no >= strategy.steps:
            break
        round_no += 1
        if round_no > ROUND_CAP:
            truncated = int(active.sum())
            break
        act = np.nonzero(active)[0]
        a_toward = _coin_bits(seed, idx[act], round_no, 0)
        b_toward = _coin_bits(seed, idx[act], round_no, 1)
        total[act] += radius[act] * w
        meet1 = a_toward & b_toward
        meet2 = ~a_toward & ~b_toward
        rest = ~meet1
        total[act[rest]] += radius[act[rest]] * d
        done = act[meet1 | meet2]
        meet_round[done] = round_no
        active[done] = False
        cont = act[~(meet1 | meet2)]
        radius[cont] *= x
    live = np.nonzero(active)[0]
    if live.size and truncated == 0:
        # finite strategy: remaining trials walk to the origin
        total[live] += radius[live]
        meet_round[live] = round_no
        active[live] = False
    counted = ~active if truncated else np.ones(trials, dtype=bool)
    times = total[counted] if truncated else total
    mean = float(times.mean())
    std_err = float(times.std(ddof=1) / math.sqrt(times.size)) if times.size > 1 else 0.0
    rounds, counts = np.unique(meet_round[counted], return_counts=True)
    histogram = {int(r): int(c) for r, c in zip(rounds, counts)}
    return SimulationSummary(
        mean_time=mean,
        std_error=std_err,
        trials=trials,
        seed=seed,
        round_histogram=histogram,
        truncated=truncated,
    )


# ---------------------------------------------------------------------------
# Exact finite-k oracle and worst-case trajectory.

EXACT_ENUMERATION_MAX_STEPS = 12


def exact_enumeration(instance: Instance, strategy: Strategy) -> float:
    """Exact expected time of a finite-step strategy by probability-tree sum.

    Walks the per-round event tree with exact probabilities (1/4 meet at the
    first darting, 1/4 at the second, 1/2 continue) and the shrinking radii,
    never touching the closed-form expectation.  Refuses k > 12; use
    :func:`monte_carlo` for longer strategies.
    """
    if strategy.unbounded or strategy.steps > EXACT_ENUMERATION_MAX_STEPS:
        raise ValueError(
            f"exact enumeration supports finite steps <= {EXACT_ENUMERATION_MAX_STEPS}"
        )
    geo = darting_geometry(instance, strategy)
    w, d, x = geo.w, geo.d, geo.x
    expected = 0.0
    p_reach = 1.0  # probability no meeting happened in earlier rounds
    prefix = 0.0  # distance already traveled in failed rounds
    radius = 1.0
    for _ in range(strategy.steps):
        expected += p_reach * 0.25 * (prefix + radius * w)
        expected += p_reach * 0.25 * (prefix + radius * (w + d))
        prefix += radius * (w + d)
        radius *= x
        p_reach *= 0.5
    expected += p_reach * (prefix + radius)
    return expected


def worst_case_time(instance: Instance, strategy: Strategy) -> float:
    """Longest possible trial: every round fails (all-same-direction coins).

    Finite k: k full rounds plus the final leg to the origin.  Unbounded:
    the geometric series (w + d) / (1 - x), infinite when x >= 1.
    """
    geo = darting_geometry(instance, strategy)
    w, d, x = geo.w, geo.d, geo.x
    if strategy.unbounded:
        if x >= 1.0:
            return math.inf
        return (w + d) / (1.0 - x)
    total = 0.0
    radius = 1.0
    for _ in range(strategy.steps):
        total += radius * (w + d)
        radius *= x
    return total + radius
