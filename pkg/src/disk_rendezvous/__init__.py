"""Symmetric rendezvous strategies on a disk with a common reference point.

Two agents start on the perimeter of a disk whose center both can see, flip
private coins, and try to meet as fast as possible in expectation.  The
package evaluates closed-form expected times, finds optimal darting angles,
cross-checks everything against a geometric Monte Carlo simulator, and
analyzes effectiveness thresholds, asymptotics, and time-energy tradeoffs.
"""

from .analytic import (
    LINE_BEST_KNOWN,
    PerformanceReport,
    benchmark_curves,
    competitive_ratio,
    energy,
    expected_time,
    performance_report,
)
from .analysis import (
    EnergyScaling,
    TradeoffPoint,
    asymptotics_report,
    effectiveness,
    curve_table,
    tradeoff_family_A,
    tradeoff_family_B,
)
from .errors import (
    DegenerateInstanceError,
    DiskRendezvousError,
    InvalidStrategyError,
    NumericDomainError,
)
from .geometry import (
    UNBOUNDED,
    DartingGeometry,
    Instance,
    Strategy,
    darting_geometry,
    instance_from_rho,
)
from .optimize import (
    CriticalPointReport,
    grid_refine,
    hessian_check_inf,
    optimal_1rb,
    optimal_1rb2,
    optimal_inf,
)
from .simulate import (
    MetAt,
    SimulationSummary,
    TrialOutcome,
    coin_stream,
    exact_enumeration,
    monte_carlo,
    simulate_trial,
    worst_case_time,
)

__version__ = "0.1.0"

__all__ = [
    "LINE_BEST_KNOWN",
    "UNBOUNDED",
    "CriticalPointReport",
    "DartingGeometry",
    "DegenerateInstanceError",
    "DiskRendezvousError",
    "EnergyScaling",
    "Instance",
    "InvalidStrategyError",
    "MetAt",
    "NumericDomainError",
    "PerformanceReport",
    "SimulationSummary",
    "Strategy",
    "TradeoffPoint",
    "TrialOutcome",
    "asymptotics_report",
    "benchmark_curves",
    "coin_stream",
    "competitive_ratio",
    "darting_geometry",
    "effectiveness",
    "energy",
    "exact_enumeration",
    "expected_time",
    "curve_table",
    "grid_refine",
    "hessian_check_inf",
    "instance_from_rho",
    "monte_carlo",
    "optimal_1rb",
    "optimal_1rb2",
    "optimal_inf",
    "performance_report",
    "simulate_trial",
    "tradeoff_family_A",
    "tradeoff_family_B",
    "worst_case_time",
]
