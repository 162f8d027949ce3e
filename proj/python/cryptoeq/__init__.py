"""Equilibrium solvers for the two-player crypto allocation game.

A wealthy group splits its assets between a seizable home currency and a
cryptocurrency; a government picks the probability of seizing a fraction
of home-currency wealth.  The extension module computes Nash equilibria
(simultaneous play), the leader-follower optimum (irrevocable government
commitment), the sufficient-condition diagnostics, the speculators'
volatility choice, and demand-based pricing.
"""

from cryptoeq._core import (
    AttractivenessRegime,
    ClosedFormLeaderP,
    ConditionsReport,
    CryptoStats,
    EquilibriumKind,
    EquilibriumResult,
    ExistenceCase,
    GridCluster,
    GridSpec,
    HomeStats,
    MarketState,
    ModelParams,
    SolverOptions,
    SpeculatorParams,
    StackelbergSolution,
    StrategyPoint,
    VarianceMode,
    aggregate_demand,
    attractiveness,
    closed_form_pstar,
    cluster_grid_points,
    conditions_report,
    crypto_stats,
    equilibrium_price,
    find_nash,
    find_nash_with_diagnostics,
    fundamental_value_ssw,
    government_curve,
    grid_best_p,
    grid_best_x,
    grid_nash,
    grid_stackelberg,
    home_stats,
    leader_objective,
    liquidity_value,
    max_unilateral_gain,
    optimal_volatility,
    solve_stackelberg,
    utility_d_linear,
    utility_d_risk_averse,
    utility_w,
    wealthy_best_response,
    wealthy_curve,
    wealthy_curve_slope_numerator,
)

__all__ = [
    "AttractivenessRegime",
    "ClosedFormLeaderP",
    "ConditionsReport",
    "CryptoStats",
    "EquilibriumKind",
    "EquilibriumResult",
    "ExistenceCase",
    "GridCluster",
    "GridSpec",
    "HomeStats",
    "MarketState",
    "ModelParams",
    "SolverOptions",
    "SpeculatorParams",
    "StackelbergSolution",
    "StrategyPoint",
    "VarianceMode",
    "aggregate_demand",
    "attractiveness",
    "closed_form_pstar",
    "cluster_grid_points",
    "conditions_report",
    "crypto_stats",
    "equilibrium_price",
    "find_nash",
    "find_nash_with_diagnostics",
    "fundamental_value_ssw",
    "government_curve",
    "grid_best_p",
    "grid_best_x",
    "grid_nash",
    "grid_stackelberg",
    "home_stats",
    "leader_objective",
    "liquidity_value",
    "max_unilateral_gain",
    "optimal_volatility",
    "solve_stackelberg",
    "utility_d_linear",
    "utility_d_risk_averse",
    "utility_w",
    "wealthy_best_response",
    "wealthy_curve",
    "wealthy_curve_slope_numerator",
]

__version__ = "0.1.0"
