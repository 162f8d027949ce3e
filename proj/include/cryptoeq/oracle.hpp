#pragma once

#include <vector>

#include "cryptoeq/model.hpp"

/// Brute-force verification layer: grid argmax best responses, axis-wise
/// eps-equilibrium enumeration and grid leader-follower search.  Not a
/// performance-optimized solver; it is the independent reference the
/// analytic solvers are tested against.
namespace cryptoeq {

struct GridSpec {
    int n_p = 400;      ///< grid points along p, >= 2
    int n_x = 400;      ///< grid points along x, >= 2
    double eps = 2e-3;  ///< acceptance slack for eps-equilibrium tests, > 0

    void validate() const;
};

/// Grid argmax of utility_w(params, p, .) over n_x uniform points;
/// ties resolve to the smallest x.  Handles covYF != 0.
double grid_best_x(const ModelParams& params, double p, int n_x);

/// Grid argmax of the government utility over n_p uniform points,
/// risk-averse or linear form; ties resolve to the smallest p.
double grid_best_p(const ModelParams& params, double x, int n_p, bool risk_averse);

/// All grid points (p, x) where neither player can gain more than
/// grid.eps by deviating to any other grid point along their own axis
/// (risk-averse government utility).  Row-major order (p outer, x inner).
///
/// Note the eps-region is a band around each best-response curve whose
/// width scales like sqrt(eps / curvature); at loose eps the bands of
/// nearby equilibria merge into a single connected cluster.
std::vector<StrategyPoint> grid_nash(const ModelParams& params, const GridSpec& grid);

/// Connected component (8-adjacency) of qualifying grid points, reported
/// as one representative so plateaus do not read as many equilibria.
struct GridCluster {
    StrategyPoint representative;  ///< centroid, utilities evaluated there
    int size = 0;                  ///< member count
    double p_lo = 0.0, p_hi = 0.0; ///< member extent in p
    double x_lo = 0.0, x_hi = 0.0; ///< member extent in x
};

std::vector<GridCluster> cluster_grid_points(const std::vector<StrategyPoint>& points,
                                             const ModelParams& params,
                                             const GridSpec& grid);

/// For each grid p, pairs it with grid_best_x and evaluates the linear
/// government utility; returns the best pair, ties to the smallest p.
StrategyPoint grid_stackelberg(const ModelParams& params, const GridSpec& grid);

}  // namespace cryptoeq
