#pragma once

#include <vector>

#include "cryptoeq/model.hpp"

/// Nash equilibria as intersections of the two stationarity curves on the
/// unit square, plus the sufficient-condition diagnostics for uniqueness
/// and existence.
namespace cryptoeq {

/// Which existence branch applies, split on p_c = k/(2*dD2).
enum class ExistenceCase {
    PcBelowOne,    ///< p_c < 1: government curve hits zero inside [0,1]
    PcAtLeastOne,  ///< p_c >= 1: government curve stays nonnegative on [0,1]
};

/// Evaluation of the sufficient conditions for uniqueness and existence.
///
/// The uniqueness condition is A <= k with A = 2*d2*sigY2 + 1 - mY, the
/// form the monotonicity argument actually establishes (it makes the
/// wealthy curve nondecreasing on all of [0,1], so the strictly
/// decreasing government curve crosses it at most once).  The commonly
/// quoted variant (1+2*d2)*(1-mY) <= k is reported alongside for
/// reference; it is not sufficient on its own (see uniqueness_printed
/// in the docs for a counterexample).
struct ConditionsReport {
    double pc = 0.0;                        ///< k/(2*dD2)
    bool condpos_holds = false;             ///< A <= k (drives uniqueness_guaranteed)
    bool condpos_as_printed = false;        ///< (1+2*d2)*(1-mY) <= k, reference only
    ExistenceCase existence_case = ExistenceCase::PcBelowOne;
    bool existence_condition_holds = false; ///< case-specific inequality
    bool uniqueness_guaranteed = false;     ///< == condpos_holds
    bool existence_guaranteed = false;      ///< == existence_condition_holds
};

/// Requires k > 0, d2 > 0, dD2 > 0.
/// Case PcBelowOne checks   k^2 pc (1-pc) + (mY - 1 + pc k)/(2 d2) > 0;
/// case PcAtLeastOne checks (mY - 1 + k)/(2 d2 sigY2) + 2 dD2 / k >= 1.
/// pc == 1 is assigned to PcAtLeastOne.
ConditionsReport conditions_report(const ModelParams& params);

struct SolverOptions {
    int scan_intervals = 2048;   ///< uniform scan cells used to bracket sign changes
    double merge_tol = 1e-8;     ///< roots closer than this in p are merged
    double x_band = 1e-12;       ///< x outside [0,1] by more than this discards the root
    double tangency_tol = 1e-6;  ///< |gap| below this without a sign change flags a suspected tangency
    int verify_grid = 10001;     ///< deviation-scan grid used to fill verified_eps
};

enum class EquilibriumKind { Nash, LeaderFollower };

struct EquilibriumResult {
    StrategyPoint point;
    EquilibriumKind kind = EquilibriumKind::Nash;
    double residual = 0.0;      ///< |government_curve - wealthy_curve| at the root
    double verified_eps = 0.0;  ///< largest unilateral-deviation gain found by the scan, clamped at 0
};

/// Scan-grid points where the curve gap is tiny but never changes sign;
/// honest reporting of possible even-multiplicity touch points, which
/// bracketing cannot certify either way.
struct NashDiagnostics {
    std::vector<double> suspected_tangencies;
};

/// All Nash equilibria (p*, x*) in the unit square, sorted by p ascending.
/// Uses the government's risk-averse utility.  Brackets every sign change
/// of the curve gap on a uniform scan grid, then bisects each bracket to
/// floating-point convergence (bracket width well below 1e-12).
///
/// Requires k > 0, d2 > 0, dD2 > 0 and covYF == 0; a risk-neutral
/// government (dD2 == 0) has no interior stationary point and is handled
/// by the leader-follower solver instead.  No intersections is an empty
/// list, not an error.
std::vector<EquilibriumResult> find_nash(const ModelParams& params,
                                         const SolverOptions& opts = {},
                                         NashDiagnostics* diagnostics = nullptr);

/// Brute-force equilibrium check: the largest utility gain either player
/// can achieve by deviating to any of grid_n uniform points along their
/// own axis, the other coordinate held fixed (risk-averse government
/// utility).  Clamped below at 0.  A Nash point yields ~0.
double max_unilateral_gain(const ModelParams& params, const StrategyPoint& point,
                           int grid_n = 10001);

}  // namespace cryptoeq
