#include "cryptoeq/nash.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "cryptoeq/best_response.hpp"

namespace cryptoeq {

namespace {

void check_nash_preconditions(const ModelParams& params, const char* who) {
    params.validate();
    if (!(params.k > 0.0)) {
        throw std::invalid_argument(std::string(who) + ": k must be positive");
    }
    if (!(params.d2 > 0.0)) {
        throw std::invalid_argument(std::string(who) + ": d2 must be positive");
    }
    if (!(params.dD2 > 0.0)) {
        throw std::invalid_argument(std::string(who) +
                                    ": dD2 must be positive (a risk-neutral government has "
                                    "no interior optimum; use the leader-follower solver)");
    }
    params.require_zero_covariance(who);
}

/// Bisects a sign-change bracket down to adjacent floating-point values.
/// ga and gb must be nonzero with opposite signs.  Returns the endpoint
/// with the smaller |g|.
double bisect_to_limit(const std::function<double(double)>& g, double a, double b,
                       double ga, double gb) {
    while (true) {
        const double mid = 0.5 * (a + b);
        if (!(mid > a && mid < b)) break;  // interval no longer splittable
        const double gm = g(mid);
        if (gm == 0.0) return mid;
        if (std::signbit(gm) == std::signbit(ga)) {
            a = mid;
            ga = gm;
        } else {
            b = mid;
            gb = gm;
        }
    }
    return std::abs(ga) <= std::abs(gb) ? a : b;
}

}  // namespace

ConditionsReport conditions_report(const ModelParams& params) {
    check_nash_preconditions(params, "conditions_report");

    ConditionsReport report;
    report.pc = params.k / (2.0 * params.dD2);

    // Uniqueness: the monotonicity proof needs c1 + c3 <= c2, i.e.
    // (1-mY)/(2 d2) + sigY2 <= k/(2 d2), i.e. A <= k.
    report.condpos_holds = attractiveness(params) <= params.k;
    report.condpos_as_printed = (1.0 + 2.0 * params.d2) * (1.0 - params.mY) <= params.k;
    report.uniqueness_guaranteed = report.condpos_holds;

    if (report.pc < 1.0) {
        report.existence_case = ExistenceCase::PcBelowOne;
        const double pc = report.pc;
        const double lhs = params.k * params.k * pc * (1.0 - pc) +
                           (params.mY - 1.0 + pc * params.k) / (2.0 * params.d2);
        report.existence_condition_holds = lhs > 0.0;
    } else {
        report.existence_case = ExistenceCase::PcAtLeastOne;
        const double lhs = (params.mY - 1.0 + params.k) / (2.0 * params.d2) / params.sigY2 +
                           2.0 * params.dD2 / params.k;
        report.existence_condition_holds = lhs >= 1.0;
    }
    report.existence_guaranteed = report.existence_condition_holds;
    return report;
}

std::vector<EquilibriumResult> find_nash(const ModelParams& params, const SolverOptions& opts,
                                         NashDiagnostics* diagnostics) {
    check_nash_preconditions(params, "find_nash");
    if (opts.scan_intervals < 2) {
        throw std::invalid_argument("find_nash: scan_intervals must be at least 2");
    }

    const std::function<double(double)> gap = [&params](double p) {
        return government_curve(params, p) - wealthy_curve(params, p);
    };

    const int n = opts.scan_intervals;
    std::vector<double> node_gap(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        node_gap[static_cast<std::size_t>(i)] = gap(static_cast<double>(i) / n);
    }

    std::vector<double> roots;
    std::vector<bool> near_root(static_cast<std::size_t>(n) + 1, false);
    const auto mark = [&near_root, n](int i) {
        if (i >= 0 && i <= n) near_root[static_cast<std::size_t>(i)] = true;
    };
    for (int i = 0; i <= n; ++i) {
        const double pi = static_cast<double>(i) / n;
        const double gi = node_gap[static_cast<std::size_t>(i)];
        if (gi == 0.0) {
            roots.push_back(pi);
            mark(i - 1);
            mark(i);
            mark(i + 1);
            continue;
        }
        if (i == 0) continue;
        const double gprev = node_gap[static_cast<std::size_t>(i) - 1];
        if (gprev != 0.0 && std::signbit(gi) != std::signbit(gprev)) {
            roots.push_back(bisect_to_limit(gap, static_cast<double>(i - 1) / n, pi, gprev, gi));
            mark(i - 1);
            mark(i);
        }
    }

    if (diagnostics != nullptr) {
        diagnostics->suspected_tangencies.clear();
        // Tiny |gap| away from any sign change: possibly an even-multiplicity
        // touch that bracketing cannot resolve.  Runs of adjacent flagged
        // nodes collapse to the node with the smallest |gap|.
        int run_best = -1;
        for (int i = 0; i <= n; ++i) {
            const bool flagged = !near_root[static_cast<std::size_t>(i)] &&
                                 std::abs(node_gap[static_cast<std::size_t>(i)]) < opts.tangency_tol;
            if (flagged) {
                if (run_best < 0 || std::abs(node_gap[static_cast<std::size_t>(i)]) <
                                        std::abs(node_gap[static_cast<std::size_t>(run_best)])) {
                    run_best = i;
                }
            }
            if ((!flagged || i == n) && run_best >= 0) {
                diagnostics->suspected_tangencies.push_back(static_cast<double>(run_best) / n);
                run_best = -1;
            }
        }
    }

    std::sort(roots.begin(), roots.end());
    std::vector<double> merged;
    for (double r : roots) {
        if (merged.empty() || r - merged.back() >= opts.merge_tol) {
            merged.push_back(r);
        } else if (std::abs(gap(r)) < std::abs(gap(merged.back()))) {
            merged.back() = r;  // same root reported twice; keep the sharper one
        }
    }

    std::vector<EquilibriumResult> results;
    for (double p_star : merged) {
        const double x_gov = government_curve(params, p_star);
        const double x_wealth = wealthy_curve(params, p_star);
        if (x_gov < -opts.x_band || x_gov > 1.0 + opts.x_band) continue;
        const double x_star = std::clamp(x_gov, 0.0, 1.0);

        // Second-order conditions; both hold whenever d2, dD2 > 0.
        const double uw_xx = -2.0 * params.d2 * (params.sigY2 + home_stats(params, p_star).sigF2);
        const double ud_pp = -2.0 * params.dD2;
        if (!(uw_xx < 0.0) || !(ud_pp < 0.0)) continue;

        EquilibriumResult result;
        result.point = StrategyPoint{p_star, x_star, utility_w(params, p_star, x_star),
                                     utility_d_risk_averse(params, p_star, x_star)};
        result.kind = EquilibriumKind::Nash;
        result.residual = std::abs(x_gov - x_wealth);
        result.verified_eps = max_unilateral_gain(params, result.point, opts.verify_grid);
        results.push_back(result);
    }
    return results;
}

double max_unilateral_gain(const ModelParams& params, const StrategyPoint& point, int grid_n) {
    if (grid_n < 2) {
        throw std::invalid_argument("max_unilateral_gain: grid_n must be at least 2");
    }
    detail::check_unit_interval(point.p, "p", "max_unilateral_gain");
    detail::check_unit_interval(point.x, "x", "max_unilateral_gain");

    const double base_w = utility_w(params, point.p, point.x);
    const double base_d = utility_d_risk_averse(params, point.p, point.x);
    double gain = 0.0;
    for (int i = 0; i < grid_n; ++i) {
        const double t = static_cast<double>(i) / (grid_n - 1);
        gain = std::max(gain, utility_w(params, point.p, t) - base_w);
        gain = std::max(gain, utility_d_risk_averse(params, t, point.x) - base_d);
    }
    return gain;
}

}  // namespace cryptoeq
