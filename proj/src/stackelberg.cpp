#include "cryptoeq/stackelberg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "cryptoeq/best_response.hpp"

namespace cryptoeq {

namespace {

void check_preconditions(const ModelParams& params, const char* who) {
    params.validate();
    if (!(params.k > 0.0)) {
        throw std::invalid_argument(std::string(who) + ": k must be positive");
    }
    if (!(params.d2 > 0.0)) {
        throw std::invalid_argument(std::string(who) + ": d2 must be positive");
    }
    params.require_zero_covariance(who);
}

/// Golden-section maximization of f on [a,b] down to bracket width tol.
/// Assumes a single interior maximum on the bracket.
template <typename F>
double golden_max(const F& f, double a, double b, double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
        if (x2 <= x1) break;  // bracket exhausted in floating point
    }
    return 0.5 * (a + b);
}

/// Golden section plus one guarded parabolic polish.  Near a smooth flat
/// peak the section comparisons drown in rounding noise and stall around
/// 1e-7; fitting a parabola through three spaced samples recovers the
/// vertex from curvature instead of value ordering.
template <typename F>
double refine_peak(const F& f, double lo, double hi, double tol) {
    const double m = golden_max(f, lo, hi, tol);
    const double h = 1e-6;
    if (m - h < lo || m + h > hi) return m;  // peak at a bracket edge; keep as is
    const double fa = f(m - h);
    const double fm = f(m);
    const double fb = f(m + h);
    const double curvature = fa + fb - 2.0 * fm;
    if (!(curvature < 0.0)) return m;
    const double step = 0.5 * h * (fa - fb) / curvature;
    if (!(std::abs(step) <= h)) return m;  // fit not trustworthy beyond the stencil
    const double polished = m + step;
    return f(polished) >= fm ? polished : m;
}

}  // namespace

double leader_objective(const ModelParams& params, double p) {
    check_preconditions(params, "leader_objective");
    return utility_d_linear(params, p, wealthy_best_response(params, p));
}

ClosedFormLeaderP closed_form_pstar(const ModelParams& params) {
    params.validate();
    if (!(params.k > 0.0)) {
        throw std::invalid_argument("closed_form_pstar: k must be positive");
    }
    params.require_zero_covariance("closed_form_pstar");

    const double a = attractiveness(params);
    const double k = params.k;
    const double b = params.sigY2;

    if (a == 0.0) {
        return {0.0, AttractivenessRegime::Zero};
    }
    if (a < k) {
        // Positive root of A*B - 2*B*k*p + k^2*(A-k)*p^2, rationalized so it
        // stays stable as A -> k; always lands in [0, A/(2k)] c [0, 1/2].
        const double p = a * b / (k * (b + std::sqrt(b * b + a * b * (k - a))));
        return {p, AttractivenessRegime::BelowK};
    }
    if (a == k) {
        return {0.5, AttractivenessRegime::EqualsK};
    }
    if (a <= 2.0 * k) {
        // Convex quadratic with positive value at p = 0: the objective rises
        // until the smaller root, if that root is real and inside [0,1];
        // otherwise the stationarity condition never bites and p* = 1.
        const double disc = b * b - a * b * (a - k);
        if (disc >= 0.0) {
            const double p = a * b / (k * (b + std::sqrt(disc)));
            if (p <= 1.0) {
                return {p, AttractivenessRegime::KToTwoK};
            }
        }
        return {1.0, AttractivenessRegime::KToTwoK};
    }
    return {1.0, AttractivenessRegime::AboveTwoK};
}

StackelbergSolution solve_stackelberg(const ModelParams& params, const StackelbergOptions& opts) {
    check_preconditions(params, "solve_stackelberg");
    if (opts.coarse_intervals < 2) {
        throw std::invalid_argument("solve_stackelberg: coarse_intervals must be at least 2");
    }

    const auto objective = [&params](double p) {
        return utility_d_linear(params, p, wealthy_best_response(params, p));
    };

    const int n = opts.coarse_intervals;
    std::vector<double> values(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        values[static_cast<std::size_t>(i)] = objective(static_cast<double>(i) / n);
    }

    // Candidates: both endpoints exactly, plus a refined point for every
    // coarse local maximum.
    std::vector<double> candidates{0.0, 1.0};
    for (int i = 0; i <= n; ++i) {
        const double here = values[static_cast<std::size_t>(i)];
        const bool up_ok = i == 0 || here >= values[static_cast<std::size_t>(i) - 1];
        const bool down_ok = i == n || here >= values[static_cast<std::size_t>(i) + 1];
        if (up_ok && down_ok) {
            const double lo = static_cast<double>(std::max(i - 1, 0)) / n;
            const double hi = static_cast<double>(std::min(i + 1, n)) / n;
            candidates.push_back(refine_peak(objective, lo, hi, opts.refine_tol));
        }
    }

    double best_p = 0.0;
    double best_value = -std::numeric_limits<double>::infinity();
    std::sort(candidates.begin(), candidates.end());
    for (double p : candidates) {
        const double v = objective(p);
        if (v > best_value) {  // strict: ties keep the smallest p
            best_value = v;
            best_p = p;
        }
    }

    const ClosedFormLeaderP closed = closed_form_pstar(params);

    StackelbergSolution solution;
    solution.pstar = best_p;
    solution.xstar = wealthy_best_response(params, best_p);
    solution.uD = utility_d_linear(params, best_p, solution.xstar);
    solution.uW = utility_w(params, best_p, solution.xstar);
    solution.regime = closed.regime;
    solution.closed_form_p = closed.p;
    solution.closed_form_numeric_gap = std::abs(best_p - closed.p);

    // The closed form assumes the follower's response is interior; certify
    // it only below the A = k threshold and when no clamping occurs at the
    // candidate itself.
    const double raw = wealthy_curve(params, closed.p);
    solution.closed_form_used = (closed.regime == AttractivenessRegime::Zero ||
                                 closed.regime == AttractivenessRegime::BelowK) &&
                                raw > 0.0 && raw < 1.0;
    return solution;
}

}  // namespace cryptoeq
