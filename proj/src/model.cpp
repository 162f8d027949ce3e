#include "cryptoeq/model.hpp"

#include <cmath>

namespace cryptoeq {

namespace detail {

void check_unit_interval(double v, const char* name, const char* who) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument(std::string(who) + ": " + name +
                                    " must lie in [0,1], got " + std::to_string(v));
    }
}

}  // namespace detail

namespace {

void check_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string("ModelParams: ") + name + " must be finite");
    }
}

}  // namespace

void ModelParams::validate() const {
    check_finite(k, "k");
    check_finite(d2, "d2");
    check_finite(dD2, "dD2");
    check_finite(mY, "mY");
    check_finite(sigY2, "sigY2");
    check_finite(covYF, "covYF");
    detail::check_unit_interval(k, "k", "ModelParams");
    if (mY > 1.0 || mY < 0.0) {
        // mY > 1 breaks the existence analysis; reject loudly instead of clamping.
        throw std::invalid_argument("ModelParams: mY must lie in [0,1], got " +
                                    std::to_string(mY));
    }
    if (!(sigY2 > 0.0)) {
        throw std::invalid_argument("ModelParams: sigY2 must be positive, got " +
                                    std::to_string(sigY2));
    }
    if (d2 < 0.0) {
        throw std::invalid_argument("ModelParams: d2 must be nonnegative");
    }
    if (dD2 < 0.0) {
        throw std::invalid_argument("ModelParams: dD2 must be nonnegative");
    }
}

void ModelParams::require_zero_covariance(const std::string& who) const {
    if (covYF != 0.0) {
        throw std::invalid_argument(who + ": requires covYF == 0 (closed forms assume "
                                          "uncorrelated crypto and home outcomes)");
    }
}

HomeStats home_stats(const ModelParams& params, double p) {
    detail::check_unit_interval(p, "p", "home_stats");
    return HomeStats{1.0 - params.k * p, params.k * params.k * p * (1.0 - p)};
}

double utility_w(const ModelParams& params, double p, double x) {
    detail::check_unit_interval(p, "p", "utility_w");
    detail::check_unit_interval(x, "x", "utility_w");
    const HomeStats home = home_stats(params, p);
    const double mean = x * params.mY + (1.0 - x) * home.mF;
    const double variance = x * x * params.sigY2 + (1.0 - x) * (1.0 - x) * home.sigF2 +
                            2.0 * x * (1.0 - x) * params.covYF;
    return mean - params.d2 * variance;
}

double utility_d_linear(const ModelParams& params, double p, double x) {
    detail::check_unit_interval(p, "p", "utility_d_linear");
    detail::check_unit_interval(x, "x", "utility_d_linear");
    return (1.0 - x) * params.k * p;
}

double utility_d_risk_averse(const ModelParams& params, double p, double x) {
    return utility_d_linear(params, p, x) - params.dD2 * p * p;
}

double attractiveness(const ModelParams& params) {
    return 2.0 * params.d2 * params.sigY2 + 1.0 - params.mY;
}

}  // namespace cryptoeq
