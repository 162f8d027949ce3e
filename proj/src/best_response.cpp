#include "cryptoeq/best_response.hpp"

#include <algorithm>

namespace cryptoeq {

namespace {

void check_wealthy_preconditions(const ModelParams& params, const char* who) {
    if (!(params.d2 > 0.0)) {
        throw std::invalid_argument(std::string(who) +
                                    ": d2 must be positive (a risk-neutral wealthy group "
                                    "has no stationary allocation)");
    }
    params.require_zero_covariance(who);
}

}  // namespace

double government_curve(const ModelParams& params, double p) {
    detail::check_unit_interval(p, "p", "government_curve");
    if (!(params.k > 0.0)) {
        throw std::invalid_argument(
            "government_curve: k must be positive (with nothing to seize the "
            "government curve is undefined)");
    }
    return 1.0 - 2.0 * params.dD2 * p / params.k;
}

double wealthy_curve(const ModelParams& params, double p) {
    detail::check_unit_interval(p, "p", "wealthy_curve");
    check_wealthy_preconditions(params, "wealthy_curve");
    const double f = params.k * params.k * p * (1.0 - p);
    const double numerator = f + (params.mY - 1.0 + params.k * p) / (2.0 * params.d2);
    return numerator / (f + params.sigY2);  // denominator >= sigY2 > 0
}

double wealthy_best_response(const ModelParams& params, double p) {
    return std::clamp(wealthy_curve(params, p), 0.0, 1.0);
}

double wealthy_curve_slope_numerator(const ModelParams& params, double p) {
    detail::check_unit_interval(p, "p", "wealthy_curve_slope_numerator");
    check_wealthy_preconditions(params, "wealthy_curve_slope_numerator");
    const double k2 = params.k * params.k;
    const double c1 = (1.0 - params.mY) / (2.0 * params.d2);
    const double c2 = params.k / (2.0 * params.d2);
    const double c3 = params.sigY2;
    return c2 * k2 * p * p + c2 * c3 + (c1 + c3) * k2 * (1.0 - 2.0 * p);
}

CurveSamples sample_curve(const ModelParams& params, CurveKind kind, int n_points) {
    if (n_points < 2) {
        throw std::invalid_argument("sample_curve: need at least 2 points");
    }
    CurveSamples out;
    out.kind = kind;
    out.samples.reserve(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        const double p = static_cast<double>(i) / (n_points - 1);
        double value = 0.0;
        switch (kind) {
            case CurveKind::GovernmentStationarity: value = government_curve(params, p); break;
            case CurveKind::WealthyStationarity:    value = wealthy_curve(params, p); break;
            case CurveKind::WealthyClipped:         value = wealthy_best_response(params, p); break;
        }
        out.samples.push_back(CurvePoint{p, value});
    }
    return out;
}

}  // namespace cryptoeq
