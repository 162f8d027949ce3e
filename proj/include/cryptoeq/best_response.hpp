#pragma once

#include <vector>

#include "cryptoeq/model.hpp"

/// Stationarity and best-response curves of both players, plus the
/// monotonicity diagnostic for the wealthy's curve.
namespace cryptoeq {

/// The x at which a given p is stationary for the government's
/// risk-averse utility:  1 - 2*dD2*p/k.  Affine and strictly decreasing
/// in p when dD2 > 0.  Unclamped; may be negative.  Throws if k == 0
/// (degenerate game: nothing to seize).
double government_curve(const ModelParams& params, double p);

/// Stationary crypto allocation of the wealthy at seizure probability p:
///   [k^2 p(1-p) + (mY - 1 + k p)/(2 d2)] / [k^2 p(1-p) + sigY2].
/// Unclamped; callers that need the true best response clamp via
/// wealthy_best_response.  Requires d2 > 0 (risk-neutral wealthy has no
/// stationary point) and covYF == 0.
double wealthy_curve(const ModelParams& params, double p);

/// The wealthy's true best response: wealthy_curve clamped to [0,1].
/// Valid because utility_w is concave in x.
double wealthy_best_response(const ModelParams& params, double p);

/// Numerator polynomial of the derivative of wealthy_curve; shares its
/// sign with that derivative (the denominator is a square).  With
/// c1 = (1-mY)/(2 d2), c2 = k/(2 d2), c3 = sigY2:
///   c2 k^2 p^2 + c2 c3 + (c1 + c3) k^2 (1 - 2p).
/// Nonnegative for p in [0, 1/2] for all valid parameters.
double wealthy_curve_slope_numerator(const ModelParams& params, double p);

enum class CurveKind {
    GovernmentStationarity,
    WealthyStationarity,
    WealthyClipped,
};

struct CurvePoint {
    double p = 0.0;
    double value = 0.0;
};

/// Uniform samples of one curve over [0,1]; p strictly increasing.
/// The default 2048 points are dense enough to separate crossings a
/// few hundredths apart in p.
struct CurveSamples {
    CurveKind kind = CurveKind::GovernmentStationarity;
    std::vector<CurvePoint> samples;
};

CurveSamples sample_curve(const ModelParams& params, CurveKind kind, int n_points = 2048);

}  // namespace cryptoeq
