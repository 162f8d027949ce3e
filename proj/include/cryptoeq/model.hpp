#pragma once

#include <stdexcept>
#include <string>

/// Core parameter types and the mean-variance utility formulas of the
/// two-player allocation game: a wealthy group splits its assets between
/// a seizable home currency and a cryptocurrency, while a government
/// chooses the probability of seizing a fraction of home-currency wealth.
namespace cryptoeq {

/// Parameter vector shared by every solver.
///
/// Risk aversions are stored squared (d2 = d^2, dD2 = d_D^2) because every
/// formula consumes the squares; the CLI accepts plain d / d_D and squares
/// them on ingestion.
struct ModelParams {
    double k = 0.0;      ///< fraction of home-currency wealth seized on the bad event, in [0,1]
    double d2 = 0.0;     ///< wealthy risk-aversion coefficient (squared), >= 0
    double dD2 = 0.0;    ///< government risk-aversion coefficient (squared), >= 0
    double mY = 1.0;     ///< expected crypto outcome per unit invested, in [0,1]
    double sigY2 = 0.0;  ///< variance of the crypto outcome, > 0
    double covYF = 0.0;  ///< covariance between crypto and home outcomes

    /// Throws std::invalid_argument if any field is outside its domain.
    /// mY > 1 is rejected rather than clamped: the existence results
    /// downstream assume mY <= 1.
    void validate() const;

    /// Closed-form solvers are derived under zero correlation; they call
    /// this and refuse covYF != 0.
    void require_zero_covariance(const std::string& who) const;
};

/// Mean and variance of one unit held in the home currency when the
/// seizure probability is p.
struct HomeStats {
    double mF = 0.0;     ///< 1 - k*p
    double sigF2 = 0.0;  ///< k^2 * p * (1-p)
};

/// A (p, x) strategy pair with both players' utilities attached.
struct StrategyPoint {
    double p = 0.0;   ///< government seizure probability
    double x = 0.0;   ///< wealthy crypto allocation fraction
    double uW = 0.0;  ///< wealthy utility at (p, x)
    double uD = 0.0;  ///< government utility at (p, x)
};

/// Home-currency outcome statistics at seizure probability p.
/// Rejects p outside [0,1].
HomeStats home_stats(const ModelParams& params, double p);

/// Mean-variance utility of the wealthy with fraction x in crypto:
///   x*mY + (1-x)*mF - d2*[x^2*sigY2 + (1-x)^2*sigF2 + 2x(1-x)*covYF].
double utility_w(const ModelParams& params, double p, double x);

/// Government utility proportional to the seized amount: (1-x)*k*p.
double utility_d_linear(const ModelParams& params, double p, double x);

/// Government utility with risk aversion: (1-x)*k*p - dD2*p^2.
double utility_d_risk_averse(const ModelParams& params, double p, double x);

/// Combined risk-plus-expected-loss measure of the cryptocurrency,
///   A = 2*d2*sigY2 + 1 - mY.
/// Higher values make the crypto less attractive to the wealthy;
/// nonnegative whenever mY <= 1.
double attractiveness(const ModelParams& params);

namespace detail {
/// Shared domain check for probabilities / fractions.
void check_unit_interval(double v, const char* name, const char* who);
}  // namespace detail

}  // namespace cryptoeq
