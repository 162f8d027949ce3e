#pragma once

#include <stdexcept>

/// Speculators' volatility choice and the crypto outcome distribution it
/// induces for the wealthy.
namespace cryptoeq {

/// Inputs of the speculators' quadratic utility U_S = a1*V - a2*V^2 and
/// of the two-point outcome faced by the wealthy: with probability q
/// their unit wealth becomes 1 + r1*V, otherwise 1 - r2*V.
struct SpeculatorParams {
    double a1 = 0.0;  ///< linear utility coefficient, > 0
    double a2 = 0.0;  ///< quadratic penalty coefficient, > 0
    double q = 0.0;   ///< probability the wealthy profit, in [0,1]
    double r1 = 0.0;  ///< gain sensitivity per unit volatility, > 0
    double r2 = 0.0;  ///< loss sensitivity per unit volatility, > r1

    void validate() const;  ///< throws std::invalid_argument on violation
};

/// The unique maximizer of a1*V - a2*V^2 over V >= 0:  a1/(2*a2).
double optimal_volatility(const SpeculatorParams& sp);

/// How to compute the variance of the two-point outcome.
/// Exact is the true Bernoulli variance q(1-q)*((r1+r2)*Vm)^2.
/// AsPrinted reproduces the commonly quoted q(1-q)*(r1+r2)*Vm, which
/// drops the square and is kept only for reproducibility.
enum class VarianceMode { Exact, AsPrinted };

struct CryptoStats {
    double mY = 0.0;
    double sigY2 = 0.0;
};

/// Mean and variance of the wealthy's crypto outcome at volatility vm:
///   mY = q*(1 + r1*vm) + (1-q)*(1 - r2*vm).
/// mY can exceed 1 when q*r1 > (1-q)*r2; callers should treat that as a
/// warning since downstream equilibrium analysis assumes mY <= 1.
CryptoStats crypto_stats(const SpeculatorParams& sp, double vm,
                         VarianceMode mode = VarianceMode::Exact);

}  // namespace cryptoeq
