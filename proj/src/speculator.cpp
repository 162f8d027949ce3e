#include "cryptoeq/speculator.hpp"

#include <cmath>
#include <string>

namespace cryptoeq {

void SpeculatorParams::validate() const {
    const auto bad = [](const std::string& what) {
        throw std::invalid_argument("SpeculatorParams: " + what);
    };
    if (!(std::isfinite(a1) && std::isfinite(a2) && std::isfinite(q) && std::isfinite(r1) &&
          std::isfinite(r2))) {
        bad("all fields must be finite");
    }
    if (!(a1 > 0.0)) bad("a1 must be positive, got " + std::to_string(a1));
    if (!(a2 > 0.0)) bad("a2 must be positive, got " + std::to_string(a2));
    if (!(q >= 0.0 && q <= 1.0)) bad("q must lie in [0,1], got " + std::to_string(q));
    if (!(r1 > 0.0)) bad("r1 must be positive, got " + std::to_string(r1));
    if (!(r2 > r1)) {
        bad("r2 must exceed r1 (losses run ahead of gains), got r1=" + std::to_string(r1) +
            " r2=" + std::to_string(r2));
    }
}

double optimal_volatility(const SpeculatorParams& sp) {
    sp.validate();
    return sp.a1 / (2.0 * sp.a2);
}

CryptoStats crypto_stats(const SpeculatorParams& sp, double vm, VarianceMode mode) {
    sp.validate();
    if (!(std::isfinite(vm) && vm >= 0.0)) {
        throw std::invalid_argument("crypto_stats: vm must be a nonnegative volatility");
    }
    CryptoStats stats;
    stats.mY = sp.q * (1.0 + sp.r1 * vm) + (1.0 - sp.q) * (1.0 - sp.r2 * vm);
    const double spread = (sp.r1 + sp.r2) * vm;  // gap between the two outcomes
    stats.sigY2 = mode == VarianceMode::Exact ? sp.q * (1.0 - sp.q) * spread * spread
                                              : sp.q * (1.0 - sp.q) * spread;
    return stats;
}

}  // namespace cryptoeq
