#include "cryptoeq/market.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cryptoeq {

double MarketState::price() const { return equilibrium_price(demand_dollars, units_outstanding); }

double MarketState::liquidity() const { return liquidity_value(total_cash, total_shares); }

double equilibrium_price(double demand_dollars, double units_outstanding) {
    if (!(std::isfinite(demand_dollars) && demand_dollars >= 0.0)) {
        throw std::invalid_argument("equilibrium_price: demand must be nonnegative");
    }
    if (!(units_outstanding > 0.0)) {
        throw std::invalid_argument("equilibrium_price: units outstanding must be positive");
    }
    return demand_dollars / units_outstanding;
}

double aggregate_demand(double wealth_total, double x_star) {
    if (!(std::isfinite(wealth_total) && wealth_total >= 0.0)) {
        throw std::invalid_argument("aggregate_demand: wealth_total must be nonnegative");
    }
    if (!(x_star >= 0.0 && x_star <= 1.0)) {
        throw std::invalid_argument("aggregate_demand: x_star must lie in [0,1]");
    }
    return wealth_total * x_star;
}

double liquidity_value(double total_cash, double total_shares) {
    if (!(std::isfinite(total_cash) && total_cash >= 0.0)) {
        throw std::invalid_argument("liquidity_value: total cash must be nonnegative");
    }
    if (!(total_shares > 0.0)) {
        throw std::invalid_argument("liquidity_value: total shares must be positive");
    }
    return total_cash / total_shares;
}

double fundamental_value_ssw(int period_k) {
    if (period_k < 0 || period_k > 15) {
        throw std::invalid_argument("fundamental_value_ssw: period must lie in [0,15], got " +
                                    std::to_string(period_k));
    }
    // Integer cents, one final division: periods 0 and 15 come out exactly
    // 3.60 and 0.
    return static_cast<double>(360 - 24 * period_k) / 100.0;
}

}  // namespace cryptoeq
