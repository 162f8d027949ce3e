#pragma once

/// Demand-to-price conversion for a fixed-supply asset with no intrinsic
/// value, plus the liquidity-value and laboratory fundamental-value
/// reference quantities.
namespace cryptoeq {

/// Demand and supply snapshot used by the pricing command.
struct MarketState {
    double demand_dollars = 0.0;    ///< aggregate dollars chasing the asset
    double units_outstanding = 0.0; ///< fixed supply, > 0 for pricing
    double total_cash = 0.0;        ///< all cash available to trade
    double total_shares = 0.0;      ///< all units, > 0 for liquidity value

    double price() const;      ///< demand_dollars / units_outstanding
    double liquidity() const;  ///< total_cash / total_shares
};

/// Price per unit when the whole demand is spread over the fixed supply:
/// demand_dollars / units_outstanding.  Zero units is an error.
double equilibrium_price(double demand_dollars, double units_outstanding);

/// Dollars the wealthy devote to the crypto: wealth_total * x_star.
double aggregate_demand(double wealth_total, double x_star);

/// Ratio of all cash to all units; the price anchor when no fundamental
/// value exists.  Zero shares is an error.
double liquidity_value(double total_cash, double total_shares);

/// Fundamental value after period k of the classic 15-period laboratory
/// asset paying an expected 24 cents per period: 3.60 - 0.24*k dollars.
/// Computed in integer cents so period 0 gives exactly 3.60 and period
/// 15 exactly 0.  Periods outside [0,15] are rejected.
double fundamental_value_ssw(int period_k);

}  // namespace cryptoeq
