#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "cryptoeq/nash.hpp"
#include "cryptoeq/oracle.hpp"
#include "cryptoeq/speculator.hpp"
#include "cryptoeq/stackelberg.hpp"

/// JSON views of the result types.  Field order is fixed (insertion
/// order) and doubles serialize with shortest round-trip formatting, so
/// identical inputs give byte-identical documents.
namespace cryptoeq {

using json = nlohmann::ordered_json;

json to_json(const ModelParams& params);
json to_json(const StrategyPoint& point);
json to_json(const ConditionsReport& report);
json to_json(const EquilibriumResult& result);
json to_json(const StackelbergSolution& solution);
json to_json(const CryptoStats& stats);
json to_json(const GridCluster& cluster);

std::string to_string(ExistenceCase c);
std::string to_string(EquilibriumKind k);
std::string to_string(AttractivenessRegime r);

/// Fixed 17-significant-digit formatting used for CSV cells; parses back
/// to the identical double.
std::string format_full(double v);

}  // namespace cryptoeq
