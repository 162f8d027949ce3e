#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "cryptoeq/model.hpp"
#include "cryptoeq/speculator.hpp"

/// Run configuration: plain key=value parameter files, command-line
/// overrides and the assembly of validated parameter structs.
namespace cryptoeq {

/// Configuration / usage problem; the CLI maps this to exit code 2.
/// Solver precondition failures throw std::invalid_argument and map to
/// exit code 1.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Command { Nash, Stackelberg, Conditions, Sweep, Price, Speculator };

enum class OutputFormat { Json, Csv };

struct SweepAxis {
    std::string param;  ///< k, d, d2, d_D, dD2, m_Y, sigma_Y2, or p (curve sampling)
    double start = 0.0;
    double stop = 0.0;
    int steps = 0;      ///< >= 2
};

struct RunConfig {
    /// Values keyed by canonical name (d and d_D are squared into d2 and
    /// dD2 at ingestion).
    std::map<std::string, double> values;

    std::optional<Command> command;
    std::optional<SweepAxis> sweep;
    std::optional<OutputFormat> format;  ///< default: JSON for solves, CSV for sweeps
    bool oracle = false;                 ///< attach brute-force cross-checks
    bool variance_as_printed = false;    ///< speculator variance mode
    std::optional<int> grid;             ///< overrides scan / coarse / oracle grid size
    std::optional<double> tol;           ///< overrides the oracle eps
    std::optional<int> ssw_period;       ///< adds the laboratory fundamental value to `price`

    bool has(const std::string& canonical_key) const;
    double at(const std::string& canonical_key) const;  ///< throws ConfigError when missing

    /// Builds ModelParams from k, d2, m_Y, sigma_Y2 (+ optional cov_YF);
    /// dD2 is required only when need_dD2 is set (Nash/conditions paths).
    ModelParams model_params(bool need_dD2) const;

    SpeculatorParams speculator_params() const;
};

/// Parses a key=value document: one pair per line, `#` starts a comment,
/// blank lines ignored.  Keys: k, d, d2, d_D, dD2, m_Y, sigma_Y2, cov_YF,
/// a1, a2, q, r1, r2, wealth_total, units.  Unknown keys, malformed
/// numbers, domain violations and d/d2 (or d_D/dD2) conflicts are
/// ConfigErrors naming the key and line.
RunConfig parse_config(const std::string& text);

/// Applies one `key=value` override (the --set flag); replaces any value
/// the file provided for the same canonical key.
void apply_override(RunConfig& config, const std::string& assignment);

/// Parses `param:start:stop:steps`.
SweepAxis parse_sweep_axis(const std::string& spec);

}  // namespace cryptoeq
