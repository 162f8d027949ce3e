#include "cryptoeq/cli_app.hpp"

#include <ostream>
#include <string>
#include <vector>

#include "cryptoeq/best_response.hpp"
#include "cryptoeq/json_io.hpp"
#include "cryptoeq/market.hpp"
#include "cryptoeq/nash.hpp"
#include "cryptoeq/oracle.hpp"
#include "cryptoeq/speculator.hpp"
#include "cryptoeq/stackelberg.hpp"

namespace cryptoeq {

namespace {

OutputFormat format_or(const RunConfig& config, OutputFormat fallback) {
    return config.format.value_or(fallback);
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) out << ',';
        out << cells[i];
    }
    out << '\n';
}

std::string bool_cell(bool v) { return v ? "true" : "false"; }

void emit_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

GridSpec oracle_grid(const RunConfig& config) {
    GridSpec grid;
    if (config.tol) grid.eps = *config.tol;
    grid.validate();
    return grid;
}

json oracle_nash_json(const ModelParams& params, const GridSpec& grid) {
    const auto points = grid_nash(params, grid);
    const auto clusters = cluster_grid_points(points, params, grid);
    json j{{"grid", json{{"n_p", grid.n_p}, {"n_x", grid.n_x}, {"eps", grid.eps}}},
           {"n_qualifying", points.size()},
           {"clusters", json::array()}};
    for (const auto& cluster : clusters) j["clusters"].push_back(to_json(cluster));
    return j;
}

int run_nash(const RunConfig& config, std::ostream& out) {
    const ModelParams params = config.model_params(/*need_dD2=*/true);
    SolverOptions opts;
    if (config.grid) opts.scan_intervals = *config.grid;
    NashDiagnostics diagnostics;
    const auto equilibria = find_nash(params, opts, &diagnostics);
    const auto conditions = conditions_report(params);

    if (format_or(config, OutputFormat::Json) == OutputFormat::Csv) {
        write_csv_row(out, {"p", "x", "uW", "uD", "kind", "residual", "verified_eps"});
        for (const auto& eq : equilibria) {
            write_csv_row(out, {format_full(eq.point.p), format_full(eq.point.x),
                                format_full(eq.point.uW), format_full(eq.point.uD),
                                to_string(eq.kind), format_full(eq.residual),
                                format_full(eq.verified_eps)});
        }
        return 0;
    }

    json doc{{"command", "nash"}, {"params", to_json(params)},
             {"conditions", to_json(conditions)}, {"equilibria", json::array()},
             {"suspected_tangencies", diagnostics.suspected_tangencies}};
    for (const auto& eq : equilibria) doc["equilibria"].push_back(to_json(eq));
    if (config.oracle) doc["oracle"] = oracle_nash_json(params, oracle_grid(config));
    emit_json(out, doc);
    return 0;
}

int run_conditions(const RunConfig& config, std::ostream& out) {
    const ModelParams params = config.model_params(/*need_dD2=*/true);
    const auto report = conditions_report(params);

    if (format_or(config, OutputFormat::Json) == OutputFormat::Csv) {
        write_csv_row(out, {"pc", "condpos", "condpos_as_printed", "case",
                            "existence_condition_holds", "uniqueness_guaranteed",
                            "existence_guaranteed"});
        write_csv_row(out, {format_full(report.pc), bool_cell(report.condpos_holds),
                            bool_cell(report.condpos_as_printed),
                            to_string(report.existence_case),
                            bool_cell(report.existence_condition_holds),
                            bool_cell(report.uniqueness_guaranteed),
                            bool_cell(report.existence_guaranteed)});
        return 0;
    }

    emit_json(out, json{{"command", "conditions"},
                        {"params", to_json(params)},
                        {"conditions", to_json(report)}});
    return 0;
}

int run_stackelberg(const RunConfig& config, std::ostream& out) {
    const ModelParams params = config.model_params(/*need_dD2=*/false);
    StackelbergOptions opts;
    if (config.grid) opts.coarse_intervals = *config.grid;
    const auto solution = solve_stackelberg(params, opts);

    if (format_or(config, OutputFormat::Json) == OutputFormat::Csv) {
        write_csv_row(out, {"pstar", "xstar", "uD", "uW", "regime", "closed_form_p",
                            "closed_form_used", "closed_form_numeric_gap"});
        write_csv_row(out, {format_full(solution.pstar), format_full(solution.xstar),
                            format_full(solution.uD), format_full(solution.uW),
                            to_string(solution.regime), format_full(solution.closed_form_p),
                            bool_cell(solution.closed_form_used),
                            format_full(solution.closed_form_numeric_gap)});
        return 0;
    }

    json doc{{"command", "stackelberg"},
             {"params", to_json(params)},
             {"attractiveness", attractiveness(params)},
             {"solution", to_json(solution)}};
    if (config.oracle) {
        const GridSpec grid = oracle_grid(config);
        doc["oracle"] = json{{"grid", json{{"n_p", grid.n_p}, {"n_x", grid.n_x}}},
                             {"point", to_json(grid_stackelberg(params, grid))}};
    }
    emit_json(out, doc);
    return 0;
}

int run_speculator(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const SpeculatorParams sp = config.speculator_params();
    const double vm = optimal_volatility(sp);
    const VarianceMode mode =
        config.variance_as_printed ? VarianceMode::AsPrinted : VarianceMode::Exact;
    const CryptoStats stats = crypto_stats(sp, vm, mode);
    const char* mode_name = mode == VarianceMode::Exact ? "exact" : "as_printed";

    if (stats.mY > 1.0) {
        err << "warning: derived m_Y = " << format_full(stats.mY)
            << " exceeds 1; downstream equilibrium analysis assumes m_Y <= 1\n";
    }

    if (format_or(config, OutputFormat::Json) == OutputFormat::Csv) {
        write_csv_row(out, {"vm", "m_Y", "sigma_Y2", "variance_mode"});
        write_csv_row(out, {format_full(vm), format_full(stats.mY), format_full(stats.sigY2),
                            mode_name});
        return 0;
    }

    json doc{{"command", "speculator"},
             {"speculator_params", json{{"a1", sp.a1}, {"a2", sp.a2}, {"q", sp.q},
                                        {"r1", sp.r1}, {"r2", sp.r2}}},
             {"optimal_volatility", vm},
             {"variance_mode", mode_name},
             {"crypto_stats", to_json(stats)}};
    if (stats.mY > 1.0) doc["warning"] = "derived m_Y exceeds 1";

    // Feed the derived outcome stats straight into a model parameter set
    // whenever the game parameters are also configured.
    if (config.has("k") && config.has("d2")) {
        ModelParams params;
        params.k = config.at("k");
        params.d2 = config.at("d2");
        params.dD2 = config.has("dD2") ? config.at("dD2") : 0.0;
        params.mY = stats.mY;
        params.sigY2 = stats.sigY2;
        try {
            params.validate();
            doc["model_params"] = to_json(params);
        } catch (const std::invalid_argument& e) {
            doc["model_params_error"] = e.what();
        }
    }
    emit_json(out, doc);
    return 0;
}

int run_price(const RunConfig& config, std::ostream& out) {
    const ModelParams params = config.model_params(/*need_dD2=*/true);
    const double wealth_total = config.at("wealth_total");
    const double units = config.at("units");
    const auto equilibria = find_nash(params);

    const auto market_at = [&](double x_star) {
        return MarketState{aggregate_demand(wealth_total, x_star), units, wealth_total, units};
    };

    if (format_or(config, OutputFormat::Json) == OutputFormat::Csv) {
        write_csv_row(out, {"p", "x", "demand_dollars", "price"});
        for (const auto& eq : equilibria) {
            const MarketState market = market_at(eq.point.x);
            write_csv_row(out, {format_full(eq.point.p), format_full(eq.point.x),
                                format_full(market.demand_dollars), format_full(market.price())});
        }
        return 0;
    }

    json doc{{"command", "price"},
             {"params", to_json(params)},
             {"wealth_total", wealth_total},
             {"units", units},
             {"liquidity_value", market_at(0.0).liquidity()},
             {"equilibria", json::array()}};
    for (const auto& eq : equilibria) {
        const MarketState market = market_at(eq.point.x);
        doc["equilibria"].push_back(json{{"p", eq.point.p},
                                         {"x", eq.point.x},
                                         {"demand_dollars", market.demand_dollars},
                                         {"price", market.price()}});
    }
    if (config.ssw_period) {
        doc["fundamental_value_ssw"] = json{{"period", *config.ssw_period},
                                            {"value", fundamental_value_ssw(*config.ssw_period)}};
    }
    emit_json(out, doc);
    return 0;
}

/// Sweep over p: sample both stationarity curves, the clamped best
/// response and the leader objective on the requested p grid.
int run_curve_sweep(const RunConfig& config, const SweepAxis& axis, std::ostream& out) {
    const ModelParams params = config.model_params(/*need_dD2=*/true);
    const bool csv = format_or(config, OutputFormat::Csv) == OutputFormat::Csv;

    json rows = json::array();
    if (csv) write_csv_row(out, {"p", "x1", "x2", "xhat", "leader_objective"});
    for (int i = 0; i < axis.steps; ++i) {
        const double p =
            axis.start + (axis.stop - axis.start) * static_cast<double>(i) / (axis.steps - 1);
        const double x1 = government_curve(params, p);
        const double x2 = wealthy_curve(params, p);
        const double xhat = wealthy_best_response(params, p);
        const double objective = leader_objective(params, p);
        if (csv) {
            write_csv_row(out, {format_full(p), format_full(x1), format_full(x2),
                                format_full(xhat), format_full(objective)});
        } else {
            rows.push_back(json{{"p", p}, {"x1", x1}, {"x2", x2}, {"xhat", xhat},
                                {"leader_objective", objective}});
        }
    }
    if (!csv) emit_json(out, json{{"command", "sweep"}, {"axis", "p"}, {"rows", rows}});
    return 0;
}

int run_sweep(const RunConfig& config, std::ostream& out) {
    if (!config.sweep) throw ConfigError("sweep requires --sweep param:start:stop:steps");
    const SweepAxis& axis = *config.sweep;
    if (axis.param == "p") return run_curve_sweep(config, axis, out);

    struct Row {
        double value = 0.0;
        ConditionsReport conditions;
        std::vector<EquilibriumResult> equilibria;
    };
    std::vector<Row> rows;
    rows.reserve(static_cast<std::size_t>(axis.steps));

    SolverOptions opts;
    if (config.grid) opts.scan_intervals = *config.grid;

    std::size_t max_equilibria = 0;
    for (int i = 0; i < axis.steps; ++i) {
        const double value =
            axis.start + (axis.stop - axis.start) * static_cast<double>(i) / (axis.steps - 1);
        RunConfig point = config;
        apply_override(point, axis.param + "=" + format_full(value));
        const ModelParams params = point.model_params(/*need_dD2=*/true);

        Row row;
        row.value = value;
        row.conditions = conditions_report(params);
        row.equilibria = find_nash(params, opts);
        max_equilibria = std::max(max_equilibria, row.equilibria.size());
        rows.push_back(std::move(row));
    }

    if (format_or(config, OutputFormat::Csv) == OutputFormat::Csv) {
        std::vector<std::string> header{"value", "n_equilibria", "condpos",
                                        "existence_guaranteed"};
        for (std::size_t e = 1; e <= max_equilibria; ++e) {
            const std::string tag = "eq" + std::to_string(e);
            header.push_back(tag + "_p");
            header.push_back(tag + "_x");
            header.push_back(tag + "_uW");
            header.push_back(tag + "_uD");
        }
        write_csv_row(out, header);
        for (const auto& row : rows) {
            std::vector<std::string> cells{format_full(row.value),
                                           std::to_string(row.equilibria.size()),
                                           bool_cell(row.conditions.condpos_holds),
                                           bool_cell(row.conditions.existence_guaranteed)};
            for (std::size_t e = 0; e < max_equilibria; ++e) {
                if (e < row.equilibria.size()) {
                    const auto& eq = row.equilibria[e];
                    cells.push_back(format_full(eq.point.p));
                    cells.push_back(format_full(eq.point.x));
                    cells.push_back(format_full(eq.point.uW));
                    cells.push_back(format_full(eq.point.uD));
                } else {
                    cells.insert(cells.end(), 4, "");
                }
            }
            write_csv_row(out, cells);
        }
        return 0;
    }

    json doc{{"command", "sweep"}, {"axis", axis.param}, {"rows", json::array()}};
    for (const auto& row : rows) {
        json entry{{"value", row.value},
                   {"n_equilibria", row.equilibria.size()},
                   {"condpos", row.conditions.condpos_holds},
                   {"existence_guaranteed", row.conditions.existence_guaranteed},
                   {"equilibria", json::array()}};
        for (const auto& eq : row.equilibria) entry["equilibria"].push_back(to_json(eq));
        doc["rows"].push_back(entry);
    }
    emit_json(out, doc);
    return 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (!config.command) throw ConfigError("no command selected");
        if (config.sweep && *config.command != Command::Sweep) {
            throw ConfigError("--sweep is only valid with the sweep command");
        }
        switch (*config.command) {
            case Command::Nash: return run_nash(config, out);
            case Command::Conditions: return run_conditions(config, out);
            case Command::Stackelberg: return run_stackelberg(config, out);
            case Command::Speculator: return run_speculator(config, out, err);
            case Command::Price: return run_price(config, out);
            case Command::Sweep: return run_sweep(config, out);
        }
        throw ConfigError("unknown command");
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace cryptoeq
