#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cryptoeq/cli_app.hpp"
#include "cryptoeq/config.hpp"

namespace {

struct CliFlags {
    std::string config_path;
    std::vector<std::string> sets;
    std::string format;
    std::string sweep;
    bool oracle = false;
    bool as_printed = false;
    int grid = 0;
    double tol = 0.0;
    int ssw_period = -1;
};

void add_common_options(CLI::App* sub, CliFlags& flags) {
    sub->add_option("--config", flags.config_path, "Parameter file (key = value lines)");
    sub->add_option("--set", flags.sets, "Override or supply key=value (repeatable)");
    sub->add_option("--format", flags.format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--oracle", flags.oracle, "Attach brute-force grid cross-checks");
    sub->add_option("--grid", flags.grid, "Solver grid size override")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol", flags.tol, "Oracle acceptance tolerance override")
        ->check(CLI::PositiveNumber);
}

cryptoeq::RunConfig build_config(const CliFlags& flags, cryptoeq::Command command) {
    cryptoeq::RunConfig config;
    if (!flags.config_path.empty()) {
        std::ifstream in(flags.config_path);
        if (!in) {
            throw cryptoeq::ConfigError("cannot open config file '" + flags.config_path + "'");
        }
        std::ostringstream text;
        text << in.rdbuf();
        config = cryptoeq::parse_config(text.str());
    }
    for (const auto& assignment : flags.sets) {
        cryptoeq::apply_override(config, assignment);
    }
    config.command = command;
    if (!flags.format.empty()) {
        config.format = flags.format == "csv" ? cryptoeq::OutputFormat::Csv
                                              : cryptoeq::OutputFormat::Json;
    }
    config.oracle = flags.oracle;
    config.variance_as_printed = flags.as_printed;
    if (flags.grid > 0) config.grid = flags.grid;
    if (flags.tol > 0.0) config.tol = flags.tol;
    if (flags.ssw_period >= 0) config.ssw_period = flags.ssw_period;
    if (!flags.sweep.empty()) config.sweep = cryptoeq::parse_sweep_axis(flags.sweep);
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equilibrium solvers for the crypto allocation game between a wealthy "
                 "group and a seizure-capable government"};
    app.require_subcommand(1);

    CliFlags flags;
    auto* nash = app.add_subcommand("nash", "All Nash equilibria plus condition diagnostics");
    auto* stackelberg = app.add_subcommand(
        "stackelberg", "Leader-follower optimum when the government commits first");
    auto* conditions =
        app.add_subcommand("conditions", "Uniqueness/existence sufficient conditions");
    auto* sweep = app.add_subcommand("sweep", "Re-solve across one parameter; CSV plot data");
    auto* price = app.add_subcommand("price", "Equilibrium trading price from aggregate demand");
    auto* speculator =
        app.add_subcommand("speculator", "Speculators' volatility choice and induced outcome");

    for (auto* sub : {nash, stackelberg, conditions, sweep, price, speculator}) {
        add_common_options(sub, flags);
    }
    sweep->add_option("--sweep", flags.sweep, "Axis as param:start:stop:steps")->required();
    price->add_option("--ssw-period", flags.ssw_period,
                      "Also report the laboratory fundamental value after this period")
        ->check(CLI::Range(0, 15));
    speculator->add_flag("--as-printed", flags.as_printed,
                         "Use the unsquared variance form instead of the exact one");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // command-line usage problems are configuration errors
    }

    cryptoeq::Command command = cryptoeq::Command::Nash;
    if (stackelberg->parsed()) command = cryptoeq::Command::Stackelberg;
    if (conditions->parsed()) command = cryptoeq::Command::Conditions;
    if (sweep->parsed()) command = cryptoeq::Command::Sweep;
    if (price->parsed()) command = cryptoeq::Command::Price;
    if (speculator->parsed()) command = cryptoeq::Command::Speculator;

    cryptoeq::RunConfig config;
    try {
        config = build_config(flags, command);
    } catch (const cryptoeq::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }
    return cryptoeq::run(config, std::cout, std::cerr);
}
