#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "cryptoeq/json_io.hpp"
#include "cryptoeq/nash.hpp"
#include "test_support.hpp"

using json = nlohmann::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const std::string command = std::string(CRYPTOEQ_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    CliResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), n);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path scratch_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "cryptoeq_cli_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_remark_config() {
    const auto path = scratch_dir() / "remark.cfg";
    std::ofstream out(path);
    out << "# two-equilibria example\n"
        << "k = 0.7\n"
        << "d = 2\n"
        << "d_D = 0.355\n"
        << "m_Y = 0.8\n"
        << "sigma_Y2 = 0.1\n";
    return path.string();
}

}  // namespace

TEST_CASE("nash subcommand reproduces the worked example") {
    const std::string config = write_remark_config();
    const CliResult result = run_cli("nash --config " + config);
    REQUIRE(result.exit_code == 0);

    const json doc = json::parse(result.output);
    CHECK(doc["command"] == "nash");
    REQUIRE(doc["equilibria"].size() == 2);
    CHECK(std::abs(doc["equilibria"][0]["p"].get<double>() - 0.88) <= 0.01);
    CHECK(std::abs(doc["equilibria"][0]["x"].get<double>() - 0.68) <= 0.01);
    CHECK(std::abs(doc["equilibria"][1]["p"].get<double>() - 0.96) <= 0.01);
    CHECK(std::abs(doc["equilibria"][1]["x"].get<double>() - 0.65) <= 0.01);
    CHECK(doc["conditions"]["uniqueness_guaranteed"] == false);
}

TEST_CASE("conditions subcommand") {
    const std::string config = write_remark_config();
    const CliResult result = run_cli("conditions --config " + config);
    REQUIRE(result.exit_code == 0);
    const json doc = json::parse(result.output);
    CHECK(doc["conditions"]["condpos_holds"] == false);
    CHECK(doc["conditions"]["case"] == "b_pc_ge_1");
    CHECK(doc["conditions"]["existence_guaranteed"] == false);
    CHECK(doc["conditions"]["pc"].get<double>() ==
          doctest::Approx(2.7772267407260465).epsilon(1e-12));
}

TEST_CASE("set overrides beat the config file") {
    const std::string config = write_remark_config();
    const CliResult result =
        run_cli("stackelberg --config " + config + " --set m_Y=0.9 --set sigma_Y2=0.05");
    REQUIRE(result.exit_code == 0);
    const json doc = json::parse(result.output);
    CHECK(doc["params"]["m_Y"].get<double>() == 0.9);
    CHECK(doc["params"]["sigma_Y2"].get<double>() == 0.05);
}

TEST_CASE("exit codes distinguish config errors from solver preconditions") {
    const std::string config = write_remark_config();
    // Domain violation in the parameters: configuration error.
    CHECK(run_cli("nash --set k=1.5").exit_code == 2);
    // Missing required keys: configuration error.
    CHECK(run_cli("nash --set k=0.5").exit_code == 2);
    // Valid parameters that the solver refuses: precondition failure.
    CHECK(run_cli("nash --config " + config + " --set d_D=0").exit_code == 1);
    CHECK(run_cli("nash --config " + config + " --set cov_YF=0.1").exit_code == 1);
    // Unknown subcommand or flag: usage error.
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("nash --config /nonexistent/path.cfg").exit_code == 2);
}

TEST_CASE("identical invocations produce byte-identical output") {
    const std::string config = write_remark_config();
    for (const std::string args :
         {std::string("nash --config "), std::string("stackelberg --config "),
          std::string("conditions --config ")}) {
        const CliResult first = run_cli(args + config);
        const CliResult second = run_cli(args + config);
        CHECK(first.exit_code == 0);
        CHECK(first.output == second.output);
    }
}

TEST_CASE("price subcommand composes demand and supply") {
    const std::string config = write_remark_config();
    const CliResult result = run_cli("price --config " + config +
                                     " --set wealth_total=1e9 --set units=1e6 --ssw-period 5");
    REQUIRE(result.exit_code == 0);
    const json doc = json::parse(result.output);
    CHECK(doc["liquidity_value"].get<double>() == 1000.0);
    REQUIRE(doc["equilibria"].size() == 2);
    const double x0 = doc["equilibria"][0]["x"].get<double>();
    const double price0 = doc["equilibria"][0]["price"].get<double>();
    CHECK(price0 == doctest::Approx(1e9 * x0 / 1e6).epsilon(1e-12));
    CHECK(std::abs(price0 - 680.0) <= 10.0);
    CHECK(doc["fundamental_value_ssw"]["value"].get<double>() == 2.40);
}

TEST_CASE("speculator subcommand derives the outcome distribution") {
    const CliResult result =
        run_cli("speculator --set a1=1 --set a2=1 --set q=0.1 --set r1=0.1 --set r2=0.5");
    REQUIRE(result.exit_code == 0);
    const json doc = json::parse(result.output);
    CHECK(doc["optimal_volatility"].get<double>() == 0.5);
    CHECK(doc["crypto_stats"]["m_Y"].get<double>() == doctest::Approx(0.78).epsilon(1e-12));
    CHECK(doc["crypto_stats"]["sigma_Y2"].get<double>() ==
          doctest::Approx(0.0081).epsilon(1e-12));
    CHECK(doc["variance_mode"] == "exact");

    const CliResult printed = run_cli(
        "speculator --as-printed --set a1=1 --set a2=1 --set q=0.1 --set r1=0.1 --set r2=0.5");
    const json printed_doc = json::parse(printed.output);
    CHECK(printed_doc["crypto_stats"]["sigma_Y2"].get<double>() ==
          doctest::Approx(0.027).epsilon(1e-12));

    SUBCASE("feeds the model when game parameters are present") {
        const CliResult fed = run_cli(
            "speculator --set a1=1 --set a2=1 --set q=0.1 --set r1=0.1 --set r2=0.5"
            " --set k=0.7 --set d=2 --set d_D=0.355");
        const json fed_doc = json::parse(fed.output);
        REQUIRE(fed_doc.contains("model_params"));
        CHECK(fed_doc["model_params"]["m_Y"].get<double>() ==
              doctest::Approx(0.78).epsilon(1e-12));
        CHECK(fed_doc["model_params"]["sigma_Y2"].get<double>() ==
              doctest::Approx(0.0081).epsilon(1e-12));
    }

    SUBCASE("a derived mean above one is reported, and blocks the model feed") {
        const CliResult hot = run_cli(
            "speculator --set a1=1 --set a2=1 --set q=0.9 --set r1=0.5 --set r2=0.51"
            " --set k=0.7 --set d=2");
        REQUIRE(hot.exit_code == 0);
        const json hot_doc = json::parse(hot.output);
        CHECK(hot_doc["crypto_stats"]["m_Y"].get<double>() > 1.0);
        CHECK(hot_doc.contains("warning"));
        CHECK(hot_doc.contains("model_params_error"));
        CHECK_FALSE(hot_doc.contains("model_params"));
    }
}

TEST_CASE("curve sweep emits plot columns for both curves") {
    const std::string config = write_remark_config();
    const CliResult result =
        run_cli("sweep --config " + config + " --sweep p:0:1:257 --format csv");
    REQUIRE(result.exit_code == 0);

    std::istringstream lines(result.output);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "p,x1,x2,xhat,leader_objective");
    int rows = 0;
    std::string line;
    while (std::getline(lines, line)) {
        if (!line.empty()) ++rows;
    }
    CHECK(rows == 257);

    SUBCASE("wealthy curve column is monotone when the uniqueness condition holds") {
        const CliResult mono = run_cli(
            "sweep --set k=0.5 --set d=1 --set d_D=1 --set m_Y=1 --set sigma_Y2=0.2"
            " --sweep p:0:1:129 --format csv");
        REQUIRE(mono.exit_code == 0);
        std::istringstream mono_lines(mono.output);
        std::string skip;
        std::getline(mono_lines, skip);
        double prev = -1e9;
        while (std::getline(mono_lines, skip)) {
            if (skip.empty()) continue;
            // third column is x2
            const auto c1 = skip.find(',');
            const auto c2 = skip.find(',', c1 + 1);
            const auto c3 = skip.find(',', c2 + 1);
            const double x2 = std::stod(skip.substr(c2 + 1, c3 - c2 - 1));
            CHECK(x2 >= prev - 1e-12);
            prev = x2;
        }
    }
}

TEST_CASE("parameter sweep matches the library and the golden file") {
    const std::string config = write_remark_config();
    const CliResult result =
        run_cli("sweep --config " + config + " --sweep k:0.6:0.8:5 --format csv");
    REQUIRE(result.exit_code == 0);

    // Golden copy guards the exact byte layout of the CSV schema.
    const std::filesystem::path golden_path =
        std::filesystem::path(CRYPTOEQ_GOLDEN_DIR) / "sweep_k_remark.csv";
    REQUIRE(std::filesystem::exists(golden_path));
    std::ifstream golden_file(golden_path, std::ios::binary);
    std::stringstream golden;
    golden << golden_file.rdbuf();
    CHECK(result.output == golden.str());

    // And the numbers must agree with a direct solve at each swept value.
    std::istringstream lines(result.output);
    std::string header;
    std::getline(lines, header);
    CHECK(header.rfind("value,n_equilibria,condpos,existence_guaranteed,eq1_p", 0) == 0);
    std::string line;
    int row_index = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        cryptoeq::ModelParams params = testsupport::remark_params();
        params.k = 0.6 + (0.8 - 0.6) * static_cast<double>(row_index) / 4;
        const auto equilibria = cryptoeq::find_nash(params);
        const std::string count_cell = line.substr(line.find(',') + 1);
        CHECK(std::stoul(count_cell) == equilibria.size());
        ++row_index;
    }
    CHECK(row_index == 5);
}

TEST_CASE("json sweeps are available for single-value tooling") {
    const std::string config = write_remark_config();
    const CliResult result =
        run_cli("sweep --config " + config + " --sweep k:0.65:0.75:3 --format json");
    REQUIRE(result.exit_code == 0);
    const json doc = json::parse(result.output);
    CHECK(doc["axis"] == "k");
    REQUIRE(doc["rows"].size() == 3);
    CHECK(doc["rows"][1]["value"].get<double>() == doctest::Approx(0.7).epsilon(1e-12));
}
