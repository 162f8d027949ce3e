// Acceptance suite: one checked criterion per line, nonzero exit if any
// fails.  Tolerances are pinned here, not configurable.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "cryptoeq/best_response.hpp"
#include "cryptoeq/market.hpp"
#include "cryptoeq/nash.hpp"
#include "cryptoeq/oracle.hpp"
#include "cryptoeq/speculator.hpp"
#include "cryptoeq/stackelberg.hpp"

using namespace cryptoeq;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(engine);
    }
};

ModelParams remark_params() { return ModelParams{0.7, 4.0, 0.126025, 0.8, 0.1, 0.0}; }

ModelParams random_params(Rng& rng) {
    ModelParams params;
    params.k = rng.uniform(0.05, 1.0);
    params.d2 = rng.uniform(0.1, 8.0);
    params.dD2 = rng.uniform(0.02, 2.0);
    params.mY = rng.uniform(0.0, 1.0);
    params.sigY2 = rng.uniform(0.01, 0.6);
    return params;
}

// 1. Two-equilibria reproduction near (0.88, 0.68) and (0.96, 0.65).
void criterion_two_equilibria() {
    const auto start = Clock::now();
    const auto equilibria = find_nash(remark_params());
    const double elapsed = seconds_since(start);

    bool ok = equilibria.size() == 2;
    if (ok) {
        ok = std::abs(equilibria[0].point.p - 0.88) <= 0.01 &&
             std::abs(equilibria[0].point.x - 0.68) <= 0.01 &&
             std::abs(equilibria[1].point.p - 0.96) <= 0.01 &&
             std::abs(equilibria[1].point.x - 0.65) <= 0.01;
    }
    ok = ok && elapsed < 1.0;

    char detail[160];
    if (equilibria.size() == 2) {
        std::snprintf(detail, sizeof(detail),
                      "(%.4f, %.4f), (%.4f, %.4f) in %.3fs", equilibria[0].point.p,
                      equilibria[0].point.x, equilibria[1].point.p, equilibria[1].point.x,
                      elapsed);
    } else {
        std::snprintf(detail, sizeof(detail), "%zu equilibria", equilibria.size());
    }
    report(1, "two-equilibria reproduction", ok, detail);
}

// 2. Slope numerator nonnegative on [0, 1/2] across 1000 draws.
void criterion_monotone_lower_half() {
    const auto start = Clock::now();
    Rng rng(1002);
    bool ok = true;
    double worst = 0.0;
    for (int i = 0; i < 1000 && ok; ++i) {
        const ModelParams params = random_params(rng);
        for (int j = 0; j < 100; ++j) {
            const double p = 0.5 * static_cast<double>(j) / 99;
            const double numerator = wealthy_curve_slope_numerator(params, p);
            worst = std::min(worst, numerator);
            if (numerator < -1e-12) {
                ok = false;
                break;
            }
        }
    }
    const double elapsed = seconds_since(start);
    ok = ok && elapsed < 5.0;
    char detail[120];
    std::snprintf(detail, sizeof(detail), "min numerator %.3e in %.2fs", worst, elapsed);
    report(2, "wealthy curve nondecreasing on [0,1/2]", ok, detail);
}

// 3. At most one equilibrium under the uniqueness condition (1000 draws).
// Draws satisfy the commonly quoted inequality (1+2d2)(1-mY) <= k as well
// as the proof-backed A <= k that condpos_holds implements; the latter is
// what actually forces the wealthy curve monotone.
void criterion_uniqueness() {
    const auto start = Clock::now();
    Rng rng(1003);
    bool ok = true;
    int accepted = 0;
    std::size_t max_count = 0;
    while (accepted < 1000) {
        ModelParams params = random_params(rng);
        const double room = std::min(params.k - 2.0 * params.d2 * params.sigY2,
                                     params.k / (1.0 + 2.0 * params.d2));
        if (room <= 0.0) continue;
        params.mY = 1.0 - rng.uniform(0.0, room);
        const ConditionsReport report = conditions_report(params);
        if (!report.condpos_holds || !report.condpos_as_printed) continue;
        ++accepted;
        const std::size_t count = find_nash(params).size();
        max_count = std::max(max_count, count);
        if (count > 1) {
            ok = false;
            break;
        }
    }
    const double elapsed = seconds_since(start);
    ok = ok && elapsed < 30.0;
    char detail[120];
    std::snprintf(detail, sizeof(detail), "max count %zu over 1000 draws in %.2fs", max_count,
                  elapsed);
    report(3, "uniqueness under the sufficient condition", ok, detail);
}

// 4. At least one equilibrium under the existence conditions (1000 draws).
void criterion_existence() {
    const auto start = Clock::now();
    Rng rng(1004);
    bool ok = true;
    int accepted = 0;
    int attempts = 0;
    while (accepted < 1000 && attempts < 2000000) {
        ++attempts;
        const ModelParams params = random_params(rng);
        if (!conditions_report(params).existence_guaranteed) continue;
        ++accepted;
        const auto equilibria = find_nash(params);
        bool found_in_square = false;
        for (const auto& eq : equilibria) {
            if (eq.point.p >= 0.0 && eq.point.p <= 1.0 && eq.point.x >= 0.0 &&
                eq.point.x <= 1.0) {
                found_in_square = true;
            }
        }
        if (!found_in_square) {
            ok = false;
            break;
        }
    }
    const double elapsed = seconds_since(start);
    ok = ok && accepted == 1000 && elapsed < 30.0;
    char detail[120];
    std::snprintf(detail, sizeof(detail), "%d qualifying draws in %.2fs", accepted, elapsed);
    report(4, "existence under the sufficient conditions", ok, detail);
}

// 5. Closed-form leader optimum: interior agreement and boundary regimes.
void criterion_closed_form() {
    Rng rng(1005);
    bool ok = true;
    std::string why;

    int accepted = 0;
    double worst_gap = 0.0;
    while (accepted < 1000) {
        ModelParams params;
        params.k = rng.uniform(0.1, 1.0);
        params.d2 = rng.uniform(0.2, 6.0);
        params.dD2 = 0.1;
        params.sigY2 = rng.uniform(0.01, 0.5);
        const double a = rng.uniform(0.0, params.k);
        const double mY = 1.0 + 2.0 * params.d2 * params.sigY2 - a;
        if (!(mY >= 0.0 && mY <= 1.0)) continue;
        params.mY = mY;
        const auto cf = closed_form_pstar(params);
        if (cf.regime != AttractivenessRegime::BelowK) continue;
        const double response = wealthy_curve(params, cf.p);
        if (response < 0.02 || response > 0.98) continue;
        ++accepted;
        const auto solution = solve_stackelberg(params);
        worst_gap = std::max(worst_gap, solution.closed_form_numeric_gap);
        if (!solution.closed_form_used || solution.closed_form_numeric_gap > 1e-6) {
            ok = false;
            why = "interior draw disagreed";
            break;
        }
    }

    // Boundary regimes, exact values.
    if (ok) {
        const ModelParams zero_a{0.5, 0.0, 0.1, 1.0, 0.1, 0.0};
        if (closed_form_pstar(zero_a).p != 0.0) {
            ok = false;
            why = "A=0 did not give 0";
        }
    }
    if (ok) {
        const ModelParams at_k{0.5, 1.0, 0.1, 0.75, 0.125, 0.0};  // A = k exactly
        if (closed_form_pstar(at_k).p != 0.5) {
            ok = false;
            why = "A=k did not give 1/2";
        }
        for (double bump : {1e-9, -1e-9}) {
            const ModelParams near_k{0.5, 1.0, 0.1, 0.75 - bump, 0.125, 0.0};
            if (std::abs(closed_form_pstar(near_k).p - 0.5) > 1e-4) {
                ok = false;
                why = "A=k boundary not continuous";
            }
        }
    }
    if (ok) {
        const ModelParams beyond{0.3, 4.0, 0.1, 0.8, 0.1, 0.0};  // A = 1.0 >= 2k
        const ModelParams at_2k{0.25, 1.0, 0.1, 0.75, 0.125, 0.0};  // A = 0.5 = 2k exactly
        if (closed_form_pstar(beyond).p != 1.0 || solve_stackelberg(beyond).pstar != 1.0 ||
            closed_form_pstar(at_2k).p != 1.0) {
            ok = false;
            why = "A>=2k did not give 1";
        }
    }

    char detail[120];
    std::snprintf(detail, sizeof(detail), "worst interior gap %.2e%s%s", worst_gap,
                  why.empty() ? "" : "; ", why.c_str());
    report(5, "closed-form leader optimum", ok, detail);
}

// 6. Deviation-scan verification and grid-enumeration coverage.
void criterion_oracle_equivalence() {
    const ModelParams params = remark_params();
    const auto equilibria = find_nash(params);
    bool ok = equilibria.size() == 2;
    std::string why = ok ? "" : "wrong equilibrium count";

    if (ok) {
        for (const auto& eq : equilibria) {
            if (max_unilateral_gain(params, eq.point, 10001) > 1e-6) {
                ok = false;
                why = "deviation gain above 1e-6";
            }
        }
    }
    // Randomized spot check on other parameter draws.
    if (ok) {
        Rng rng(1006);
        for (int i = 0; i < 100 && ok; ++i) {
            const ModelParams draw = random_params(rng);
            for (const auto& eq : find_nash(draw)) {
                if (max_unilateral_gain(draw, eq.point, 10001) > 1e-6) {
                    ok = false;
                    why = "random-draw equilibrium failed the scan";
                }
            }
        }
    }
    if (ok) {
        const GridSpec grid;  // 400 x 400, eps 2e-3
        const auto points = grid_nash(params, grid);
        const double cell = 1.0 / (grid.n_p - 1);
        for (const auto& eq : equilibria) {
            double nearest = 1e9;
            for (const auto& pt : points) {
                nearest = std::min(
                    nearest, std::max(std::abs(pt.p - eq.point.p), std::abs(pt.x - eq.point.x)));
            }
            if (nearest > cell + 1e-12) {
                ok = false;
                why = "grid enumeration missed an equilibrium";
            }
        }
    }
    report(6, "deviation-scan and grid-enumeration equivalence", ok, why);
}

// 7. Speculator optimum and exact variance.
void criterion_speculator() {
    Rng rng(1007);
    bool ok = true;
    std::string why;
    for (int i = 0; i < 1000 && ok; ++i) {
        const double r1 = rng.uniform(0.01, 1.0);
        const SpeculatorParams sp{rng.uniform(0.1, 5.0), rng.uniform(0.1, 5.0),
                                  rng.uniform(0.0, 1.0), r1, r1 + rng.uniform(0.01, 1.0)};
        const double vm = optimal_volatility(sp);
        const double um = sp.a1 * vm - sp.a2 * vm * vm;
        for (int j = 0; j < 1000; ++j) {
            const double v = rng.uniform(0.0, 10.0);
            if (um < sp.a1 * v - sp.a2 * v * v) {
                ok = false;
                why = "random volatility beat the vertex";
                break;
            }
        }
        const double test_vm = rng.uniform(0.0, 2.0);
        const CryptoStats stats = crypto_stats(sp, test_vm);
        const double up = 1.0 + sp.r1 * test_vm;
        const double down = 1.0 - sp.r2 * test_vm;
        const double mean = sp.q * up + (1.0 - sp.q) * down;
        const double brute = sp.q * up * up + (1.0 - sp.q) * down * down - mean * mean;
        if (std::abs(stats.sigY2 - brute) > 1e-12) {
            ok = false;
            why = "variance mismatch vs enumeration";
        }
    }
    report(7, "speculator optimum and exact variance", ok, why);
}

// 8. Pricing identities, exact at the schedule endpoints.
void criterion_pricing() {
    Rng rng(1008);
    bool ok = true;
    std::string why;
    for (int i = 0; i < 1000 && ok; ++i) {
        const double demand = rng.uniform(0.0, 1e12);
        const double units = std::ldexp(1.0, static_cast<int>(rng.engine() % 40));
        if (equilibrium_price(demand, units) * units != demand) {
            ok = false;
            why = "power-of-two quotient not exact";
        }
    }
    if (ok && !(fundamental_value_ssw(0) == 3.60 && fundamental_value_ssw(15) == 0.0)) {
        ok = false;
        why = "schedule endpoints not exact";
    }
    report(8, "pricing identities", ok, why);
}

// 9. Byte-identical CLI output across repeated runs of the full suite.
std::string run_cli_capture(const std::string& args, int* exit_code) {
    const std::string command = std::string(CRYPTOEQ_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        *exit_code = -1;
        return output;
    }
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        output.append(buffer.data(), n);
    }
    const int status = pclose(pipe);
    *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return output;
}

void criterion_determinism() {
    const auto dir = std::filesystem::temp_directory_path() / "cryptoeq_acceptance";
    std::filesystem::create_directories(dir);
    const auto config_path = dir / "remark.cfg";
    {
        std::ofstream out(config_path);
        out << "k = 0.7\nd = 2\nd_D = 0.355\nm_Y = 0.8\nsigma_Y2 = 0.1\n";
    }
    const std::string base = "--config " + config_path.string();
    const std::vector<std::string> suite = {
        "nash " + base,
        "nash --oracle " + base,
        "nash --format csv " + base,
        "conditions " + base,
        "conditions --format csv " + base,
        "stackelberg " + base,
        "stackelberg --oracle " + base,
        "stackelberg --format csv " + base,
        "sweep " + base + " --sweep k:0.6:0.8:5 --format csv",
        "sweep " + base + " --sweep k:0.6:0.8:5 --format json",
        "sweep " + base + " --sweep p:0:1:129 --format csv",
        "price " + base + " --set wealth_total=1e9 --set units=1e6 --ssw-period 3",
        "price --format csv " + base + " --set wealth_total=1e9 --set units=1e6",
        "speculator --set a1=1 --set a2=1 --set q=0.1 --set r1=0.1 --set r2=0.5",
        "speculator --as-printed --set a1=1 --set a2=1 --set q=0.1 --set r1=0.1 --set r2=0.5",
    };
    bool ok = true;
    std::string why;
    for (const auto& args : suite) {
        int code1 = 0;
        int code2 = 0;
        const std::string first = run_cli_capture(args, &code1);
        const std::string second = run_cli_capture(args, &code2);
        if (code1 != 0 || code2 != 0) {
            ok = false;
            why = "command failed: " + args;
            break;
        }
        if (first != second || first.empty()) {
            ok = false;
            why = "output differed for: " + args;
            break;
        }
    }
    report(9, "byte-identical CLI output", ok, why);
}

}  // namespace

int main() {
    const auto start = Clock::now();
    criterion_two_equilibria();
    criterion_monotone_lower_half();
    criterion_uniqueness();
    criterion_existence();
    criterion_closed_form();
    criterion_oracle_equivalence();
    criterion_speculator();
    criterion_pricing();
    criterion_determinism();
    std::printf("%s: %d criterion failure(s), %.1fs total\n",
                g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED", g_failures,
                seconds_since(start));
    return g_failures == 0 ? 0 : 1;
}
