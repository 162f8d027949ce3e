#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "cryptoeq/json_io.hpp"
#include "cryptoeq/nash.hpp"
#include "test_support.hpp"

using namespace cryptoeq;
using testsupport::Rng;

TEST_CASE("serialized doubles survive a parse round trip bit-exactly") {
    Rng rng(81);
    for (int i = 0; i < 200; ++i) {
        json doc;
        const double awkward[] = {rng.uniform(-1.0, 1.0),
                                  rng.uniform(0.0, 1.0) * 1e300,
                                  rng.uniform(0.0, 1.0) * 1e-300,
                                  0.1 + 0.2,
                                  1.0 / 3.0,
                                  testsupport::kRemarkRoot1P};
        doc["values"] = awkward;
        const json back = json::parse(doc.dump());
        for (int j = 0; j < 6; ++j) {
            CHECK(back["values"][j].get<double>() == awkward[j]);
        }
    }
}

TEST_CASE("result documents round trip every numeric field") {
    const ModelParams params = testsupport::remark_params();
    const auto equilibria = find_nash(params);
    REQUIRE_FALSE(equilibria.empty());

    const json doc = to_json(equilibria[0]);
    const json back = json::parse(doc.dump(2));
    CHECK(back["p"].get<double>() == equilibria[0].point.p);
    CHECK(back["x"].get<double>() == equilibria[0].point.x);
    CHECK(back["uW"].get<double>() == equilibria[0].point.uW);
    CHECK(back["uD"].get<double>() == equilibria[0].point.uD);
    CHECK(back["residual"].get<double>() == equilibria[0].residual);
    CHECK(back["kind"] == "nash");

    const json params_back = json::parse(to_json(params).dump());
    CHECK(params_back["dD2"].get<double>() == params.dD2);
}

TEST_CASE("fixed-width formatting parses back to the same double") {
    Rng rng(82);
    for (int i = 0; i < 1000; ++i) {
        const double v = rng.uniform(-1e6, 1e6) * std::pow(10.0, rng.engine() % 20);
        const std::string text = format_full(v);
        CHECK(std::strtod(text.c_str(), nullptr) == v);
    }
    CHECK(format_full(0.0) == "0");
}

TEST_CASE("enum labels") {
    CHECK(to_string(ExistenceCase::PcBelowOne) == "a_pc_lt_1");
    CHECK(to_string(ExistenceCase::PcAtLeastOne) == "b_pc_ge_1");
    CHECK(to_string(EquilibriumKind::Nash) == "nash");
    CHECK(to_string(AttractivenessRegime::KToTwoK) == "a_between_k_2k");
}
