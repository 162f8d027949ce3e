#include "cryptoeq/json_io.hpp"

#include <cstdio>

namespace cryptoeq {

std::string to_string(ExistenceCase c) {
    switch (c) {
        case ExistenceCase::PcBelowOne: return "a_pc_lt_1";
        case ExistenceCase::PcAtLeastOne: return "b_pc_ge_1";
    }
    return "unknown";
}

std::string to_string(EquilibriumKind k) {
    switch (k) {
        case EquilibriumKind::Nash: return "nash";
        case EquilibriumKind::LeaderFollower: return "leader_follower";
    }
    return "unknown";
}

std::string to_string(AttractivenessRegime r) {
    switch (r) {
        case AttractivenessRegime::Zero: return "a_zero";
        case AttractivenessRegime::BelowK: return "a_below_k";
        case AttractivenessRegime::EqualsK: return "a_equals_k";
        case AttractivenessRegime::KToTwoK: return "a_between_k_2k";
        case AttractivenessRegime::AboveTwoK: return "a_above_2k";
    }
    return "unknown";
}

std::string format_full(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

json to_json(const ModelParams& params) {
    return json{{"k", params.k},     {"d2", params.d2},       {"dD2", params.dD2},
                {"m_Y", params.mY},  {"sigma_Y2", params.sigY2},
                {"cov_YF", params.covYF}};
}

json to_json(const StrategyPoint& point) {
    return json{{"p", point.p}, {"x", point.x}, {"uW", point.uW}, {"uD", point.uD}};
}

json to_json(const ConditionsReport& report) {
    return json{{"pc", report.pc},
                {"condpos_holds", report.condpos_holds},
                {"condpos_as_printed", report.condpos_as_printed},
                {"case", to_string(report.existence_case)},
                {"existence_condition_holds", report.existence_condition_holds},
                {"uniqueness_guaranteed", report.uniqueness_guaranteed},
                {"existence_guaranteed", report.existence_guaranteed}};
}

json to_json(const EquilibriumResult& result) {
    json j = to_json(result.point);
    j["kind"] = to_string(result.kind);
    j["residual"] = result.residual;
    j["verified_eps"] = result.verified_eps;
    return j;
}

json to_json(const StackelbergSolution& solution) {
    return json{{"pstar", solution.pstar},
                {"xstar", solution.xstar},
                {"uD", solution.uD},
                {"uW", solution.uW},
                {"regime", to_string(solution.regime)},
                {"closed_form_p", solution.closed_form_p},
                {"closed_form_used", solution.closed_form_used},
                {"closed_form_numeric_gap", solution.closed_form_numeric_gap}};
}

json to_json(const CryptoStats& stats) {
    return json{{"m_Y", stats.mY}, {"sigma_Y2", stats.sigY2}};
}

json to_json(const GridCluster& cluster) {
    return json{{"representative", to_json(cluster.representative)},
                {"size", cluster.size},
                {"p_lo", cluster.p_lo},
                {"p_hi", cluster.p_hi},
                {"x_lo", cluster.x_lo},
                {"x_hi", cluster.x_hi}};
}

}  // namespace cryptoeq
