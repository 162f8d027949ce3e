#include "cryptoeq/config.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <vector>

namespace cryptoeq {

namespace {

struct KeyInfo {
    const char* canonical;  ///< storage key after ingestion
    bool squared;           ///< value is squared on ingestion (d, d_D)
};

/// Accepted config keys.  d/d2 and d_D/dD2 are alternative spellings of
/// the same parameter and conflict within one file.
const std::map<std::string, KeyInfo>& key_table() {
    static const std::map<std::string, KeyInfo> table = {
        {"k", {"k", false}},
        {"d", {"d2", true}},
        {"d2", {"d2", false}},
        {"d_D", {"dD2", true}},
        {"dD2", {"dD2", false}},
        {"m_Y", {"m_Y", false}},
        {"sigma_Y2", {"sigma_Y2", false}},
        {"cov_YF", {"cov_YF", false}},
        {"a1", {"a1", false}},
        {"a2", {"a2", false}},
        {"q", {"q", false}},
        {"r1", {"r1", false}},
        {"r2", {"r2", false}},
        {"wealth_total", {"wealth_total", false}},
        {"units", {"units", false}},
    };
    return table;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::string where(int line) {
    return line > 0 ? " (line " + std::to_string(line) + ")" : "";
}

double parse_number(const std::string& text, const std::string& key, int line) {
    const std::string t = trim(text);
    double value = 0.0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || t.empty()) {
        throw ConfigError("malformed number '" + t + "' for key '" + key + "'" + where(line));
    }
    if (!std::isfinite(value)) {
        throw ConfigError("non-finite value for key '" + key + "'" + where(line));
    }
    return value;
}

/// Per-key domain checks applied at ingestion, before any command logic.
void check_domain(const std::string& key, double value, int line) {
    const auto fail = [&](const std::string& what) {
        throw ConfigError("key '" + key + "' " + what + ", got " + std::to_string(value) +
                          where(line));
    };
    if (key == "k" || key == "m_Y" || key == "q") {
        if (!(value >= 0.0 && value <= 1.0)) fail("must lie in [0,1]");
    } else if (key == "sigma_Y2") {
        if (!(value > 0.0)) fail("must be positive");
    } else if (key == "d" || key == "d2" || key == "d_D" || key == "dD2") {
        if (!(value >= 0.0)) fail("must be nonnegative");
    } else if (key == "a1" || key == "a2" || key == "r1" || key == "r2") {
        if (!(value > 0.0)) fail("must be positive");
    } else if (key == "wealth_total") {
        if (!(value >= 0.0)) fail("must be nonnegative");
    } else if (key == "units") {
        if (!(value > 0.0)) fail("must be positive");
    }
    // cov_YF: any finite value.
}

/// Validates and stores one assignment; `sources` tracks which raw
/// spelling set each canonical key, for conflict reporting.
void ingest(RunConfig& config, std::map<std::string, std::string>& sources,
            const std::string& raw_key, const std::string& raw_value, int line,
            bool override_existing) {
    const auto it = key_table().find(raw_key);
    if (it == key_table().end()) {
        throw ConfigError("unknown key '" + raw_key + "'" + where(line));
    }
    double value = parse_number(raw_value, raw_key, line);
    check_domain(raw_key, value, line);
    if (it->second.squared) value *= value;

    const std::string canonical = it->second.canonical;
    const auto prev = sources.find(canonical);
    if (prev != sources.end() && !override_existing) {
        throw ConfigError("keys '" + prev->second + "' and '" + raw_key +
                          "' both set the same parameter" + where(line));
    }
    sources[canonical] = raw_key;
    config.values[canonical] = value;
}

}  // namespace

bool RunConfig::has(const std::string& canonical_key) const {
    return values.count(canonical_key) > 0;
}

double RunConfig::at(const std::string& canonical_key) const {
    const auto it = values.find(canonical_key);
    if (it == values.end()) {
        throw ConfigError("missing required key '" + canonical_key + "'");
    }
    return it->second;
}

ModelParams RunConfig::model_params(bool need_dD2) const {
    std::vector<std::string> missing;
    for (const char* key : {"k", "d2", "m_Y", "sigma_Y2"}) {
        if (!has(key)) missing.emplace_back(key);
    }
    if (need_dD2 && !has("dD2")) missing.emplace_back("d_D (or dD2)");
    if (!missing.empty()) {
        std::string list;
        for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
        throw ConfigError("missing required key(s): " + list);
    }
    ModelParams params;
    params.k = at("k");
    params.d2 = at("d2");
    params.dD2 = has("dD2") ? at("dD2") : 0.0;
    params.mY = at("m_Y");
    params.sigY2 = at("sigma_Y2");
    params.covYF = has("cov_YF") ? at("cov_YF") : 0.0;
    params.validate();
    return params;
}

SpeculatorParams RunConfig::speculator_params() const {
    std::vector<std::string> missing;
    for (const char* key : {"a1", "a2", "q", "r1", "r2"}) {
        if (!has(key)) missing.emplace_back(key);
    }
    if (!missing.empty()) {
        std::string list;
        for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
        throw ConfigError("missing required key(s): " + list);
    }
    SpeculatorParams sp;
    sp.a1 = at("a1");
    sp.a2 = at("a2");
    sp.q = at("q");
    sp.r1 = at("r1");
    sp.r2 = at("r2");
    try {
        sp.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());  // bad relation between config values
    }
    return sp;
}

RunConfig parse_config(const std::string& text) {
    RunConfig config;
    std::map<std::string, std::string> sources;

    std::istringstream stream(text);
    std::string raw_line;
    int line = 0;
    while (std::getline(stream, raw_line)) {
        ++line;
        const auto hash = raw_line.find('#');
        if (hash != std::string::npos) raw_line.erase(hash);
        const std::string content = trim(raw_line);
        if (content.empty()) continue;

        const auto eq = content.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("expected 'key = value'" + where(line) + ": '" + content + "'");
        }
        const std::string key = trim(content.substr(0, eq));
        const std::string value = trim(content.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("empty key" + where(line));
        }
        ingest(config, sources, key, value, line, /*override_existing=*/false);
    }
    return config;
}

void apply_override(RunConfig& config, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) {
        throw ConfigError("--set expects key=value, got '" + assignment + "'");
    }
    std::map<std::string, std::string> sources;  // overrides never conflict
    ingest(config, sources, trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)),
           /*line=*/0, /*override_existing=*/true);
}

SweepAxis parse_sweep_axis(const std::string& spec) {
    std::vector<std::string> parts;
    std::string::size_type begin = 0;
    while (true) {
        const auto colon = spec.find(':', begin);
        parts.push_back(spec.substr(begin, colon - begin));
        if (colon == std::string::npos) break;
        begin = colon + 1;
    }
    if (parts.size() != 4) {
        throw ConfigError("--sweep expects param:start:stop:steps, got '" + spec + "'");
    }
    static const std::set<std::string> sweepable = {"k",   "d",        "d2", "d_D",
                                                    "dD2", "m_Y",      "sigma_Y2", "p"};
    SweepAxis axis;
    axis.param = trim(parts[0]);
    if (sweepable.count(axis.param) == 0) {
        throw ConfigError("parameter '" + axis.param + "' is not sweepable");
    }
    axis.start = parse_number(parts[1], "sweep start", 0);
    axis.stop = parse_number(parts[2], "sweep stop", 0);
    const double steps = parse_number(parts[3], "sweep steps", 0);
    if (!(steps >= 2.0) || steps != std::floor(steps) || steps > 1e7) {
        throw ConfigError("sweep steps must be an integer >= 2");
    }
    axis.steps = static_cast<int>(steps);
    return axis;
}

}  // namespace cryptoeq
