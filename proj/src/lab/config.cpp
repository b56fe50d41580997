#include "korlab/lab/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "korlab/errors.hpp"
#include "korlab/series/counterexample.hpp"

namespace korlab::lab {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::initializer_list<const char*> keys, const std::string& where) {
    for (const auto& [key, _] : obj.items())
        if (std::find_if(keys.begin(), keys.end(), [&](const char* k) { return key == k; }) == keys.end())
            throw ConfigError("unknown key '" + key + "' in " + where);
}

template <class T>
void read(const json& obj, const char* key, T& out) {
    if (!obj.contains(key)) return;
    try {
        out = obj.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
    }
}

const json& section(const json& obj, const char* key) {
    static const json empty = json::object();
    if (!obj.contains(key)) return empty;
    if (!obj.at(key).is_object()) throw ConfigError(std::string("'") + key + "' must be an object");
    return obj.at(key);
}

}  // namespace

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names{"mean-bound",          "lil-oscillation", "non-oscillation",
                                                "kernel-report",       "decomposition-error",
                                                "korenblum-check",     "growth-profile"};
    return names;
}

ExperimentConfig default_config(const std::string& experiment) {
    if (std::find(experiment_names().begin(), experiment_names().end(), experiment) == experiment_names().end())
        throw ConfigError("unknown experiment '" + experiment + "'");
    ExperimentConfig c;
    c.experiment = experiment;
    if (experiment == "non-oscillation") {
        c.series.kind = "counterexample";
        c.k_min = 4;
    } else if (experiment == "growth-profile") {
        c.grid.q = 10;
        c.grid.count = 1024;
    } else if (experiment == "decomposition-error") {
        c.grid.count = 16;
    } else if (experiment == "korenblum-check") {
        c.grid.count = 64;
        c.k_min = 1;
    }
    return c;
}

ExperimentConfig parse_config(const std::string& json_text, const std::string& experiment) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config root must be an object");
    reject_unknown(root,
                   {"experiment", "series", "k_min", "k_max", "grid", "seed", "tolerances", "exceptional",
                    "profile_a", "partition_k_max", "n_max", "trace_level", "expect", "output"},
                   "config");
    std::string name = experiment;
    if (root.contains("experiment")) {
        read(root, "experiment", name);
        if (!experiment.empty() && name != experiment)
            throw ConfigError("config is for '" + name + "', not '" + experiment + "'");
    }
    ExperimentConfig c = default_config(name);

    const auto& s = section(root, "series");
    reject_unknown(s, {"kind", "terms", "base", "n_max", "start", "value"}, "series");
    read(s, "kind", c.series.kind);
    read(s, "terms", c.series.terms);
    read(s, "base", c.series.base);
    read(s, "n_max", c.series.n_max);
    read(s, "start", c.series.start);
    read(s, "value", c.series.value);

    read(root, "k_min", c.k_min);
    read(root, "k_max", c.k_max);

    const auto& g = section(root, "grid");
    reject_unknown(g, {"q", "count", "fine_depth"}, "grid");
    read(g, "q", c.grid.q);
    read(g, "count", c.grid.count);
    read(g, "fine_depth", c.grid.fine_depth);

    read(root, "seed", c.seed);

    const auto& t = section(root, "tolerances");
    reject_unknown(t,
                   {"block_tol", "mean_ratio_factor", "sign_change_fraction", "ratio_window_lo", "ratio_window_hi",
                    "gamma_stability", "min_angles", "reconstruction", "growth_factor", "estimate_factor",
                    "gamma3_window", "korenblum_factor", "korenblum_growth"},
                   "tolerances");
    read(t, "block_tol", c.tol.block_tol);
    read(t, "mean_ratio_factor", c.tol.mean_ratio_factor);
    read(t, "sign_change_fraction", c.tol.sign_change_fraction);
    read(t, "ratio_window_lo", c.tol.ratio_window_lo);
    read(t, "ratio_window_hi", c.tol.ratio_window_hi);
    read(t, "gamma_stability", c.tol.gamma_stability);
    read(t, "min_angles", c.tol.min_angles);
    read(t, "reconstruction", c.tol.reconstruction);
    read(t, "growth_factor", c.tol.growth_factor);
    read(t, "estimate_factor", c.tol.estimate_factor);
    read(t, "gamma3_window", c.tol.gamma3_window);
    read(t, "korenblum_factor", c.tol.korenblum_factor);
    read(t, "korenblum_growth", c.tol.korenblum_growth);

    const auto& e = section(root, "exceptional");
    reject_unknown(e, {"a", "m", "n_cap"}, "exceptional");
    read(e, "a", c.exceptional.a);
    read(e, "m", c.exceptional.m);
    read(e, "n_cap", c.n_cap);

    read(root, "profile_a", c.profile_a);
    read(root, "partition_k_max", c.partition_k_max);
    read(root, "n_max", c.n_max);
    read(root, "trace_level", c.trace_level);
    read(root, "expect", c.expect);
    read(root, "output", c.output);
    validate(c);
    return c;
}

ExperimentConfig load_config(const std::string& path, const std::string& experiment) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), experiment);
}

void validate(const ExperimentConfig& c) {
    if (c.k_min < 1 || c.k_max > kMaxScale || c.k_min > c.k_max)
        throw ConfigError("scales must satisfy 1 <= k_min <= k_max <= 6");
    if (c.partition_k_max < 1 || c.partition_k_max > kMaxPartitionScale)
        throw ConfigError("partition_k_max must lie in 1..4");
    if (c.n_max < 1 || c.n_max > 6) throw ConfigError("n_max must lie in 1..6");
    if (c.trace_level > 4) throw ConfigError("trace_level must be <= 4");
    if (c.grid.q < 1 || c.grid.q > 20) throw ConfigError("grid.q must lie in 1..20");
    if (c.grid.fine_depth < c.grid.q) throw ConfigError("grid.fine_depth must be >= grid.q");
    if (c.grid.count < 1 || c.grid.count > (std::size_t{1} << c.grid.q))
        throw ConfigError("grid.count must lie in 1..2^q");
    if (!(c.exceptional.a > 2.0)) throw ConfigError("exceptional.a must exceed 2");
    if (c.exceptional.m < 1) throw ConfigError("exceptional.m must be >= 1");
    if (c.n_cap < static_cast<unsigned>(c.exceptional.m) || c.n_cap > 20) throw ConfigError("n_cap must lie in m..20");
    if (!(c.profile_a >= 0.0 && c.profile_a < 0.5)) throw ConfigError("profile_a must lie in [0, 1/2)");
    if (c.expect != "consistent" && c.expect != "inconsistent")
        throw ConfigError("expect must be 'consistent' or 'inconsistent'");
    make_series(c.series);  // kind and parameters
}

namespace {

int terms_or(const SeriesSpec& spec, int fallback) { return spec.terms > 0 ? spec.terms : fallback; }

}  // namespace

std::unique_ptr<DiskFunction> make_series(const SeriesSpec& spec) {
    try {
        if (spec.kind == "u2") return std::make_unique<SuperLacunarySeries>(2, terms_or(spec, 8));
        if (spec.kind == "uA") return std::make_unique<SuperLacunarySeries>(spec.base, terms_or(spec, 8));
        if (spec.kind == "counterexample") return std::make_unique<Counterexample>(spec.n_max, spec.start);
        if (spec.kind == "zero") return std::make_unique<ZeroFunction>();
        if (spec.kind == "constant") return std::make_unique<ConstantFunction>(spec.value);
        if (spec.kind == "violating") return std::make_unique<LacunarySeries>(*make_lacunary(spec));
    } catch (const InvalidArgument& e) {
        throw ConfigError(std::string("bad series parameters: ") + e.what());
    }
    throw ConfigError("unknown series kind '" + spec.kind + "'");
}

std::optional<LacunarySeries> make_lacunary(const SeriesSpec& spec) {
    if (spec.kind == "u2") return SuperLacunarySeries(2, terms_or(spec, 8)).as_lacunary();
    if (spec.kind == "uA") return SuperLacunarySeries(spec.base, terms_or(spec, 8)).as_lacunary();
    if (spec.kind == "zero") return LacunarySeries();
    if (spec.kind == "violating") {
        // c = k at n = 2^k: S(N) ~ (log2 N)^2 / 2
        const int count = terms_or(spec, 128);
        if (count > 4096) throw ConfigError("violating series takes at most 4096 terms");
        std::vector<LacunarySeries::Term> terms;
        for (int k = 1; k <= count; ++k)
            terms.push_back({BigInt(1) << k, {static_cast<double>(k), 0.0}});
        return LacunarySeries(std::move(terms), 2.0, TailModel{1.0 / std::log(2.0)});
    }
    return std::nullopt;
}

}  // namespace korlab::lab
