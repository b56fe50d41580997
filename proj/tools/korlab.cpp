#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "korlab/errors.hpp"
#include "korlab/lab/experiments.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitError = 1;
constexpr int kExitAssertion = 2;

struct Overrides {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> angles;
    std::optional<int> kmax;
};

int run(const std::string& name, const Overrides& o) {
    using namespace korlab::lab;
    ExperimentConfig cfg = o.config.empty() ? default_config(name) : load_config(o.config, name);
    if (o.seed) cfg.seed = *o.seed;
    if (o.angles) cfg.grid.count = *o.angles;
    if (o.kmax) cfg.k_max = *o.kmax;
    if (!o.out.empty()) cfg.output = o.out;
    validate(cfg);

    const auto result = run_experiment(cfg);
    if (cfg.output.empty() || cfg.output == "-") {
        result.table.write(std::cout);
    } else {
        std::ofstream f(cfg.output, std::ios::binary);
        if (!f) throw korlab::ConfigError("cannot write " + cfg.output);
        result.table.write(f);
    }
    for (const auto& a : result.assertions) {
        std::cerr << (a.pass ? "PASS " : "FAIL ") << name << ": " << a.name << " = " << format_double(a.value);
        if (!a.detail.empty()) std::cerr << " (" << a.detail << ")";
        std::cerr << '\n';
    }
    if (result.degenerate) std::cerr << "note: degenerate input\n";
    return result.passed() ? kExitPass : kExitAssertion;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Radial-average oscillation experiments for harmonic functions on the disk"};
    app.require_subcommand(1);
    Overrides o;
    std::string chosen;
    for (const auto& name : korlab::lab::experiment_names()) {
        auto* sub = app.add_subcommand(name, "run the " + name + " experiment");
        sub->add_option("--config", o.config, "JSON config file (defaults are used when omitted)");
        sub->add_option("--out", o.out, "CSV output path ('-' for stdout)");
        sub->add_option("--seed", o.seed, "override the grid seed");
        sub->add_option("--angles", o.angles, "override the number of grid angles");
        sub->add_option("--kmax", o.kmax, "override the largest scale k");
        sub->callback([&chosen, name] { chosen = name; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitError;
    }
    try {
        return run(chosen, o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
}
