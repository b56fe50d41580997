#pragma once

#include <string>
#include <vector>

#include "korlab/lab/config.hpp"
#include "korlab/lab/csv.hpp"

namespace korlab::lab {

struct Assertion {
    std::string name;
    bool pass = false;
    double value = 0.0;   // the measured quantity the verdict rests on
    std::string detail;
};

struct ExperimentResult {
    CsvTable table;
    std::vector<Assertion> assertions;
    bool degenerate = false;  // input made the assertions vacuous (e.g. u = 0)

    bool passed() const;
    const Assertion* find(const std::string& name) const;
};

ExperimentResult exp_mean_bound(const ExperimentConfig& config);
ExperimentResult exp_lil_oscillation(const ExperimentConfig& config);
ExperimentResult exp_non_oscillation(const ExperimentConfig& config);
ExperimentResult exp_kernel_report(const ExperimentConfig& config);
ExperimentResult exp_decomposition_error(const ExperimentConfig& config);
ExperimentResult exp_korenblum_check(const ExperimentConfig& config);
ExperimentResult exp_radial_growth_profile(const ExperimentConfig& config);

// Dispatch by config.experiment (the CLI subcommand names).
ExperimentResult run_experiment(const ExperimentConfig& config);

// ln(2^k ln 2) = log log (1 / (1 - r_k)).
double loglog_checkpoint(int k);
// (log log x * log log log log x)^(1/2) at x = 1 / (1 - r_k); NaN where the fourth log is not positive.
double lil_normalizer(int k);
// Depth s* in (2^l, 2^(l+1)) with (1 - 2^-s*)^(N_l) = 1 - l^-a / 2, by bisection.
double r_star_depth(int l, double a);

}  // namespace korlab::lab
