#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "korlab/series/disk_function.hpp"
#include "korlab/series/lacunary.hpp"

namespace korlab::lab {

inline constexpr int kMaxScale = 6;
inline constexpr unsigned kMaxPartitionScale = 4;

// Which disk function an experiment runs on.
struct SeriesSpec {
    std::string kind = "u2";  // u2 | uA | counterexample | violating | zero | constant
    int terms = 0;            // u2 / uA: highest index (default 8); violating: term count (default 128)
    int base = 2;             // uA
    int n_max = 12;           // counterexample
    int start = 2;            // counterexample
    double value = 1.0;       // constant
};

struct GridSpec {
    unsigned q = 12;              // 2^q strata
    std::size_t count = 4096;     // angles kept (evenly subsampled strata)
    unsigned fine_depth = 4160;   // depth of the seeded low-order bits; = q for a pure dyadic grid
};

// E_n = {cos N_n phi > 1 - n^-a}, F_m built from E_n (n >= m) and E_{n,m} (n < m).
struct ExceptionalSetParams {
    double a = 3.0;
    int m = 2;
};

struct Tolerances {
    double block_tol = 1e-8;
    double mean_ratio_factor = 4.0;
    double sign_change_fraction = 0.5;
    double ratio_window_lo = 0.01;
    double ratio_window_hi = 100.0;
    double gamma_stability = 2.0;
    std::size_t min_angles = 100;
    double reconstruction = 1e-6;
    double growth_factor = 2.0;
    double estimate_factor = 4.0;
    double gamma3_window = 0.1;
    double korenblum_factor = 100.0;
    double korenblum_growth = 1.5;
};

struct ExperimentConfig {
    std::string experiment;
    SeriesSpec series;
    int k_min = 2;
    int k_max = 6;
    GridSpec grid;
    std::uint64_t seed = 20240917;
    Tolerances tol;
    ExceptionalSetParams exceptional;
    unsigned n_cap = 12;
    double profile_a = 0.25;         // growth-profile exponent, < 1/2
    unsigned partition_k_max = 3;
    unsigned n_max = 6;              // assembled martingale levels
    unsigned trace_level = 3;        // boundary trace premeasure depth 2^level
    std::string expect = "consistent";  // korenblum-check: expected verdict
    std::string output;
};

const std::vector<std::string>& experiment_names();

// Defaults tuned per experiment (series, grid size).
ExperimentConfig default_config(const std::string& experiment);
// Missing keys keep the experiment defaults; unknown keys and bad values throw ConfigError.
ExperimentConfig load_config(const std::string& path, const std::string& experiment);
ExperimentConfig parse_config(const std::string& json_text, const std::string& experiment);
void validate(const ExperimentConfig& config);

std::unique_ptr<DiskFunction> make_series(const SeriesSpec& spec);
// Lacunary form for the Korenblum partial sums; nullopt for kinds without one.
std::optional<LacunarySeries> make_lacunary(const SeriesSpec& spec);

}  // namespace korlab::lab
