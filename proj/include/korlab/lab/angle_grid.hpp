#pragma once

#include <cstdint>
#include <vector>

#include "korlab/lab/config.hpp"
#include "korlab/numerics/dyadic_angle.hpp"

namespace korlab::lab {

struct GridAngle {
    std::size_t index = 0;  // stratum index in [0, 2^q)
    DyadicAngle angle;
};

// Stratum i covers [i, i + 1) * 2 pi / 2^q. Its angle carries fine_depth - q pseudo-random low bits
// drawn from a generator seeded by (seed, i), so subsampling never changes a kept angle.
// A pure dyadic grid aliases N_n phi to 0 for every N_n = 2^(2^n) >= 2^q.
std::vector<GridAngle> angle_grid(const GridSpec& spec, std::uint64_t seed);

}  // namespace korlab::lab
