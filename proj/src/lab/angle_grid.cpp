#include "korlab/lab/angle_grid.hpp"

#include <random>

namespace korlab::lab {

std::vector<GridAngle> angle_grid(const GridSpec& spec, std::uint64_t seed) {
    const std::size_t strata = std::size_t{1} << spec.q;
    const unsigned low = spec.fine_depth - spec.q;
    std::vector<GridAngle> out;
    out.reserve(spec.count);
    for (std::size_t k = 0; k < spec.count; ++k) {
        const std::size_t i = k * strata / spec.count;
        BigInt m = BigInt(i) << low;
        if (low > 0) {
            std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                              static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(std::uint64_t{i} >> 32)};
            std::mt19937_64 gen(seq);
            BigInt bits = 0;
            for (unsigned got = 0; got < low; got += 64) bits = (bits << 64) | BigInt(gen());
            const unsigned extra = (low + 63) / 64 * 64 - low;
            m |= bits >> extra;
        }
        out.push_back({i, DyadicAngle(m, spec.fine_depth)});
    }
    return out;
}

}  // namespace korlab::lab
