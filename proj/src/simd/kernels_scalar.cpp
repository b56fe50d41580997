#include "korlab/simd/kernels.hpp"

namespace korlab::simd::scalar {

RationalSums rational_sums(const double* num, const double* base, const double* slope, std::size_t n, double t) {
    RationalSums r;
    for (std::size_t i = 0; i < n; ++i) {
        const double inv = 1.0 / (base[i] + slope[i] * t);
        const double q = num[i] * inv;
        r.value += q;
        r.slope += q * slope[i] * inv;
    }
    return r;
}

void block_means(const double* in, std::size_t n_out, std::size_t block, double* out) {
    const double scale = 1.0 / static_cast<double>(block);
    for (std::size_t i = 0; i < n_out; ++i) {
        double s = 0.0;
        for (std::size_t k = 0; k < block; ++k) s += in[i * block + k];
        out[i] = s * scale;
    }
}

void block_mean_squares(const double* in, std::size_t n_out, std::size_t block, double* out) {
    const double scale = 1.0 / static_cast<double>(block);
    for (std::size_t i = 0; i < n_out; ++i) {
        double s = 0.0;
        for (std::size_t k = 0; k < block; ++k) s += in[i * block + k] * in[i * block + k];
        out[i] = s * scale;
    }
}

}  // namespace korlab::simd::scalar
