#pragma once

#include <cstddef>
#include <string_view>

namespace korlab::simd {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);
// Selected once from CPU features; KORLAB_SIMD=scalar forces the reference path.
Isa active_isa();
// Test hook: route subsequent calls through the given variant (must be available).
void force_isa(Isa isa);

struct RationalSums {
    double value = 0.0;  // sum num_i / (base_i + slope_i * t)
    double slope = 0.0;  // sum num_i * slope_i / (base_i + slope_i * t)^2
};

// Both sums over n nodes at parameter t.
RationalSums rational_sums(const double* num, const double* base, const double* slope, std::size_t n, double t);

// out[i] = mean of in[i*block .. (i+1)*block)
void block_means(const double* in, std::size_t n_out, std::size_t block, double* out);
// out[i] = mean of in[k]^2 over the same blocks
void block_mean_squares(const double* in, std::size_t n_out, std::size_t block, double* out);

namespace scalar {
RationalSums rational_sums(const double* num, const double* base, const double* slope, std::size_t n, double t);
void block_means(const double* in, std::size_t n_out, std::size_t block, double* out);
void block_mean_squares(const double* in, std::size_t n_out, std::size_t block, double* out);
}  // namespace scalar

#if defined(KORLAB_HAVE_AVX2)
namespace avx2 {
RationalSums rational_sums(const double* num, const double* base, const double* slope, std::size_t n, double t);
void block_means(const double* in, std::size_t n_out, std::size_t block, double* out);
void block_mean_squares(const double* in, std::size_t n_out, std::size_t block, double* out);
}  // namespace avx2
#endif

}  // namespace korlab::simd
