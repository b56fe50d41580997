#include <atomic>
#include <cstdlib>
#include <string>

#include "korlab/errors.hpp"
#include "korlab/simd/kernels.hpp"

namespace korlab::simd {

namespace {

Isa detect() {
    if (const char* env = std::getenv("KORLAB_SIMD")) {
        if (std::string(env) == "scalar") return Isa::scalar;
    }
    return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() {
    static std::atomic<Isa> isa{detect()};
    return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
    if (isa == Isa::scalar) return true;
#if defined(KORLAB_HAVE_AVX2)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
    if (!isa_available(isa)) throw InvalidArgument("instruction set not available: " + std::string(isa_name(isa)));
    current().store(isa, std::memory_order_relaxed);
}

RationalSums rational_sums(const double* num, const double* base, const double* slope, std::size_t n, double t) {
#if defined(KORLAB_HAVE_AVX2)
    if (active_isa() == Isa::avx2) return avx2::rational_sums(num, base, slope, n, t);
#endif
    return scalar::rational_sums(num, base, slope, n, t);
}

void block_means(const double* in, std::size_t n_out, std::size_t block, double* out) {
#if defined(KORLAB_HAVE_AVX2)
    if (active_isa() == Isa::avx2) return avx2::block_means(in, n_out, block, out);
#endif
    scalar::block_means(in, n_out, block, out);
}

void block_mean_squares(const double* in, std::size_t n_out, std::size_t block, double* out) {
#if defined(KORLAB_HAVE_AVX2)
    if (active_isa() == Isa::avx2) return avx2::block_mean_squares(in, n_out, block, out);
#endif
    scalar::block_mean_squares(in, n_out, block, out);
}

}  // namespace korlab::simd
