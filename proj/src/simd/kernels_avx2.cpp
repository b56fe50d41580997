#include <immintrin.h>

#include "korlab/simd/kernels.hpp"

namespace korlab::simd::avx2 {

namespace {

double horizontal_sum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

template <bool Square>
void block_reduce(const double* in, std::size_t n_out, std::size_t block, double* out) {
    const double scale = 1.0 / static_cast<double>(block);
    for (std::size_t i = 0; i < n_out; ++i) {
        const double* p = in + i * block;
        __m256d acc = _mm256_setzero_pd();
        std::size_t k = 0;
        for (; k + 4 <= block; k += 4) {
            const __m256d v = _mm256_loadu_pd(p + k);
            acc = Square ? _mm256_fmadd_pd(v, v, acc) : _mm256_add_pd(acc, v);
        }
        double s = horizontal_sum(acc);
        for (; k < block; ++k) s += Square ? p[k] * p[k] : p[k];
        out[i] = s * scale;
    }
}

}  // namespace

RationalSums rational_sums(const double* num, const double* base, const double* slope, std::size_t n, double t) {
    const __m256d tv = _mm256_set1_pd(t);
    const __m256d one = _mm256_set1_pd(1.0);
    __m256d acc_v = _mm256_setzero_pd();
    __m256d acc_s = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d sl = _mm256_loadu_pd(slope + i);
        const __m256d den = _mm256_fmadd_pd(sl, tv, _mm256_loadu_pd(base + i));
        const __m256d inv = _mm256_div_pd(one, den);
        const __m256d q = _mm256_mul_pd(_mm256_loadu_pd(num + i), inv);
        acc_v = _mm256_add_pd(acc_v, q);
        acc_s = _mm256_fmadd_pd(_mm256_mul_pd(q, sl), inv, acc_s);
    }
    RationalSums r{horizontal_sum(acc_v), horizontal_sum(acc_s)};
    for (; i < n; ++i) {
        const double inv = 1.0 / (base[i] + slope[i] * t);
        const double q = num[i] * inv;
        r.value += q;
        r.slope += q * slope[i] * inv;
    }
    return r;
}

void block_means(const double* in, std::size_t n_out, std::size_t block, double* out) {
    block_reduce<false>(in, n_out, block, out);
}

void block_mean_squares(const double* in, std::size_t n_out, std::size_t block, double* out) {
    block_reduce<true>(in, n_out, block, out);
}

}  // namespace korlab::simd::avx2
