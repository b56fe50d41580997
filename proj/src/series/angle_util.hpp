#pragma once

#include <cmath>
#include <numbers>

#include "korlab/numerics/dyadic_angle.hpp"

namespace korlab::detail {

// Fractional part of n * t for an integer-valued double n < 2^53, using an exact product.
inline double frac_product(double n, double t) {
    const double p = n * t;
    const double e = std::fma(n, t, -p);
    const double f = (p - std::floor(p)) + e;
    return f - std::floor(f);
}

// Angle N * phi in (-pi, pi] for a real phi and N <= 2^40.
inline double real_multiple_angle(double n, double phi) {
    double f = frac_product(n, phi / (2.0 * std::numbers::pi));
    if (f > 0.5) f -= 1.0;
    return 2.0 * std::numbers::pi * f;
}

// floor(log2 N) plus the fractional part from the leading bits.
inline double log2_big(const BigInt& n) {
    if (n <= 0) return -INFINITY;
    const unsigned msb = boost::multiprecision::msb(n);
    if (msb < 53) return std::log2(static_cast<double>(n));
    const BigInt top = n >> (msb - 52);
    return static_cast<double>(msb - 52) + std::log2(static_cast<double>(top));
}

}  // namespace korlab::detail
