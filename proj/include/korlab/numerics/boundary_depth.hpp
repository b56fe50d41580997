#pragma once

#include <cstdint>

namespace korlab {

// Radius r = 1 - 2^(-s). Radii near the boundary are only ever carried as s.
class BoundaryDepth {
public:
    explicit BoundaryDepth(double s);

    double s() const { return s_; }

    // r_j = 1 - 2^(-2^j)
    static BoundaryDepth checkpoint(int j);
    static BoundaryDepth from_delta(double delta);

    friend bool operator==(const BoundaryDepth&, const BoundaryDepth&) = default;

private:
    double s_;
};

// N = 2^e.
struct FrequencyExponent {
    std::uint64_t e = 0;
    friend bool operator==(const FrequencyExponent&, const FrequencyExponent&) = default;
};

double radius_value(BoundaryDepth d);
double delta_value(BoundaryDepth d);

// (1 - 2^(-s))^(2^e); exact 0 on underflow.
double pow_r(BoundaryDepth d, FrequencyExponent f);
// 1 - r^(2^e) without cancellation.
double pow_r_complement(BoundaryDepth d, FrequencyExponent f);
// ln(r^(2^e)) = 2^e ln r, always finite for s > 0 (may be -inf at s = 0).
double log_pow_r(BoundaryDepth d, FrequencyExponent f);

// Same three quantities for a real frequency N > 0 given through log2 N.
double pow_r_log2(BoundaryDepth d, double log2_n);
double pow_r_complement_log2(BoundaryDepth d, double log2_n);
double log_pow_r_log2(BoundaryDepth d, double log2_n);

// ln(1 - delta) for delta in (0, 1].
double log_radius_from_delta(double delta);

// (1 - delta)^N and 1 - (1 - delta)^N for N = 2^log2_n, delta in (0, 1].
double pow_delta(double delta, double log2_n);
double pow_delta_complement(double delta, double log2_n);

}  // namespace korlab
