#include "korlab/numerics/boundary_depth.hpp"

#include <cmath>
#include <limits>

#include "korlab/errors.hpp"

namespace korlab {

namespace {

// exp(x) underflows to 0 below this.
constexpr double kUnderflowLog2 = 10.6;  // 2^10.6 > 1500 > 745

// log2(-ln(1 - delta)).
double log2_minus_log_radius_delta(double delta) {
    if (delta == 1.0) return std::numeric_limits<double>::infinity();
    // -ln(1 - d) = d (1 + d/2 + ...); below 1e-17 the correction is invisible.
    if (delta < 1e-17) return std::log2(delta);
    return std::log2(-std::log1p(-delta));
}

// Same for delta = 2^(-s), valid for every finite s > 0 even when delta underflows.
double log2_minus_log_radius(double s) {
    if (s > 60.0) return -s;
    return log2_minus_log_radius_delta(std::exp2(-s));
}

}  // namespace

BoundaryDepth::BoundaryDepth(double s) : s_(s) {
    if (!(s >= 0.0) || !std::isfinite(s)) throw InvalidArgument("boundary depth must be finite and >= 0");
}

BoundaryDepth BoundaryDepth::checkpoint(int j) { return BoundaryDepth(std::ldexp(1.0, j)); }

BoundaryDepth BoundaryDepth::from_delta(double delta) {
    if (!(delta > 0.0) || delta > 1.0) throw InvalidArgument("delta must lie in (0, 1]");
    return BoundaryDepth(-std::log2(delta));
}

double radius_value(BoundaryDepth d) { return 1.0 - std::exp2(-d.s()); }

double delta_value(BoundaryDepth d) { return std::exp2(-d.s()); }

double log_radius_from_delta(double delta) { return std::log1p(-delta); }

double pow_delta(double delta, double log2_n) {
    const double l = log2_n + log2_minus_log_radius_delta(delta);
    if (l > kUnderflowLog2) return 0.0;
    return std::exp(-std::exp2(l));
}

double pow_delta_complement(double delta, double log2_n) {
    const double l = log2_n + log2_minus_log_radius_delta(delta);
    if (l > kUnderflowLog2) return 1.0;
    return -std::expm1(-std::exp2(l));
}

double log_pow_r_log2(BoundaryDepth d, double log2_n) {
    if (d.s() == 0.0) return -std::numeric_limits<double>::infinity();
    return -std::exp2(log2_n + log2_minus_log_radius(d.s()));
}

double pow_r_log2(BoundaryDepth d, double log2_n) {
    if (d.s() == 0.0) return 0.0;
    const double l = log2_n + log2_minus_log_radius(d.s());
    if (l > kUnderflowLog2) return 0.0;
    return std::exp(-std::exp2(l));
}

double pow_r_complement_log2(BoundaryDepth d, double log2_n) {
    if (d.s() == 0.0) return 1.0;
    const double l = log2_n + log2_minus_log_radius(d.s());
    if (l > kUnderflowLog2) return 1.0;
    return -std::expm1(-std::exp2(l));
}

double log_pow_r(BoundaryDepth d, FrequencyExponent f) { return log_pow_r_log2(d, static_cast<double>(f.e)); }
double pow_r(BoundaryDepth d, FrequencyExponent f) { return pow_r_log2(d, static_cast<double>(f.e)); }
double pow_r_complement(BoundaryDepth d, FrequencyExponent f) {
    return pow_r_complement_log2(d, static_cast<double>(f.e));
}

}  // namespace korlab
