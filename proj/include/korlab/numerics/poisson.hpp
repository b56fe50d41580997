#pragma once

#include <cmath>

#include "korlab/numerics/boundary_depth.hpp"

namespace korlab {

// P = (2 - delta) delta / (delta^2 + 4 (1 - delta) S), S = sin^2(psi / 2).
inline double poisson_kernel_delta(double delta, double half_sine_sq) {
    return (2.0 - delta) * delta / (delta * delta + 4.0 * (1.0 - delta) * half_sine_sq);
}

// dP/dpsi.
inline double poisson_kernel_slope_delta(double delta, double psi) {
    const double h = std::sin(0.5 * psi);
    const double den = delta * delta + 4.0 * (1.0 - delta) * h * h;
    return -(2.0 - delta) * delta * 2.0 * (1.0 - delta) * std::sin(psi) / (den * den);
}

double poisson_kernel(BoundaryDepth d, double psi);
double poisson_kernel_dtheta(BoundaryDepth d, double psi);

}  // namespace korlab
