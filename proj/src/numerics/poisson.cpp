#include "korlab/numerics/poisson.hpp"

namespace korlab {

double poisson_kernel(BoundaryDepth d, double psi) {
    const double h = std::sin(0.5 * psi);
    return poisson_kernel_delta(delta_value(d), h * h);
}

double poisson_kernel_dtheta(BoundaryDepth d, double psi) { return poisson_kernel_slope_delta(delta_value(d), psi); }

}  // namespace korlab
