#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "korlab/errors.hpp"

namespace korlab::quad {

// Gauss-Legendre rule on [-1, 1].
struct Rule {
    std::vector<double> x;
    std::vector<double> w;
    std::size_t size() const { return x.size(); }
};

// Supported orders: 4, 8, 16, 32, 64.
const Rule& gauss_legendre(int order);

template <class F>
double fixed(F&& f, double a, double b, const Rule& rule) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) sum += rule.w[i] * f(c + h * rule.x[i]);
    return h * sum;
}

template <class F>
double composite(F&& f, double a, double b, int panels, const Rule& rule) {
    double sum = 0.0;
    const double step = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + step * p;
        const double hi = (p + 1 == panels) ? b : lo + step;
        sum += fixed(f, lo, hi, rule);
    }
    return sum;
}

struct Estimate {
    double value = 0.0;
    double error = 0.0;
};

// One Gauss-Kronrod (7, 15) panel.
template <class F>
Estimate kronrod15(F&& f, double a, double b);

// Adaptive bisection on Gauss-Kronrod panels until the summed error estimate is below abs_tol.
template <class F>
Estimate adaptive(F&& f, double a, double b, double abs_tol, const std::string& what, int max_depth = 40);

// Break points 0 < t_0 < t_0*2 < ... < hi, doubling from `finest`.
std::vector<double> geometric_breaks(double finest, double hi);

}  // namespace korlab::quad

#include "korlab/numerics/quadrature_impl.hpp"
