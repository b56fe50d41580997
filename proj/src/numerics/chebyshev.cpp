#include "korlab/numerics/chebyshev.hpp"

#include <cmath>
#include <numbers>

namespace korlab {

ChebyshevSeries::ChebyshevSeries(double a, double b, std::vector<double> coefficients)
    : a_(a), b_(b), c_(std::move(coefficients)) {}

std::vector<double> ChebyshevSeries::nodes(double a, double b, std::size_t count) {
    std::vector<double> x(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double t = std::cos(std::numbers::pi * (static_cast<double>(k) + 0.5) / static_cast<double>(count));
        x[k] = 0.5 * (a + b) + 0.5 * (b - a) * t;
    }
    return x;
}

ChebyshevSeries ChebyshevSeries::fit(double a, double b, const std::vector<double>& samples) {
    const std::size_t n = samples.size();
    std::vector<double> c(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double sum = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            sum += samples[k] * std::cos(std::numbers::pi * static_cast<double>(j) * (static_cast<double>(k) + 0.5) /
                                         static_cast<double>(n));
        c[j] = 2.0 * sum / static_cast<double>(n);
    }
    c[0] *= 0.5;
    return ChebyshevSeries(a, b, std::move(c));
}

ChebyshevSeries ChebyshevSeries::integral() const {
    const std::size_t n = c_.size();
    const double h = 0.5 * (b_ - a_);
    std::vector<double> out(n + 1, 0.0);
    auto coef = [&](std::size_t i) { return i < n ? c_[i] : 0.0; };
    for (std::size_t k = 1; k <= n; ++k) {
        const double prev = (k == 1) ? 2.0 * coef(0) : coef(k - 1);
        out[k] = h * (prev - coef(k + 1)) / (2.0 * static_cast<double>(k));
    }
    // Fix the constant so the antiderivative vanishes at a (t = -1).
    double at_a = 0.0;
    for (std::size_t k = 1; k <= n; ++k) at_a += (k % 2 == 0 ? 1.0 : -1.0) * out[k];
    out[0] = -at_a;
    return ChebyshevSeries(a_, b_, std::move(out));
}

ChebyshevSeries ChebyshevSeries::derivative() const {
    const std::size_t n = c_.size();
    if (n <= 1) return ChebyshevSeries(a_, b_, {0.0});
    std::vector<double> d(n, 0.0);
    for (std::size_t k = n - 1; k-- > 0;) {
        const double next = (k + 2 < n) ? d[k + 2] : 0.0;
        d[k] = next + 2.0 * static_cast<double>(k + 1) * c_[k + 1];
    }
    d[0] *= 0.5;
    const double scale = 2.0 / (b_ - a_);
    for (double& v : d) v *= scale;
    d.pop_back();
    return ChebyshevSeries(a_, b_, std::move(d));
}

double ChebyshevSeries::operator()(double x) const {
    const double t = (2.0 * x - a_ - b_) / (b_ - a_);
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t k = c_.size(); k-- > 1;) {
        const double b0 = 2.0 * t * b1 - b2 + c_[k];
        b2 = b1;
        b1 = b0;
    }
    return t * b1 - b2 + (c_.empty() ? 0.0 : c_[0]);
}

}  // namespace korlab
