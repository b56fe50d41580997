#pragma once

#include <cstddef>
#include <vector>

namespace korlab {

// Chebyshev expansion of a function on [a, b], fitted at first-kind Chebyshev points.
class ChebyshevSeries {
public:
    ChebyshevSeries() = default;
    ChebyshevSeries(double a, double b, std::vector<double> coefficients);

    // Points at which samples must be supplied to `fit`.
    static std::vector<double> nodes(double a, double b, std::size_t count);
    static ChebyshevSeries fit(double a, double b, const std::vector<double>& samples);

    // Antiderivative vanishing at a.
    ChebyshevSeries integral() const;
    ChebyshevSeries derivative() const;

    double operator()(double x) const;

    double lower() const { return a_; }
    double upper() const { return b_; }
    const std::vector<double>& coefficients() const { return c_; }

private:
    double a_ = 0.0;
    double b_ = 1.0;
    std::vector<double> c_;
};

}  // namespace korlab
