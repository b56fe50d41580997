#include "korlab/radial/radial_average.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "korlab/errors.hpp"
#include "korlab/numerics/quadrature.hpp"

namespace korlab {

namespace {

constexpr double kLn2 = std::numbers::ln2;

quad::Estimate block_integral(const RadialSlice& slice, double lo, double hi, double tol, const std::string& label) {
    auto f = [&](double x) { return slice(std::exp(-x)) / (x * x); };
    return quad::adaptive(f, lo, hi, tol, label);
}

}  // namespace

RadialAverageResult radial_average(const RadialSlice& slice, BoundaryDepth R, RadialOptions opt) {
    if (R.s() < 1.0) throw InvalidArgument("I_u needs R >= 1/2 (s >= 1)");
    RadialAverageResult out;
    out.depth = R;
    const int n = static_cast<int>(std::floor(std::log2(R.s())));
    for (int j = 1; j <= n; ++j) {
        const auto e = block_integral(slice, std::ldexp(kLn2, j - 1), std::ldexp(kLn2, j), opt.block_tol,
                                      "radial block " + std::to_string(j));
        out.blocks.push_back(e.value);
        out.value += e.value;
        out.error += e.error;
    }
    const double top = std::ldexp(kLn2, n);
    const double end = R.s() * kLn2;
    if (end > top) {
        const auto e = block_integral(slice, top, end, opt.block_tol, "partial radial block");
        out.partial = e.value;
        out.value += e.value;
        out.error += e.error;
    }
    return out;
}

RadialAverageResult I_u(const DiskFunction& u, BoundaryDepth R, const DyadicAngle& phi, RadialOptions opt) {
    return radial_average(u.slice(phi), R, opt);
}

BlockDecomposition block_decomposition(const DiskFunction& u, BoundaryDepth R, const DyadicAngle& phi,
                                       RadialOptions opt) {
    const auto res = I_u(u, R, phi, opt);
    BlockDecomposition d;
    d.v = res.blocks;
    d.value = res.value;
    const std::size_t n = d.v.size();
    for (std::size_t j = 0; j + 1 < n; ++j) d.w.push_back(2.0 * d.v[j + 1] - d.v[j]);
    d.q = n > 0 ? 2.0 * d.v[0] - d.v[n - 1] + res.partial : res.partial;
    return d;
}

}  // namespace korlab
