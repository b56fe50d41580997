#include "korlab/numerics/quadrature.hpp"

#include <map>
#include <mutex>

#include <boost/math/quadrature/gauss.hpp>

namespace korlab::quad {

namespace {

template <unsigned N>
Rule make_rule() {
    using G = boost::math::quadrature::gauss<double, N>;
    const auto& xs = G::abscissa();
    const auto& ws = G::weights();
    Rule r;
    // Boost stores the non-negative half; mirror it.
    for (std::size_t i = xs.size(); i-- > 0;) {
        if (xs[i] == 0.0) continue;
        r.x.push_back(-xs[i]);
        r.w.push_back(ws[i]);
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        r.x.push_back(xs[i]);
        r.w.push_back(ws[i]);
    }
    return r;
}

}  // namespace

const Rule& gauss_legendre(int order) {
    static const Rule r4 = make_rule<4>();
    static const Rule r8 = make_rule<8>();
    static const Rule r16 = make_rule<16>();
    static const Rule r32 = make_rule<32>();
    static const Rule r64 = make_rule<64>();
    switch (order) {
        case 4: return r4;
        case 8: return r8;
        case 16: return r16;
        case 32: return r32;
        case 64: return r64;
        default: throw InvalidArgument("unsupported Gauss-Legendre order " + std::to_string(order));
    }
}

std::vector<double> geometric_breaks(double finest, double hi) {
    std::vector<double> b;
    for (double t = finest; t < hi; t *= 2.0) b.push_back(t);
    b.push_back(hi);
    return b;
}

}  // namespace korlab::quad
