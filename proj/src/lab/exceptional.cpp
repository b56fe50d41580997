#include "korlab/lab/exceptional.hpp"

#include <cmath>

#include "korlab/errors.hpp"

namespace korlab::lab {

double one_minus_cos_frequency(int n, const DyadicAngle& phi) {
    if (n < 0 || n > 62) throw InvalidArgument("frequency index out of range");
    return reduce_frequency_angle(FrequencyExponent{std::uint64_t{1} << n}, phi).one_minus_cos();
}

bool is_in_En(const DyadicAngle& phi, int n, const ExceptionalSetParams& params) {
    return one_minus_cos_frequency(n, phi) < std::pow(static_cast<double>(n), -params.a);
}

bool is_in_Enm(const DyadicAngle& phi, int n, int m) {
    // 1 - N_m^-1 with N_m = 2^(2^m)
    return one_minus_cos_frequency(n, phi) < std::ldexp(1.0, -(1 << m));
}

FmMembership is_in_Fm(const DyadicAngle& phi, const ExceptionalSetParams& params, unsigned n_cap) {
    FmMembership out;
    out.cap = n_cap;
    for (int n = 1; n < params.m; ++n)
        if (is_in_Enm(phi, n, params.m)) {
            out.inside = true;
            out.witness = n;
            out.witness_is_Enm = true;
            return out;
        }
    for (int n = params.m; n <= static_cast<int>(n_cap); ++n)
        if (is_in_En(phi, n, params)) {
            out.inside = true;
            out.witness = n;
            return out;
        }
    return out;
}

}  // namespace korlab::lab
