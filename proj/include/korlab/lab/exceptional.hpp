#pragma once

#include "korlab/lab/config.hpp"
#include "korlab/numerics/dyadic_angle.hpp"

namespace korlab::lab {

// 1 - cos(N_n phi), N_n = 2^(2^n), from the exactly reduced angle.
double one_minus_cos_frequency(int n, const DyadicAngle& phi);

bool is_in_En(const DyadicAngle& phi, int n, const ExceptionalSetParams& params);
bool is_in_Enm(const DyadicAngle& phi, int n, int m);

struct FmMembership {
    bool inside = false;  // a witness set was found
    int witness = 0;      // the n of the witness
    bool witness_is_Enm = false;
    unsigned cap = 0;     // E_n was checked for m <= n <= cap
    // Not inside: outside F_m as far as the cap reaches; beyond it undetermined.
    bool certified_outside() const { return !inside; }
};

FmMembership is_in_Fm(const DyadicAngle& phi, const ExceptionalSetParams& params, unsigned n_cap);

}  // namespace korlab::lab
