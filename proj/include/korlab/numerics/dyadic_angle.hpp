#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "korlab/numerics/boundary_depth.hpp"

namespace korlab {

using BigInt = boost::multiprecision::cpp_int;

// phi = 2*pi*m / 2^q with 0 <= m < 2^q.
class DyadicAngle {
public:
    DyadicAngle() = default;
    DyadicAngle(BigInt numerator, unsigned depth);

    static DyadicAngle zero() { return DyadicAngle(0, 0); }
    // Nearest dyadic angle of depth q to the real angle (radians).
    static DyadicAngle from_radians(double phi, unsigned depth);

    const BigInt& numerator() const { return m_; }
    unsigned depth() const { return q_; }

    // Fraction of a full turn in [0, 1).
    double turns() const;
    // Representative in (-pi, pi].
    double radians() const;
    // 1 - cos(phi), accurate near phi = 0.
    double one_minus_cos() const;
    double cos() const;
    double sin() const;

    // Same angle written at depth q' >= q.
    DyadicAngle at_depth(unsigned depth) const;

    DyadicAngle operator+(const DyadicAngle& other) const;
    DyadicAngle operator-(const DyadicAngle& other) const;
    DyadicAngle operator-() const;

    std::string to_string() const;

    // Equality of the angles, independent of the depth they are written at.
    friend bool operator==(const DyadicAngle& a, const DyadicAngle& b);

private:
    BigInt m_ = 0;
    unsigned q_ = 0;
};

// floor(turns(a) * 2^depth): index of the depth-level dyadic cell holding a.
BigInt cell_index(const DyadicAngle& a, unsigned depth);

// 2^e * phi reduced mod 2*pi, exactly.
DyadicAngle reduce_frequency_angle(FrequencyExponent f, const DyadicAngle& a);
// N * phi reduced mod 2*pi, exactly, for an arbitrary positive integer N.
DyadicAngle reduce_multiple_angle(const BigInt& n, const DyadicAngle& a);

}  // namespace korlab
