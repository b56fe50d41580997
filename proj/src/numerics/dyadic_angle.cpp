#include "korlab/numerics/dyadic_angle.hpp"

#include <cmath>
#include <numbers>

#include "korlab/errors.hpp"

namespace korlab {

namespace {

BigInt mask(unsigned q) { return (BigInt(1) << q) - 1; }

}  // namespace

DyadicAngle::DyadicAngle(BigInt numerator, unsigned depth) : m_(std::move(numerator)), q_(depth) {
    if (q_ == 0) {
        m_ = 0;
        return;
    }
    const BigInt modulus = BigInt(1) << q_;
    m_ %= modulus;
    if (m_ < 0) m_ += modulus;
}

DyadicAngle DyadicAngle::from_radians(double phi, unsigned depth) {
    double t = phi / (2.0 * std::numbers::pi);
    t -= std::floor(t);
    // Scale in chunks so depths beyond 1023 bits stay finite.
    const unsigned head = std::min(depth, 60u);
    const auto top = static_cast<std::uint64_t>(std::llround(std::ldexp(t, static_cast<int>(head))));
    BigInt m = BigInt(top) << (depth - head);
    return DyadicAngle(m, depth);
}

namespace {

// m / 2^q as a double, keeping the leading 64 bits of m whatever its size.
double scaled(const BigInt& m, unsigned q) {
    if (m == 0) return 0.0;
    const BigInt a = abs(m);
    const unsigned msb = boost::multiprecision::msb(a);
    const int drop = msb > 63 ? static_cast<int>(msb) - 63 : 0;
    const double head = static_cast<double>(static_cast<std::uint64_t>(a >> drop));
    const double v = std::ldexp(head, drop - static_cast<int>(q));
    return m < 0 ? -v : v;
}

}  // namespace

double DyadicAngle::turns() const {
    const double t = scaled(m_, q_);
    return t < 1.0 ? t : std::nextafter(1.0, 0.0);
}

double DyadicAngle::radians() const {
    if (q_ == 0) return 0.0;
    // signed representative keeps angles just below a full turn exact
    const BigInt half = BigInt(1) << (q_ - 1);
    const BigInt m = m_ > half ? BigInt(m_ - (half << 1)) : m_;
    return 2.0 * std::numbers::pi * scaled(m, q_);
}

double DyadicAngle::one_minus_cos() const {
    const double h = std::sin(0.5 * radians());
    return 2.0 * h * h;
}

double DyadicAngle::cos() const { return std::cos(radians()); }
double DyadicAngle::sin() const { return std::sin(radians()); }

DyadicAngle DyadicAngle::at_depth(unsigned depth) const {
    if (depth < q_) throw InvalidArgument("cannot lower the depth of a dyadic angle");
    return DyadicAngle(m_ << (depth - q_), depth);
}

DyadicAngle DyadicAngle::operator+(const DyadicAngle& other) const {
    const unsigned q = std::max(q_, other.q_);
    return DyadicAngle((m_ << (q - q_)) + (other.m_ << (q - other.q_)), q);
}

DyadicAngle DyadicAngle::operator-() const { return DyadicAngle(-m_, q_); }

DyadicAngle DyadicAngle::operator-(const DyadicAngle& other) const { return *this + (-other); }

bool operator==(const DyadicAngle& a, const DyadicAngle& b) {
    const unsigned q = std::max(a.q_, b.q_);
    return (a.m_ << (q - a.q_)) == (b.m_ << (q - b.q_));
}

std::string DyadicAngle::to_string() const { return "2pi*" + m_.str() + "/2^" + std::to_string(q_); }

BigInt cell_index(const DyadicAngle& a, unsigned depth) {
    const unsigned q = a.depth();
    if (q >= depth) return a.numerator() >> (q - depth);
    return a.numerator() << (depth - q);
}

DyadicAngle reduce_frequency_angle(FrequencyExponent f, const DyadicAngle& a) {
    const unsigned q = a.depth();
    if (f.e >= q) return DyadicAngle(0, q);
    return DyadicAngle((a.numerator() << static_cast<unsigned>(f.e)) & mask(q), q);
}

DyadicAngle reduce_multiple_angle(const BigInt& n, const DyadicAngle& a) {
    const unsigned q = a.depth();
    if (q == 0) return DyadicAngle(0, 0);
    return DyadicAngle((a.numerator() * n) & mask(q), q);
}

}  // namespace korlab
