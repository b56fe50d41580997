#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include <gmp.h>
#include <boost/math/special_functions/log1p.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "generators.hpp"
#include "korlab/numerics/boundary_depth.hpp"
#include "korlab/numerics/dyadic_angle.hpp"
#include "korlab/numerics/poisson.hpp"
#include "korlab/numerics/quadrature.hpp"
#include "korlab/simd/kernels.hpp"

using namespace korlab;
using Float50 = boost::multiprecision::cpp_bin_float_50;

namespace {

// (1 - 2^-s)^(2^e) carried out in 50 digits.
Float50 pow_r_oracle(double s, unsigned e) {
    const Float50 log_r = boost::math::log1p(-boost::multiprecision::pow(Float50(2), -Float50(s)));
    return boost::multiprecision::exp(boost::multiprecision::ldexp(Float50(1), static_cast<int>(e)) * log_r);
}

// (2^e m) mod 2^q with GMP.
std::string reduce_oracle(const BigInt& m, unsigned e, unsigned q) {
    mpz_t z;
    mpz_init_set_str(z, m.str().c_str(), 10);
    mpz_mul_2exp(z, z, e);
    mpz_fdiv_r_2exp(z, z, q);
    char* text = mpz_get_str(nullptr, 10, z);
    std::string out(text);
    void (*release)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &release);
    release(text, out.size() + 1);
    mpz_clear(z);
    return out;
}

double normalization(double s) {
    // (1/2 pi) int P over [-pi, pi], windows doubling away from the peak of width 2^-s
    const BoundaryDepth d(s);
    std::vector<double> edges{0.0};
    for (double w = std::ldexp(1.0, -static_cast<int>(s)); w < std::numbers::pi; w *= 2.0) edges.push_back(w);
    edges.push_back(std::numbers::pi);
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        sum += quad::adaptive([&](double p) { return poisson_kernel(d, p); }, edges[i], edges[i + 1], 1e-13, "P").value;
    return 2.0 * sum / (2.0 * std::numbers::pi);
}

}  // namespace

TEST_SUITE("boundary depth") {
    TEST_CASE("radius and delta at small depths") {
        CHECK(radius_value(BoundaryDepth(0.0)) == 0.0);
        CHECK(radius_value(BoundaryDepth(1.0)) == 0.5);
        CHECK(radius_value(BoundaryDepth(64.0)) == 1.0);
        CHECK(delta_value(BoundaryDepth(64.0)) == std::ldexp(1.0, -64));
        CHECK(delta_value(BoundaryDepth(64.0)) == doctest::Approx(5.421010862427522e-20));
    }

    TEST_CASE("checkpoint radii are s = 2^j") {
        for (int j = 0; j <= 7; ++j) CHECK(BoundaryDepth::checkpoint(j).s() == std::ldexp(1.0, j));
        CHECK(BoundaryDepth::from_delta(std::ldexp(1.0, -37)).s() == 37.0);
    }

    TEST_CASE("first power is 1 - 2^-s") {
        for (double s : {0.0, 0.5, 1.0, 3.0, 17.0, 52.0})
            CHECK(pow_r(BoundaryDepth(s), {0}) == doctest::Approx(1.0 - std::exp2(-s)).epsilon(1e-15));
    }

    TEST_CASE("N-th power at r = 1 - 1/N tends to 1/e and matches 50 digits") {
        const double v = pow_r(BoundaryDepth(32.0), {32});
        const double oracle = static_cast<double>(pow_r_oracle(32.0, 32));
        CHECK(std::abs(v - oracle) <= 1e-9);
        CHECK(std::abs(v - std::exp(-1.0)) < 1e-9);
        CHECK(std::abs(pow_r(BoundaryDepth(8.0), {8}) - std::exp(-1.0)) > std::abs(v - std::exp(-1.0)));
    }

    TEST_CASE("far from the frequency scale the power underflows to exact zero") {
        for (unsigned e : {20u, 40u, 64u, 200u}) {
            const double s = e - 10.0;
            CHECK(pow_r(BoundaryDepth(s), {e}) == 0.0);
            CHECK(static_cast<double>(pow_r_oracle(s, e)) == 0.0);
        }
    }

    TEST_CASE("property: pow_r agrees with the 50-digit oracle") {
        testgen::Gen g(101);
        for (int t = 0; t < 300; ++t) {
            const double s = g.uniform(0.0, 80.0);
            const auto e = static_cast<unsigned>(g.integer(0, 90));
            const Float50 exact = pow_r_oracle(s, e);
            const double v = pow_r(BoundaryDepth(s), {e});
            if (exact < Float50(1e-300)) {
                CHECK(v <= 1e-299);
                continue;
            }
            const double rel = static_cast<double>(boost::multiprecision::abs(Float50(v) / exact - 1));
            CHECK_MESSAGE(rel <= 1e-12, "s=" << s << " e=" << e);
        }
    }

    TEST_CASE("property: pow_r(s, 0) + delta = 1 on [0, 128]") {
        testgen::Gen g(102);
        for (int t = 0; t < 500; ++t) {
            const BoundaryDepth d(g.uniform(0.0, 128.0));
            CHECK(std::abs(pow_r(d, {0}) + delta_value(d) - 1.0) <= 2.3e-16);
        }
    }

    TEST_CASE("property: pow_r strictly decreases in e while positive") {
        testgen::Gen g(103);
        for (int t = 0; t < 100; ++t) {
            const BoundaryDepth d(g.uniform(0.5, 40.0));
            double prev = 2.0;
            for (unsigned e = 0; e < 64; ++e) {
                const double v = pow_r(d, {e});
                if (v == 0.0) break;
                CHECK(v < prev);
                prev = v;
            }
        }
    }
}

TEST_SUITE("angle reduction") {
    TEST_CASE("frequency equal to the depth wraps to zero") {
        testgen::Gen g(201);
        for (unsigned q : {1u, 12u, 64u, 300u}) {
            const auto a = g.angle(q);
            CHECK(reduce_frequency_angle({q}, a).numerator() == 0);
        }
    }

    TEST_CASE("doubling pi/2 gives pi") {
        const auto r = reduce_frequency_angle({1}, DyadicAngle(1, 2));
        CHECK(r.numerator() == 2);
        CHECK(r.depth() == 2);
        CHECK(r.radians() == doctest::Approx(std::numbers::pi));
    }

    TEST_CASE("shift below the modulus is kept") {
        const auto r = reduce_frequency_angle({64}, DyadicAngle(3, 70));
        CHECK(r.numerator() == BigInt(3) << 64);
        CHECK(r.depth() == 70);
    }

    TEST_CASE("property: exact against GMP modular arithmetic") {
        testgen::Gen g(202);
        for (int t = 0; t < 500; ++t) {
            const auto q = static_cast<unsigned>(g.integer(0, 256));
            const auto e = static_cast<unsigned>(g.integer(0, 300));
            const auto a = g.angle(q);
            const auto r = reduce_frequency_angle({e}, a);
            CHECK(r.depth() == q);
            CHECK(r.numerator().str() == reduce_oracle(a.numerator(), e, q));
        }
    }

    TEST_CASE("dyadic angle arithmetic and trig near zero") {
        const DyadicAngle a(5, 4), b(3, 6);
        CHECK((a + b) == DyadicAngle(23, 6));
        CHECK((a - a) == DyadicAngle::zero());
        CHECK(a.at_depth(10) == a);
        CHECK(DyadicAngle(1, 2).cos() == doctest::Approx(0.0).epsilon(1e-15));
        const DyadicAngle tiny(1, 40);
        const double phi = 2.0 * std::numbers::pi * std::ldexp(1.0, -40);
        CHECK(tiny.one_minus_cos() == doctest::Approx(phi * phi / 2.0).epsilon(1e-12));
        CHECK(DyadicAngle::from_radians(std::numbers::pi / 2.0, 8) == DyadicAngle(1, 2));
    }
}

TEST_SUITE("poisson kernel") {
    TEST_CASE("center and half radius") {
        for (double psi : {0.0, 1.0, 3.0}) CHECK(poisson_kernel(BoundaryDepth(0.0), psi) == doctest::Approx(1.0));
        CHECK(poisson_kernel(BoundaryDepth(1.0), 0.0) == doctest::Approx(3.0));
    }

    TEST_CASE("mean value property") {
        for (double s : {1.0, 2.0, 8.0, 32.0}) CHECK(std::abs(normalization(s) - 1.0) <= 1e-10);
    }

    TEST_CASE("closed form agrees with the textbook formula where r is representable") {
        testgen::Gen g(301);
        for (int t = 0; t < 200; ++t) {
            const double s = g.uniform(0.0, 20.0), psi = g.uniform(-3.0, 3.0);
            const double r = 1.0 - std::exp2(-s);
            const double textbook = (1 - r * r) / (1 - 2 * r * std::cos(psi) + r * r);
            CHECK(poisson_kernel(BoundaryDepth(s), psi) == doctest::Approx(textbook).epsilon(1e-9));
            CHECK(poisson_kernel(BoundaryDepth(s), psi) > 0.0);
        }
    }

    TEST_CASE("angular derivative: zero at the peak, odd, matches central differences") {
        for (double s : {1.0, 4.0, 30.0}) CHECK(poisson_kernel_dtheta(BoundaryDepth(s), 0.0) == 0.0);
        testgen::Gen g(302);
        for (int t = 0; t < 100; ++t) {
            const BoundaryDepth d(g.uniform(0.0, 40.0));
            const double psi = g.uniform(0.0, 3.0);
            CHECK(poisson_kernel_dtheta(d, psi) == -poisson_kernel_dtheta(d, -psi));
        }
        const BoundaryDepth d(4.0);
        const double h = 1e-5, psi = 0.3;
        const double fd = (poisson_kernel(d, psi + h) - poisson_kernel(d, psi - h)) / (2 * h);
        CHECK(poisson_kernel_dtheta(d, psi) == doctest::Approx(fd).epsilon(1e-6));
    }
}

TEST_SUITE("simd") {
    TEST_CASE("vector kernels match the scalar reference") {
        if (!simd::isa_available(simd::Isa::avx2)) return;
        testgen::Gen g(401);
        for (std::size_t n : {1u, 3u, 4u, 7u, 64u, 1001u}) {
            std::vector<double> num(n), base(n), slope(n);
            for (std::size_t i = 0; i < n; ++i) {
                num[i] = g.uniform(-1.0, 1.0);
                base[i] = g.uniform(0.1, 2.0);
                slope[i] = g.uniform(0.0, 3.0);
            }
            const double t = g.uniform(0.0, 1.0);
            const auto a = simd::scalar::rational_sums(num.data(), base.data(), slope.data(), n, t);
            const auto b = simd::avx2::rational_sums(num.data(), base.data(), slope.data(), n, t);
            CHECK(b.value == doctest::Approx(a.value).epsilon(1e-13));
            CHECK(b.slope == doctest::Approx(a.slope).epsilon(1e-13));
        }
        for (std::size_t block : {1u, 4u, 16u, 256u}) {
            const std::size_t n_out = 37;
            std::vector<double> in(n_out * block), m1(n_out), m2(n_out), q1(n_out), q2(n_out);
            for (auto& v : in) v = g.uniform(-5.0, 5.0);
            simd::scalar::block_means(in.data(), n_out, block, m1.data());
            simd::avx2::block_means(in.data(), n_out, block, m2.data());
            simd::scalar::block_mean_squares(in.data(), n_out, block, q1.data());
            simd::avx2::block_mean_squares(in.data(), n_out, block, q2.data());
            for (std::size_t i = 0; i < n_out; ++i) {
                CHECK(m2[i] == doctest::Approx(m1[i]).epsilon(1e-13));
                CHECK(q2[i] == doctest::Approx(q1[i]).epsilon(1e-13));
            }
        }
    }
}
