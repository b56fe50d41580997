#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "generators.hpp"
#include "korlab/numerics/quadrature.hpp"
#include "korlab/premeasure/premeasure.hpp"
#include "korlab/radial/kernels.hpp"
#include "korlab/radial/radial_average.hpp"
#include "korlab/series/counterexample.hpp"
#include "korlab/series/lacunary.hpp"

using namespace korlab;

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double inv_x_block(double a, double b) { return 1.0 / a - 1.0 / b; }

}  // namespace

TEST_SUITE("radial average") {
    TEST_CASE("zero function") {
        testgen::Gen g(91);
        for (double s : {1.0, 8.0, 64.0}) CHECK(I_u(ZeroFunction(), BoundaryDepth(s), g.angle(64)).value == 0.0);
    }

    TEST_CASE("constant function has the x^-2 antiderivative") {
        for (double s : {1.0, 3.0, 4.0, 16.0, 64.0, 100.0}) {
            const double expected = 1.0 / kLn2 - 1.0 / (s * kLn2);
            CHECK(I_u(ConstantFunction(1.0), BoundaryDepth(s), DyadicAngle(3, 7)).value ==
                  doctest::Approx(expected).epsilon(1e-10));
        }
    }

    TEST_CASE("radial majorant grows like log s") {
        for (double s : {2.0, 8.0, 32.0, 64.0}) {
            // int (1 + x) x^-2 dx on [ln 2, s ln 2]
            const double expected = inv_x_block(kLn2, s * kLn2) + std::log(s);
            CHECK(I_u(RadialMajorant(), BoundaryDepth(s), DyadicAngle::zero()).value ==
                  doctest::Approx(expected).epsilon(1e-9));
        }
    }

    TEST_CASE("x-substitution agrees with the r-integral") {
        for (double s : {1.5, 4.0, 10.0}) {
            const double R = 1.0 - std::exp2(-s);
            const auto direct = quad::adaptive(
                [](double r) {
                    const double l = std::log(1.0 - r);
                    return 1.0 / ((1.0 - r) * l * l);
                },
                0.5, R, 1e-13, "r-integral", 60);
            CHECK(I_u(ConstantFunction(1.0), BoundaryDepth(s), DyadicAngle::zero()).value ==
                  doctest::Approx(direct.value).epsilon(1e-9));
        }
    }
}

TEST_SUITE("block decomposition") {
    TEST_CASE("zero function") {
        const auto b = block_decomposition(ZeroFunction(), BoundaryDepth(32.0), DyadicAngle(1, 3));
        for (double v : b.v) CHECK(v == 0.0);
        for (double w : b.w) CHECK(w == 0.0);
        CHECK(b.q == 0.0);
    }

    TEST_CASE("constant: v_j = 2^-j / ln 2 and w_j = 0") {
        const auto b = block_decomposition(ConstantFunction(1.0), BoundaryDepth(64.0), DyadicAngle::zero());
        REQUIRE(b.v.size() == 6);
        for (std::size_t j = 1; j <= b.v.size(); ++j)
            CHECK(b.v[j - 1] == doctest::Approx(std::ldexp(1.0, -static_cast<int>(j)) / kLn2).epsilon(1e-12));
        for (double w : b.w) CHECK(std::abs(w) <= 1e-12);
    }

    TEST_CASE("u2 at n = 5: bounded remainder and telescoping") {
        const SuperLacunarySeries u2(2, 8);
        testgen::Gen g(92);
        double worst_q = 0.0;
        for (int t = 0; t < 64; ++t) {
            const auto phi = g.angle(4160);
            const auto b = block_decomposition(u2, BoundaryDepth(32.0), phi);
            REQUIRE(b.v.size() == 5);
            double sum = b.q;
            for (double w : b.w) sum += w;
            CHECK(std::abs(sum - b.value) <= 1e-7);
            worst_q = std::max(worst_q, std::abs(b.q));
        }
        MESSAGE("max |q_5| over 64 angles: " << worst_q);
        CHECK(worst_q <= 10.0);
    }

    TEST_CASE("property: telescoping for random depths and functions") {
        testgen::Gen g(93);
        const SuperLacunarySeries u2(2, 8), u3(3, 5);
        const Counterexample ce(12, 2);
        const std::vector<const DiskFunction*> fs{&u2, &u3, &ce};
        for (int t = 0; t < 40; ++t) {
            const auto& u = *fs[t % fs.size()];
            const BoundaryDepth R(g.uniform(2.0, 64.0));
            const auto phi = g.angle(4160);
            const auto b = block_decomposition(u, R, phi);
            double sum = b.q;
            for (double w : b.w) sum += w;
            CHECK_MESSAGE(std::abs(sum - b.value) <= 1e-7, u.name() << " s=" << R.s());
            CHECK(b.value == doctest::Approx(I_u(u, R, phi).value).epsilon(1e-12));
        }
    }

    TEST_CASE("kernel representation: radial blocks equal A_j against the boundary premeasure") {
        // u = r cos theta is the Poisson integral of d mu = cos theta d theta / 2 pi
        const LacunarySeries z({{BigInt(1), {1.0, 0.0}}}, 2.0);
        const DensityPremeasure mu([](double t) { return std::cos(t) / kTwoPi; });
        testgen::Gen g(94);
        for (int t = 0; t < 6; ++t) {
            const auto phi = g.angle(30);
            const auto b = block_decomposition(z, BoundaryDepth(16.0), phi);
            for (int j = 1; j <= 4; ++j) CHECK(std::abs(b.v[j - 1] - v_direct(j, phi.radians(), mu)) <= 1e-5);
        }
    }
}

TEST_SUITE("kernels") {
    TEST_CASE("mass of A_j") {
        for (int j = 1; j <= 6; ++j)
            CHECK(kernel_mass_A(j) == doctest::Approx(kTwoPi / kLn2 * std::ldexp(1.0, -j)).epsilon(1e-6));
    }

    TEST_CASE("A_j peaks at 0 and decreases in |psi|") {
        testgen::Gen g(95);
        for (int j = 1; j <= 6; ++j) {
            double prev = INFINITY;
            for (double psi = 0.0; psi <= std::numbers::pi; psi += std::numbers::pi / 256) {
                const double a = kernel_A(j, psi);
                CHECK(a <= prev);
                CHECK(a >= kernel_A(j, std::numbers::pi));
                prev = a;
            }
        }
    }

    TEST_CASE("A_4 size profile across the three regimes") {
        // bounds: 2^-2j 2^(2^j) | 2^-2j psi^-1 | 2^-2j psi^-2 2^-(2^(j-1)), split at 1 - r_j and 1 - r_{j-1}
        const int j = 4;
        const double c = std::ldexp(1.0, -2 * j);
        const double inner = std::ldexp(1.0, -16), outer = std::ldexp(1.0, -8);
        const double ratios[] = {
            kernel_A(j, inner / 4) / (c * std::ldexp(1.0, 16)),
            kernel_A(j, std::sqrt(inner * outer)) / (c / std::sqrt(inner * outer)),
            kernel_A(j, 0.5) / (c / 0.25 * std::ldexp(1.0, -8)),
        };
        for (double r : ratios) {
            MESSAGE("A_4 / profile: " << r);
            CHECK(r >= 0.01);
            CHECK(r <= 100.0);
        }
    }

    TEST_CASE("B_j: cancellation, parity, positive peak") {
        for (int j = 2; j <= 6; ++j) CHECK(std::abs(kernel_mass_B(j)) <= 1e-8);
        testgen::Gen g(96);
        for (int t = 0; t < 100; ++t) {
            const int j = static_cast<int>(g.integer(2, 6));
            const double psi = g.uniform(0.0, std::numbers::pi);
            CHECK(kernel_B(j, psi) == kernel_B(j, -psi));
        }
        CHECK(kernel_B(3, 0.0) > 0.0);
    }

    TEST_CASE("B~_j: support, plateau, parity, zero integral") {
        testgen::Gen g(97);
        for (int j = 5; j <= 6; ++j) {
            const auto& prof = KernelProfile::get(j);
            const double J = std::ldexp(1.0, -6) * std::ldexp(1.0, -(1 << (j - 4)));
            CHECK(prof.support() <= J);
            for (int t = 0; t < 200; ++t) {
                const double out = g.uniform(J, std::numbers::pi);
                CHECK(kernel_B_tilde(j, out) == 0.0);
                CHECK(kernel_B_tilde(j, -out) == 0.0);
                const double in = g.uniform(0.0, J / 2);
                CHECK(std::abs(kernel_B_tilde(j, in) - kernel_B(j, in)) <= 1e-12 * std::abs(kernel_B(j, in)));
                const double any = g.uniform(0.0, J);
                CHECK(kernel_B_tilde(j, any) == kernel_B_tilde(j, -any));
            }
            CHECK(std::abs(prof.integral()) <= 1e-8);
        }
    }

    TEST_CASE("estimate report constants") {
        const auto r5 = kernel_estimate_report(5), r6 = kernel_estimate_report(6);
        MESSAGE("log-moment constants " << r5.const_log_moment << " " << r6.const_log_moment);
        CHECK(std::max(r5.const_log_moment, r6.const_log_moment) <=
              4.0 * std::min(r5.const_log_moment, r6.const_log_moment));
        CHECK(std::isfinite(r5.slope_log_integral));
        CHECK(r5.slope_log_integral > 0.0);
        CHECK(r6.const_difference <= 4.0 * r5.const_difference);
    }
}

TEST_SUITE("smoothed blocks") {
    TEST_CASE("zero premeasure") {
        for (int j = 5; j <= 6; ++j) CHECK(w_tilde(j, 0.3, ZeroPremeasure()) == 0.0);
    }

    TEST_CASE("w_j - w~_j scales like 2^-2j on the u2 trace") {
        const auto mu = from_harmonic_trace(SuperLacunarySeries(2, 8), 3);
        testgen::Gen g(98);
        double c5 = 0.0, c6 = 0.0;
        for (int t = 0; t < 16; ++t) {
            const double phi = g.radians();
            c5 = std::max(c5, std::abs(w_direct(5, phi, *mu) - w_tilde(5, phi, *mu)) * std::ldexp(1.0, 10));
            c6 = std::max(c6, std::abs(w_direct(6, phi, *mu) - w_tilde(6, phi, *mu)) * std::ldexp(1.0, 12));
        }
        MESSAGE("|w - w~| 2^2j: j=5 " << c5 << ", j=6 " << c6);
        CHECK(std::isfinite(c5));
        CHECK(c6 <= 4.0 * std::max(c5, 1e-12));
    }

    TEST_CASE("by-parts and moment routes agree") {
        const auto mu = from_harmonic_trace(SuperLacunarySeries(2, 8), 3);
        testgen::Gen g(99);
        for (int t = 0; t < 8; ++t) {
            const double phi = g.radians();
            for (int j = 5; j <= 6; ++j) CHECK(std::abs(w_tilde(j, phi, *mu) - w_tilde_by_parts(j, phi, *mu)) <= 1e-9);
        }
    }

    TEST_CASE("reflection symmetry transfers") {
        const DensityPremeasure mu([](double t) { return (std::cos(t) + 0.5 * std::cos(3 * t)) / kTwoPi; });
        testgen::Gen g(100);
        for (int t = 0; t < 10; ++t) {
            const double off = g.uniform(0.0, 0.01);
            for (int j = 5; j <= 6; ++j) CHECK(w_tilde(j, off, mu) == doctest::Approx(w_tilde(j, -off, mu)).epsilon(1e-9).scale(1e-12));
        }
    }
}

TEST_SUITE("coefficients") {
    TEST_CASE("c_j window") {
        for (int j = 1; j <= 8; ++j) {
            CHECK(c_coefficient(j) >= 0.05);
            CHECK(c_coefficient(j) <= 20.0);
        }
    }

    TEST_CASE("truncated coefficients converge monotonically") {
        for (int j = 1; j <= 5; ++j) {
            double prev = 0.0;
            for (int k = j; k <= 8; ++k) {
                const double c = c_jk(j, k);
                CHECK(c >= prev);
                CHECK(c <= c_coefficient(j) + 1e-12);
                prev = c;
            }
        }
        for (auto [j, k] : {std::pair{2, 4}, {3, 5}, {4, 6}})
            CHECK(std::abs(c_jk(j, k) - c_coefficient(j)) * std::ldexp(1.0, k - j) <= 2.0);
    }

    TEST_CASE("cosine sum") {
        testgen::Gen g(101);
        CHECK(cosine_sum_approx(0, g.angle(40)) == 0.0);
        double total = 0.0;
        for (int k = 1; k <= 6; ++k) {
            total += c_coefficient(k);
            CHECK(cosine_sum_approx(k, DyadicAngle::zero()) == doctest::Approx(total).epsilon(1e-12));
            CHECK(cosine_sum_approx(k, DyadicAngle::zero()) >= 0.5 * k);
        }
    }
}
