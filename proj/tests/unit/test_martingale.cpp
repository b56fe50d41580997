#include <doctest.h>

#include <cmath>
#include <memory>
#include <numbers>
#include <vector>

#include "generators.hpp"
#include "korlab/errors.hpp"
#include "korlab/martingale/atoms.hpp"
#include "korlab/martingale/martingale.hpp"
#include "korlab/numerics/quadrature.hpp"
#include "korlab/series/lacunary.hpp"

using namespace korlab;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double mean_square(const MartingaleLayer& l) {
    double s = 0.0;
    for (double v : l.values) s += v * v;
    return s / static_cast<double>(l.values.size());
}

double max_abs_diff(const MartingaleLayer& a, const MartingaleLayer& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
    return m;
}

// Hand-built martingale with a single +-1 step at level 1.
std::vector<MartingaleLayer> one_step(unsigned n_max) {
    std::vector<MartingaleLayer> layers{constant_layer(SuperDyadicGrid(0), 0.0)};
    MartingaleLayer f1{SuperDyadicGrid(1), {1.0, -1.0, 1.0, -1.0}};
    layers.push_back(f1);
    for (unsigned n = 2; n <= n_max; ++n) layers.push_back(refine(f1, SuperDyadicGrid(n)));
    return layers;
}

const Premeasure& u2_trace() {
    static const auto p = from_harmonic_trace(SuperLacunarySeries(2, 8), 3);
    return *p;
}

}  // namespace

TEST_SUITE("super-dyadic grids") {
    TEST_CASE("cells partition the circle and nest") {
        testgen::Gen g(301);
        for (unsigned n = 0; n <= 4; ++n) {
            const SuperDyadicGrid grid(n, g.angle(40));
            CHECK(grid.size() == (std::size_t{1} << grid.depth()));
            CHECK(grid.cell_length() * static_cast<double>(grid.size()) == doctest::Approx(kTwoPi));
            if (n > 0) CHECK(grid.refines(SuperDyadicGrid(n - 1, grid.shift())));
        }
        CHECK_FALSE(SuperDyadicGrid(2, DyadicAngle(1, 40)).refines(SuperDyadicGrid(1)));
        CHECK_THROWS_AS(SuperDyadicGrid(5).size(), InvalidArgument);
    }

    TEST_CASE("property: points land in the cell that contains them") {
        testgen::Gen g(302);
        for (int t = 0; t < 200; ++t) {
            const SuperDyadicGrid grid(static_cast<unsigned>(g.integer(0, 6)), g.angle(80));
            const auto phi = g.angle(100);
            const auto cell = grid.cell_of(phi);
            const double off = (phi - grid.cell_start(cell)).turns();
            CHECK(off >= 0.0);
            CHECK(off < std::ldexp(1.0, -static_cast<int>(grid.depth())) * (1 + 1e-12));
        }
    }
}

TEST_SUITE("conditional expectation") {
    TEST_CASE("constants are fixed") {
        const auto e = conditional_expectation([](double) { return 2.5; }, SuperDyadicGrid(2));
        for (double v : e.values) CHECK(v == doctest::Approx(2.5));
        const auto c = conditional_expectation(constant_layer(SuperDyadicGrid(3), -1.0), SuperDyadicGrid(1));
        for (double v : c.values) CHECK(v == -1.0);
    }

    TEST_CASE("cos theta on the level-1 quadrants") {
        const auto e = conditional_expectation([](double t) { return std::cos(t); }, SuperDyadicGrid(1), 8);
        const SuperDyadicGrid grid(1);
        for (std::size_t i = 0; i < 4; ++i) {
            const double a = grid.cell_start(i).radians() < 0 ? grid.cell_start(i).radians() + kTwoPi : grid.cell_start(i).radians();
            const double b = a + std::numbers::pi / 2;
            CHECK(e.values[i] == doctest::Approx((std::sin(b) - std::sin(a)) / (std::numbers::pi / 2)).epsilon(1e-12));
        }
        CHECK(e.values[0] == doctest::Approx(2.0 / std::numbers::pi));
    }

    TEST_CASE("property: tower on random layers") {
        testgen::Gen g(303);
        for (int t = 0; t < 20; ++t) {
            MartingaleLayer f{SuperDyadicGrid(4), std::vector<double>(65536)};
            for (auto& v : f.values) v = g.uniform(-1, 1);
            const auto a = conditional_expectation(conditional_expectation(f, SuperDyadicGrid(3)), SuperDyadicGrid(2));
            const auto b = conditional_expectation(f, SuperDyadicGrid(2));
            CHECK(max_abs_diff(a, b) <= 1e-12);
        }
    }

    TEST_CASE("grids with different shifts are rejected") {
        const MartingaleLayer f = constant_layer(SuperDyadicGrid(3, DyadicAngle(1, 40)), 1.0);
        CHECK_THROWS_AS(conditional_expectation(f, SuperDyadicGrid(2)), IncompatibleGrids);
    }
}

TEST_SUITE("differences and square function") {
    TEST_CASE("constant martingale") {
        std::vector<MartingaleLayer> layers;
        for (unsigned n = 0; n <= 3; ++n) layers.push_back(constant_layer(SuperDyadicGrid(n), 0.7));
        const auto sq = differences_and_square_function(layers);
        for (const auto& d : sq.d)
            for (double v : d.values) CHECK(v == 0.0);
        for (const auto& s : sq.s)
            for (double v : s.values) CHECK(v == 0.0);
    }

    TEST_CASE("single symmetric step") {
        const auto sq = differences_and_square_function(one_step(4));
        for (const auto& s : sq.s)
            for (double v : s.values) CHECK(v == doctest::Approx(1.0));
        // s_n^2 = 1 < e: u_n undefined
        for (const auto& u : sq.u)
            for (double v : u.values) CHECK(std::isnan(v));
    }

    TEST_CASE("non-martingales are rejected with the level") {
        auto layers = one_step(3);
        layers[2].values[5] += 0.5;
        try {
            differences_and_square_function(layers);
            FAIL("expected NotAMartingale");
        } catch (const NotAMartingale& e) {
            CHECK(e.level() == 2);
        }
    }

    TEST_CASE("property: Parseval on random martingales") {
        for (int t = 0; t < 40; ++t) {
            const auto layers = random_martingale(7000 + t, 4, t % 2 ? IncrementKind::uniform : IncrementKind::sign);
            const auto sq = differences_and_square_function(layers);
            double acc = 0.0;
            for (std::size_t n = 1; n < layers.size(); ++n) {
                acc += mean_square(sq.d[n - 1]);
                CHECK(std::abs(mean_square(layers[n]) - acc) <= 1e-10);
            }
        }
    }
}

TEST_SUITE("random martingales") {
    TEST_CASE("seeded and exact") {
        const auto a = random_martingale(5, 3, IncrementKind::sign);
        const auto b = random_martingale(5, 3, IncrementKind::sign);
        const auto c = random_martingale(6, 3, IncrementKind::sign);
        for (std::size_t n = 0; n < a.size(); ++n) CHECK(a[n].values == b[n].values);
        CHECK(a[3].values != c[3].values);
        CHECK_NOTHROW(check_martingale(a, 0.0));
        for (std::size_t n = 1; n < a.size(); ++n) {
            MartingaleLayer d = a[n];
            const auto prev = refine(a[n - 1], a[n].grid);
            for (std::size_t i = 0; i < d.values.size(); ++i) {
                d.values[i] -= prev.values[i];
                CHECK(std::abs(d.values[i]) <= 1.0);
            }
            for (double v : conditional_expectation(d, a[n - 1].grid).values) CHECK(v == 0.0);
        }
    }
}

TEST_SUITE("example martingale") {
    TEST_CASE("zero premeasure") {
        const auto ex = example_martingale(ZeroPremeasure(), 3);
        for (const auto& f : ex.f)
            for (double v : f.values) CHECK(v == 0.0);
        CHECK(ex.max_difference == 0.0);
    }

    TEST_CASE("cosine density: averages approach cos and differences vanish") {
        const DensityPremeasure mu([](double t) { return std::cos(t) / kTwoPi; });
        const auto ex = example_martingale(mu, 4);
        const auto& g4 = ex.g[4];
        double worst = 0.0;
        for (std::size_t i = 0; i < g4.values.size(); i += 97) {
            const double centre = (g4.grid.cell_start(i).turns() + 0.5 / g4.values.size()) * kTwoPi;
            worst = std::max(worst, std::abs(kTwoPi * g4.values[i] - std::cos(centre)));
        }
        CHECK(worst <= 1e-8);
        double prev = INFINITY;
        for (unsigned n = 1; n <= 4; ++n) {
            const double d = max_abs_diff(ex.f[n], refine(ex.f[n - 1], ex.f[n].grid));
            CHECK(d < prev);
            prev = d;
        }
    }

    TEST_CASE("u2 trace at level 4: bounded differences") {
        const auto p = from_harmonic_trace(SuperLacunarySeries(2, 8), 4);
        const auto ex = example_martingale(*p, 4);
        MESSAGE("max |d_n| for the u2 trace: " << ex.max_difference);
        CHECK(ex.max_difference <= 0.15);
    }
}

TEST_SUITE("LIL diagnostics") {
    TEST_CASE("zero martingale: ratio undefined everywhere") {
        std::vector<MartingaleLayer> layers;
        for (unsigned n = 0; n <= 3; ++n) layers.push_back(constant_layer(SuperDyadicGrid(n), 0.0));
        for (const auto& r : lil_ratio(layers))
            for (double v : r.values) CHECK(std::isnan(v));
    }

    TEST_CASE("paths: s_n^2 = n and the ratio is scale-free in its argmax") {
        const auto p = lil_path(3, 17, 20);
        for (std::size_t n = 0; n < p.s.size(); ++n) CHECK(p.s[n] == doctest::Approx(std::sqrt(n + 1.0)));
        const auto a = lil_smoke(99, 1000, 20, 1.2, 1.0);
        const auto b = lil_smoke(99, 1000, 20, 1.2, 2.0);
        CHECK(a.argmax_path == b.argmax_path);
        CHECK(lil_smoke(99, 1000, 20, 1.2).max_ratio == a.max_ratio);
    }
}

TEST_SUITE("atoms") {
    TEST_CASE("zero premeasure gives zero atoms") {
        const AtomFamily a(1, ZeroPremeasure());
        testgen::Gen g(311);
        for (int t = 0; t < 20; ++t) {
            const auto phi = g.angle(64);
            CHECK(a.sum(phi) == 0.0);
            for (auto i : a.arcs_near(phi)) CHECK(a.lambda(i, phi) == 0.0);
        }
    }

    TEST_CASE("arc bookkeeping") {
        CHECK(arc_count(1) == 256);
        CHECK(arc_count(2) == 1024);
        CHECK(arc_depth(2) == 10);
        CHECK_THROWS_AS(AtomFamily(3, ZeroPremeasure()), InvalidArgument);
    }

    TEST_CASE("property: support in 3I, cancellation, family sum") {
        testgen::Gen g(312);
        for (unsigned k = 1; k <= 2; ++k) {
            const AtomFamily a(k, u2_trace());
            const double l = a.arc_length();
            for (int t = 0; t < 24; ++t) {
                const auto i = g.integer(0, a.size() - 1);
                const auto st = a.arc_start(i);
                for (int p = 0; p < 40; ++p) {
                    const double off = g.coin() ? g.uniform(-3.0 * l, -l) : g.uniform(2.0 * l, 4.0 * l);
                    CHECK(a.lambda(i, st, off) == 0.0);
                }
                double integral = 0.0;
                for (int w = 0; w < 3; ++w)
                    integral += quad::adaptive([&](double x) { return a.lambda(i, st, x); }, (w - 1) * l, w * l, 1e-11,
                                               "int lambda", 60).value;
                CHECK(std::abs(integral) <= 1e-8);
            }
            double sup = 0.0;
            for (int t = 0; t < 32; ++t) {
                const auto phi = g.angle(4160);
                CHECK(std::abs(a.sum(phi) - a.w_tilde(phi)) <= 1e-7);
                for (auto i : a.arcs_near(phi)) sup = std::max(sup, std::abs(a.lambda(i, phi)));
            }
            MESSAGE("sup |lambda_I| at k=" << k << ": " << sup);
            CHECK(sup <= 0.25);
        }
    }
}

TEST_SUITE("shift partition") {
    TEST_CASE("k_max = 1 and 3 verify exhaustively") {
        for (unsigned k : {1u, 3u}) {
            const auto part = shift_partition(k);
            const auto chk = verify_partition(part);
            CHECK(chk.coverage);
            CHECK(chk.containment);
            CHECK(chk.disjoint);
            CHECK(chk.min_margin_ratio >= 0.5);
            MESSAGE("k_max=" << k << ": " << part.family_count() << " families, margin " << chk.min_margin_ratio);
        }
    }

    TEST_CASE("corrupted assignments are caught") {
        auto part = shift_partition(2);
        // two neighbours sharing a family share a host cell or overlap
        part.assignment[1][1] = part.assignment[1][0];
        CHECK_FALSE(verify_partition(part).ok());
        auto moved = shift_partition(2);
        moved.shifts[moved.families[0].shift] = moved.shifts[moved.families[0].shift] + DyadicAngle(1, 9);
        CHECK_FALSE(verify_partition(moved).ok());
    }

    TEST_CASE("scales beyond the cap are refused") { CHECK_THROWS(shift_partition(5)); }
}

TEST_SUITE("assembled martingales") {
    TEST_CASE("zero premeasure: everything vanishes") {
        const auto part = shift_partition(2);
        const AtomFamily a1(1, ZeroPremeasure()), a2(2, ZeroPremeasure());
        testgen::Gen g(321);
        std::vector<DyadicAngle> pts;
        for (int t = 0; t < 4; ++t) pts.push_back(g.angle(4160));
        const auto rep = assemble_martingales(part, {&a1, &a2}, 6, pts);
        for (const auto& row : rep.rows) {
            CHECK(row.sup_error == 0.0);
            CHECK(row.max_square_ratio == 0.0);
            CHECK(row.reconstruction == 0.0);
        }
    }

    TEST_CASE("u2 trace: reconstruction, martingale property, bounded square function") {
        const auto part = shift_partition(2);
        const AtomFamily a1(1, u2_trace()), a2(2, u2_trace());
        testgen::Gen g(322);
        std::vector<DyadicAngle> pts;
        for (int t = 0; t < 6; ++t) pts.push_back(g.angle(4160));
        const auto rep = assemble_martingales(part, {&a1, &a2}, 6, pts);
        REQUIRE(rep.rows.size() == 6);
        CHECK(rep.rows[4].reconstruction <= 1e-6);
        CHECK(rep.rows[5].reconstruction <= 1e-6);
        for (const auto& row : rep.rows) {
            CHECK(row.martingale_defect <= 1e-10);
            CHECK(std::isfinite(row.max_square_ratio));
            CHECK(std::isfinite(row.max_cs_ratio));
        }
        CHECK(rep.rows[5].sup_error <= 2.0 * std::max(rep.rows[3].sup_error, 1e-12));
    }
}
