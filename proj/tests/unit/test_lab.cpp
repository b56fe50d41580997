#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "korlab/errors.hpp"
#include "korlab/lab/angle_grid.hpp"
#include "korlab/lab/config.hpp"
#include "korlab/lab/csv.hpp"
#include "korlab/lab/exceptional.hpp"
#include "korlab/lab/experiments.hpp"
#include "korlab/numerics/boundary_depth.hpp"

using namespace korlab;
using namespace korlab::lab;

namespace {

std::vector<std::string> split(const std::string& line, char sep = ',') {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, sep)) out.push_back(cell);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

const CsvRow* summary_row(const ExperimentResult& r, const std::string& quantity, std::optional<int> scale = {}) {
    for (const auto& row : r.table.rows())
        if (row.record == "summary" && row.quantity == quantity && (!scale || row.scale == scale)) return &row;
    return nullptr;
}

ExperimentConfig small(const std::string& experiment, const std::string& kind) {
    auto c = default_config(experiment);
    c.series.kind = kind;
    c.grid.count = std::min<std::size_t>(c.grid.count, 64);
    return c;
}

}  // namespace

TEST_SUITE("config") {
    TEST_CASE("defaults are valid for every experiment") {
        for (const auto& name : experiment_names()) {
            const auto c = default_config(name);
            CHECK(c.experiment == name);
            CHECK_NOTHROW(validate(c));
        }
        CHECK_THROWS_AS(default_config("no-such-experiment"), ConfigError);
    }

    TEST_CASE("empty object keeps defaults; overrides apply") {
        const auto c = parse_config("{}", "mean-bound");
        CHECK(c.k_max == default_config("mean-bound").k_max);
        const auto d = parse_config(R"({"seed": 7, "grid": {"count": 100}, "series": {"kind": "uA", "base": 3}})",
                                    "mean-bound");
        CHECK(d.seed == 7);
        CHECK(d.grid.count == 100);
        CHECK(d.series.kind == "uA");
        CHECK(d.series.base == 3);
    }

    TEST_CASE("bad inputs are rejected") {
        const char* bad[] = {
            "not json",
            "[1, 2]",
            R"({"colour": 1})",
            R"({"grid": {"q": 4, "count": 17}})",
            R"({"grid": {"depth": 3}})",
            R"({"k_max": 7})",
            R"({"k_min": 5, "k_max": 4})",
            R"({"k_max": "six"})",
            R"({"exceptional": {"a": 2.0}})",
            R"({"expect": "maybe"})",
            R"({"experiment": "kernel-report"})",
            R"({"partition_k_max": 5})",
            R"({"trace_level": 5})",
            R"({"profile_a": 0.5})",
            R"({"series": {"kind": "fourier"}})",
        };
        for (const char* text : bad) CHECK_THROWS_AS_MESSAGE(parse_config(text, "mean-bound"), ConfigError, text);
    }

    TEST_CASE("missing file") {
        CHECK_THROWS_AS(load_config("/nonexistent/korlab.json", "mean-bound"), ConfigError);
    }
}

TEST_SUITE("angle grid") {
    TEST_CASE("seeded and reproducible") {
        GridSpec spec{10, 200, 512};
        const auto a = angle_grid(spec, 5), b = angle_grid(spec, 5), c = angle_grid(spec, 6);
        REQUIRE(a.size() == 200);
        bool differs = false;
        std::set<std::size_t> seen;
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].index == b[i].index);
            CHECK(a[i].angle == b[i].angle);
            differs |= !(a[i].angle == c[i].angle);
            seen.insert(a[i].index);
        }
        CHECK(differs);
        CHECK(seen.size() == a.size());
    }

    TEST_CASE("angles stay inside their strata") {
        GridSpec spec{8, 256, 300};
        for (const auto& g : angle_grid(spec, 11)) {
            const double lo = 2 * std::numbers::pi * g.index / 256.0;
            double t = g.angle.radians();  // signed
            if (t < 0) t += 2 * std::numbers::pi;
            CHECK(t >= lo - 1e-15);
            CHECK(t < lo + 2 * std::numbers::pi / 256.0 + 1e-15);
        }
    }

    TEST_CASE("subsampling keeps angles unchanged") {
        const auto full = angle_grid(GridSpec{8, 256, 300}, 3);
        for (const auto& g : angle_grid(GridSpec{8, 32, 300}, 3)) CHECK(full[g.index].angle == g.angle);
    }

    TEST_CASE("pure dyadic grid when fine_depth equals q") {
        for (const auto& g : angle_grid(GridSpec{6, 64, 6}, 1)) CHECK(g.angle == DyadicAngle(BigInt(g.index), 6));
    }
}

TEST_SUITE("exceptional sets") {
    TEST_CASE("zero angle lies in every E_n and in F_m") {
        const ExceptionalSetParams p{3.0, 2};
        for (int n = 1; n <= 8; ++n) CHECK(is_in_En(DyadicAngle::zero(), n, p));
        CHECK(is_in_Fm(DyadicAngle::zero(), p, 8).inside);
    }

    TEST_CASE("angles aliased to 0 at frequency N_n") {
        const ExceptionalSetParams p{3.0, 2};
        for (int n = 2; n <= 5; ++n) {
            const unsigned depth = 1u << n;
            const DyadicAngle phi((BigInt(1) << depth) - 1, depth);
            CHECK(one_minus_cos_frequency(n, phi) == 0.0);
            CHECK(is_in_En(phi, n, p));
        }
    }

    TEST_CASE("half turn: 1 - cos N_n phi = 0 for n >= 1") {
        for (int n = 1; n <= 6; ++n) CHECK(one_minus_cos_frequency(n, DyadicAngle(1, 1)) == 0.0);
        // N_0 = 2
        CHECK(one_minus_cos_frequency(0, DyadicAngle(1, 2)) == doctest::Approx(2.0));
    }

    TEST_CASE("E_n density against arccos") {
        const ExceptionalSetParams p{3.0, 2};
        const auto grid = angle_grid(GridSpec{16, 1u << 16, 96}, 99);
        for (int n = 2; n <= 5; ++n) {
            std::size_t hits = 0;
            for (const auto& g : grid) hits += is_in_En(g.angle, n, p);
            const double density = static_cast<double>(hits) / grid.size();
            const double eps = std::pow(n, -p.a);
            const double exact = std::acos(1 - eps) / std::numbers::pi;
            const double sampling = 4 * std::sqrt(exact * (1 - exact) / grid.size());
            CHECK_MESSAGE(std::abs(density - exact) <= sampling + 1e-3, "n=" << n << " density " << density);
            // small-set rate sqrt(2) n^(-a/2) / pi
            const double rate = std::sqrt(2.0) * std::pow(n, -p.a / 2) / std::numbers::pi;
            CHECK(density <= 2 * rate);
            CHECK(density >= rate / 2);
        }
    }

    TEST_CASE("F_m witness is consistent with E_n") {
        const ExceptionalSetParams p{3.0, 2};
        for (const auto& g : angle_grid(GridSpec{12, 512, 200}, 4)) {
            const auto f = is_in_Fm(g.angle, p, 10);
            if (f.inside && !f.witness_is_Enm) CHECK(is_in_En(g.angle, f.witness, p));
            if (!f.inside)
                for (int n = p.m; n <= 10; ++n) CHECK_FALSE(is_in_En(g.angle, n, p));
        }
    }
}

TEST_SUITE("csv") {
    TEST_CASE("double formatting") {
        CHECK(format_double(NAN) == "nan");
        CHECK(format_double(INFINITY) == "inf");
        CHECK(format_double(-INFINITY) == "-inf");
        CHECK(format_double(0.1) == "0.10000000000000001");
        CHECK(format_double(0.0) == "0");
    }

    TEST_CASE("property: printed doubles round-trip") {
        testgen::Gen g(301);
        for (int t = 0; t < 2000; ++t) {
            const double v = std::ldexp(g.uniform(-1, 1), static_cast<int>(g.integer(-300, 300)));
            CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
        }
    }

    TEST_CASE("schema line, header and optional fields") {
        CsvTable t("mean-bound");
        CsvRow full;
        full.angle_index = 3;
        full.angle = 0.5;
        full.scale = 4;
        full.quantity = "I";
        full.value = 1.25;
        full.normalizer = 2.0;
        full.ratio = 0.625;
        full.pass = true;
        t.add(full);
        CsvRow bare;
        bare.record = "summary";
        bare.quantity = "M";
        bare.value = NAN;
        t.add(bare);

        const auto ls = lines(t.str());
        REQUIRE(ls.size() == 4);
        CHECK(ls[0].find(kCsvSchema) != std::string::npos);
        CHECK(ls[1] == "record,experiment,angle_index,angle,scale,quantity,value,normalizer,ratio,pass");
        const auto a = split(ls[2]);
        REQUIRE(a.size() == 10);
        CHECK(a[0] == "data");
        CHECK(a[1] == "mean-bound");
        CHECK(a[2] == "3");
        CHECK(std::strtod(a[3].c_str(), nullptr) == 0.5);
        CHECK(a[4] == "4");
        CHECK(a[5] == "I");
        CHECK(a[6] == "1.25");
        CHECK(a[9] == "1");
        const auto b = split(ls[3]);
        REQUIRE(b.size() == 10);
        CHECK(b[0] == "summary");
        CHECK(b[2].empty());
        CHECK(b[3].empty());
        CHECK(b[4].empty());
        CHECK(b[6] == "nan");
        CHECK(b[7].empty());
        CHECK(b[9].empty());
    }
}

TEST_SUITE("experiments on the zero function") {
    TEST_CASE("mean-bound") {
        const auto r = exp_mean_bound(small("mean-bound", "zero"));
        CHECK(r.degenerate);
        for (int k = 2; k <= 6; ++k) {
            const auto* m = summary_row(r, "M", k);
            REQUIRE(m);
            CHECK(*m->value == 0.0);
        }
    }

    TEST_CASE("lil-oscillation") {
        const auto r = exp_lil_oscillation(small("lil-oscillation", "zero"));
        CHECK(r.degenerate);
        const auto* f = summary_row(r, "sign_change_fraction");
        REQUIRE(f);
        CHECK(*f->value == 0.0);
    }

    TEST_CASE("growth-profile") {
        const auto r = exp_radial_growth_profile(small("growth-profile", "zero"));
        std::size_t n = 0;
        for (const auto& row : r.table.rows())
            if (row.quantity == "u") {
                CHECK(*row.value == 0.0);
                ++n;
            }
        CHECK(n == 64 * 5);
    }

    TEST_CASE("decomposition-error") {
        auto c = small("decomposition-error", "zero");
        c.grid.count = 8;
        const auto r = exp_decomposition_error(c);
        for (const auto& row : r.table.rows())
            if (row.quantity == "sup_error" || row.quantity == "reconstruction") CHECK(*row.value == 0.0);
    }

    TEST_CASE("korenblum-check") {
        const auto r = exp_korenblum_check(small("korenblum-check", "zero"));
        for (const char* q : {"gamma1_hat", "gamma2_hat", "gamma3_hat"}) {
            const auto* row = summary_row(r, q);
            REQUIRE(row);
            CHECK(*row->value == 0.0);
        }
    }
}

TEST_SUITE("scale helpers") {
    TEST_CASE("r* depth solves the defining equation") {
        for (double a : {2.5, 3.0, 4.0})
            for (int l = 3; l <= 8; ++l) {
                const double s = r_star_depth(l, a);
                CHECK(s > std::ldexp(1.0, l));
                CHECK(s < std::ldexp(1.0, l + 1));
                const double target = std::pow(l, -a) / 2;
                const double got = pow_r_complement(BoundaryDepth(s), FrequencyExponent{1u << l});
                CHECK(got == doctest::Approx(target).epsilon(1e-12));
            }
    }

    TEST_CASE("r* outside the bracket is reported") {
        // s* ~ 2^l + a log2 l + 1 leaves (2^l, 2^(l+1)) at l = 2, a = 4
        CHECK_THROWS(r_star_depth(2, 4.0));
    }

    TEST_CASE("loglog checkpoint") {
        for (int k = 1; k <= 6; ++k)
            CHECK(loglog_checkpoint(k) == doctest::Approx(std::log(std::ldexp(std::numbers::ln2, k))).epsilon(1e-14));
    }

    TEST_CASE("lil normalizer is defined only once the fourth log is positive") {
        for (int k = 1; k <= 4; ++k) CHECK(std::isnan(lil_normalizer(k)));
        for (int k = 5; k <= 6; ++k) {
            const double x = std::ldexp(std::numbers::ln2, k);  // log(1 / (1 - r_k)) = 2^k ln 2
            const double expected = std::sqrt(std::log(x) * std::log(std::log(std::log(x))));
            CHECK(lil_normalizer(k) == doctest::Approx(expected).epsilon(1e-13));
            CHECK(lil_normalizer(k) > 0.0);
        }
    }

    TEST_CASE("non-oscillation quotient stays above 1/4") {
        auto c = default_config("non-oscillation");
        c.grid.count = 256;
        const auto r = exp_non_oscillation(c);
        for (int l = 4; l <= 5; ++l) {
            const auto* q = summary_row(r, "quotient_min", l);
            REQUIRE(q);
            MESSAGE("quotient_min l=" << l << ": " << *q->value);
            CHECK(*q->value > 0.25);
        }
    }
}
