#include "korlab/martingale/martingale.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "korlab/errors.hpp"
#include "korlab/numerics/quadrature.hpp"
#include "korlab/simd/kernels.hpp"

namespace korlab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Index of the cell of `fine` that starts at the origin of `coarse`; requires alignment.
std::size_t alignment_offset(const SuperDyadicGrid& fine, const SuperDyadicGrid& coarse) {
    return fine.dense_cell_of(coarse.shift());
}

std::vector<double> rotated(const std::vector<double>& v, std::size_t off) {
    std::vector<double> out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[(off + k) % v.size()];
    return out;
}

}  // namespace

SuperDyadicGrid::SuperDyadicGrid(unsigned level, DyadicAngle shift) : level_(level), shift_(std::move(shift)) {
    if (level > 20) throw InvalidArgument("super-dyadic level above 20");
}

double SuperDyadicGrid::cell_length() const { return std::ldexp(2.0 * std::numbers::pi, -static_cast<int>(depth())); }

std::size_t SuperDyadicGrid::size() const {
    if (level_ > kMaxDenseLevel) throw InvalidArgument("dense grids stop at level 4 (2^16 cells)");
    return std::size_t{1} << depth();
}

BigInt SuperDyadicGrid::cell_of(const DyadicAngle& phi) const { return cell_index(phi - shift_, depth()); }

std::size_t SuperDyadicGrid::dense_cell_of(const DyadicAngle& phi) const {
    const std::size_t n = size();
    return static_cast<std::size_t>(cell_of(phi)) % n;
}

DyadicAngle SuperDyadicGrid::cell_start(const BigInt& index) const { return shift_ + DyadicAngle(index, depth()); }

bool SuperDyadicGrid::refines(const SuperDyadicGrid& coarse) const {
    if (level_ < coarse.level_) return false;
    const DyadicAngle d = coarse.shift_ - shift_;
    if (d.depth() <= depth()) return true;
    const BigInt low = (BigInt(1) << (d.depth() - depth())) - 1;
    return (d.numerator() & low) == 0;
}

MartingaleLayer constant_layer(const SuperDyadicGrid& grid, double c) { return {grid, std::vector<double>(grid.size(), c)}; }

MartingaleLayer conditional_expectation(const MartingaleLayer& f, const SuperDyadicGrid& coarse) {
    if (!f.grid.refines(coarse)) throw IncompatibleGrids("cells of the finer grid do not nest in the coarser one");
    const std::size_t n = coarse.size();
    const std::size_t block = f.grid.size() / n;
    const auto v = rotated(f.values, alignment_offset(f.grid, coarse));
    MartingaleLayer out{coarse, std::vector<double>(n)};
    simd::block_means(v.data(), n, block, out.values.data());
    return out;
}

MartingaleLayer conditional_expectation(const std::function<double(double)>& f, const SuperDyadicGrid& grid,
                                        int panels_per_cell) {
    const std::size_t n = grid.size();
    const double len = grid.cell_length();
    const double origin = grid.shift().radians();
    const auto& rule = quad::gauss_legendre(16);
    MartingaleLayer out{grid, std::vector<double>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        const double a = origin + len * static_cast<double>(i);
        out.values[i] = quad::composite(f, a, a + len, panels_per_cell, rule) / len;
    }
    return out;
}

MartingaleLayer refine(const MartingaleLayer& f, const SuperDyadicGrid& fine) {
    if (!fine.refines(f.grid)) throw IncompatibleGrids("target grid does not refine the layer's grid");
    const std::size_t n = fine.size();
    const std::size_t block = n / f.grid.size();
    const std::size_t off = alignment_offset(fine, f.grid);
    MartingaleLayer out{fine, std::vector<double>(n)};
    for (std::size_t k = 0; k < n; ++k) out.values[k] = f.values[((k + n - off) % n) / block];
    return out;
}

void check_martingale(const std::vector<MartingaleLayer>& layers, double tol) {
    for (std::size_t j = 1; j < layers.size(); ++j) {
        const auto e = conditional_expectation(layers[j], layers[j - 1].grid);
        double scale = 1.0;
        for (double v : layers[j].values) scale = std::max(scale, std::abs(v));
        for (std::size_t c = 0; c < e.values.size(); ++c) {
            const double defect = std::abs(e.values[c] - layers[j - 1].values[c]);
            if (!(defect <= tol * scale)) throw NotAMartingale(static_cast<int>(j), c, defect);
        }
    }
}

SquareFunction differences_and_square_function(const std::vector<MartingaleLayer>& layers, double tol) {
    check_martingale(layers, tol);
    SquareFunction out;
    std::vector<MartingaleLayer> cond;  // E(d_j^2 | F_{j-1}) on grid j - 1
    for (std::size_t j = 1; j < layers.size(); ++j) {
        auto prev = refine(layers[j - 1], layers[j].grid);
        MartingaleLayer d{layers[j].grid, layers[j].values};
        for (std::size_t k = 0; k < d.values.size(); ++k) d.values[k] -= prev.values[k];
        MartingaleLayer e{layers[j - 1].grid, std::vector<double>(layers[j - 1].grid.size())};
        simd::block_mean_squares(rotated(d.values, alignment_offset(d.grid, e.grid)).data(), e.values.size(),
                                 d.values.size() / e.values.size(), e.values.data());
        out.d.push_back(std::move(d));
        cond.push_back(std::move(e));

        MartingaleLayer s2 = constant_layer(layers[j - 1].grid, 0.0);
        for (const auto& c : cond) {
            const auto r = refine(c, s2.grid);
            for (std::size_t k = 0; k < s2.values.size(); ++k) s2.values[k] += r.values[k];
        }
        MartingaleLayer s{s2.grid, s2.values}, u{s2.grid, s2.values};
        for (std::size_t k = 0; k < s2.values.size(); ++k) {
            s.values[k] = std::sqrt(s2.values[k]);
            u.values[k] = s2.values[k] > std::numbers::e ? std::sqrt(2.0 * std::log(std::log(s2.values[k]))) : kNaN;
        }
        out.s.push_back(std::move(s));
        out.u.push_back(std::move(u));
    }
    return out;
}

std::vector<MartingaleLayer> lil_ratio(const std::vector<MartingaleLayer>& layers) {
    const auto sq = differences_and_square_function(layers);
    std::vector<MartingaleLayer> out;
    for (std::size_t n = 1; n < layers.size(); ++n) {
        const auto s = refine(sq.s[n - 1], layers[n].grid);
        const auto u = refine(sq.u[n - 1], layers[n].grid);
        MartingaleLayer r{layers[n].grid, layers[n].values};
        for (std::size_t k = 0; k < r.values.size(); ++k) {
            const double den = s.values[k] * u.values[k];
            r.values[k] = (std::isfinite(den) && den > 0.0) ? layers[n].values[k] / den : kNaN;
        }
        out.push_back(std::move(r));
    }
    return out;
}

ExampleMartingale example_martingale(const Premeasure& p, unsigned n_max) {
    if (n_max > kMaxDenseLevel) throw InvalidArgument("example martingale is dense up to level 4");
    ExampleMartingale out;
    for (unsigned n = 0; n <= n_max; ++n) {
        const SuperDyadicGrid grid(n);
        MartingaleLayer g{grid, p.cell_masses(grid.depth())};
        const double len = grid.cell_length();
        for (double& v : g.values) v /= len;
        if (n == 0) {
            out.f.push_back(constant_layer(grid, 0.0));
        } else {
            const auto gp = refine(out.g.back(), grid);
            auto f = refine(out.f.back(), grid);
            const double w = std::ldexp(1.0, -static_cast<int>(n));
            for (std::size_t k = 0; k < f.values.size(); ++k) {
                const double d = w * (g.values[k] - gp.values[k]);
                f.values[k] += d;
                out.max_difference = std::max(out.max_difference, std::abs(d));
            }
            out.f.push_back(std::move(f));
        }
        out.g.push_back(std::move(g));
    }
    check_martingale(out.f);
    return out;
}

std::vector<MartingaleLayer> random_martingale(std::uint64_t seed, unsigned n_max, IncrementKind kind) {
    if (n_max > kMaxDenseLevel) throw InvalidArgument("random martingales are dense up to level 4");
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    std::mt19937_64 gen(seq);
    std::vector<MartingaleLayer> layers{constant_layer(SuperDyadicGrid(0), 0.0)};
    for (unsigned n = 1; n <= n_max; ++n) {
        const SuperDyadicGrid grid(n);
        auto f = refine(layers.back(), grid);
        const std::size_t block = grid.size() / layers.back().grid.size();
        std::vector<double> d(block);
        for (std::size_t c = 0; c < layers.back().grid.size(); ++c) {
            // half the children get +x, the other half -x: the block mean is exactly zero
            for (std::size_t i = 0; i < block / 2; ++i) {
                const double x = kind == IncrementKind::sign ? 1.0 : std::ldexp(static_cast<double>(gen() >> 11), -53);
                d[2 * i] = x;
                d[2 * i + 1] = -x;
            }
            for (std::size_t i = block - 1; i > 0; --i) std::swap(d[i], d[gen() % (i + 1)]);
            for (std::size_t i = 0; i < block; ++i) f.values[c * block + i] += d[i];
        }
        layers.push_back(std::move(f));
    }
    return layers;
}

LilPath lil_path(std::uint64_t seed, std::uint64_t path, unsigned n, double scale) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(path), static_cast<std::uint32_t>(path >> 32)};
    std::mt19937_64 gen(seq);
    LilPath out;
    double f = 0.0;
    for (unsigned j = 1; j <= n; ++j) {
        f += (gen() >> 63) ? scale : -scale;
        out.f.push_back(f);
        out.s.push_back(scale * std::sqrt(static_cast<double>(j)));
    }
    return out;
}

double lil_path_ratio(const LilPath& path) {
    if (path.f.empty()) return kNaN;
    const double s = path.s.back();
    const double s2 = s * s;
    if (!(s2 > std::numbers::e)) return kNaN;
    return path.f.back() / (s * std::sqrt(2.0 * std::log(std::log(s2))));
}

LilSmokeResult lil_smoke(std::uint64_t seed, std::uint64_t paths, unsigned n, double threshold, double scale) {
    LilSmokeResult out;
    out.max_ratio = -std::numeric_limits<double>::infinity();
    for (std::uint64_t p = 0; p < paths; ++p) {
        const double r = lil_path_ratio(lil_path(seed, p, n, scale));
        if (std::isnan(r)) continue;
        if (r > out.max_ratio) {
            out.max_ratio = r;
            out.argmax_path = p;
        }
        if (r > threshold) ++out.exceed;
    }
    return out;
}

}  // namespace korlab
