#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "korlab/numerics/dyadic_angle.hpp"
#include "korlab/premeasure/premeasure.hpp"

namespace korlab {

// Largest level stored densely (2^16 cells).
inline constexpr unsigned kMaxDenseLevel = 4;

// The 2^(2^n) arcs of length 2 pi 2^(-2^n), rotated by `shift`.
class SuperDyadicGrid {
public:
    explicit SuperDyadicGrid(unsigned level, DyadicAngle shift = DyadicAngle::zero());

    unsigned level() const { return level_; }
    const DyadicAngle& shift() const { return shift_; }
    // Cells have length 2 pi / 2^depth, depth = 2^level.
    unsigned depth() const { return 1u << level_; }
    double cell_length() const;
    BigInt cell_count() const { return BigInt(1) << depth(); }
    // Dense cell count; throws InvalidArgument above kMaxDenseLevel.
    std::size_t size() const;

    BigInt cell_of(const DyadicAngle& phi) const;
    std::size_t dense_cell_of(const DyadicAngle& phi) const;
    DyadicAngle cell_start(const BigInt& index) const;

    // Every cell of *this lies inside one cell of `coarse`.
    bool refines(const SuperDyadicGrid& coarse) const;

private:
    unsigned level_;
    DyadicAngle shift_;
};

// Piecewise constant function on a dense grid.
struct MartingaleLayer {
    SuperDyadicGrid grid;
    std::vector<double> values;

    double at(const DyadicAngle& phi) const { return values[grid.dense_cell_of(phi)]; }
};

MartingaleLayer constant_layer(const SuperDyadicGrid& grid, double c);

// E(f | coarse) for a layer on a finer grid: exact block means.
MartingaleLayer conditional_expectation(const MartingaleLayer& f, const SuperDyadicGrid& coarse);
// E(f | grid) for a function of the angle (radians): Gauss-Legendre per cell.
MartingaleLayer conditional_expectation(const std::function<double(double)>& f, const SuperDyadicGrid& grid,
                                        int panels_per_cell = 1);
// Same values written on a finer grid that refines the layer's grid.
MartingaleLayer refine(const MartingaleLayer& f, const SuperDyadicGrid& fine);

// Throws NotAMartingale unless E(f_j | F_{j-1}) = f_{j-1} within tol * max(1, max |f_j|).
void check_martingale(const std::vector<MartingaleLayer>& layers, double tol = 1e-10);

struct SquareFunction {
    std::vector<MartingaleLayer> d;  // d_j = f_j - f_{j-1} on grid j, j = 1..n
    std::vector<MartingaleLayer> s;  // s_n on grid n - 1 (predictable), n = 1..n
    std::vector<MartingaleLayer> u;  // (2 log log s_n^2)^(1/2), NaN where s_n^2 <= e
};

// layers[i] lives on level i (same shift); checks the martingale property first.
SquareFunction differences_and_square_function(const std::vector<MartingaleLayer>& layers, double tol = 1e-10);

// f_n / (s_n u_n) on grid n, n = 1..; NaN where undefined.
std::vector<MartingaleLayer> lil_ratio(const std::vector<MartingaleLayer>& layers);

struct ExampleMartingale {
    std::vector<MartingaleLayer> g;  // g_n = mu(I) / |I| on grid n
    std::vector<MartingaleLayer> f;  // f_n = sum_{j <= n} 2^-j (g_j - g_{j-1}), f_0 = 0
    double max_difference = 0.0;     // max_n sup |d_n|
};

ExampleMartingale example_martingale(const Premeasure& p, unsigned n_max);

enum class IncrementKind { sign, uniform };

// Levels 0..n_max (n_max <= kMaxDenseLevel), f_0 = 0, |d_n| <= 1, E(d_n | F_{n-1}) = 0 exactly.
std::vector<MartingaleLayer> random_martingale(std::uint64_t seed, unsigned n_max, IncrementKind kind);

// One point's trajectory through a +-1 super-dyadic martingale: there d_n = +-1 with fair odds
// given F_{n-1}, so s_n^2 = n. Generator seeded from (seed, path).
struct LilPath {
    std::vector<double> f;  // f_1..f_n
    std::vector<double> s;  // s_1..s_n
};

LilPath lil_path(std::uint64_t seed, std::uint64_t path, unsigned n, double scale = 1.0);
// f_n / (s_n (2 log log s_n^2)^(1/2)) at the last level; NaN if s_n^2 <= e.
double lil_path_ratio(const LilPath& path);

struct LilSmokeResult {
    double max_ratio = 0.0;
    std::uint64_t argmax_path = 0;
    std::size_t exceed = 0;  // paths with ratio > threshold
};

LilSmokeResult lil_smoke(std::uint64_t seed, std::uint64_t paths, unsigned n, double threshold, double scale = 1.0);

}  // namespace korlab
