#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "korlab/martingale/martingale.hpp"
#include "korlab/premeasure/premeasure.hpp"
#include "korlab/radial/kernels.hpp"

namespace korlab {

// H_k: the 64 * 2^(2^k) arcs [i, i + 1) * 2 pi 2^-(2^k + 6).
unsigned arc_depth(unsigned k);
std::uint64_t arc_count(unsigned k);

// lambda_I(phi) = int_I B~_{k+4}(phi - theta) d mu(theta) for every I in H_k.
class AtomFamily {
public:
    // k in {1, 2}: B~_j exists for j >= 5 only.
    AtomFamily(unsigned k, const Premeasure& p);

    unsigned scale() const { return k_; }
    int level() const { return static_cast<int>(k_) + 4; }
    std::uint64_t size() const { return arc_count(k_); }
    DyadicAngle arc_start(std::uint64_t i) const;
    double arc_length() const;
    // lambda_I vanishes unless phi is within this distance of I.
    double support_radius() const;

    double lambda(std::uint64_t i, const DyadicAngle& phi, double offset = 0.0) const;
    // int_I P(x - theta) d mu(theta), P(t) = int_0^t B~: cell integrals of lambda_I are differences of it.
    double lambda_primitive(std::uint64_t i, const DyadicAngle& x, double offset = 0.0) const;

    // Arcs whose lambda can be nonzero at phi + offset.
    std::vector<std::uint64_t> arcs_near(const DyadicAngle& phi, double offset = 0.0) const;
    // Arcs whose support meets [start, start + length).
    std::vector<std::uint64_t> arcs_meeting(const DyadicAngle& start, double length) const;

    // sum over I in H_k of lambda_I(phi + offset).
    double sum(const DyadicAngle& phi, double offset = 0.0) const;
    // w~_{k+4}(phi + offset) computed directly, for the reconstruction check.
    double w_tilde(const DyadicAngle& phi, double offset = 0.0) const;

private:
    unsigned k_;
    const Premeasure* p_;
    bool zero_ = false;
    std::optional<SpectralKernelMoments> smooth_, primitive_;
};

struct ShiftPartition {
    struct Family {
        std::size_t shift = 0;  // index into shifts
        unsigned residue = 0;   // arc index mod 64
    };

    unsigned k_max = 0;
    unsigned shift_depth = 0;
    std::vector<DyadicAngle> shifts;
    std::vector<Family> families;
    std::vector<std::vector<std::uint32_t>> assignment;  // [k - 1][i] -> family
    bool enlarged = false;                                // the second candidate set was needed

    std::size_t family_count() const { return families.size(); }
    std::uint32_t family_of(unsigned k, std::uint64_t i) const { return assignment[k - 1][i]; }
    // Index of I' in the shifted level-k grid.
    std::uint64_t host_cell(unsigned k, std::uint64_t i) const;
    SuperDyadicGrid grid(std::uint32_t family, unsigned level) const;
};

// Greedy assignment over candidate shifts (a L_1 + b L_2) / 3 with a, b in {0, 1, 2}, then (once)
// the sixths; throws PartitionSearchFailed when neither set covers every arc.
ShiftPartition shift_partition(unsigned k_max);

struct PartitionCheck {
    bool coverage = false;
    bool containment = false;
    bool disjoint = false;
    double min_margin_ratio = 0.0;  // min over arcs of dist(3I, complement of I') / |I|
    std::string detail;
    bool ok() const { return coverage && containment && disjoint; }
};

// Exhaustive check of the three invariants in exact integer arithmetic.
PartitionCheck verify_partition(const ShiftPartition& part);

// Family martingales f_n^(s) = E(Lambda_n^(s) | omega_s F_n), evaluated pointwise.
class AssembledMartingales {
public:
    AssembledMartingales(const ShiftPartition& part, std::vector<const AtomFamily*> scales);

    std::size_t family_count() const { return part_->family_count(); }

    // Lambda_n^(s)(phi) = sum of lambda_I over I in V^(s) with scale k <= n.
    double Lambda(std::uint32_t s, unsigned n, const DyadicAngle& phi, double offset = 0.0) const;
    // Mean of Lambda_n^(s) over the cell of the omega_s grid at `level` with the given index.
    double cell_average(std::uint32_t s, unsigned n, unsigned level, const BigInt& cell) const;
    double f(std::uint32_t s, unsigned n, const DyadicAngle& phi) const;

    struct PointSquare {
        std::vector<double> f;           // f_0 .. f_n at phi
        std::vector<double> conditional;  // E(d_j^2 | F_{j-1})(phi), j = 1..n
        std::vector<bool> exact;          // enumerated (true) or sampled (false)
        double martingale_defect = 0.0;   // max over enumerated levels
        double s(unsigned n) const;
    };
    // Levels up to 4 enumerate every subcell; levels 5, 6 use `samples` stratified subcells.
    PointSquare square_function(std::uint32_t s, unsigned n, const DyadicAngle& phi, unsigned samples = 64) const;

    // Families whose Lambda_n is not identically zero on the omega_s cell at `level` around phi.
    std::vector<std::uint32_t> active_families(unsigned n, unsigned level, const DyadicAngle& phi) const;

private:
    bool touches(std::uint32_t s, unsigned n, const DyadicAngle& start, double length) const;

    const ShiftPartition* part_;
    std::vector<const AtomFamily*> scales_;  // scales_[k - 1]
};

struct AssemblyRow {
    unsigned n = 0;
    double sup_error = 0.0;          // max over families and points of |f_n - Lambda_n|
    double max_square_ratio = 0.0;   // max s_n / sqrt(n)
    double max_cs_ratio = 0.0;       // max |f_n| / (sqrt(n) s_n), Cauchy-Schwarz form
    double max_printed_ratio = 0.0;  // max |f_n| / (sqrt(n) s_n^(1/2)), as printed
    double reconstruction = 0.0;     // max |sum_s Lambda_{n-4}^(s) - sum_{j=5}^n w~_j|, n >= 5
    double martingale_defect = 0.0;
};

struct AssemblyReport {
    std::size_t families = 0;
    std::vector<AssemblyRow> rows;  // n = 1..n_max
};

// `scales` holds the atom families for k = 1, 2; points are the evaluation angles.
AssemblyReport assemble_martingales(const ShiftPartition& part, const std::vector<const AtomFamily*>& scales,
                                    unsigned n_max, const std::vector<DyadicAngle>& points);

}  // namespace korlab
