#include "korlab/martingale/atoms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "korlab/errors.hpp"
#include "korlab/numerics/quadrature.hpp"

namespace korlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::uint32_t kUnassigned = 0xffffffffu;

std::int64_t floor_div(double x, double l) { return static_cast<std::int64_t>(std::floor(x / l)); }

}  // namespace

unsigned arc_depth(unsigned k) { return (1u << k) + 6; }

std::uint64_t arc_count(unsigned k) {
    if (k > 4) throw InvalidArgument("H_k is enumerated for k <= 4");
    return std::uint64_t{64} << (1u << k);
}

// ---- atoms -------------------------------------------------------------------

AtomFamily::AtomFamily(unsigned k, const Premeasure& p) : k_(k), p_(&p) {
    if (k < 1 || k > 2) throw InvalidArgument("atoms exist at scales k = 1, 2 (B~_j needs j >= 5, j <= 6)");
    if (auto spec = p.spectrum()) {
        if (spec->empty()) {
            zero_ = true;
        } else {
            smooth_.emplace(level(), *spec, KernelKind::smoothed);
            primitive_.emplace(level(), *spec, KernelKind::primitive);
        }
    }
}

DyadicAngle AtomFamily::arc_start(std::uint64_t i) const { return DyadicAngle(BigInt(i % size()), arc_depth(k_)); }

double AtomFamily::arc_length() const { return std::ldexp(kTwoPi, -static_cast<int>(arc_depth(k_))); }

double AtomFamily::support_radius() const { return KernelProfile::get(level()).support(); }

double AtomFamily::lambda(std::uint64_t i, const DyadicAngle& phi, double offset) const {
    if (zero_) return 0.0;
    if (smooth_) return smooth_->arc_integral(phi, offset, arc_start(i), arc_length());
    return kernel_arc_integral(level(), phi.radians() + offset, *p_, arc_start(i).radians(), arc_length(),
                               KernelKind::smoothed);
}

double AtomFamily::lambda_primitive(std::uint64_t i, const DyadicAngle& x, double offset) const {
    if (zero_) return 0.0;
    if (primitive_) return primitive_->arc_integral(x, offset, arc_start(i), arc_length());
    return kernel_arc_integral(level(), x.radians() + offset, *p_, arc_start(i).radians(), arc_length(),
                               KernelKind::primitive);
}

std::vector<std::uint64_t> AtomFamily::arcs_meeting(const DyadicAngle& start, double length) const {
    const std::uint64_t n = size();
    const std::uint64_t m = static_cast<std::uint64_t>(cell_index(start, arc_depth(k_)) % n);
    const double l = arc_length();
    const double pos = (start - arc_start(m)).radians();  // in [0, l)
    const double b = support_radius();
    // arc i meets [start - b, start + length + b) when its own span overlaps it
    const std::int64_t first = floor_div(pos - b, l);
    const std::int64_t last = floor_div(pos + length + b, l);
    std::vector<std::uint64_t> out;
    if (last - first + 1 >= static_cast<std::int64_t>(n)) {
        for (std::uint64_t i = 0; i < n; ++i) out.push_back(i);
        return out;
    }
    for (std::int64_t d = first; d <= last; ++d) {
        const std::int64_t i = static_cast<std::int64_t>(m) + d;
        out.push_back(static_cast<std::uint64_t>(((i % static_cast<std::int64_t>(n)) + n) % n));
    }
    return out;
}

std::vector<std::uint64_t> AtomFamily::arcs_near(const DyadicAngle& phi, double offset) const {
    const std::uint64_t n = size();
    const std::uint64_t m = static_cast<std::uint64_t>(cell_index(phi, arc_depth(k_)) % n);
    const double l = arc_length();
    const double pos = (phi - arc_start(m)).radians() + offset;
    const double b = support_radius();
    std::vector<std::uint64_t> out;
    for (std::int64_t d = floor_div(pos - b, l); d <= floor_div(pos + b, l); ++d) {
        const std::int64_t i = static_cast<std::int64_t>(m) + d;
        out.push_back(static_cast<std::uint64_t>(((i % static_cast<std::int64_t>(n)) + n) % n));
    }
    return out;
}

double AtomFamily::sum(const DyadicAngle& phi, double offset) const {
    double s = 0.0;
    for (auto i : arcs_near(phi, offset)) s += lambda(i, phi, offset);
    return s;
}

double AtomFamily::w_tilde(const DyadicAngle& phi, double offset) const {
    if (zero_) return 0.0;
    if (smooth_) return smooth_->full(phi, offset);
    return w_tilde_by_parts(level(), phi.radians() + offset, *p_);
}

// ---- shift partition -----------------------------------------------------------

namespace {

struct Geometry {
    unsigned depth;          // shift depth D
    std::uint64_t modulus;   // 2^D
    std::uint64_t arc;       // |I| in units of 2^-D turns
    std::uint64_t cell;      // L_k in the same units
};

Geometry geometry(unsigned shift_depth, unsigned k) {
    return {shift_depth, std::uint64_t{1} << shift_depth, std::uint64_t{1} << (shift_depth - arc_depth(k)),
            std::uint64_t{1} << (shift_depth - (1u << k))};
}

// Offset of the left end of 3I inside its shifted level-k cell.
std::uint64_t offset_in_cell(const Geometry& g, std::uint64_t i, std::uint64_t shift) {
    const std::uint64_t lo = ((i + g.modulus / g.arc - 1) % (g.modulus / g.arc)) * g.arc;  // (i - 1) |I|
    return ((lo + g.modulus - shift) % g.modulus) % g.cell;
}

// Distance of 3I to the complement of its host cell, in units of 2^-D turns (negative when not contained).
std::int64_t margin(const Geometry& g, std::uint64_t r) {
    const auto left = static_cast<std::int64_t>(r);
    const auto right = static_cast<std::int64_t>(g.cell) - static_cast<std::int64_t>(r + 3 * g.arc);
    return std::min(left, right);
}

std::vector<std::uint64_t> candidate_shifts(unsigned depth, unsigned denominator) {
    // (a L_1 + b L_2) / denominator in turns, rounded to depth D
    std::vector<std::uint64_t> out;
    const std::uint64_t l1 = std::uint64_t{1} << (depth - 2);
    const std::uint64_t l2 = std::uint64_t{1} << (depth - 4);
    for (unsigned a = 0; a < denominator; ++a)
        for (unsigned b = 0; b < denominator; ++b) {
            const std::uint64_t num = a * l1 + b * l2;
            const std::uint64_t v = (num + denominator / 2) / denominator;
            if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
        }
    return out;
}

bool try_assign(ShiftPartition& part, const std::vector<std::uint64_t>& shifts) {
    part.shifts.clear();
    for (auto s : shifts) part.shifts.emplace_back(BigInt(s), part.shift_depth);
    std::vector<std::vector<std::size_t>> choice(part.k_max);  // [k-1][residue] -> shift index
    for (unsigned k = 1; k <= part.k_max; ++k) {
        const auto g = geometry(part.shift_depth, k);
        choice[k - 1].assign(64, shifts.size());
        for (unsigned p = 0; p < 64; ++p) {
            for (std::size_t s = 0; s < shifts.size(); ++s) {
                // margin >= |I| / 2
                if (2 * margin(g, offset_in_cell(g, p, shifts[s])) >= static_cast<std::int64_t>(g.arc)) {
                    choice[k - 1][p] = s;
                    break;
                }
            }
            if (choice[k - 1][p] == shifts.size()) return false;
        }
    }
    std::set<std::pair<std::size_t, unsigned>> used;
    for (unsigned k = 1; k <= part.k_max; ++k)
        for (unsigned p = 0; p < 64; ++p) used.insert({choice[k - 1][p], p});
    part.families.clear();
    for (auto [s, p] : used) part.families.push_back({s, p});
    auto family_index = [&](std::size_t s, unsigned p) {
        for (std::size_t f = 0; f < part.families.size(); ++f)
            if (part.families[f].shift == s && part.families[f].residue == p) return static_cast<std::uint32_t>(f);
        return kUnassigned;
    };
    part.assignment.assign(part.k_max, {});
    for (unsigned k = 1; k <= part.k_max; ++k) {
        std::vector<std::uint32_t> by_residue(64);
        for (unsigned p = 0; p < 64; ++p) by_residue[p] = family_index(choice[k - 1][p], p);
        auto& a = part.assignment[k - 1];
        a.resize(arc_count(k));
        for (std::uint64_t i = 0; i < a.size(); ++i) a[i] = by_residue[i % 64];
    }
    return true;
}

}  // namespace

std::uint64_t ShiftPartition::host_cell(unsigned k, std::uint64_t i) const {
    const auto g = geometry(shift_depth, k);
    const std::uint64_t shift = static_cast<std::uint64_t>(shifts[families[family_of(k, i)].shift].numerator());
    const std::uint64_t lo = ((i + g.modulus / g.arc - 1) % (g.modulus / g.arc)) * g.arc;
    return ((lo + g.modulus - shift) % g.modulus) / g.cell;
}

SuperDyadicGrid ShiftPartition::grid(std::uint32_t family, unsigned level) const {
    return SuperDyadicGrid(level, shifts[families[family].shift]);
}

ShiftPartition shift_partition(unsigned k_max) {
    if (k_max < 1 || k_max > 4) throw InvalidArgument("shift partition needs 1 <= k_max <= 4");
    ShiftPartition part;
    part.k_max = k_max;
    part.shift_depth = std::max(1u << k_max, 4u) + 14;
    if (try_assign(part, candidate_shifts(part.shift_depth, 3))) return part;
    part.enlarged = true;
    if (try_assign(part, candidate_shifts(part.shift_depth, 6))) return part;
    throw PartitionSearchFailed("no shift among the thirds or sixths of L_1, L_2 hosts every arc");
}

PartitionCheck verify_partition(const ShiftPartition& part) {
    PartitionCheck c;
    c.coverage = c.containment = c.disjoint = true;
    c.min_margin_ratio = INFINITY;
    for (unsigned k = 1; k <= part.k_max; ++k) {
        const auto g = geometry(part.shift_depth, k);
        const auto& a = part.assignment.at(k - 1);
        if (a.size() != arc_count(k)) {
            c.coverage = false;
            c.detail += "scale " + std::to_string(k) + ": wrong arc count; ";
            continue;
        }
        std::vector<std::uint64_t> keys;
        keys.reserve(a.size());
        const std::uint64_t cells = std::uint64_t{1} << (1u << k);
        for (std::uint64_t i = 0; i < a.size(); ++i) {
            if (a[i] >= part.families.size()) {
                c.coverage = false;
                c.detail += "arc " + std::to_string(i) + " at scale " + std::to_string(k) + " unassigned; ";
                continue;
            }
            const std::uint64_t shift = static_cast<std::uint64_t>(part.shifts[part.families[a[i]].shift].numerator());
            const auto m = margin(g, offset_in_cell(g, i, shift));
            c.min_margin_ratio = std::min(c.min_margin_ratio, static_cast<double>(m) / static_cast<double>(g.arc));
            if (2 * m < static_cast<std::int64_t>(g.arc)) {
                c.containment = false;
                c.detail += "3I not inside I' for arc " + std::to_string(i) + " at scale " + std::to_string(k) + "; ";
            }
            keys.push_back(a[i] * cells + part.host_cell(k, i));
        }
        std::sort(keys.begin(), keys.end());
        if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
            c.disjoint = false;
            c.detail += "two arcs of one family share a host cell at scale " + std::to_string(k) + "; ";
        }
    }
    return c;
}

// ---- assembled martingales ------------------------------------------------------

AssembledMartingales::AssembledMartingales(const ShiftPartition& part, std::vector<const AtomFamily*> scales)
    : part_(&part), scales_(std::move(scales)) {
    if (scales_.size() > part.k_max) throw InvalidArgument("partition does not cover every atom scale");
    for (std::size_t k = 0; k < scales_.size(); ++k)
        if (scales_[k]->scale() != k + 1) throw InvalidArgument("atom families must be ordered by scale");
}

double AssembledMartingales::Lambda(std::uint32_t s, unsigned n, const DyadicAngle& phi, double offset) const {
    double sum = 0.0;
    const unsigned top = std::min<unsigned>(n, scales_.size());
    for (unsigned k = 1; k <= top; ++k)
        for (auto i : scales_[k - 1]->arcs_near(phi, offset))
            if (part_->family_of(k, i) == s) sum += scales_[k - 1]->lambda(i, phi, offset);
    return sum;
}

bool AssembledMartingales::touches(std::uint32_t s, unsigned n, const DyadicAngle& start, double length) const {
    const unsigned top = std::min<unsigned>(n, scales_.size());
    for (unsigned k = 1; k <= top; ++k)
        for (auto i : scales_[k - 1]->arcs_meeting(start, length))
            if (part_->family_of(k, i) == s) return true;
    return false;
}

double AssembledMartingales::cell_average(std::uint32_t s, unsigned n, unsigned level, const BigInt& cell) const {
    const auto grid = part_->grid(s, level);
    const DyadicAngle start = grid.cell_start(cell);
    const double len = grid.cell_length();
    if (!touches(s, n, start, len)) return 0.0;
    const unsigned top = std::min<unsigned>(n, scales_.size());
    if (level <= 5) {
        // int_J lambda_I = P_I(end) - P_I(start); only arcs within reach of an endpoint contribute
        const DyadicAngle end = grid.cell_start(cell + 1);
        double total = 0.0;
        for (unsigned k = 1; k <= top; ++k) {
            const auto* fam = scales_[k - 1];
            for (auto i : fam->arcs_near(end))
                if (part_->family_of(k, i) == s) total += fam->lambda_primitive(i, end);
            for (auto i : fam->arcs_near(start))
                if (part_->family_of(k, i) == s) total -= fam->lambda_primitive(i, start);
        }
        return total / len;
    }
    // cells of width 2 pi 2^-64: endpoint differences would cancel, integrate directly
    auto f = [&](double t) { return Lambda(s, n, start, t); };
    return quad::adaptive(f, 0.0, len, 1e-12 * len, "cell average of Lambda", 60).value / len;
}

double AssembledMartingales::f(std::uint32_t s, unsigned n, const DyadicAngle& phi) const {
    return cell_average(s, n, n, part_->grid(s, n).cell_of(phi));
}

double AssembledMartingales::PointSquare::s(unsigned n) const {
    double sum = 0.0;
    for (unsigned j = 0; j < n && j < conditional.size(); ++j) sum += conditional[j];
    return std::sqrt(sum);
}

AssembledMartingales::PointSquare AssembledMartingales::square_function(std::uint32_t s, unsigned n,
                                                                         const DyadicAngle& phi,
                                                                         unsigned samples) const {
    PointSquare out;
    std::vector<BigInt> cells;
    for (unsigned j = 0; j <= n; ++j) {
        cells.push_back(part_->grid(s, j).cell_of(phi));
        out.f.push_back(cell_average(s, j, j, cells.back()));
    }
    for (unsigned j = 1; j <= n; ++j) {
        const auto parent = part_->grid(s, j - 1);
        if (!touches(s, j, parent.cell_start(cells[j - 1]), parent.cell_length())) {
            out.conditional.push_back(0.0);
            out.exact.push_back(true);
            continue;
        }
        const unsigned bits = (1u << j) - (1u << (j - 1));
        const BigInt first = cells[j - 1] << bits;
        double mean = 0.0, square = 0.0;
        if (bits <= 8) {
            const unsigned count = 1u << bits;
            for (unsigned m = 0; m < count; ++m) {
                const double v = cell_average(s, j, j, first + m);
                mean += v;
                square += (v - out.f[j - 1]) * (v - out.f[j - 1]);
            }
            mean /= count;
            square /= count;
            out.martingale_defect = std::max(out.martingale_defect, std::abs(mean - out.f[j - 1]));
            out.exact.push_back(true);
        } else {
            // stratified: the middle subcell of each of `samples` equal runs
            const BigInt stride = (BigInt(1) << bits) / samples;
            for (unsigned m = 0; m < samples; ++m) {
                const double v = cell_average(s, j, j, first + stride * m + stride / 2);
                square += (v - out.f[j - 1]) * (v - out.f[j - 1]);
            }
            square /= samples;
            out.exact.push_back(false);
        }
        out.conditional.push_back(square);
    }
    return out;
}

std::vector<std::uint32_t> AssembledMartingales::active_families(unsigned n, unsigned level,
                                                                 const DyadicAngle& phi) const {
    const double len = std::ldexp(kTwoPi, -static_cast<int>(1u << level));
    const DyadicAngle lo = phi - DyadicAngle(1, 1u << level);
    std::set<std::uint32_t> fams;
    const unsigned top = std::min<unsigned>(n, scales_.size());
    for (unsigned k = 1; k <= top; ++k)
        for (auto i : scales_[k - 1]->arcs_meeting(lo, 2.0 * len)) fams.insert(part_->family_of(k, i));
    std::vector<std::uint32_t> out;
    for (auto s : fams) {
        const auto g = part_->grid(s, level);
        const BigInt c = g.cell_of(phi);
        if (touches(s, n, g.cell_start(c), g.cell_length())) out.push_back(s);
    }
    return out;
}

AssemblyReport assemble_martingales(const ShiftPartition& part, const std::vector<const AtomFamily*>& scales,
                                    unsigned n_max, const std::vector<DyadicAngle>& points) {
    if (n_max > 6) throw InvalidArgument("assembled martingales stop at level 6");
    AssembledMartingales m(part, scales);
    AssemblyReport rep;
    rep.families = m.family_count();
    rep.rows.resize(n_max);
    for (unsigned n = 1; n <= n_max; ++n) rep.rows[n - 1].n = n;

    for (const auto& phi : points) {
        // every family with an atom near phi at the coarsest level carries a nonzero square function there
        for (std::uint32_t s : m.active_families(n_max, 0, phi)) {
            const auto sq = m.square_function(s, n_max, phi);
            for (unsigned n = 1; n <= n_max; ++n) {
                auto& row = rep.rows[n - 1];
                const double lam = m.Lambda(s, n, phi);
                const double fn = sq.f[n];
                const double sn = sq.s(n);
                row.sup_error = std::max(row.sup_error, std::abs(fn - lam));
                row.max_square_ratio = std::max(row.max_square_ratio, sn / std::sqrt(static_cast<double>(n)));
                if (sn > 0.0) {
                    row.max_cs_ratio = std::max(row.max_cs_ratio, std::abs(fn) / (std::sqrt(static_cast<double>(n)) * sn));
                    row.max_printed_ratio =
                        std::max(row.max_printed_ratio, std::abs(fn) / (std::sqrt(static_cast<double>(n)) * std::sqrt(sn)));
                }
                row.martingale_defect = std::max(row.martingale_defect, sq.martingale_defect);
            }
        }
        for (unsigned n = 5; n <= n_max; ++n) {
            double lhs = 0.0, rhs = 0.0;
            for (std::uint32_t s : m.active_families(n - 4, 6, phi)) lhs += m.Lambda(s, n - 4, phi);
            for (unsigned k = 1; k <= n - 4 && k <= scales.size(); ++k) rhs += scales[k - 1]->w_tilde(phi);
            auto& row = rep.rows[n - 1];
            row.reconstruction = std::max(row.reconstruction, std::abs(lhs - rhs));
        }
    }
    return rep;
}

}  // namespace korlab
