#include "korlab/premeasure/premeasure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "../series/angle_util.hpp"
#include "korlab/errors.hpp"
#include "korlab/numerics/poisson.hpp"
#include "korlab/numerics/quadrature.hpp"
#include "korlab/series/lacunary.hpp"

namespace korlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_turns(double t) { return t - std::floor(t); }

}  // namespace

// ---------------------------------------------------------------- Arc

Arc::Arc(DyadicAngle start, DyadicAngle end, bool closed_start, bool closed_end)
    : start_(std::move(start)), end_(std::move(end)), closed_start_(closed_start), closed_end_(closed_end) {
    if (start_ == end_) throw InvalidArgument("degenerate arc; use Arc::full_circle for the whole circle");
}

Arc Arc::full_circle() {
    Arc a;
    a.full_ = true;
    return a;
}

double Arc::length_turns() const {
    if (full_) return 1.0;
    return (end_ - start_).turns();
}

// ---------------------------------------------------------------- Premeasure defaults

double Premeasure::omega(const DyadicAngle& phi, double offset) const { return omega(phi.radians(), offset); }

double Premeasure::omega(double phi, double offset) const {
    if (offset >= 0.0) return mass_real(phi, offset);
    return -mass_real(phi + offset, -offset);
}

std::optional<double> Premeasure::density(double, double) const { return std::nullopt; }

std::optional<double> Premeasure::density(const DyadicAngle& phi, double offset) const {
    return density(phi.radians(), offset);
}

std::vector<double> Premeasure::cell_masses(unsigned depth) const {
    const std::size_t n = std::size_t{1} << depth;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (depth == 0) {
            out[i] = mass(Arc::full_circle());
            continue;
        }
        out[i] = mass(Arc(DyadicAngle(BigInt(i), depth), DyadicAngle(BigInt(i + 1), depth)));
    }
    return out;
}

// ---------------------------------------------------------------- atoms

AtomPremeasure::AtomPremeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    double total = 0.0;
    for (auto& a : atoms_) {
        a.angle = kTwoPi * wrap_turns(a.angle / kTwoPi);
        total += a.mass;
    }
    if (std::abs(total) > 1e-12) throw InvalidArgument("atom masses must sum to zero");
}

double AtomPremeasure::mass(const Arc& arc) const {
    if (arc.is_full()) return 0.0;
    const double a = arc.start().turns();
    const double len = arc.length_turns();
    double m = 0.0;
    for (const auto& atom : atoms_) {
        const double t = wrap_turns(atom.angle / kTwoPi - a);
        const bool inside = (t > 0.0 && t < len) || (t == 0.0 && arc.closed_start()) || (t == len && arc.closed_end());
        if (inside) m += atom.mass;
    }
    return m;
}

double AtomPremeasure::mass_real(double a, double length) const {
    if (length >= kTwoPi) return 0.0;
    double m = 0.0;
    for (const auto& atom : atoms_) {
        const double t = kTwoPi * wrap_turns((atom.angle - a) / kTwoPi);
        if (t < length) m += atom.mass;
    }
    return m;
}

std::vector<double> AtomPremeasure::breakpoints() const {
    std::vector<double> b;
    for (const auto& a : atoms_) b.push_back(a.angle);
    return b;
}

// ---------------------------------------------------------------- densities

DensityPremeasure::DensityPremeasure(std::function<double(double)> density, Options options)
    : g_(std::move(density)), opt_(std::move(options)) {
    if (!(opt_.max_panel > 0.0)) throw InvalidArgument("panel width must be positive");
    const double total = mass_real(0.0, kTwoPi);
    if (std::abs(total) > 1e-9) throw InvalidArgument("density must have zero total mass");
}

DensityPremeasure::DensityPremeasure(std::function<double(double)> density)
    : DensityPremeasure(std::move(density), Options{}) {}

double DensityPremeasure::mass_real(double a, double length) const {
    if (length <= 0.0) return 0.0;
    // short arcs go through the density: a primitive difference would cancel
    if (opt_.primitive && length > 1e-3) return opt_.primitive(a + length) - opt_.primitive(a);
    const int panels = std::max(1, static_cast<int>(std::ceil(length / opt_.max_panel)));
    return quad::composite(g_, a, a + length, panels, quad::gauss_legendre(opt_.order));
}

double DensityPremeasure::mass(const Arc& arc) const {
    if (arc.is_full()) return mass_real(0.0, kTwoPi);
    return mass_real(kTwoPi * arc.start().turns(), kTwoPi * arc.length_turns());
}

std::optional<double> DensityPremeasure::density(double phi, double offset) const { return g_(phi + offset); }

std::optional<std::vector<SpectralTerm>> DensityPremeasure::spectrum() const {
    if (opt_.spectrum.empty()) return std::nullopt;
    return opt_.spectrum;
}

// ---------------------------------------------------------------- spectral

SpectralPremeasure::SpectralPremeasure(std::vector<SpectralTerm> terms, std::string label)
    : terms_(std::move(terms)), label_(std::move(label)) {
    for (const auto& t : terms_) {
        if (t.frequency <= 0) throw InvalidArgument("spectral frequencies must be positive");
        const double l = detail::log2_big(t.frequency);
        max_log2_freq_ = std::max(max_log2_freq_, l);
        freq_.push_back(std::exp2(l));
    }
}

void SpectralPremeasure::require_real_angles() const {
    if (max_log2_freq_ > kMaxRealAngleLog2Frequency)
        throw FrequencyTooLargeForRealAngle("spectral premeasure has frequencies above 2^40");
}

double SpectralPremeasure::primitive(const DyadicAngle& theta) const {
    double g = 0.0;
    for (const auto& t : terms_) {
        const double a = reduce_multiple_angle(t.frequency, theta).radians();
        g += t.cos_coef * std::cos(a) + t.sin_coef * std::sin(a);
    }
    return g;
}

double SpectralPremeasure::primitive(double theta) const {
    require_real_angles();
    double g = 0.0;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const double a = detail::real_multiple_angle(freq_[k], theta);
        g += terms_[k].cos_coef * std::cos(a) + terms_[k].sin_coef * std::sin(a);
    }
    return g;
}

double SpectralPremeasure::mass(const Arc& arc) const {
    if (arc.is_full()) return 0.0;
    return primitive(arc.end()) - primitive(arc.start());
}

double SpectralPremeasure::mass_real(double a, double length) const {
    if (length >= kTwoPi) return 0.0;
    return primitive(a + length) - primitive(a);
}

double SpectralPremeasure::omega(const DyadicAngle& phi, double offset) const {
    require_real_angles();
    double w = 0.0;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const double a = reduce_multiple_angle(terms_[k].frequency, phi).radians();
        const double b = freq_[k] * offset;
        w += increment(k, a, b);
    }
    return w;
}

double SpectralPremeasure::omega(double phi, double offset) const {
    require_real_angles();
    double w = 0.0;
    for (std::size_t k = 0; k < terms_.size(); ++k)
        w += increment(k, detail::real_multiple_angle(freq_[k], phi), freq_[k] * offset);
    return w;
}

// G(phi + offset) - G(phi) by angle addition, with cos b - 1 = -2 sin^2(b/2) so small offsets keep full precision.
double SpectralPremeasure::increment(std::size_t k, double a, double b) const {
    const double ca = std::cos(a), sa = std::sin(a), sb = std::sin(b);
    const double h = std::sin(0.5 * b);
    const double cm1 = -2.0 * h * h;
    return terms_[k].cos_coef * (ca * cm1 - sa * sb) + terms_[k].sin_coef * (sa * cm1 + ca * sb);
}

std::optional<double> SpectralPremeasure::density(double phi, double offset) const {
    require_real_angles();
    double g = 0.0;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const double a = detail::real_multiple_angle(freq_[k], phi + offset);
        g += freq_[k] * (-terms_[k].cos_coef * std::sin(a) + terms_[k].sin_coef * std::cos(a));
    }
    return g;
}

std::optional<double> SpectralPremeasure::density(const DyadicAngle& phi, double offset) const {
    require_real_angles();
    double g = 0.0;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const double a = reduce_multiple_angle(terms_[k].frequency, phi).radians() + freq_[k] * offset;
        g += freq_[k] * (-terms_[k].cos_coef * std::sin(a) + terms_[k].sin_coef * std::cos(a));
    }
    return g;
}

std::vector<double> SpectralPremeasure::cell_masses(unsigned depth) const {
    const std::size_t n = std::size_t{1} << depth;
    if (depth == 0) return {0.0};
    // G at the grid points k / 2^depth; N k mod 2^depth in machine integers.
    const std::uint64_t mask = (std::uint64_t{1} << depth) - 1;
    std::vector<double> g(n + 1, 0.0);
    for (const auto& t : terms_) {
        const auto nmod = static_cast<std::uint64_t>(t.frequency & BigInt(mask));
        for (std::size_t k = 0; k <= n; ++k) {
            const std::uint64_t m = (nmod * static_cast<std::uint64_t>(k)) & mask;
            double turns = std::ldexp(static_cast<double>(m), -static_cast<int>(depth));
            if (turns > 0.5) turns -= 1.0;
            const double a = kTwoPi * turns;
            g[k] += t.cos_coef * std::cos(a) + t.sin_coef * std::sin(a);
        }
    }
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = g[k + 1] - g[k];
    return out;
}

// ---------------------------------------------------------------- operations

double mu(const Premeasure& p, const Arc& arc) { return p.mass(arc); }

KappaBoundReport kappa_bounds(const Premeasure& p, unsigned depth_max) {
    if (depth_max > 20) throw InvalidArgument("kappa sweep depth is capped at 20");
    KappaBoundReport r;
    if (depth_max == 0) return r;
    std::vector<double> level = p.cell_masses(depth_max);
    for (unsigned d = depth_max; d >= 1; --d) {
        const double len = std::ldexp(1.0, -static_cast<int>(d));
        const double scale = len * (1.0 + d * std::numbers::ln2);
        for (std::size_t i = 0; i < level.size(); ++i) {
            const double ratio = level[i] / scale;
            if (ratio > r.kappa_upper) {
                r.kappa_upper = ratio;
                r.witness_upper_depth = d;
                r.witness_upper_index = i;
            }
            if (std::abs(ratio) > r.kappa_abs) {
                r.kappa_abs = std::abs(ratio);
                r.witness_abs_depth = d;
                r.witness_abs_index = i;
            }
        }
        std::vector<double> coarser(level.size() / 2);
        for (std::size_t i = 0; i < coarser.size(); ++i) coarser[i] = level[2 * i] + level[2 * i + 1];
        level = std::move(coarser);
    }
    return r;
}

double distribution(const Premeasure& p, const DyadicAngle& phi, const DyadicAngle& theta) {
    if (phi == theta) return 0.0;
    return p.mass(Arc(phi, theta));
}

namespace {

// Window edges on [0, pi]: geometric toward 0 down to ~delta / 256, plus jump locations.
std::vector<double> poisson_breaks(double delta, double phi, const std::vector<double>& jumps) {
    std::vector<double> b{0.0};
    const double finest = std::max(delta * std::ldexp(1.0, -8), 1e-300);
    for (double t = finest; t < 1.0; t *= 2.0) b.push_back(t);
    b.push_back(1.0);
    b.push_back(std::numbers::pi);
    for (double j : jumps) {
        double t = std::remainder(j - phi, kTwoPi);
        t = std::abs(t);
        if (t > 0.0 && t < std::numbers::pi) b.push_back(t);
    }
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return b;
}

template <class Omega>
double derivative_form(double delta, double phi, const std::vector<double>& jumps, Omega&& omega,
                       const PoissonOptions& opt) {
    if (delta >= 1.0) return 0.0;
    const auto breaks = poisson_breaks(delta, phi, jumps);
    auto integrand = [&](double psi) {
        return poisson_kernel_slope_delta(delta, psi) * (omega(-psi) - omega(psi));
    };
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
        sum += quad::adaptive(integrand, breaks[i], breaks[i + 1], opt.abs_tol, "poisson integral").value;
    return sum;
}

}  // namespace

double poisson_integral_real(const Premeasure& p, double delta, double phi, PoissonOptions opt) {
    return derivative_form(delta, phi, p.breakpoints(), [&](double off) { return p.omega(phi, off); }, opt);
}

double poisson_integral(const Premeasure& p, BoundaryDepth d, const DyadicAngle& phi, PoissonOptions opt) {
    const double delta = delta_value(d);
    return derivative_form(delta, phi.radians(), p.breakpoints(), [&](double off) { return p.omega(phi, off); },
                           opt);
}

double poisson_integral_direct(const Premeasure& p, BoundaryDepth d, const DyadicAngle& phi, PoissonOptions opt) {
    const double delta = delta_value(d);
    if (!p.density(phi, 0.0)) throw InvalidArgument("direct Poisson form needs a density");
    if (delta >= 1.0) {
        // r = 0: the mean of the density, which is zero.
        return 0.0;
    }
    const auto breaks = poisson_breaks(delta, phi.radians(), {});
    auto integrand = [&](double psi) {
        const double h = std::sin(0.5 * psi);
        return poisson_kernel_delta(delta, h * h) * (*p.density(phi, -psi) + *p.density(phi, psi));
    };
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
        sum += quad::adaptive(integrand, breaks[i], breaks[i + 1], opt.abs_tol, "direct poisson integral").value;
    return sum;
}

std::unique_ptr<Premeasure> from_harmonic_trace(const DiskFunction& u, int level) {
    if (level < 0) throw InvalidArgument("trace level must be >= 0");
    const BoundaryDepth depth(std::ldexp(1.0, level));
    if (auto terms = u.trig_terms()) {
        std::vector<SpectralTerm> spec;
        for (const auto& t : *terms) {
            const double rho = pow_r_log2(depth, t.log2_frequency);
            const double amp = rho * std::abs(t.coefficient);
            if (amp < 1e-18) continue;
            const double n = std::exp2(t.log2_frequency);
            const double scale = rho / (kTwoPi * n);
            // Re(c e^{iN theta}) = a cos - b sin; its primitive is (a sin + b cos) / N.
            spec.push_back({t.frequency, scale * t.coefficient.imag(), scale * t.coefficient.real()});
        }
        return std::make_unique<SpectralPremeasure>(std::move(spec), "trace");
    }
    if (level > 4) throw InvalidArgument("quadrature traces are limited to level 4 (65536 cells)");
    const double delta = delta_value(depth);
    const double cell = kTwoPi * std::ldexp(1.0, -(1 << level));
    auto raw = [&u, delta](double theta) { return u.slice(theta)(delta); };
    const int cells = 1 << (1 << level);
    const double mean = quad::composite(raw, 0.0, kTwoPi, cells, quad::gauss_legendre(8)) / kTwoPi;
    DensityPremeasure::Options opt;
    opt.max_panel = cell;
    opt.order = 8;
    return std::make_unique<DensityPremeasure>(
        [raw, mean](double theta) { return (raw(theta) - mean) / kTwoPi; }, opt);
}

}  // namespace korlab
