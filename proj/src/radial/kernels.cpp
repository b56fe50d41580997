#include "korlab/radial/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "korlab/errors.hpp"
#include "korlab/numerics/poisson.hpp"
#include "korlab/radial/radial_average.hpp"
#include "korlab/series/lacunary.hpp"
#include "korlab/simd/kernels.hpp"
#include "../series/angle_util.hpp"

namespace korlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
constexpr double kPanelLength = 0.5;  // x-panel of the radial rule
constexpr int kAnnulusPanels = 16;
constexpr std::size_t kChebyshevPoints = 33;

template <class T, class Make>
const T& cached(std::map<int, std::unique_ptr<T>>& cache, std::mutex& m, int key, Make make) {
    std::lock_guard lock(m);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, make()).first;
    return *it->second;
}

double wrap_pi(double x) { return std::remainder(x, 2.0 * kPi); }

double smooth_step_factor(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

double bump(double t) { return (t > 0.0 && t < 1.0) ? std::exp(-1.0 / (t * (1.0 - t))) : 0.0; }

double bump_slope(double t) {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    const double q = t * (1.0 - t);
    return bump(t) * (1.0 - 2.0 * t) / (q * q);
}

double bump_mass() {
    static const double z = quad::adaptive(bump, 0.0, 1.0, 1e-16, "bump mass").value;
    return z;
}

}  // namespace

// ---- radial rule ------------------------------------------------------------

RadialRule::RadialRule(int j) : j_(j) {
    if (j < 1) throw InvalidArgument("radial rule needs j >= 1");
    const double lo = std::ldexp(kLn2, j - 1);
    const double hi = std::ldexp(kLn2, j);
    const int panels = static_cast<int>(std::ceil((hi - lo) / kPanelLength));
    const auto& rule = quad::gauss_legendre(8);
    const double step = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
        const double c = lo + step * (p + 0.5);
        for (std::size_t i = 0; i < rule.size(); ++i) {
            const double x = c + 0.5 * step * rule.x[i];
            const double w = 0.5 * step * rule.w[i] / (x * x);
            const double delta = std::exp(-x);
            num_.push_back(w * (2.0 - delta) * delta);
            base_.push_back(delta * delta);
            slope_.push_back(4.0 * (1.0 - delta));
            weight_sum_ += w;
        }
    }
}

const RadialRule& RadialRule::block(int j) {
    static std::map<int, std::unique_ptr<RadialRule>> cache;
    static std::mutex m;
    return cached(cache, m, j, [j] { return std::unique_ptr<RadialRule>(new RadialRule(j)); });
}

void RadialRule::value_and_slope(double psi, double& value, double& slope) const {
    const double s = std::sin(0.5 * psi);
    const auto sums = simd::rational_sums(num_.data(), base_.data(), slope_.data(), num_.size(), s * s);
    value = sums.value;
    slope = -0.5 * std::sin(psi) * sums.slope;
}

double RadialRule::value(double psi) const {
    double v, d;
    value_and_slope(psi, v, d);
    return v;
}

double RadialRule::slope(double psi) const {
    double v, d;
    value_and_slope(psi, v, d);
    return d;
}

double kernel_A(int j, double psi) { return RadialRule::block(j).value(psi); }
double kernel_A_slope(int j, double psi) { return RadialRule::block(j).slope(psi); }

double kernel_B(int j, double psi) {
    if (j < 2) throw InvalidArgument("B_j needs j >= 2");
    return 2.0 * kernel_A(j, psi) - kernel_A(j - 1, psi);
}

double kernel_B_slope(int j, double psi) {
    if (j < 2) throw InvalidArgument("B_j needs j >= 2");
    return 2.0 * kernel_A_slope(j, psi) - kernel_A_slope(j - 1, psi);
}

std::vector<double> kernel_breaks(int j) {
    std::vector<double> b{0.0};
    const double finest = std::ldexp(1.0, -(1 << j) - 8);
    for (double t = finest; t < 1.0; t *= 2.0) b.push_back(t);
    for (int i = 0; i <= 4; ++i) b.push_back(1.0 + (kPi - 1.0) * i / 4.0);
    return b;
}

double kernel_mass_A(int j) {
    const auto& rule = RadialRule::block(j);
    return integrate_even_kernel([&](double p) { return rule.value(p); }, kernel_breaks(j));
}

double kernel_mass_B(int j) {
    return integrate_even_kernel([&](double p) { return kernel_B(j, p); }, kernel_breaks(j));
}

// ---- compactly supported surrogate -----------------------------------------

KernelProfile::KernelProfile(int j) : j_(j) {
    if (j < 5) throw InvalidArgument("B~_j needs j >= 5");
    const double sigma = std::ldexp(1.0, -(1 << (j - 4)));
    inner_ = std::ldexp(sigma, -7);
    outer_ = std::ldexp(sigma, -6);
    beta_scale_ = 1.0 / (2.0 * (outer_ - inner_) * bump_mass());

    edges_.push_back(0.0);
    for (double t = std::ldexp(1.0, -(1 << j) - 10); t < inner_; t *= 2.0) edges_.push_back(t);
    for (int i = 0; i <= kAnnulusPanels; ++i)
        edges_.push_back(inner_ + (outer_ - inner_) * i / kAnnulusPanels);

    const auto& rule = quad::gauss_legendre(16);
    std::vector<double> alpha_b;
    for (std::size_t p = 0; p + 1 < edges_.size(); ++p) {
        const double c = 0.5 * (edges_[p] + edges_[p + 1]);
        const double h = 0.5 * (edges_[p + 1] - edges_[p]);
        for (std::size_t i = 0; i < rule.size(); ++i) {
            const double psi = c + h * rule.x[i];
            nodes_.push_back({psi, h * rule.w[i], 0.0, 0.0});
            alpha_b.push_back(alpha(psi) * kernel_B(j, psi));
        }
    }
    double k = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) k += nodes_[i].weight * alpha_b[i];
    mass_alpha_b_ = 2.0 * k;

    for (auto& n : nodes_) {
        const auto v = evaluate(n.psi);
        n.bt = v.bt;
        n.bt_slope = v.bt_slope;
    }
    for (std::size_t p = 0; p + 1 < edges_.size(); ++p) {
        const auto xs = ChebyshevSeries::nodes(edges_[p], edges_[p + 1], kChebyshevPoints);
        std::vector<double> ys(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = evaluate(xs[i]).bt;
        pieces_.push_back(ChebyshevSeries::fit(edges_[p], edges_[p + 1], ys));
        primitive_pieces_.push_back(pieces_.back().integral());
    }
    primitive_at_edges_.push_back(0.0);
    for (std::size_t p = 0; p + 1 < edges_.size(); ++p)
        primitive_at_edges_.push_back(primitive_at_edges_.back() + primitive_pieces_[p](edges_[p + 1]));
}

double KernelProfile::primitive(double psi) const {
    const double a = std::abs(psi);
    if (a >= outer_) return 0.0;
    std::size_t k = std::upper_bound(edges_.begin(), edges_.end(), a) - edges_.begin() - 1;
    k = std::min(k, primitive_pieces_.size() - 1);
    const double v = primitive_at_edges_[k] + primitive_pieces_[k](a);
    return psi < 0.0 ? -v : v;
}

const KernelProfile& KernelProfile::get(int j) {
    static std::map<int, std::unique_ptr<KernelProfile>> cache;
    static std::mutex m;
    return cached(cache, m, j, [j] { return std::unique_ptr<KernelProfile>(new KernelProfile(j)); });
}

double KernelProfile::alpha(double psi) const {
    const double t = (outer_ - std::abs(psi)) / (outer_ - inner_);
    if (t >= 1.0) return 1.0;
    if (t <= 0.0) return 0.0;
    const double f = smooth_step_factor(t);
    return f / (f + smooth_step_factor(1.0 - t));
}

double KernelProfile::alpha_slope(double psi) const {
    const double t = (outer_ - std::abs(psi)) / (outer_ - inner_);
    if (t >= 1.0 || t <= 0.0) return 0.0;
    const double f = smooth_step_factor(t);
    const double g = smooth_step_factor(1.0 - t);
    const double dh = (f / (t * t) * g + f * g / ((1.0 - t) * (1.0 - t))) / ((f + g) * (f + g));
    return -std::copysign(1.0, psi) * dh / (outer_ - inner_);
}

double KernelProfile::beta(double psi) const {
    return beta_scale_ * bump((std::abs(psi) - inner_) / (outer_ - inner_));
}

double KernelProfile::beta_slope(double psi) const {
    const double t = (std::abs(psi) - inner_) / (outer_ - inner_);
    return std::copysign(1.0, psi) * beta_scale_ * bump_slope(t) / (outer_ - inner_);
}

KernelValues KernelProfile::evaluate(double psi) const {
    KernelValues v;
    double a1, d1, a0, d0;
    RadialRule::block(j_).value_and_slope(psi, a1, d1);
    RadialRule::block(j_ - 1).value_and_slope(psi, a0, d0);
    v.b = 2.0 * a1 - a0;
    v.b_slope = 2.0 * d1 - d0;
    if (std::abs(psi) >= outer_) return v;
    const double al = alpha(psi);
    v.bt = al * v.b - beta(psi) * mass_alpha_b_;
    v.bt_slope = alpha_slope(psi) * v.b + al * v.b_slope - beta_slope(psi) * mass_alpha_b_;
    return v;
}

double KernelProfile::integral() const {
    double s = 0.0;
    for (const auto& n : nodes_) s += n.weight * n.bt;
    return 2.0 * s;
}

double kernel_B_tilde(int j, double psi) { return KernelProfile::get(j).b_tilde(psi); }

// ---- estimates --------------------------------------------------------------

namespace {

double fd_first(const auto& f, double x, double h) {
    return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

double fd_second(const auto& f, double x, double h) {
    return (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) + 16 * f(x + h) - f(x + 2 * h)) / (12 * h * h);
}

}  // namespace

KernelEstimateReport kernel_estimate_report(int j) {
    if (j < 5 || j > 6) throw InvalidArgument("kernel estimates are tabulated for j = 5, 6");
    const auto& prof = KernelProfile::get(j);
    const double a = prof.plateau();
    const double b = prof.support();
    const double width = std::ldexp(1.0, -(1 << j));
    const int uniform = 1 << 12;

    KernelEstimateReport r;
    r.j = j;
    auto bt = [&](double x) { return prof.b_tilde(x); };
    auto diff = [&](double x) {
        const auto v = prof.evaluate(x);
        return v.b - v.bt;
    };

    std::vector<double> inside;
    for (int i = 0; i <= uniform; ++i) inside.push_back(b * i / uniform);
    for (double t = std::ldexp(width, -8); t < a; t *= std::exp2(1.0 / 64.0)) inside.push_back(t);
    for (double x : inside) {
        const double h = std::min(b / (2.0 * uniform), std::max(x, width) / 32.0);
        r.sup_slope = std::max(r.sup_slope, std::abs(fd_first(bt, x, h)));
        r.sup_curvature = std::max(r.sup_curvature, std::abs(fd_second(bt, x, h)));
        if (x > 0.0) r.sup_log_moment = std::max(r.sup_log_moment, std::abs(bt(x) * x * std::log(1.0 / x)));
        ++r.samples;
    }

    std::vector<double> outside;
    for (int i = 0; i <= uniform; ++i) outside.push_back(a + (b - a) * i / uniform);
    for (double t = b; t < kPi; t *= std::exp2(1.0 / 64.0)) outside.push_back(t);
    for (double x : outside) {
        const double h = std::min((b - a) / (2.0 * uniform), x / 64.0);
        r.sup_difference_slope = std::max(r.sup_difference_slope, std::abs(fd_first(diff, x, h)));
        ++r.samples;
    }

    double integral = 0.0;
    for (const auto& n : prof.nodes()) integral += n.weight * std::abs(n.bt_slope) * n.psi * std::log(1.0 / n.psi);
    r.slope_log_integral = 2.0 * integral;

    const double two_j = std::ldexp(1.0, 1 << j);
    const double scale = std::ldexp(1.0, -2 * j);
    r.const_slope = r.sup_slope / (scale * two_j * two_j);
    r.const_curvature = r.sup_curvature / (scale * two_j * two_j * two_j);
    r.const_log_moment = r.sup_log_moment / std::ldexp(1.0, -j);
    r.const_difference = r.sup_difference_slope / scale;
    return r;
}

// ---- arcs against B~ ---------------------------------------------------------

namespace {

struct Window {
    double lo, hi;
};

// psi-windows of phi - theta for theta in [theta_lo, theta_lo + length), given hi = phi - theta_lo,
// clipped to (-b, b).
std::vector<Window> arc_windows(double hi, double length, double b) {
    std::vector<Window> out;
    for (double shift : {0.0, 2.0 * kPi, -2.0 * kPi}) {
        const double l = std::max(hi - length + shift, -b);
        const double h = std::min(hi + shift, b);
        if (l < h) out.push_back({l, h});
    }
    return out;
}

double frequency_double(const BigInt& n) {
    if (detail::log2_big(n) > kMaxRealAngleLog2Frequency)
        throw FrequencyTooLargeForRealAngle("kernel moments need frequencies below 2^40");
    return static_cast<double>(n);
}

}  // namespace

SpectralKernelMoments::SpectralKernelMoments(int j, std::vector<SpectralTerm> terms, KernelKind kind)
    : j_(j), kind_(kind), terms_(std::move(terms)) {
    const auto& prof = KernelProfile::get(j);
    support_ = prof.support();
    const auto& edges = prof.edges();
    for (const auto& term : terms_) {
        Table t;
        t.n = frequency_double(term.frequency);
        const double n = t.n;
        t.edges.push_back(0.0);
        t.cum_cos.push_back(0.0);
        t.cum_sin.push_back(0.0);
        for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
            const double width = edges[p + 1] - edges[p];
            const int sub = std::max(1, static_cast<int>(std::ceil(n * width / 2.0)));
            if (sub > 4096) throw InvalidArgument("frequency too large for kernel moments");
            for (int s = 0; s < sub; ++s) {
                const double lo = edges[p] + width * s / sub;
                const double hi = (s + 1 == sub) ? edges[p + 1] : edges[p] + width * (s + 1) / sub;
                const auto xs = ChebyshevSeries::nodes(lo, hi, kChebyshevPoints);
                std::vector<double> yc(xs.size()), ys(xs.size());
                for (std::size_t i = 0; i < xs.size(); ++i) {
                    const double v = kind == KernelKind::smoothed ? prof.piece(p)(xs[i]) : prof.primitive(xs[i]);
                    yc[i] = v * std::cos(n * xs[i]);
                    ys[i] = v * std::sin(n * xs[i]);
                }
                t.cos_piece.push_back(ChebyshevSeries::fit(lo, hi, yc).integral());
                t.sin_piece.push_back(ChebyshevSeries::fit(lo, hi, ys).integral());
                t.edges.push_back(hi);
                t.cum_cos.push_back(t.cum_cos.back() + t.cos_piece.back()(hi));
                t.cum_sin.push_back(t.cum_sin.back() + t.sin_piece.back()(hi));
            }
        }
        tables_.push_back(std::move(t));
    }
}

double SpectralKernelMoments::moment(const Table& t, double x, bool cosine) const {
    const double ax = std::min(std::abs(x), t.edges.back());
    std::size_t k = std::upper_bound(t.edges.begin(), t.edges.end(), ax) - t.edges.begin();
    k = k == 0 ? 0 : k - 1;
    double v;
    if (k + 1 >= t.edges.size())
        v = cosine ? t.cum_cos.back() : t.cum_sin.back();
    else
        v = cosine ? t.cum_cos[k] + t.cos_piece[k](ax) : t.cum_sin[k] + t.sin_piece[k](ax);
    // even kernel: cosine moment odd, sine moment even; odd kernel the other way round
    const bool odd = cosine == (kind_ == KernelKind::smoothed);
    return (odd && x < 0.0) ? -v : v;
}

std::vector<SpectralKernelMoments::Phase> SpectralKernelMoments::phases(double phi) const {
    std::vector<Phase> out;
    for (const auto& t : tables_) {
        const double a = detail::real_multiple_angle(t.n, phi);
        out.push_back({std::cos(a), std::sin(a)});
    }
    return out;
}

std::vector<SpectralKernelMoments::Phase> SpectralKernelMoments::phases(const DyadicAngle& phi, double offset) const {
    std::vector<Phase> out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const double a = reduce_multiple_angle(terms_[i].frequency, phi).radians() + tables_[i].n * offset;
        out.push_back({std::cos(a), std::sin(a)});
    }
    return out;
}

double SpectralKernelMoments::window(const std::vector<Phase>& ph, double lo, double hi) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = tables_[i];
        const double c = ph[i].c, s = ph[i].s;
        const double dc = moment(t, hi, true) - moment(t, lo, true);
        const double ds = moment(t, hi, false) - moment(t, lo, false);
        sum += t.n * (-terms_[i].cos_coef * (s * dc - c * ds) + terms_[i].sin_coef * (c * dc + s * ds));
    }
    return sum;
}

double SpectralKernelMoments::arc_integral(double phi, double theta_lo, double length) const {
    const auto w = arc_windows(wrap_pi(phi - theta_lo), length, support_);
    if (w.empty()) return 0.0;
    const auto ph = phases(phi);
    double sum = 0.0;
    for (const auto& x : w) sum += window(ph, x.lo, x.hi);
    return sum;
}

double SpectralKernelMoments::arc_integral(const DyadicAngle& phi, double offset, const DyadicAngle& theta_lo,
                                           double length) const {
    const auto w = arc_windows((phi - theta_lo).radians() + offset, length, support_);
    if (w.empty()) return 0.0;
    const auto ph = phases(phi, offset);
    double sum = 0.0;
    for (const auto& x : w) sum += window(ph, x.lo, x.hi);
    return sum;
}

double SpectralKernelMoments::full(double phi) const { return window(phases(phi), -support_, support_); }

double SpectralKernelMoments::full(const DyadicAngle& phi, double offset) const {
    return window(phases(phi, offset), -support_, support_);
}

namespace {

// -[K F]_lo^hi + int_lo^hi F K', F(psi) = omega_phi(-psi), K = B~ or its primitive.
double by_parts_window(const KernelProfile& prof, KernelKind kind, double phi, const Premeasure& p, double lo,
                       double hi) {
    auto F = [&](double psi) { return p.omega(phi, -psi); };
    const bool smoothed = kind == KernelKind::smoothed;
    auto value = [&](double psi) { return smoothed ? prof.b_tilde(psi) : prof.primitive(psi); };
    auto slope = [&](double psi) { return smoothed ? prof.b_tilde_slope(psi) : prof.b_tilde(psi); };
    const double b = prof.support();
    double sum = 0.0;
    if (lo > -b) sum += value(lo) * F(lo);
    if (hi < b) sum -= value(hi) * F(hi);

    std::vector<double> cuts{lo, hi};
    for (double e : prof.edges()) {
        if (e > lo && e < hi) cuts.push_back(e);
        if (-e > lo && -e < hi) cuts.push_back(-e);
    }
    for (double bp : p.breakpoints()) {
        const double psi = wrap_pi(phi - bp);
        if (psi > lo && psi < hi) cuts.push_back(psi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const auto& edges = prof.edges();
    const auto& nodes = prof.nodes();
    const auto& rule = quad::gauss_legendre(16);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double l = cuts[i], h = cuts[i + 1];
        const double al = std::min(std::abs(l), std::abs(h));
        const double ah = std::max(std::abs(l), std::abs(h));
        auto it = std::lower_bound(edges.begin(), edges.end(), al);
        const bool whole = it != edges.end() && *it == al && it + 1 != edges.end() && *(it + 1) == ah;
        if (whole) {
            // tabulated nodes; B~' is odd, B~ even
            const std::size_t piece = static_cast<std::size_t>(it - edges.begin());
            const double sign = l < 0.0 ? -1.0 : 1.0;
            for (std::size_t k = 0; k < 16; ++k) {
                const auto& n = nodes[16 * piece + k];
                const double kp = smoothed ? sign * n.bt_slope : n.bt;
                sum += n.weight * kp * F(sign * n.psi);
            }
        } else {
            const double c = 0.5 * (l + h), r = 0.5 * (h - l);
            for (std::size_t k = 0; k < rule.size(); ++k) {
                const double psi = c + r * rule.x[k];
                sum += r * rule.w[k] * slope(psi) * F(psi);
            }
        }
    }
    return sum;
}

// int_0^pi k'(psi) [omega(-psi) - omega(psi)] for an even kernel k with slope k'.
template <class Slope>
double convolve_even_kernel(Slope&& slope, std::vector<double> breaks, double phi, const Premeasure& p) {
    for (double bp : p.breakpoints()) {
        const double psi = std::abs(wrap_pi(phi - bp));
        if (psi > 0.0 && psi < kPi) breaks.push_back(psi);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    auto f = [&](double psi) { return slope(psi) * (p.omega(phi, -psi) - p.omega(phi, psi)); };
    const auto& rule = quad::gauss_legendre(16);
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) sum += quad::fixed(f, breaks[i], breaks[i + 1], rule);
    return sum;
}

}  // namespace

double kernel_arc_integral(int j, double phi, const Premeasure& p, double theta_lo, double length, KernelKind kind) {
    const auto& prof = KernelProfile::get(j);
    double sum = 0.0;
    for (const auto& w : arc_windows(wrap_pi(phi - theta_lo), length, prof.support()))
        sum += by_parts_window(prof, kind, phi, p, w.lo, w.hi);
    return sum;
}

double w_tilde_by_parts(int j, double phi, const Premeasure& p) {
    const auto& prof = KernelProfile::get(j);
    return by_parts_window(prof, KernelKind::smoothed, phi, p, -prof.support(), prof.support());
}

double w_tilde(int j, double phi, const Premeasure& p) {
    if (auto spec = p.spectrum()) {
        if (spec->empty()) return 0.0;
        return SpectralKernelMoments(j, std::move(*spec)).full(phi);
    }
    return w_tilde_by_parts(j, phi, p);
}

double w_direct(int j, double phi, const Premeasure& p) {
    return convolve_even_kernel([j](double psi) { return kernel_B_slope(j, psi); }, kernel_breaks(j), phi, p);
}

double v_direct(int j, double phi, const Premeasure& p) {
    return convolve_even_kernel([j](double psi) { return kernel_A_slope(j, psi); }, kernel_breaks(j), phi, p);
}

// ---- coefficients c_j, c_{j,k} ------------------------------------------------

double c_jk(int j, int k) {
    if (j < 1) throw InvalidArgument("c_j needs j >= 1");
    if (j > 9) throw InvalidArgument("c_j is tabulated for j <= 9");
    const double n = std::ldexp(1.0, 1 << j);
    const double log_n = std::ldexp(kLn2, j);
    const double upper = k > 0 ? std::ldexp(kLn2, k) : INFINITY;
    const double lo = std::max(kLn2, log_n - 8.0);
    const double cut = log_n + 40.0;
    const double hi = std::min(upper, cut);
    auto f = [n](double x) { return std::exp(n * std::log1p(-std::exp(-x))) / (x * x); };
    double value = 0.0;
    if (lo < hi) value = quad::adaptive(f, lo, hi, 1e-10 * std::ldexp(1.0, -j), "c_{j,k}").value;
    // beyond ln N + 40 the factor r^N equals 1 to double precision
    if (upper > cut) value += 1.0 / cut - (std::isfinite(upper) ? 1.0 / upper : 0.0);
    return std::ldexp(value, j);
}

double c_coefficient(int j) { return c_jk(j, 0); }

double cosine_sum_approx(int k, const DyadicAngle& phi) {
    double sum = 0.0;
    for (int j = 1; j <= k; ++j)
        sum += c_coefficient(j) * reduce_frequency_angle(FrequencyExponent{1ull << j}, phi).cos();
    return sum;
}

double approx_error(int k, const std::vector<DyadicAngle>& phi_grid) {
    if (k < 1) return 0.0;
    const SuperLacunarySeries u2(2, 8);
    const auto r = BoundaryDepth::checkpoint(k);
    double sup = 0.0;
    for (const auto& phi : phi_grid)
        sup = std::max(sup, std::abs(I_u(u2, r, phi).value - cosine_sum_approx(k, phi)));
    return sup;
}

}  // namespace korlab
