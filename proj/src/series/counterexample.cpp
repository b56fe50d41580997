#include "korlab/series/counterexample.hpp"

#include <cmath>
#include <numbers>

#include "angle_util.hpp"
#include "korlab/errors.hpp"
#include "korlab/series/lacunary.hpp"

namespace korlab {

namespace {

constexpr double kPoleDistance = 1e-13;

}  // namespace

double re_phi(double rho, double one_minus_rho, double one_minus_cos, double sin_sq) {
    // rho - cos = (1 - cos) - (1 - rho), both known without cancellation.
    const double gap = one_minus_cos - one_minus_rho;
    const double den = gap * gap + sin_sq;
    if (std::sqrt(den) < kPoleDistance) throw PoleProximity("w is within 1e-13 of the pole w = 1");
    return rho * gap / den;
}

double Counterexample::term(int n, double delta, double one_minus_cos, double sin_sq) {
    const double log2_n = std::ldexp(1.0, n);
    const double rho = pow_delta(delta, log2_n);
    if (rho < 1e-300) return 0.0;
    return std::ldexp(re_phi(rho, pow_delta_complement(delta, log2_n), one_minus_cos, sin_sq), n);
}

Counterexample::Counterexample(int n_max, int start) : n_max_(n_max), start_(start) {
    if (start < 1) throw InvalidArgument("summation start must be >= 1");
    if (n_max < start) throw InvalidArgument("n_max below the summation start");
    if (n_max > 20) throw InvalidArgument("n_max above 20 is not supported");
}

RadialSlice Counterexample::make_slice(std::vector<double> omc, std::vector<double> ssq) const {
    return [this, omc = std::move(omc), ssq = std::move(ssq)](double delta) {
        double sum = 0.0;
        for (int n = start_; n <= n_max_; ++n) {
            const auto i = static_cast<std::size_t>(n - start_);
            if (std::isnan(omc[i]))
                throw FrequencyTooLargeForRealAngle("counterexample term needs a frequency above 2^40");
            sum += term(n, delta, omc[i], ssq[i]);
            if (n == n_max_) break;
            // rho_{k+1} <= rho_k^2, so the tail after n is at most twice the next term's modulus bound.
            const double next = pow_delta(delta, std::ldexp(1.0, n + 1));
            if (next <= 0.25 && 2.0 * std::ldexp(next / (1.0 - next), n + 1) < kTailTolerance) return sum;
        }
        throw TailNotCertified("counterexample tail not certified within n_max " + std::to_string(n_max_));
    };
}

RadialSlice Counterexample::slice(const DyadicAngle& phi) const {
    std::vector<double> omc, ssq;
    for (int n = start_; n <= n_max_; ++n) {
        const DyadicAngle reduced = reduce_frequency_angle(FrequencyExponent{1ull << n}, phi);
        omc.push_back(reduced.one_minus_cos());
        const double s = reduced.sin();
        ssq.push_back(s * s);
    }
    return make_slice(std::move(omc), std::move(ssq));
}

RadialSlice Counterexample::slice(double phi) const {
    std::vector<double> omc, ssq;
    for (int n = start_; n <= n_max_; ++n) {
        const double log2_n = std::ldexp(1.0, n);
        if (log2_n > kMaxRealAngleLog2Frequency) {
            omc.push_back(std::nan(""));
            ssq.push_back(std::nan(""));
            continue;
        }
        const double t = detail::real_multiple_angle(std::exp2(log2_n), phi);
        const double h = std::sin(0.5 * t);
        omc.push_back(2.0 * h * h);
        ssq.push_back(std::sin(t) * std::sin(t));
    }
    return make_slice(std::move(omc), std::move(ssq));
}

double eval_counterexample(BoundaryDepth d, const DyadicAngle& phi, int n_max, int start) {
    if (d.s() == 0.0) return 0.0;
    return Counterexample(n_max, start).value(d, phi);
}

TermRatio counterexample_term_ratio(int n, int k, BoundaryDepth d) {
    if (k <= n + 1) throw InvalidArgument("term ratio needs k > n + 1");
    const double lo = std::ldexp(1.0, n), hi = std::ldexp(1.0, n + 1);
    if (d.s() < lo || d.s() > hi) throw InvalidArgument("depth outside the annulus [2^n, 2^(n+1)]");
    const double ln2 = std::numbers::ln2;
    // |a_k| ranges over [rho/(1+rho), rho/(1-rho)] as the angle varies; take the extreme quotient.
    const double e_k = std::ldexp(1.0, k), e_k1 = std::ldexp(1.0, k + 1);
    const double log_rho_k = log_pow_r_log2(d, e_k);
    const double log_rho_k1 = log_pow_r_log2(d, e_k1);
    const double comp_k1 = pow_r_complement_log2(d, e_k1);
    const double rho_k = pow_r_log2(d, e_k);
    const double log_ratio = ln2 + log_rho_k1 - std::log(comp_k1) - log_rho_k + std::log1p(rho_k);
    TermRatio r;
    r.log2_ratio = log_ratio / ln2;
    r.ratio = std::exp(log_ratio);
    return r;
}

}  // namespace korlab
