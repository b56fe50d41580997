#include "korlab/series/lacunary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "angle_util.hpp"
#include "korlab/errors.hpp"

namespace korlab {

LacunarySeries::LacunarySeries(std::vector<Term> terms, double gap_ratio, std::optional<TailModel> tail)
    : terms_(std::move(terms)), gap_ratio_(gap_ratio), tail_(tail) {
    if (!(gap_ratio_ > 1.0)) throw InvalidArgument("gap ratio must exceed 1");
    const double log2_gap = std::log2(gap_ratio_);
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (terms_[k].frequency <= 0) throw InvalidArgument("frequencies must be positive");
        log2_freq_.push_back(detail::log2_big(terms_[k].frequency));
        if (k == 0) continue;
        if (terms_[k].frequency <= terms_[k - 1].frequency)
            throw InvalidArgument("frequencies must be strictly increasing");
        // n_{k+1} >= lambda n_k, compared in log space with a relative slack far below any real gap.
        if (log2_freq_[k] - log2_freq_[k - 1] < log2_gap - 1e-12)
            throw InvalidArgument("gap ratio violated between frequencies " + terms_[k - 1].frequency.str() +
                                  " and " + terms_[k].frequency.str());
    }
}

double LacunarySeries::tail_bound(double delta) const {
    if (!tail_) return 0.0;
    const double start = log2_freq_.empty() ? 0.0 : log2_freq_.back();
    const double step = std::log2(gap_ratio_);
    double bound = 0.0;
    for (int k = 1; k < 100000; ++k) {
        const double l = start + k * step;
        const double term = tail_->gamma * l * std::log(2.0) * pow_delta(delta, l);
        bound += term;
        // Terms decay doubly exponentially once N delta >> 1.
        if (term < 1e-30 && pow_delta(delta, l) < 0.25) return bound;
    }
    return std::numeric_limits<double>::infinity();
}

RadialSlice LacunarySeries::make_slice(std::vector<double> amplitude) const {
    return [this, amplitude = std::move(amplitude)](double delta) {
        double sum = 0.0;
        for (std::size_t k = 0; k < amplitude.size(); ++k)
            if (amplitude[k] != 0.0) sum += amplitude[k] * pow_delta(delta, log2_freq_[k]);
        if (tail_) {
            const double b = tail_bound(delta);
            if (!(b < kTailTolerance))
                throw TailNotCertified("lacunary tail bound " + std::to_string(b) + " at delta " +
                                       std::to_string(delta));
        }
        return sum;
    };
}

RadialSlice LacunarySeries::slice(const DyadicAngle& phi) const {
    std::vector<double> amplitude(terms_.size());
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const DyadicAngle reduced = reduce_multiple_angle(terms_[k].frequency, phi);
        const double t = reduced.radians();
        const auto c = terms_[k].coefficient;
        amplitude[k] = c.real() * std::cos(t) - c.imag() * std::sin(t);
    }
    return make_slice(std::move(amplitude));
}

RadialSlice LacunarySeries::slice(double phi) const {
    std::vector<double> amplitude(terms_.size());
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (log2_freq_[k] > kMaxRealAngleLog2Frequency)
            throw FrequencyTooLargeForRealAngle("frequency " + terms_[k].frequency.str() +
                                                " exceeds 2^40 for a real angle");
        const double t = detail::real_multiple_angle(static_cast<double>(terms_[k].frequency), phi);
        const auto c = terms_[k].coefficient;
        amplitude[k] = c.real() * std::cos(t) - c.imag() * std::sin(t);
    }
    return make_slice(std::move(amplitude));
}

std::optional<std::vector<TrigTerm>> LacunarySeries::trig_terms() const {
    std::vector<TrigTerm> out;
    for (std::size_t k = 0; k < terms_.size(); ++k)
        out.push_back({terms_[k].frequency, log2_freq_[k], terms_[k].coefficient});
    return out;
}

SuperLacunarySeries::SuperLacunarySeries(int base, int max_index) : base_(base), max_index_(max_index) {
    if (base < 2) throw InvalidArgument("base A must be >= 2");
    if (max_index < 1) throw InvalidArgument("max_index must be >= 1");
    if (static_cast<double>(max_index) * std::log2(base) > 62)
        throw InvalidArgument("exponent A^n does not fit in 64 bits");
}

std::uint64_t SuperLacunarySeries::exponent(int n) const {
    std::uint64_t e = 1;
    for (int i = 0; i < n; ++i) e *= static_cast<std::uint64_t>(base_);
    return e;
}

double SuperLacunarySeries::coefficient(int n) const { return static_cast<double>(exponent(n)); }

RadialSlice SuperLacunarySeries::make_slice(std::vector<double> cosines) const {
    return [this, cosines = std::move(cosines)](double delta) {
        const double half_base = 0.5 / base_;
        double sum = 0.0;
        for (int n = 1; n <= max_index_; ++n) {
            const auto e = static_cast<double>(exponent(n));
            const double rho = pow_delta(delta, e);
            if (rho != 0.0) {
                const double c = cosines[static_cast<std::size_t>(n - 1)];
                if (std::isnan(c))
                    throw FrequencyTooLargeForRealAngle("term " + std::to_string(n) +
                                                        " needs a frequency above 2^40 at a real angle");
                sum += coefficient(n) * rho * c;
            }
            if (n == max_index_) break;
            // Terms beyond n are bounded by 2 * next term once r^N <= 1/(2A).
            const double next_rho = pow_delta(delta, static_cast<double>(exponent(n + 1)));
            if (next_rho <= half_base && 2.0 * coefficient(n + 1) * next_rho < kTailTolerance) return sum;
        }
        throw TailNotCertified("u_A tail not certified within max_index " + std::to_string(max_index_));
    };
}

RadialSlice SuperLacunarySeries::slice(const DyadicAngle& phi) const {
    std::vector<double> cosines;
    for (int n = 1; n <= max_index_; ++n)
        cosines.push_back(reduce_frequency_angle(FrequencyExponent{exponent(n)}, phi).cos());
    return make_slice(std::move(cosines));
}

RadialSlice SuperLacunarySeries::slice(double phi) const {
    std::vector<double> cosines;
    for (int n = 1; n <= max_index_; ++n) {
        const auto e = exponent(n);
        if (static_cast<double>(e) > kMaxRealAngleLog2Frequency) {
            cosines.push_back(std::numeric_limits<double>::quiet_NaN());
            continue;
        }
        cosines.push_back(std::cos(detail::real_multiple_angle(std::ldexp(1.0, static_cast<int>(e)), phi)));
    }
    return make_slice(std::move(cosines));
}

std::optional<std::vector<TrigTerm>> SuperLacunarySeries::trig_terms() const {
    std::vector<TrigTerm> out;
    for (int n = 1; n <= max_index_; ++n) {
        const auto e = exponent(n);
        out.push_back({BigInt(1) << static_cast<unsigned>(e), static_cast<double>(e), {coefficient(n), 0.0}});
    }
    return out;
}

LacunarySeries SuperLacunarySeries::as_lacunary() const {
    std::vector<LacunarySeries::Term> terms;
    for (int n = 1; n <= max_index_; ++n)
        terms.push_back({BigInt(1) << static_cast<unsigned>(exponent(n)), {coefficient(n), 0.0}});
    // c = A^n = log2 N, so |c| = ln N / ln 2.
    const double gamma = 1.0 / std::log(2.0);
    return LacunarySeries(std::move(terms), 2.0, TailModel{gamma});
}

double eval_uA(const SuperLacunarySeries& series, BoundaryDepth d, const DyadicAngle& phi) {
    if (d.s() == 0.0) return 0.0;
    return series.value(d, phi);
}

double eval_lacunary(const LacunarySeries& series, BoundaryDepth d, const DyadicAngle& phi) {
    if (d.s() == 0.0) return 0.0;
    return series.slice(phi)(delta_value(d));
}

double eval_lacunary(const LacunarySeries& series, BoundaryDepth d, double phi) {
    if (d.s() == 0.0) return 0.0;
    return series.slice(phi)(delta_value(d));
}

PartialSums korenblum_partial_sums(const LacunarySeries& series, const std::vector<BigInt>& n_list) {
    PartialSums out;
    for (const BigInt& n : n_list) {
        if (n < 2) throw InvalidArgument("partial sums need N >= 2");
        PartialSumRow row;
        row.n = n;
        row.log_n = detail::log2_big(n) * std::log(2.0);
        for (const auto& t : series.terms())
            if (t.frequency <= n) row.sum += std::abs(t.coefficient);
        row.ratio = row.sum / row.log_n;
        out.gamma3_hat = std::max(out.gamma3_hat, row.ratio);
        out.rows.push_back(row);
    }
    return out;
}

std::vector<BigInt> default_partial_sum_points() {
    std::vector<BigInt> n;
    for (int m = 1; m <= 6; ++m) n.push_back(BigInt(1) << (1u << m));
    return n;
}

CriterionReport korenblum_criterion_check(const LacunarySeries& series, const std::vector<GridPoint>& grid,
                                          const std::vector<BigInt>& n_list, CriterionOptions options) {
    CriterionReport r;
    r.gamma1_hat = grid.empty() ? 0.0 : -std::numeric_limits<double>::infinity();
    for (const auto& g : grid) {
        const double ratio = eval_lacunary(series, g.depth, g.angle) / majorant(g.depth);
        r.gamma1_hat = std::max(r.gamma1_hat, ratio);
        r.gamma2_hat = std::max(r.gamma2_hat, std::abs(ratio));
    }
    const PartialSums sums = korenblum_partial_sums(series, n_list);
    r.gamma3_hat = sums.gamma3_hat;

    if (sums.rows.size() >= 2) {
        std::vector<PartialSumRow> rows = sums.rows;
        std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.n < b.n; });
        const auto& last = rows.back();
        const double half = 0.5 * last.log_n;
        const auto mid = std::min_element(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
            return std::abs(a.log_n - half) < std::abs(b.log_n - half);
        });
        if (mid->ratio > 0.0) r.growth = last.ratio / mid->ratio;
        else r.growth = last.ratio > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
    }

    const bool finite = std::isfinite(r.gamma1_hat) && std::isfinite(r.gamma2_hat) && std::isfinite(r.gamma3_hat);
    const bool all_zero = r.gamma2_hat == 0.0 && r.gamma3_hat == 0.0;
    if (!finite) {
        r.reason = "non-finite constant";
    } else if (all_zero) {
        r.consistent = true;
        r.reason = "all constants zero";
    } else if (r.growth > options.growth_threshold) {
        r.reason = "partial-sum ratio S(N)/log N still growing";
    } else {
        const double hi = std::max({r.gamma1_hat, r.gamma2_hat, r.gamma3_hat});
        const double lo = std::min({r.gamma1_hat, r.gamma2_hat, r.gamma3_hat});
        if (lo > 0.0 && hi <= options.factor * lo) {
            r.consistent = true;
            r.reason = "constants finite and comparable";
        } else {
            r.reason = "constants differ by more than the allowed factor";
        }
    }
    return r;
}

}  // namespace korlab
