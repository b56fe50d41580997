#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "korlab/series/disk_function.hpp"

namespace korlab {

inline constexpr double kTailTolerance = 1e-12;
inline constexpr double kMaxRealAngleLog2Frequency = 40.0;

// Growth model |c_n| <= gamma * ln n for the unstored continuation of a lacunary series,
// whose frequencies keep the gap ratio.
struct TailModel {
    double gamma = 0.0;
};

class LacunarySeries final : public DiskFunction {
public:
    struct Term {
        BigInt frequency;
        std::complex<double> coefficient;
    };

    LacunarySeries() = default;
    // Throws InvalidArgument if frequencies are not increasing with ratio >= gap_ratio.
    LacunarySeries(std::vector<Term> terms, double gap_ratio, std::optional<TailModel> tail = std::nullopt);

    const std::vector<Term>& terms() const { return terms_; }
    double gap_ratio() const { return gap_ratio_; }
    const std::optional<TailModel>& tail() const { return tail_; }

    // Bound on the unstored continuation at this delta (0 without a tail model).
    double tail_bound(double delta) const;

    RadialSlice slice(const DyadicAngle& phi) const override;
    RadialSlice slice(double phi) const override;
    std::optional<std::vector<TrigTerm>> trig_terms() const override;
    std::string name() const override { return "lacunary"; }

private:
    RadialSlice make_slice(std::vector<double> amplitude) const;

    std::vector<Term> terms_;
    std::vector<double> log2_freq_;
    double gap_ratio_ = 2.0;
    std::optional<TailModel> tail_;
};

// u_A = Re sum_{n >= 1} A^n z^(2^(A^n)).
class SuperLacunarySeries final : public DiskFunction {
public:
    SuperLacunarySeries(int base, int max_index);

    int base() const { return base_; }
    int max_index() const { return max_index_; }
    // Exponent A^n of the n-th frequency.
    std::uint64_t exponent(int n) const;
    double coefficient(int n) const;

    RadialSlice slice(const DyadicAngle& phi) const override;
    RadialSlice slice(double phi) const override;
    std::optional<std::vector<TrigTerm>> trig_terms() const override;
    std::string name() const override { return "uA"; }

    // Same function written as a LacunarySeries (gap ratio 2, tail gamma = 1/ln 2).
    LacunarySeries as_lacunary() const;

private:
    RadialSlice make_slice(std::vector<double> cosines) const;

    int base_;
    int max_index_;
};

double eval_uA(const SuperLacunarySeries& series, BoundaryDepth d, const DyadicAngle& phi);
double eval_lacunary(const LacunarySeries& series, BoundaryDepth d, const DyadicAngle& phi);
double eval_lacunary(const LacunarySeries& series, BoundaryDepth d, double phi);

// The Korenblum partial sums S(N) = sum_{n_k <= N} |c_{n_k}|.
struct PartialSumRow {
    BigInt n;
    double log_n = 0.0;
    double sum = 0.0;
    double ratio = 0.0;  // S(N) / ln N
};

struct PartialSums {
    std::vector<PartialSumRow> rows;
    double gamma3_hat = 0.0;
};

PartialSums korenblum_partial_sums(const LacunarySeries& series, const std::vector<BigInt>& n_list);

struct GridPoint {
    BoundaryDepth depth;
    DyadicAngle angle;
};

struct CriterionReport {
    double gamma1_hat = 0.0;
    double gamma2_hat = 0.0;
    double gamma3_hat = 0.0;
    // S(N)/ln N at the largest N divided by its value at the N with half the bit length.
    double growth = 1.0;
    bool consistent = false;
    std::string reason;
};

struct CriterionOptions {
    double factor = 100.0;
    double growth_threshold = 1.5;
};

// Default N list: N = 2^(2^m), m = 1..6.
std::vector<BigInt> default_partial_sum_points();

CriterionReport korenblum_criterion_check(const LacunarySeries& series, const std::vector<GridPoint>& grid,
                                          const std::vector<BigInt>& n_list, CriterionOptions options = {});

}  // namespace korlab
