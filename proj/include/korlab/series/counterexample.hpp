#pragma once

#include "korlab/series/disk_function.hpp"

namespace korlab {

// u = Re sum_{n >= start} 2^n Phi(z^(N_n)), Phi(w) = w / (w - 1), N_n = 2^(2^n).
class Counterexample final : public DiskFunction {
public:
    explicit Counterexample(int n_max = 12, int start = 2);

    int n_max() const { return n_max_; }
    int start() const { return start_; }

    RadialSlice slice(const DyadicAngle& phi) const override;
    RadialSlice slice(double phi) const override;
    std::string name() const override { return "counterexample"; }

    // One term 2^n Re Phi(w_n) from the reduced angle data.
    static double term(int n, double delta, double one_minus_cos, double sin_sq);

private:
    RadialSlice make_slice(std::vector<double> one_minus_cos, std::vector<double> sin_sq) const;

    int n_max_;
    int start_;
};

// Re Phi(w) for w = rho e^{i theta} from rho, 1 - rho, 1 - cos theta, sin^2 theta.
double re_phi(double rho, double one_minus_rho, double one_minus_cos, double sin_sq);

double eval_counterexample(BoundaryDepth d, const DyadicAngle& phi, int n_max, int start = 2);

struct TermRatio {
    double log2_ratio = 0.0;
    double ratio = 0.0;  // 2^log2_ratio (0 when it underflows)
};

// max over angles of |2^(k+1) a_{k+1}| / |2^k a_k|, a_k = w_k / (w_k - 1), at the given depth.
TermRatio counterexample_term_ratio(int n, int k, BoundaryDepth d);

}  // namespace korlab
