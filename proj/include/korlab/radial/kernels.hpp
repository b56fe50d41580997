#pragma once

#include <vector>

#include "korlab/numerics/chebyshev.hpp"
#include "korlab/numerics/quadrature.hpp"
#include "korlab/premeasure/premeasure.hpp"

namespace korlab {

// Composite Gauss rule in x over [2^(j-1) ln 2, 2^j ln 2] for the radial weight x^-2,
// stored as rational terms num / (base + slope * sin^2(psi / 2)).
class RadialRule {
public:
    // j >= 1.
    static const RadialRule& block(int j);

    int level() const { return j_; }
    std::size_t size() const { return num_.size(); }
    double weight_sum() const { return weight_sum_; }

    // A_j(psi) and dA_j/dpsi.
    double value(double psi) const;
    double slope(double psi) const;
    void value_and_slope(double psi, double& value, double& slope) const;

private:
    explicit RadialRule(int j);
    int j_;
    double weight_sum_ = 0.0;
    std::vector<double> num_, base_, slope_;
};

double kernel_A(int j, double psi);
double kernel_A_slope(int j, double psi);
double kernel_B(int j, double psi);
double kernel_B_slope(int j, double psi);

// Edges on [0, pi] for integrating a kernel of width ~2^(-2^j): geometric from 2^(-2^j - 8).
std::vector<double> kernel_breaks(int j);

// int_{-pi}^{pi} k(psi) d psi for an even kernel k, Gauss-Legendre 16 on each window.
template <class F>
double integrate_even_kernel(F&& k, const std::vector<double>& breaks) {
    const auto& rule = quad::gauss_legendre(16);
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) sum += quad::fixed(k, breaks[i], breaks[i + 1], rule);
    return 2.0 * sum;
}

double kernel_mass_A(int j);
double kernel_mass_B(int j);

struct KernelValues {
    double b = 0.0;        // B_j
    double b_slope = 0.0;  // B_j'
    double bt = 0.0;       // B~_j
    double bt_slope = 0.0; // B~_j'
};

// The compactly supported surrogate of B_j (j >= 5): B~ = alpha B_j - beta int alpha B_j.
class KernelProfile {
public:
    static const KernelProfile& get(int j);

    int level() const { return j_; }
    double support() const { return outer_; }   // B~ vanishes for |psi| >= support
    double plateau() const { return inner_; }   // B~ = B_j for |psi| <= plateau
    double correction() const { return mass_alpha_b_; }

    double alpha(double psi) const;
    double alpha_slope(double psi) const;
    double beta(double psi) const;
    double beta_slope(double psi) const;

    KernelValues evaluate(double psi) const;
    double b_tilde(double psi) const { return evaluate(psi).bt; }
    double b_tilde_slope(double psi) const { return evaluate(psi).bt_slope; }
    // int_0^psi B~ (odd, zero outside the support), from the piece fits.
    double primitive(double psi) const;

    // Piece edges on [0, support]; each piece is smooth at its own scale.
    const std::vector<double>& edges() const { return edges_; }

    // Gauss nodes (16 per piece, positive side) with B~ and B~' values.
    struct Node {
        double psi, weight, bt, bt_slope;
    };
    const std::vector<Node>& nodes() const { return nodes_; }

    double integral() const;  // int B~ over the circle, from the node table

    // Chebyshev fit of B~ on piece i = [edges[i], edges[i+1]].
    const ChebyshevSeries& piece(std::size_t i) const { return pieces_[i]; }
    const ChebyshevSeries& primitive_piece(std::size_t i) const { return primitive_pieces_[i]; }

private:
    explicit KernelProfile(int j);
    int j_;
    double inner_, outer_;
    double beta_scale_ = 0.0;
    double mass_alpha_b_ = 0.0;
    std::vector<double> edges_;
    std::vector<Node> nodes_;
    std::vector<ChebyshevSeries> pieces_;
    std::vector<ChebyshevSeries> primitive_pieces_;  // zero at the left edge of each piece
    std::vector<double> primitive_at_edges_;
};

double kernel_B_tilde(int j, double psi);

struct KernelEstimateReport {
    int j = 0;
    int samples = 0;
    double sup_slope = 0.0;        // sup |B~'|
    double sup_curvature = 0.0;    // sup |B~''|
    double sup_log_moment = 0.0;   // sup |B~(psi) psi log(1/psi)|
    double slope_log_integral = 0.0;  // int |B~'(psi) psi log(1/psi)|
    double sup_difference_slope = 0.0; // sup |(B_j - B~_j)'|
    double const_slope = 0.0;      // sup_slope / (2^-2j 2^(2*2^j))
    double const_curvature = 0.0;  // sup_curvature / (2^-2j 2^(3*2^j))
    double const_log_moment = 0.0; // sup_log_moment / 2^-j
    double const_difference = 0.0; // sup_difference_slope / 2^-2j
};

KernelEstimateReport kernel_estimate_report(int j);

// Which kernel an arc integral runs against: B~_j itself (even) or its primitive
// int_0^t B~_j (odd, also supported in the same window since B~_j has zero mass).
enum class KernelKind { smoothed, primitive };

// int_{theta in arc} K(phi - theta) d mu(theta) for a trigonometric premeasure,
// through cumulative moments int_0^t K(psi) {cos, sin}(N psi) d psi.
class SpectralKernelMoments {
public:
    SpectralKernelMoments(int j, std::vector<SpectralTerm> terms, KernelKind kind = KernelKind::smoothed);

    int level() const { return j_; }
    KernelKind kind() const { return kind_; }
    // Arc [theta_lo, theta_lo + length) in radians, 0 < length < 2 pi.
    double arc_integral(double phi, double theta_lo, double length) const;
    // Evaluation point phi + offset with phi dyadic and |offset| small; arc [theta_lo, theta_lo + length).
    double arc_integral(const DyadicAngle& phi, double offset, const DyadicAngle& theta_lo, double length) const;
    // Whole circle.
    double full(double phi) const;
    double full(const DyadicAngle& phi, double offset) const;

private:
    struct Table {
        double n = 0.0;
        std::vector<double> edges;             // refined positive-side edges
        std::vector<double> cum_cos, cum_sin;  // moments at edges
        std::vector<ChebyshevSeries> cos_piece, sin_piece;  // antiderivatives on each piece, zero at left edge
    };
    struct Phase {
        double c, s;
    };
    double moment(const Table& t, double x, bool cosine) const;
    double window(const std::vector<Phase>& ph, double lo, double hi) const;
    std::vector<Phase> phases(double phi) const;
    std::vector<Phase> phases(const DyadicAngle& phi, double offset) const;

    int j_;
    KernelKind kind_;
    double support_;
    std::vector<SpectralTerm> terms_;
    std::vector<Table> tables_;
};

// Same integral for any premeasure, by parts against omega_phi.
double kernel_arc_integral(int j, double phi, const Premeasure& p, double theta_lo, double length,
                           KernelKind kind = KernelKind::smoothed);

// w~_j(phi) = int B~_j(phi - theta) d mu(theta); spectral premeasures take the moment route.
double w_tilde(int j, double phi, const Premeasure& p);
double w_tilde_by_parts(int j, double phi, const Premeasure& p);
// w_j(phi) = int B_j(phi - theta) d mu(theta).
double w_direct(int j, double phi, const Premeasure& p);
// v_j(phi) = int A_j(phi - theta) d mu(theta).
double v_direct(int j, double phi, const Premeasure& p);

// c_j and its truncation at r_k (k = 0 means no truncation).
double c_coefficient(int j);
double c_jk(int j, int k);

// sum_{j <= k} c_j cos(2^(2^j) phi).
double cosine_sum_approx(int k, const DyadicAngle& phi);
// sup over the grid of |I_{u_2}(r_k, phi) - cosine_sum_approx(k, phi)|.
double approx_error(int k, const std::vector<DyadicAngle>& phi_grid);

}  // namespace korlab
