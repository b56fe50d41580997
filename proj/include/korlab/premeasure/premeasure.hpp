#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "korlab/numerics/dyadic_angle.hpp"
#include "korlab/series/disk_function.hpp"

namespace korlab {

// Positively oriented arc from start to end; start == end only for the full circle.
class Arc {
public:
    Arc(DyadicAngle start, DyadicAngle end, bool closed_start = true, bool closed_end = false);
    static Arc full_circle();

    const DyadicAngle& start() const { return start_; }
    const DyadicAngle& end() const { return end_; }
    bool closed_start() const { return closed_start_; }
    bool closed_end() const { return closed_end_; }
    bool is_full() const { return full_; }
    // |I| as a fraction of the circle, in (0, 1].
    double length_turns() const;

private:
    Arc() = default;
    DyadicAngle start_;
    DyadicAngle end_;
    bool closed_start_ = true;
    bool closed_end_ = false;
    bool full_ = false;
};

// Primitive G(theta) = sum c_k cos(N_k theta) + s_k sin(N_k theta) of a trigonometric density.
struct SpectralTerm {
    BigInt frequency;
    double cos_coef = 0.0;
    double sin_coef = 0.0;
};

// Finitely additive signed arc function with zero total mass.
class Premeasure {
public:
    virtual ~Premeasure() = default;

    virtual double mass(const Arc& arc) const = 0;
    // Arc [a, a + length) for real a and 0 <= length <= 2 pi.
    virtual double mass_real(double a, double length) const = 0;

    // omega_phi(phi + offset): mu of the arc from phi to phi + offset, negative orientation for offset < 0.
    virtual double omega(const DyadicAngle& phi, double offset) const;
    virtual double omega(double phi, double offset) const;

    // Density with respect to d theta at phi + offset, when absolutely continuous.
    virtual std::optional<double> density(double phi, double offset) const;
    virtual std::optional<double> density(const DyadicAngle& phi, double offset) const;

    // Points (radians) where omega jumps.
    virtual std::vector<double> breakpoints() const { return {}; }
    virtual std::optional<std::vector<SpectralTerm>> spectrum() const { return std::nullopt; }

    // Masses of the 2^depth dyadic cells [2 pi i / 2^depth, 2 pi (i + 1) / 2^depth).
    virtual std::vector<double> cell_masses(unsigned depth) const;

    virtual std::string name() const = 0;
};

class ZeroPremeasure final : public Premeasure {
public:
    double mass(const Arc&) const override { return 0.0; }
    double mass_real(double, double) const override { return 0.0; }
    std::optional<double> density(double, double) const override { return 0.0; }
    std::optional<std::vector<SpectralTerm>> spectrum() const override { return std::vector<SpectralTerm>{}; }
    std::string name() const override { return "zero"; }
};

struct Atom {
    double angle = 0.0;  // radians
    double mass = 0.0;
};

// Finite signed atom list with zero total mass.
class AtomPremeasure final : public Premeasure {
public:
    explicit AtomPremeasure(std::vector<Atom> atoms);

    double mass(const Arc& arc) const override;
    double mass_real(double a, double length) const override;
    std::vector<double> breakpoints() const override;
    std::string name() const override { return "atoms"; }

private:
    std::vector<Atom> atoms_;  // angles in [0, 2 pi)
};

// d mu = g(theta) d theta; integrated by composite Gauss-Legendre unless a primitive is supplied.
class DensityPremeasure final : public Premeasure {
public:
    struct Options {
        double max_panel = 0.1;
        int order = 16;                              // Gauss-Legendre nodes per panel
        std::function<double(double)> primitive;    // optional exact antiderivative
        std::vector<SpectralTerm> spectrum;          // optional spectral description of the primitive
    };

    DensityPremeasure(std::function<double(double)> density, Options options);
    explicit DensityPremeasure(std::function<double(double)> density);

    double mass(const Arc& arc) const override;
    double mass_real(double a, double length) const override;
    std::optional<double> density(double phi, double offset) const override;
    std::optional<std::vector<SpectralTerm>> spectrum() const override;
    std::string name() const override { return "density"; }

private:
    std::function<double(double)> g_;
    Options opt_;
};

// Trigonometric density with primitive G = sum c cos(N theta) + s sin(N theta); exact on dyadic arcs.
class SpectralPremeasure final : public Premeasure {
public:
    explicit SpectralPremeasure(std::vector<SpectralTerm> terms, std::string label = "spectral");

    double primitive(const DyadicAngle& theta) const;
    double primitive(double theta) const;

    double mass(const Arc& arc) const override;
    double mass_real(double a, double length) const override;
    double omega(const DyadicAngle& phi, double offset) const override;
    double omega(double phi, double offset) const override;
    std::optional<double> density(double phi, double offset) const override;
    std::optional<double> density(const DyadicAngle& phi, double offset) const override;
    std::optional<std::vector<SpectralTerm>> spectrum() const override { return terms_; }
    std::vector<double> cell_masses(unsigned depth) const override;
    std::string name() const override { return label_; }

    double max_log2_frequency() const { return max_log2_freq_; }

private:
    void require_real_angles() const;
    double increment(std::size_t k, double a, double b) const;

    std::vector<SpectralTerm> terms_;
    std::vector<double> freq_;  // as doubles (exact up to 2^53)
    double max_log2_freq_ = 0.0;
    std::string label_;
};

double mu(const Premeasure& p, const Arc& arc);

struct KappaBoundReport {
    double kappa_upper = 0.0;
    double kappa_abs = 0.0;
    unsigned witness_upper_depth = 0;
    std::size_t witness_upper_index = 0;
    unsigned witness_abs_depth = 0;
    std::size_t witness_abs_index = 0;
};

KappaBoundReport kappa_bounds(const Premeasure& p, unsigned depth_max);

double distribution(const Premeasure& p, const DyadicAngle& phi, const DyadicAngle& theta);

struct PoissonOptions {
    double abs_tol = 1e-11;
};

// Derivative-kernel form: u = int P'(psi) omega_phi(phi - psi) d psi.
double poisson_integral(const Premeasure& p, BoundaryDepth d, const DyadicAngle& phi, PoissonOptions opt = {});
double poisson_integral_real(const Premeasure& p, double delta, double phi, PoissonOptions opt = {});
// Direct form int P(psi) g(phi - psi) d psi for absolutely continuous premeasures.
double poisson_integral_direct(const Premeasure& p, BoundaryDepth d, const DyadicAngle& phi, PoissonOptions opt = {});

// mu(I) = (1 / 2 pi) int_I (u(rho e^{i theta}) - mean) d theta, rho = 1 - 2^(-2^level).
std::unique_ptr<Premeasure> from_harmonic_trace(const DiskFunction& u, int level);

}  // namespace korlab
