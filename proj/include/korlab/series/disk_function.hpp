#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "korlab/numerics/dyadic_angle.hpp"

namespace korlab {

// u((1 - delta) e^{i phi}) along one radius, as a function of delta.
using RadialSlice = std::function<double(double delta)>;

// One term Re(c z^N) of a trigonometric expansion; N carried through log2 N and, when small, as a double.
struct TrigTerm {
    BigInt frequency;
    double log2_frequency = 0.0;
    std::complex<double> coefficient;
};

// A real function on the disk that can be sampled along radii.
class DiskFunction {
public:
    virtual ~DiskFunction() = default;

    virtual RadialSlice slice(const DyadicAngle& phi) const = 0;
    // Real angles are accepted only when every active frequency stays below 2^40.
    virtual RadialSlice slice(double phi) const = 0;

    double value(BoundaryDepth d, const DyadicAngle& phi) const;

    // Finite power-series form u = Re sum c_k z^{N_k}, when the function has one.
    virtual std::optional<std::vector<TrigTerm>> trig_terms() const { return std::nullopt; }
    virtual std::string name() const = 0;
};

class ZeroFunction final : public DiskFunction {
public:
    RadialSlice slice(const DyadicAngle&) const override;
    RadialSlice slice(double) const override;
    std::optional<std::vector<TrigTerm>> trig_terms() const override { return std::vector<TrigTerm>{}; }
    std::string name() const override { return "zero"; }
};

class ConstantFunction final : public DiskFunction {
public:
    explicit ConstantFunction(double c) : c_(c) {}
    RadialSlice slice(const DyadicAngle&) const override;
    RadialSlice slice(double) const override;
    std::string name() const override { return "constant"; }

private:
    double c_;
};

// log(e / (1 - r)): the radial majorant of the class (not harmonic).
class RadialMajorant final : public DiskFunction {
public:
    RadialSlice slice(const DyadicAngle&) const override;
    RadialSlice slice(double) const override;
    std::string name() const override { return "radial-majorant"; }
};

// log(e / (1 - r)) at depth s.
double majorant(BoundaryDepth d);

}  // namespace korlab
