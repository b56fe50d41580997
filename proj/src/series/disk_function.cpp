#include "korlab/series/disk_function.hpp"

#include <cmath>

namespace korlab {

double DiskFunction::value(BoundaryDepth d, const DyadicAngle& phi) const { return slice(phi)(delta_value(d)); }

RadialSlice ZeroFunction::slice(const DyadicAngle&) const {
    return [](double) { return 0.0; };
}
RadialSlice ZeroFunction::slice(double) const {
    return [](double) { return 0.0; };
}

RadialSlice ConstantFunction::slice(const DyadicAngle&) const {
    return [c = c_](double) { return c; };
}
RadialSlice ConstantFunction::slice(double) const {
    return [c = c_](double) { return c; };
}

RadialSlice RadialMajorant::slice(const DyadicAngle&) const {
    return [](double delta) { return 1.0 - std::log(delta); };
}
RadialSlice RadialMajorant::slice(double) const {
    return [](double delta) { return 1.0 - std::log(delta); };
}

double majorant(BoundaryDepth d) { return 1.0 + d.s() * std::log(2.0); }

}  // namespace korlab
