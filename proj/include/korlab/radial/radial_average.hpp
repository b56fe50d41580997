#pragma once

#include <vector>

#include "korlab/series/disk_function.hpp"

namespace korlab {

struct RadialAverageResult {
    double value = 0.0;
    BoundaryDepth depth{1.0};
    std::vector<double> blocks;  // v_1 .. v_n over [2^(j-1) ln 2, 2^j ln 2]
    double partial = 0.0;        // [2^n ln 2, s ln 2]
    double error = 0.0;          // summed quadrature error estimate
};

struct RadialOptions {
    double block_tol = 1e-8;
};

// I = int_{ln 2}^{s ln 2} u((1 - e^-x) e^{i phi}) x^-2 dx.
RadialAverageResult radial_average(const RadialSlice& slice, BoundaryDepth R, RadialOptions opt = {});
RadialAverageResult I_u(const DiskFunction& u, BoundaryDepth R, const DyadicAngle& phi, RadialOptions opt = {});

struct BlockDecomposition {
    std::vector<double> v;  // v_1 .. v_n
    std::vector<double> w;  // w_j = 2 v_{j+1} - v_j, j = 1 .. n-1
    double q = 0.0;         // 2 v_1 - v_n + partial
    double value = 0.0;     // I_u
};

BlockDecomposition block_decomposition(const DiskFunction& u, BoundaryDepth R, const DyadicAngle& phi,
                                       RadialOptions opt = {});

}  // namespace korlab
