#pragma once

#include <array>

namespace korlab::quad {

namespace detail {
// Kronrod 15 abscissae (positive half, descending) and weights; Gauss 7 weights on odd indices.
inline constexpr std::array<double, 8> kronrod_x = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kronrod_w = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> gauss7_w = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
}  // namespace detail

template <class F>
Estimate kronrod15(F&& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double k = detail::kronrod_w[7] * fc;
    double g = detail::gauss7_w[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * detail::kronrod_x[i];
        const double s = f(c - dx) + f(c + dx);
        k += detail::kronrod_w[i] * s;
        if (i % 2 == 1) g += detail::gauss7_w[i / 2] * s;
    }
    return {h * k, std::abs(h * (k - g))};
}

namespace detail {
template <class F>
void adaptive_step(F& f, double a, double b, double tol, int depth, int max_depth, Estimate& acc, bool& failed) {
    const Estimate e = kronrod15(f, a, b);
    const bool at_floor = e.error <= 1e-14 * std::abs(e.value);
    if (e.error <= tol || at_floor || depth >= max_depth) {
        if (e.error > tol && !at_floor) failed = true;
        acc.value += e.value;
        acc.error += e.error;
        return;
    }
    const double m = 0.5 * (a + b);
    adaptive_step(f, a, m, 0.5 * tol, depth + 1, max_depth, acc, failed);
    adaptive_step(f, m, b, 0.5 * tol, depth + 1, max_depth, acc, failed);
}
}  // namespace detail

template <class F>
Estimate adaptive(F&& f, double a, double b, double abs_tol, const std::string& what, int max_depth) {
    Estimate acc;
    bool failed = false;
    detail::adaptive_step(f, a, b, abs_tol, 0, max_depth, acc, failed);
    if (failed || !std::isfinite(acc.value))
        throw QuadratureNotConverged(what + ": error estimate " + std::to_string(acc.error) +
                                     " above tolerance " + std::to_string(abs_tol));
    return acc;
}

}  // namespace korlab::quad
