#pragma once

#include <cmath>

// Single-point reference implementations shared by the scalar backend, the
// vector backends (for tails and broadcast precomputes), and the public
// single-value API. All polynomial evaluation goes through explicit fma so
// every backend walks the same operation tree and produces identical bits.

namespace rspline::simd {

// Coefficients of the scaled Bernoulli polynomials k_v(x) = B_v(x)/v!,
// ascending powers, hard-coded through degree 6 (enough for spline order 3).
inline constexpr double kBernCoeff[7][7] = {
    {1.0},
    {-0.5, 1.0},
    {1.0 / 12.0, -0.5, 0.5},
    {0.0, 1.0 / 12.0, -0.25, 1.0 / 6.0},
    {-1.0 / 720.0, 0.0, 1.0 / 24.0, -1.0 / 12.0, 1.0 / 24.0},
    {0.0, -1.0 / 720.0, 0.0, 1.0 / 72.0, -1.0 / 48.0, 1.0 / 120.0},
    {1.0 / 30240.0, 0.0, -1.0 / 1440.0, 0.0, 1.0 / 288.0, -1.0 / 240.0,
     1.0 / 720.0},
};

inline double bernoulli_scaled_1(int v, double x) {
    const double* c = kBernCoeff[v];
    double acc = c[v];
    for (int k = v - 1; k >= 0; --k) acc = std::fma(acc, x, c[k]);
    return acc;
}

// (-1)^(m-1)
inline double contrast_sign(int m) { return (m % 2 == 1) ? 1.0 : -1.0; }

// k_m(x) k_m(z) + (-1)^(m-1) k_{2m}(|x - z|)
inline double poly_kernel_1(int m, double x, double z) {
    double kmz = bernoulli_scaled_1(m, z);
    double tail = contrast_sign(m) * bernoulli_scaled_1(2 * m, std::fabs(x - z));
    return std::fma(bernoulli_scaled_1(m, x), kmz, tail);
}

// d/dx of poly_kernel_1: k_{m-1}(x) k_m(z) + (-1)^(m-1) s k_{2m-1}(|x - z|),
// s = +1 when x >= z and -1 otherwise.
inline double poly_kernel_deriv_1(int m, double x, double z) {
    double kmz = bernoulli_scaled_1(m, z);
    double s = (x >= z) ? 1.0 : -1.0;
    double tail =
        (s * contrast_sign(m)) * bernoulli_scaled_1(2 * m - 1, std::fabs(x - z));
    return std::fma(bernoulli_scaled_1(m - 1, x), kmz, tail);
}

// centered indicator kernel on {1..f}: 1 - 1/f on the diagonal, -1/f off it
inline double nominal_kernel_1(int f, double x, double z) {
    double off = -1.0 / static_cast<double>(f);
    return (x == z) ? 1.0 + off : off;
}

// round half away from zero (std::round semantics)
inline double rd_half_away(double x) { return std::round(x); }

// snap a normalized value t in [0,1] to the r-grid; the upper clamp keeps the
// reconstruction inside the unit interval when rd(t/r)*r overshoots by an ulp
inline double round_unit_grid_1(double t, double r) {
    return std::fmin(std::round(t / r) * r, 1.0);
}

// grid index rd(((x - lo)/range)/r) as an exact integer-valued double
inline double grid_index_1(double x, double lo, double range, double r) {
    return std::round(((x - lo) / range) / r);
}

}  // namespace rspline::simd
