#pragma once

#include <cstddef>

// Data-parallel inner-loop kernels over contiguous double arrays, provided as
// a scalar reference table plus an AVX2 table selected at runtime.
//
// Elementwise kernels (round_unit_grid, grid_index, bernoulli_scaled,
// poly_kernel, poly_kernel_deriv, nominal_kernel, mul_inplace, axpy) are
// bit-identical across backends: both walk the same fma operation tree.
// Reductions (dot, dot3, sum, sumsq) accumulate lane-wise in the vector
// backends and may differ from the scalar reference at rounding level.

namespace rspline::simd {

struct Kernels {
    // z[i] = min(rd(x[i]/r) * r, 1) for normalized inputs in [0,1];
    // rd rounds half away from zero
    void (*round_unit_grid)(const double* x, std::size_t n, double r, double* z);
    // idx[i] = rd(((x[i] - lo)/range)/r) as exact integer-valued doubles
    void (*grid_index)(const double* x, std::size_t n, double lo, double range,
                       double r, double* idx);
    // out[i] = k_v(x[i]), scaled Bernoulli polynomial, 0 <= v <= 6
    void (*bernoulli_scaled)(int v, const double* x, std::size_t n, double* out);
    // out[i] = k_m(x[i]) k_m(z) + (-1)^(m-1) k_{2m}(|x[i] - z|)
    void (*poly_kernel)(int m, const double* x, std::size_t n, double z,
                        double* out);
    // out[i] = k_{m-1}(x[i]) k_m(z) + (-1)^(m-1) s_i k_{2m-1}(|x[i] - z|)
    void (*poly_kernel_deriv)(int m, const double* x, std::size_t n, double z,
                              double* out);
    // out[i] = (x[i] == z) ? 1 - 1/f : -1/f
    void (*nominal_kernel)(int f, const double* x, std::size_t n, double z,
                           double* out);
    void (*mul_inplace)(double* a, const double* b, std::size_t n);
    // y[i] += a * x[i]
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    double (*dot)(const double* a, const double* b, std::size_t n);
    // sum_i w[i] * a[i] * b[i]
    double (*dot3)(const double* w, const double* a, const double* b,
                   std::size_t n);
    double (*sum)(const double* a, std::size_t n);
    double (*sumsq)(const double* a, std::size_t n);
    const char* name;
};

const Kernels& scalar_kernels();

// nullptr when the running CPU lacks AVX2+FMA or the build has no x86 sources
const Kernels* avx2_kernels();

// Runtime-selected table: AVX2 when available, else scalar. The environment
// variable RSPLINE_SIMD=scalar|avx2 overrides (fit artifacts are then
// byte-reproducible under a pinned backend regardless of host CPU).
const Kernels& active();

}  // namespace rspline::simd
