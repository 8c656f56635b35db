#include "rspline/simd/kernels.hpp"
#include "rspline/simd/scalar_ops.hpp"

namespace rspline::simd {
namespace {

void round_unit_grid_s(const double* x, std::size_t n, double r, double* z) {
    for (std::size_t i = 0; i < n; ++i) z[i] = round_unit_grid_1(x[i], r);
}

void grid_index_s(const double* x, std::size_t n, double lo, double range,
                  double r, double* idx) {
    for (std::size_t i = 0; i < n; ++i) idx[i] = grid_index_1(x[i], lo, range, r);
}

void bernoulli_scaled_s(int v, const double* x, std::size_t n, double* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = bernoulli_scaled_1(v, x[i]);
}

void poly_kernel_s(int m, const double* x, std::size_t n, double z,
                   double* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = poly_kernel_1(m, x[i], z);
}

void poly_kernel_deriv_s(int m, const double* x, std::size_t n, double z,
                         double* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = poly_kernel_deriv_1(m, x[i], z);
}

void nominal_kernel_s(int f, const double* x, std::size_t n, double z,
                      double* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = nominal_kernel_1(f, x[i], z);
}

void mul_inplace_s(double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) a[i] *= b[i];
}

void axpy_s(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

double dot_s(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc = std::fma(a[i], b[i], acc);
    return acc;
}

double dot3_s(const double* w, const double* a, const double* b,
              std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc = std::fma(w[i] * a[i], b[i], acc);
    return acc;
}

double sum_s(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i];
    return acc;
}

double sumsq_s(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc = std::fma(a[i], a[i], acc);
    return acc;
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels table = {
        round_unit_grid_s, grid_index_s,  bernoulli_scaled_s,
        poly_kernel_s,     poly_kernel_deriv_s, nominal_kernel_s,
        mul_inplace_s,     axpy_s,        dot_s,
        dot3_s,            sum_s,         sumsq_s,
        "scalar",
    };
    return table;
}

}  // namespace rspline::simd
