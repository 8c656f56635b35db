// AVX2+FMA variants of the inner-loop kernels. Compiled with -mavx2 -mfma on
// x86 targets only; nothing here may be inlined into other translation units.
// Vector bodies mirror the scalar reference operation trees (same fma
// nesting), tails fall back to the shared single-point helpers, so all
// elementwise kernels are bit-identical to the scalar backend.

#include <immintrin.h>

#include "rspline/simd/kernels.hpp"
#include "rspline/simd/scalar_ops.hpp"

namespace rspline::simd {
namespace {

const __m256d kSignMask = _mm256_set1_pd(-0.0);

// round half away from zero, matching std::round for all finite inputs:
// truncate, then bump by copysign(1, v) when the dropped fraction is >= 1/2
inline __m256d rd4(__m256d v) {
    __m256d t = _mm256_round_pd(v, _MM_FROUND_TO_ZERO | _MM_FROUND_NO_EXC);
    __m256d f = _mm256_sub_pd(v, t);
    __m256d af = _mm256_andnot_pd(kSignMask, f);
    __m256d ge = _mm256_cmp_pd(af, _mm256_set1_pd(0.5), _CMP_GE_OQ);
    __m256d one = _mm256_or_pd(_mm256_and_pd(v, kSignMask), _mm256_set1_pd(1.0));
    return _mm256_add_pd(t, _mm256_and_pd(ge, one));
}

inline __m256d horner(int v, __m256d x) {
    const double* c = kBernCoeff[v];
    __m256d acc = _mm256_set1_pd(c[v]);
    for (int k = v - 1; k >= 0; --k)
        acc = _mm256_fmadd_pd(acc, x, _mm256_set1_pd(c[k]));
    return acc;
}

void round_unit_grid_v(const double* x, std::size_t n, double r, double* z) {
    const __m256d rv = _mm256_set1_pd(r);
    const __m256d onev = _mm256_set1_pd(1.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d q = _mm256_div_pd(_mm256_loadu_pd(x + i), rv);
        __m256d g = _mm256_min_pd(_mm256_mul_pd(rd4(q), rv), onev);
        _mm256_storeu_pd(z + i, g);
    }
    for (; i < n; ++i) z[i] = round_unit_grid_1(x[i], r);
}

void grid_index_v(const double* x, std::size_t n, double lo, double range,
                  double r, double* idx) {
    const __m256d lov = _mm256_set1_pd(lo);
    const __m256d rangev = _mm256_set1_pd(range);
    const __m256d rv = _mm256_set1_pd(r);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d t = _mm256_div_pd(_mm256_sub_pd(_mm256_loadu_pd(x + i), lov),
                                  rangev);
        _mm256_storeu_pd(idx + i, rd4(_mm256_div_pd(t, rv)));
    }
    for (; i < n; ++i) idx[i] = grid_index_1(x[i], lo, range, r);
}

void bernoulli_scaled_v(int v, const double* x, std::size_t n, double* out) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, horner(v, _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) out[i] = bernoulli_scaled_1(v, x[i]);
}

void poly_kernel_v(int m, const double* x, std::size_t n, double z,
                   double* out) {
    const double kmz = bernoulli_scaled_1(m, z);
    const double sg = contrast_sign(m);
    const __m256d zv = _mm256_set1_pd(z);
    const __m256d kmzv = _mm256_set1_pd(kmz);
    const __m256d sgv = _mm256_set1_pd(sg);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d xv = _mm256_loadu_pd(x + i);
        __m256d d = _mm256_andnot_pd(kSignMask, _mm256_sub_pd(xv, zv));
        __m256d tail = _mm256_mul_pd(sgv, horner(2 * m, d));
        _mm256_storeu_pd(out + i, _mm256_fmadd_pd(horner(m, xv), kmzv, tail));
    }
    for (; i < n; ++i) out[i] = poly_kernel_1(m, x[i], z);
}

void poly_kernel_deriv_v(int m, const double* x, std::size_t n, double z,
                         double* out) {
    const double kmz = bernoulli_scaled_1(m, z);
    const double sg = contrast_sign(m);
    const __m256d zv = _mm256_set1_pd(z);
    const __m256d kmzv = _mm256_set1_pd(kmz);
    const __m256d sgv = _mm256_set1_pd(sg);
    const __m256d pone = _mm256_set1_pd(1.0);
    const __m256d mone = _mm256_set1_pd(-1.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d xv = _mm256_loadu_pd(x + i);
        __m256d ge = _mm256_cmp_pd(xv, zv, _CMP_GE_OQ);
        __m256d s = _mm256_or_pd(_mm256_and_pd(ge, pone),
                                 _mm256_andnot_pd(ge, mone));
        __m256d d = _mm256_andnot_pd(kSignMask, _mm256_sub_pd(xv, zv));
        __m256d tail = _mm256_mul_pd(_mm256_mul_pd(s, sgv), horner(2 * m - 1, d));
        _mm256_storeu_pd(out + i,
                         _mm256_fmadd_pd(horner(m - 1, xv), kmzv, tail));
    }
    for (; i < n; ++i) out[i] = poly_kernel_deriv_1(m, x[i], z);
}

void nominal_kernel_v(int f, const double* x, std::size_t n, double z,
                      double* out) {
    const double off = -1.0 / static_cast<double>(f);
    const __m256d offv = _mm256_set1_pd(off);
    const __m256d diagv = _mm256_set1_pd(1.0 + off);
    const __m256d zv = _mm256_set1_pd(z);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d eq = _mm256_cmp_pd(_mm256_loadu_pd(x + i), zv, _CMP_EQ_OQ);
        _mm256_storeu_pd(out + i, _mm256_blendv_pd(offv, diagv, eq));
    }
    for (; i < n; ++i) out[i] = nominal_kernel_1(f, x[i], z);
}

void mul_inplace_v(double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(
            a + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < n; ++i) a[i] *= b[i];
}

void axpy_v(double a, const double* x, double* y, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i),
                                                _mm256_loadu_pd(y + i)));
    for (; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double dot_v(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i),
                              acc);
    double s = hsum(acc);
    for (; i < n; ++i) s = std::fma(a[i], b[i], s);
    return s;
}

double dot3_v(const double* w, const double* a, const double* b,
              std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d wa = _mm256_mul_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(a + i));
        acc = _mm256_fmadd_pd(wa, _mm256_loadu_pd(b + i), acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s = std::fma(w[i] * a[i], b[i], s);
    return s;
}

double sum_v(const double* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
    double s = hsum(acc);
    for (; i < n; ++i) s += a[i];
    return s;
}

double sumsq_v(const double* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_loadu_pd(a + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s = std::fma(a[i], a[i], s);
    return s;
}

}  // namespace

namespace detail {

const Kernels& avx2_table() {
    static const Kernels table = {
        round_unit_grid_v, grid_index_v,  bernoulli_scaled_v,
        poly_kernel_v,     poly_kernel_deriv_v, nominal_kernel_v,
        mul_inplace_v,     axpy_v,        dot_v,
        dot3_v,            sum_v,         sumsq_v,
        "avx2",
    };
    return table;
}

}  // namespace detail
}  // namespace rspline::simd
