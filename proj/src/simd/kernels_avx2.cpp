// Compiled with -mavx2 -mfma; only called after a CPUID check.
#include <immintrin.h>

#include "holestress/errors.hpp"
#include "holestress/simd.hpp"

namespace holestress::simd::avx2 {

double dot(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw InvalidArgument("dot: length mismatch");
    const std::size_t n = x.size();
    const std::size_t body = n & ~std::size_t{7};
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i < body; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(&x[i]), _mm256_loadu_pd(&y[i]), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(&x[i + 4]), _mm256_loadu_pd(&y[i + 4]), acc1);
    }
    acc0 = _mm256_add_pd(acc0, acc1);
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc0);
    double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    // tail
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
    if (x.size() != y.size()) throw InvalidArgument("axpy: length mismatch");
    const std::size_t n = x.size();
    const std::size_t body = n & ~std::size_t{3};
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i < body; i += 4) {
        __m256d vy = _mm256_loadu_pd(&y[i]);
        vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(&x[i]), vy);
        _mm256_storeu_pd(&y[i], vy);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void chebyshev_basis(std::span<const double> xs, std::size_t n_terms, std::span<double> t,
                     std::span<double> dt, std::span<double> d2t) {
    const std::size_t n = xs.size();
    if (t.size() < n * n_terms || dt.size() < n * n_terms || d2t.size() < n * n_terms)
        throw InvalidArgument("chebyshev_basis: output too small");
    if (n_terms == 0) return;
    for (std::size_t p = 0; p < n; ++p) {
        t[p] = 1.0;
        dt[p] = 0.0;
        d2t[p] = 0.0;
    }
    if (n_terms == 1) return;
    for (std::size_t p = 0; p < n; ++p) {
        t[n + p] = xs[p];
        dt[n + p] = 1.0;
        d2t[n + p] = 0.0;
    }
    const std::size_t body = n & ~std::size_t{3};
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d four = _mm256_set1_pd(4.0);
    for (std::size_t k = 1; k + 1 < n_terms; ++k) {
        const double* t0 = &t[(k - 1) * n];
        const double* t1 = &t[k * n];
        const double* d0 = &dt[(k - 1) * n];
        const double* d1 = &dt[k * n];
        const double* s0 = &d2t[(k - 1) * n];
        const double* s1 = &d2t[k * n];
        double* t2 = &t[(k + 1) * n];
        double* d2 = &dt[(k + 1) * n];
        double* s2 = &d2t[(k + 1) * n];
        std::size_t p = 0;
        for (; p < body; p += 4) {
            const __m256d x2 = _mm256_mul_pd(two, _mm256_loadu_pd(&xs[p]));
            const __m256d vt1 = _mm256_loadu_pd(&t1[p]);
            const __m256d vd1 = _mm256_loadu_pd(&d1[p]);
            const __m256d vs1 = _mm256_loadu_pd(&s1[p]);
            _mm256_storeu_pd(&t2[p], _mm256_fmsub_pd(x2, vt1, _mm256_loadu_pd(&t0[p])));
            __m256d vd = _mm256_fmadd_pd(x2, vd1, _mm256_mul_pd(two, vt1));
            _mm256_storeu_pd(&d2[p], _mm256_sub_pd(vd, _mm256_loadu_pd(&d0[p])));
            __m256d vs = _mm256_fmadd_pd(x2, vs1, _mm256_mul_pd(four, vd1));
            _mm256_storeu_pd(&s2[p], _mm256_sub_pd(vs, _mm256_loadu_pd(&s0[p])));
        }
        for (; p < n; ++p) {
            const double x2 = 2.0 * xs[p];
            t2[p] = x2 * t1[p] - t0[p];
            d2[p] = 2.0 * t1[p] + x2 * d1[p] - d0[p];
            s2[p] = 4.0 * d1[p] + x2 * s1[p] - s0[p];
        }
    }
}

}  // namespace holestress::simd::avx2
