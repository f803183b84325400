#include "holestress/simd.hpp"

#include "holestress/errors.hpp"

namespace holestress::simd::scalar {

double dot(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw InvalidArgument("dot: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
    if (x.size() != y.size()) throw InvalidArgument("axpy: length mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
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
        for (std::size_t p = 0; p < n; ++p) {
            const double x2 = 2.0 * xs[p];
            t2[p] = x2 * t1[p] - t0[p];
            d2[p] = 2.0 * t1[p] + x2 * d1[p] - d0[p];
            s2[p] = 4.0 * d1[p] + x2 * s1[p] - s0[p];
        }
    }
}

}  // namespace holestress::simd::scalar
