#pragma once

#include <cstddef>
#include <span>

// Data-parallel inner loops shared by the quadrature-heavy assembly and the
// QR factorization. Every kernel has a scalar reference in `scalar::` and,
// where the CPU supports it, a vector variant selected once at runtime. The
// free functions in `simd::` dispatch.
namespace holestress::simd {

enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa) noexcept;

// Best ISA supported by this CPU and build.
Isa detected_isa() noexcept;

// ISA currently used by the dispatching functions.
Isa active_isa() noexcept;

// Restrict dispatch to `isa` (clamped to what the CPU supports). Tests use
// this to compare variants; returns the ISA actually selected.
Isa force_isa(Isa isa) noexcept;

double dot(std::span<const double> x, std::span<const double> y);

// y += a * x
void axpy(double a, std::span<const double> x, std::span<double> y);

// Chebyshev polynomials T_k and their first two derivatives (w.r.t. x) at a
// batch of points in [-1, 1]. Output layout is term-major: out[k * n + p] for
// point p, so that one term across all points is contiguous.
void chebyshev_basis(std::span<const double> xs, std::size_t n_terms, std::span<double> t,
                     std::span<double> dt, std::span<double> d2t);

namespace scalar {
double dot(std::span<const double> x, std::span<const double> y);
void axpy(double a, std::span<const double> x, std::span<double> y);
void chebyshev_basis(std::span<const double> xs, std::size_t n_terms, std::span<double> t,
                     std::span<double> dt, std::span<double> d2t);
}  // namespace scalar

#if defined(HOLESTRESS_HAVE_AVX2)
namespace avx2 {
double dot(std::span<const double> x, std::span<const double> y);
void axpy(double a, std::span<const double> x, std::span<double> y);
void chebyshev_basis(std::span<const double> xs, std::size_t n_terms, std::span<double> t,
                     std::span<double> dt, std::span<double> d2t);
}  // namespace avx2
#endif

}  // namespace holestress::simd
