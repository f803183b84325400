#include <atomic>

#include "holestress/simd.hpp"

namespace holestress::simd {

namespace {

Isa probe() noexcept {
#if defined(HOLESTRESS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::Avx2;
#endif
    return Isa::Scalar;
}

std::atomic<Isa>& active() noexcept {
    static std::atomic<Isa> isa{probe()};
    return isa;
}

}  // namespace

const char* isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::Avx2: return "avx2";
        case Isa::Scalar: break;
    }
    return "scalar";
}

Isa detected_isa() noexcept {
    static const Isa isa = probe();
    return isa;
}

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

Isa force_isa(Isa isa) noexcept {
    if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) isa = Isa::Scalar;
    active().store(isa, std::memory_order_relaxed);
    return isa;
}

double dot(std::span<const double> x, std::span<const double> y) {
#if defined(HOLESTRESS_HAVE_AVX2)
    if (active_isa() == Isa::Avx2) return avx2::dot(x, y);
#endif
    return scalar::dot(x, y);
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
#if defined(HOLESTRESS_HAVE_AVX2)
    if (active_isa() == Isa::Avx2) return avx2::axpy(a, x, y);
#endif
    scalar::axpy(a, x, y);
}

void chebyshev_basis(std::span<const double> xs, std::size_t n_terms, std::span<double> t,
                     std::span<double> dt, std::span<double> d2t) {
#if defined(HOLESTRESS_HAVE_AVX2)
    if (active_isa() == Isa::Avx2) return avx2::chebyshev_basis(xs, n_terms, t, dt, d2t);
#endif
    scalar::chebyshev_basis(xs, n_terms, t, dt, d2t);
}

}  // namespace holestress::simd
