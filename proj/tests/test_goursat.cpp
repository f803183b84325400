#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "holestress/chebyshev.hpp"
#include "holestress/errors.hpp"
#include "holestress/goursat.hpp"
#include "holestress/linsolve.hpp"
#include "holestress/oracles.hpp"
#include "property.hpp"

using namespace holestress;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2;

std::vector<double> unit(int N, int k) {
    std::vector<double> v(N, 0.0);
    v[k] = 1.0;
    return v;
}

// Chebyshev fit of the exact ellipse phi (no corner).
AugmentedGoursat ellipse_fit(int N) {
    const auto re = interpolate([](double t) { return ellipse_phi(t, 0.5).real(); }, N, 0.0, kHalfPi);
    const auto im = interpolate([](double t) { return ellipse_phi(t, 0.5).imag(); }, N, 0.0, kHalfPi);
    return AugmentedGoursat(re.coeffs, im.coeffs);
}

AugmentedGoursat random_symmetric(prop::Gen& g, int N, std::optional<double> e) {
    std::vector<double> a(N), b(N);
    for (int k = 0; k < N; ++k) {
        a[k] = g.uniform(-1, 1) / (1 + k * k);
        b[k] = g.uniform(-1, 1) / (1 + k * k);
    }
    // impose Re phi(pi/2) = 0 and Im phi(0) = 0 through a_0 and b_0
    const auto bp = basis_values(N, e, kHalfPi), b0 = basis_values(N, e, 0.0);
    double sa = 0.0, sb = 0.0;
    for (int k = 1; k < N; ++k) {
        sa += a[k] * bp.b[k];
        sb += b[k] * b0.b[k];
    }
    a[0] = -sa / bp.b[0];
    b[0] = -sb / b0.b[0];
    return AugmentedGoursat(a, b, e);
}
}  // namespace

TEST(Goursat, ZeroCoefficients) {
    const AugmentedGoursat g(std::vector<double>(8, 0.0), std::vector<double>(8, 0.0));
    EXPECT_EQ(eval_phi(g, 0.4), cplx(0.0, 0.0));
}

TEST(Goursat, ConstantTerm) {
    const AugmentedGoursat g(unit(8, 0), std::vector<double>(8, 0.0));
    for (double t : {0.0, 0.7, kHalfPi}) EXPECT_NEAR(std::abs(eval_phi(g, t) - 1.0), 0.0, 1e-15);
}

TEST(Goursat, CornerTermValues) {
    const AugmentedGoursat g(unit(8, 7), std::vector<double>(8, 0.0), 0.5);
    EXPECT_NEAR(std::abs(eval_phi(g, kHalfPi)), 0.0, 1e-15);
    EXPECT_NEAR(eval_phi(g, kHalfPi - 0.01).real(), 0.1, 1e-14);
    EXPECT_NEAR(eval_dphi(g, kHalfPi - 0.01).real(), -5.0, 1e-11);
    EXPECT_THROW(eval_dphi(g, kHalfPi), SingularEvaluation);
    EXPECT_THROW(eval_d2phi(g, kHalfPi), SingularEvaluation);
}

TEST(Goursat, CornerDerivativeAtCornerWhenRegular) {
    const AugmentedGoursat g(unit(8, 7), std::vector<double>(8, 0.0), 1.5);
    EXPECT_NEAR(std::abs(eval_dphi(g, kHalfPi)), 0.0, 1e-15);
    EXPECT_THROW(eval_d2phi(g, kHalfPi), SingularEvaluation);
}

TEST(Goursat, T1DerivativeIsIntervalScaled) {
    const AugmentedGoursat g(unit(8, 1), std::vector<double>(8, 0.0));
    EXPECT_NEAR(eval_dphi(g, 0.3).real(), 4.0 / kPi, 1e-14);
    EXPECT_NEAR(eval_dphi(g, 1.2).real(), 4.0 / kPi, 1e-14);
}

TEST(Goursat, EllipseFitDerivativeMatchesDifferences) {
    const auto g = ellipse_fit(40);
    const double h = 1e-6, t = 0.5;
    const cplx fd = (eval_phi(g, t + h) - eval_phi(g, t - h)) / (2 * h);
    EXPECT_LT(std::abs(fd - eval_dphi(g, t)), 1e-6);
}

TEST(Goursat, ExtendMirrorFormula) {
    const auto g = ellipse_fit(30);
    const double t0 = 0.4;
    const cplx p = eval_phi(g, t0);
    const cplx q = extend(g, kPi - t0);
    EXPECT_NEAR(q.real(), -p.real(), 1e-15);
    EXPECT_NEAR(q.imag(), p.imag(), 1e-15);
    const cplx r = extend(g, kPi + t0);
    EXPECT_NEAR(std::abs(r + p), 0.0, 1e-15);
    const cplx s = extend(g, 2 * kPi - t0);
    EXPECT_NEAR(std::abs(s - std::conj(p)), 0.0, 1e-15);
}

TEST(Goursat, ExtendContinuousAtJunctions) {
    prop::for_all<int>(61, 20, [](prop::Gen& g) { return g.integer(8, 40); }, [](int N) {
        prop::Gen g(N * 7);
        const std::optional<double> e = g.coin() ? std::optional<double>(g.uniform(0.3, 2.5)) : std::nullopt;
        const auto phi = random_symmetric(g, N, e);
        const double d = 1e-10;
        for (double j : {kHalfPi, kPi, 1.5 * kPi}) {
            // first-quadrant angle of the junction, and a slope bound near it
            const double t = (j == kPi) ? d : kHalfPi - d;
            const double slope = std::abs(eval_dphi(phi, t)) / (e ? std::min(1.0, *e) : 1.0);
            const double jump = std::abs(extend(phi, j - d) - extend(phi, j + d));
            if (jump > 1e-12 + 4.0 * slope * d) return prop::str("N=", N, " jump ", jump, " at ", j);
        }
        return prop::fail_if(std::abs(extend(phi, 0.0) - extend(phi, 2 * kPi)) > 1e-12, prop::str("N=", N, " at 2 pi"));
    });
}

TEST(Goursat, RejectsMismatchedSizes) {
    EXPECT_THROW(AugmentedGoursat(std::vector<double>(4), std::vector<double>(5)), InvalidArgument);
}

TEST(Goursat, JsonRoundTrip) {
    prop::Gen g(62);
    const auto phi = random_symmetric(g, 12, 0.6157310594907899);
    const auto text = to_json(phi);
    EXPECT_EQ(text.find("corner_terms"), std::string::npos);
    const auto back = goursat_from_json(text);
    EXPECT_EQ(back.a(), phi.a());
    EXPECT_EQ(back.b(), phi.b());
    ASSERT_TRUE(back.lambda().has_value());
    EXPECT_EQ(*back.lambda(), *phi.lambda());
    EXPECT_EQ(to_json(back), text);
}

TEST(Goursat, JsonWithoutCornerHasNullLambda) {
    const auto text = to_json(ellipse_fit(8));
    EXPECT_NE(text.find("\"lambda\": null"), std::string::npos);
    EXPECT_FALSE(goursat_from_json(text).lambda().has_value());
    EXPECT_THROW(goursat_from_json("{\"N\": 3, \"lambda\": null, \"a\": [1], \"b\": [1]}"), InvalidData);
    EXPECT_THROW(goursat_from_json("not json"), InvalidData);
}

TEST(Goursat, BatchMatchesPointwise) {
    const std::vector<double> th{0.0, 0.2, 0.9, 1.3, 1.57};
    for (auto e : {std::optional<double>(), std::optional<double>(0.7)}) {
        BasisValues out;
        basis_batch(20, e, th, out);
        for (std::size_t p = 0; p < th.size(); ++p) {
            const auto v = basis_values(20, e, th[p]);
            for (int k = 0; k < 20; ++k) {
                EXPECT_NEAR(out.b[k * th.size() + p], v.b[k], 1e-13);
                EXPECT_NEAR(out.db[k * th.size() + p], v.db[k], 1e-10);
                EXPECT_NEAR(out.d2b[k * th.size() + p], v.d2b[k], 1e-7);
            }
        }
    }
}

// i z is the rigid-rotation homogeneous solution. A first-quadrant fit of it
// is easy, but the symmetry extension turns it into -i z on the second
// quadrant, so the symmetric representation cannot carry it.
TEST(Goursat, HomogeneousSolutionExcluded) {
    const int N = 24;
    auto iz = [](double t) { return cplx(0.0, 1.0) * std::polar(1.0, t); };
    const auto re = interpolate([&](double t) { return iz(t).real(); }, N, 0.0, kHalfPi);
    const auto im = interpolate([&](double t) { return iz(t).imag(); }, N, 0.0, kHalfPi);
    const AugmentedGoursat g(re.coeffs, im.coeffs);
    double err2 = 0.0, norm2 = 0.0;
    for (int i = 0; i < 400; ++i) {
        const double t = 2 * kPi * (i + 0.5) / 400;
        err2 += std::norm(extend(g, t) - iz(t));
        norm2 += std::norm(iz(t));
    }
    EXPECT_GE(std::sqrt(err2 / norm2), 0.1);
    EXPECT_LT(std::abs(eval_phi(g, 0.8) - iz(0.8)), 1e-13);
}
