#include <gtest/gtest.h>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <complex>
#include <numbers>

#include "holestress/errors.hpp"
#include "holestress/quadrature.hpp"
#include "property.hpp"

using namespace holestress;

TEST(LegendreRule, OnePointIsMidpoint) {
    const auto r = legendre_rule(1);
    ASSERT_EQ(r.size(), 1u);
    EXPECT_NEAR(r.nodes[0], 0.0, 1e-16);
    EXPECT_NEAR(r.weights[0], 2.0, 1e-15);
}

TEST(LegendreRule, TwoPointClosedForm) {
    const auto r = legendre_rule(2);
    EXPECT_NEAR(r.nodes[0], -1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(r.nodes[1], 1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(r.weights[0], 1.0, 1e-15);
    EXPECT_NEAR(r.weights[1], 1.0, 1e-15);
}

TEST(LegendreRule, OddMonomialVanishes) {
    const auto r = legendre_rule(16);
    EXPECT_NEAR(r.integrate([](double x) { return std::pow(x, 31); }), 0.0, 1e-13);
}

TEST(LegendreRule, ZeroPointsRejected) { EXPECT_THROW(legendre_rule(0), InvalidArgument); }

TEST(LegendreRule, StructuralInvariants) {
    for (int n = 1; n <= 64; ++n) {
        const auto r = legendre_rule(n);
        double sum = 0.0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            EXPECT_GT(r.weights[i], 0.0);
            EXPECT_GT(r.nodes[i], -1.0);
            EXPECT_LT(r.nodes[i], 1.0);
            if (i) EXPECT_GT(r.nodes[i], r.nodes[i - 1]);
            sum += r.weights[i];
        }
        EXPECT_NEAR(sum, 2.0, 1e-14) << "n=" << n;
    }
}

TEST(LegendreRule, ExactForMonomialsUpToDegree2nMinus1) {
    for (int n : {1, 2, 5, 16, 33}) {
        const auto r = map_rule(legendre_rule(n), 0.0, 1.0);
        for (int d = 0; d <= 2 * n - 1; ++d) {
            const double got = r.integrate([d](double x) { return std::pow(x, d); });
            EXPECT_NEAR(got, 1.0 / (d + 1), 1e-13 / (d + 1)) << "n=" << n << " degree " << d;
        }
    }
}

TEST(MapRule, MidpointOnUnitInterval) {
    const auto r = map_rule(legendre_rule(1), 0.0, 1.0);
    EXPECT_DOUBLE_EQ(r.nodes[0], 0.5);
    EXPECT_DOUBLE_EQ(r.weights[0], 1.0);
}

TEST(MapRule, WeightsScaleToInterval) {
    const auto r = map_rule(legendre_rule(2), 0.0, std::numbers::pi / 2);
    EXPECT_NEAR(r.weights[0], std::numbers::pi / 4, 1e-15);
    EXPECT_NEAR(r.weights[1], std::numbers::pi / 4, 1e-15);
}

TEST(MapRule, ConstantIntegratesToOne) {
    for (int n : {1, 3, 8, 16}) {
        const auto r = map_rule(legendre_rule(n), 0.0, 1.0);
        EXPECT_NEAR(r.integrate([](double) { return 1.0; }), 1.0, 1e-15);
    }
}

TEST(MapRule, EmptyIntervalRejected) {
    EXPECT_THROW(map_rule(legendre_rule(4), 1.0, 1.0), InvalidArgument);
    EXPECT_THROW(map_rule(legendre_rule(4), 2.0, 1.0), InvalidArgument);
}

TEST(NestedIntegrate, SquareRootEndpoint) {
    const double v = nested_integrate([](double x) { return std::sqrt(1.0 - x); }, 0.0, 1.0, 16, 1e-15);
    EXPECT_NEAR(v, 2.0 / 3.0, 1e-12);
}

TEST(NestedIntegrate, InverseSquareRootBeatsSinglePanel) {
    auto f = [](double x) { return 1.0 / std::sqrt(1.0 - x); };
    double nested = 0.0;
    try {
        nested = nested_integrate(f, 0.0, 1.0, 16, 1e-15);
    } catch (const ConvergenceError& e) {
        nested = e.estimate();  // the tail of a singular integrand never meets 1e-15
    }
    const double single = integrate(f, 0.0, 1.0, 16);
    EXPECT_NEAR(nested, 2.0, 1e-6);
    EXPECT_LT(std::abs(nested - 2.0), 1e-3 * std::abs(single - 2.0));
}

TEST(NestedIntegrate, AgreesWithTanhSinhReference) {
    // independent double-exponential quadrature as the reference
    boost::math::quadrature::tanh_sinh<double> ts;
    for (double p : {2.5, 1.5, 0.3, 3.7}) {
        auto f = [p](double x) { return std::pow(1.0 - x, p) * std::cos(3.0 * x); };
        const double ref = ts.integrate(f, 0.0, 1.0);
        const auto got = nested_integrate_result(f, 0.0, 1.0);
        EXPECT_NEAR(got.value, ref, 1e-12) << "p=" << p;
    }
    EXPECT_NEAR(nested_integrate([](double x) { return std::pow(1.0 - x, 2.5); }, 0.0, 1.0), 1.0 / 3.5, 1e-12);
}

TEST(NestedIntegrate, ComplexIntegrand) {
    auto f = [](double x) { return std::complex<double>(std::sqrt(x), -x * x); };
    const auto v = nested_integrate(f, 0.0, 1.0, 16, 1e-15, SingularEnd::Left);
    EXPECT_NEAR(v.real(), 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(v.imag(), -1.0 / 3.0, 1e-14);
}

TEST(NestedIntegrate, DivergentIntegrandReportsEstimate) {
    auto f = [](double x) { return 1.0 / (1.0 - x); };
    try {
        nested_integrate(f, 0.0, 1.0, 16, 1e-15, SingularEnd::Right, 20);
        FAIL() << "expected ConvergenceError";
    } catch (const ConvergenceError& e) {
        EXPECT_EQ(e.levels(), 20);
        EXPECT_GT(e.gap(), 0.1);
        EXPECT_GT(e.estimate(), 10.0);
    }
}

TEST(NestedIntegrate, PolynomialStopsAtFirstCheck) {
    auto f = [](double x) { return 3.0 * x * x - x + 0.25; };
    const auto r = nested_integrate_result(f, -0.5, 2.0);
    EXPECT_TRUE(r.converged);
    EXPECT_EQ(r.levels, 1);
    EXPECT_NEAR(r.value, integrate(f, -0.5, 2.0), 1e-13);
}

TEST(NestedIntegrate, RelativeFloorAcceptsRoundoffLimitedTail) {
    // O(1e12) integrand: the absolute 1e-15 test is at the mercy of roundoff
    auto f = [](double x) { return 1e12 * std::cos(3.0 * x); };
    NestedOptions opt;
    opt.rel_floor = 1e-13;
    const auto r = nested_integrate_result(f, 0.0, 1.0, opt);
    EXPECT_TRUE(r.converged);
    EXPECT_EQ(r.levels, 1);
    EXPECT_NEAR(r.value, 1e12 * std::sin(3.0) / 3.0, 1e-2);
}

// Nested error never exceeds the single-panel error on (1 - x)^p, p in (-0.9, 5].
TEST(NestedIntegrate, PowerSweepNotWorseThanSinglePanel) {
    for (int k = -8; k <= 50; ++k) {
        const double p = 0.1 * k;
        auto f = [p](double x) { return std::pow(1.0 - x, p); };
        const double exact = 1.0 / (p + 1.0);
        const double nested = nested_integrate_result(f, 0.0, 1.0).value;
        const double single = integrate(f, 0.0, 1.0, 16);
        EXPECT_LE(std::abs(nested - exact), std::abs(single - exact) + 1e-15) << "p=" << p;
    }
}

TEST(NestedIntegrate, MirrorInvariance) {
    prop::for_all<double>(
        21, 40, [](prop::Gen& g) { return g.uniform(0.05, 4.0); },
        [](double p) {
            auto right = [p](double x) { return std::pow(1.0 - x, p) * (1.0 + x); };
            auto left = [p](double x) { return std::pow(x, p) * (2.0 - x); };
            const double a = nested_integrate_result(right, 0.0, 1.0, {}, SingularEnd::Right).value;
            const double b = nested_integrate_result(left, 0.0, 1.0, {}, SingularEnd::Left).value;
            return prop::fail_if(std::abs(a - b) > 1e-13 * std::max(1.0, std::abs(a)), prop::str("p=", p, " ", a, " vs ", b));
        });
}

TEST(NestedIntegrate, ConvergesToExactAsEpsShrinks) {
    auto f = [](double x) { return std::pow(1.0 - x, 0.37); };
    const double exact = 1.0 / 1.37;
    double prev = 1.0;
    for (double eps : {1e-4, 1e-8, 1e-12}) {
        const double err = std::abs(nested_integrate_result(f, 0.0, 1.0, {16, eps}).value - exact);
        EXPECT_LE(err, prev);
        prev = err;
    }
    EXPECT_LT(prev, 1e-12);
}

TEST(PanelUnresolvable, DetectsUlpWidePanels) {
    EXPECT_FALSE(panel_unresolvable(0.0, 1e-300));
    EXPECT_TRUE(panel_unresolvable(1.0, 1.0 + 1e-15));
    EXPECT_FALSE(panel_unresolvable(1.0, 1.0 + 1e-9));
}
