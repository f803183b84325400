#include <gtest/gtest.h>

#include <cmath>

#include "holestress/errors.hpp"
#include "holestress/linsolve.hpp"
#include "holestress/simd.hpp"
#include "property.hpp"

using namespace holestress;

namespace {

DenseSystem random_system(prop::Gen& g, std::size_t m, std::size_t n, std::vector<double>& xstar) {
    DenseSystem s(m, n);
    for (auto& v : s.A) v = g.uniform(-1, 1);
    xstar.resize(n);
    for (auto& v : xstar) v = g.uniform(-2, 2);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) s.rhs[i] += s(i, j) * xstar[j];
    return s;
}

double frob(const DenseSystem& s) {
    double t = 0.0;
    for (double v : s.A) t += v * v;
    return std::sqrt(t);
}

double norm(const std::vector<double>& v) {
    double t = 0.0;
    for (double x : v) t += x * x;
    return std::sqrt(t);
}

}  // namespace

TEST(Lstsq, Identity) {
    DenseSystem s(4, 4);
    for (int i = 0; i < 4; ++i) {
        s(i, i) = 1.0;
        s.rhs[i] = 1.5 * i - 2.0;
    }
    const auto r = lstsq(s);
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(r.x[i], 1.5 * i - 2.0, 1e-15);
    EXPECT_NEAR(r.residual_norm, 0.0, 1e-15);
}

TEST(Lstsq, MeanOfTwoObservations) {
    DenseSystem s(2, 1);
    s(0, 0) = s(1, 0) = 1.0;
    s.rhs = {0.0, 2.0};
    const auto r = lstsq(s);
    EXPECT_NEAR(r.x[0], 1.0, 1e-15);
    EXPECT_NEAR(r.residual_norm, std::sqrt(2.0), 1e-15);
}

TEST(Lstsq, RecoversPlantedSolution) {
    prop::Gen g(71);
    std::vector<double> xs;
    const auto s = random_system(g, 40, 10, xs);
    for (bool piv : {false, true}) {
        const auto r = lstsq(s, {piv});
        for (int j = 0; j < 10; ++j) EXPECT_NEAR(r.x[j], xs[j], 1e-12);
    }
}

TEST(Lstsq, RankDeficiencyNamesColumn) {
    prop::Gen g(72);
    std::vector<double> xs;
    auto s = random_system(g, 12, 5, xs);
    for (std::size_t i = 0; i < 12; ++i) s(i, 3) = 2.0 * s(i, 1);
    try {
        lstsq(s);
        FAIL() << "expected RankDeficiency";
    } catch (const RankDeficiency& e) {
        EXPECT_EQ(e.column(), 3u);
    }
    EXPECT_THROW(lstsq(s, {true}), RankDeficiency);
}

TEST(Lstsq, RejectsUnderdetermined) {
    DenseSystem s(2, 3);
    EXPECT_THROW(lstsq(s), InvalidArgument);
}

TEST(Lstsq, NormalEquationsHold) {
    prop::for_all<std::pair<int, int>>(
        73, 40, [](prop::Gen& g) { const int n = g.integer(1, 20); return std::make_pair(n + g.integer(0, 30), n); },
        [](std::pair<int, int> mn) {
            prop::Gen g(mn.first * 31 + mn.second);
            std::vector<double> xs;
            auto s = random_system(g, mn.first, mn.second, xs);
            for (auto& b : s.rhs) b += g.uniform(-0.5, 0.5);  // inconsistent
            const auto r = lstsq(s, {g.coin(), 1e-12, g.coin()});
            std::vector<double> res(s.rows);
            for (std::size_t i = 0; i < s.rows; ++i) {
                res[i] = -s.rhs[i];
                for (std::size_t j = 0; j < s.cols; ++j) res[i] += s(i, j) * r.x[j];
            }
            if (std::abs(norm(res) - r.residual_norm) > 1e-12 * (1 + norm(s.rhs)))
                return prop::str("residual_norm mismatch for ", mn.first, "x", mn.second);
            for (std::size_t j = 0; j < s.cols; ++j) {
                double v = 0.0;
                for (std::size_t i = 0; i < s.rows; ++i) v += s(i, j) * res[i];
                if (std::abs(v) > 1e-10 * frob(s) * norm(s.rhs)) return prop::str("normal equation ", j);
            }
            return std::string();
        });
}

TEST(Lstsq, ColumnScalingCovariance) {
    prop::for_all<int>(74, 30, [](prop::Gen& g) { return g.integer(2, 15); }, [](int n) {
        prop::Gen g(n * 5);
        std::vector<double> xs;
        auto s = random_system(g, 2 * n + 3, n, xs);
        for (auto& b : s.rhs) b += g.uniform(-0.1, 0.1);
        std::vector<double> d(n);
        for (auto& v : d) v = g.log_uniform(1e-2, 1e2);
        auto sd = s;
        for (std::size_t i = 0; i < s.rows; ++i)
            for (int j = 0; j < n; ++j) sd(i, j) *= d[j];
        const auto r = lstsq(s), rd = lstsq(sd);
        for (int j = 0; j < n; ++j)
            if (std::abs(rd.x[j] - r.x[j] / d[j]) > 1e-12 * (1 + std::abs(r.x[j] / d[j])))
                return prop::str("column ", j, " ", rd.x[j], " vs ", r.x[j] / d[j]);
        return std::string();
    });
}

TEST(Lstsq, EquilibrationRescuesBadlyScaledColumn) {
    prop::Gen g(75);
    std::vector<double> xs;
    auto s = random_system(g, 30, 6, xs);
    for (std::size_t i = 0; i < s.rows; ++i) s(i, 5) *= 1e-13;
    for (std::size_t i = 0; i < s.rows; ++i) {
        s.rhs[i] = 0.0;
        for (std::size_t j = 0; j < 6; ++j) s.rhs[i] += s(i, j) * xs[j];
    }
    EXPECT_THROW(lstsq(s), RankDeficiency);
    const auto r = lstsq(s, {true, 1e-12, true});
    // the column carries ~1e-13 of the data, so x_5 is good to ~1e-3 only
    EXPECT_NEAR(r.x[5], xs[5], 1e-2);
    for (int j = 0; j < 5; ++j) EXPECT_NEAR(r.x[j], xs[j], 1e-12);
    EXPECT_LT(r.residual_norm, 1e-13);
}

TEST(Lstsq, ScalarAndAvx2AgreeOnSolve) {
    if (simd::detected_isa() != simd::Isa::Avx2) GTEST_SKIP() << "no AVX2 on this CPU";
    prop::Gen g(76);
    std::vector<double> xs;
    auto s = random_system(g, 90, 40, xs);
    for (auto& b : s.rhs) b += g.uniform(-0.1, 0.1);
    const auto saved = simd::active_isa();
    simd::force_isa(simd::Isa::Scalar);
    const auto a = lstsq(s, {true});
    simd::force_isa(simd::Isa::Avx2);
    const auto b = lstsq(s, {true});
    simd::force_isa(saved);
    for (int j = 0; j < 40; ++j) EXPECT_NEAR(a.x[j], b.x[j], 1e-12);
    EXPECT_NEAR(a.residual_norm, b.residual_norm, 1e-12);
}
