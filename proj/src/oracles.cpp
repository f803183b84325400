#include "holestress/oracles.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "holestress/corner.hpp"
#include "holestress/errors.hpp"
#include "holestress/quadrature.hpp"

namespace holestress {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2;
constexpr double kPanel = 0.25;

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < kPi)) throw DomainError("ling: alpha must lie in (0, pi)");
}

// Truncation so that the exponentially decaying parts are below 1e-17.
double default_cut(double alpha) { return std::ceil(48.0 / alpha / kPanel) * kPanel; }

// sinh(s a) / (sinh(2 s a) + s sin(2a)) without overflow, s > 0.
double sinh_ratio(double s, double alpha) {
    return 1.0 / (2.0 * std::cosh(s * alpha) + s * std::sin(2.0 * alpha) / std::sinh(s * alpha));
}

template <class F>
double composite(F&& f, double a, double b) {
    const auto& rule = cached_legendre_rule(16);
    const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / kPanel - 1e-12)));
    const double h = (b - a) / panels;
    double sum = 0.0;
    for (int k = 0; k < panels; ++k) sum += gauss_panel(rule, f, a + k * h, a + (k + 1) * h);
    return sum;
}

}  // namespace

cplx circle_phi(double theta) { return 0.5 * std::polar(1.0, -theta); }

cplx ellipse_phi(double theta, double m) {
    if (!(m > 0.0 && m < 1.0)) throw DomainError("ellipse_phi: m must lie in (0, 1)");
    const double tau = std::atan2((1.0 + m) * std::sin(theta), (1.0 - m) * std::cos(theta));
    return 0.5 * (1.0 - m) * std::polar(1.0, -tau);
}

double circle_trace(double theta, double chi) { return 1.0 + chi - 2.0 * (1.0 - chi) * std::cos(2.0 * theta); }

double ellipse_trace(double theta, double m) {
    if (!(m > 0.0 && m < 1.0)) throw DomainError("ellipse_trace: m must lie in (0, 1)");
    const double tau = std::atan2((1.0 + m) * std::sin(theta), (1.0 - m) * std::cos(theta));
    // phi'(z) = -(1 - m) / (2 (e^{2 i tau} - m))
    const cplx dphi = -0.5 * (1.0 - m) / (std::polar(1.0, 2.0 * tau) - m);
    return 1.0 + 4.0 * dphi.real();
}

LingIntegrals ling_integrals(double alpha, double S) {
    check_alpha(alpha);
    if (S <= 0.0) S = default_cut(alpha);
    const double sa = std::sin(alpha), s2a = std::sin(2.0 * alpha);
    auto i1 = [&](double s) {
        if (s < 1e-6) return (alpha * alpha - sa * sa) / (2.0 * alpha + s2a);
        const double sh = std::sinh(s * alpha);
        // (sinh^2 - s^2 sin^2) / (s (s^2+1) (sinh 2sa + s sin 2a)), split so
        // large s does not overflow.
        const double r = sinh_ratio(s, alpha);
        return (sh * r - s * s * sa * sa * r / sh) / (s * (s * s + 1.0));
    };
    auto i2 = [&](double s) {
        if (s < 1e-6) return sa * sa / (2.0 * alpha + s2a);
        return s * sa * sa * sinh_ratio(s, alpha) / std::sinh(s * alpha);
    };
    LingIntegrals out;
    out.I1 = composite(i1, 0.0, S) + 0.25 * std::log1p(1.0 / (S * S));
    out.I2 = composite(i2, 0.0, S);
    if (!std::isfinite(out.I1) || !std::isfinite(out.I2) || out.I1 == 0.0)
        throw NumericalError("ling_integrals: integrals did not evaluate to finite values");
    return out;
}

double ling_K(double alpha, double N1, double N2, double S) {
    const auto I = ling_integrals(alpha, S);
    return (N1 - 2.0 * (N1 - N2) * I.I2) / (4.0 * I.I1);
}

LingParams ling_params(double alpha, double N1, double N2) {
    return {alpha, N1, N2, ling_K(alpha, N1, N2)};
}

double ling_F(double s, const LingParams& p) {
    s = std::abs(s);
    const double a = p.alpha;
    const double cot = std::cos(a) / std::sin(a);
    if (s < 1e-8) return (2.0 * p.K + (p.N1 - p.N2) * cot / a) * a / (2.0 * a + std::sin(2.0 * a));
    const double s_coth = s / std::tanh(s * a);
    const double num = 2.0 * p.K - (p.N1 - p.N2) * (s * s - cot * s_coth);
    return num * sinh_ratio(s, a);
}

double ling_xi(double theta, double alpha) {
    const double ca = std::cos(alpha);
    const double gamma = theta + std::asin(std::sin(theta) * ca);
    const double cg = std::cos(gamma);
    const double ch = (1.0 + ca * cg) / (ca + cg);
    return std::acosh(std::max(ch, 1.0));
}

LingTrace::LingTrace(const LingParams& p, double handoff) : p_(p), handoff_(handoff) {
    check_alpha(p.alpha);
    const double S = default_cut(p.alpha);
    const auto& rule = cached_legendre_rule(16);
    const int panels = static_cast<int>(std::lround(S / kPanel));
    for (int k = 0; k < panels; ++k) {
        const double lo = k * kPanel;
        for (std::size_t i = 0; i < rule.size(); ++i) {
            const double s = lo + 0.5 * kPanel * (rule.nodes[i] + 1.0);
            s_.push_back(s);
            wf_.push_back(0.5 * kPanel * rule.weights[i] * ling_F(s, p_));
        }
    }
}

double LingTrace::direct(double theta) const {
    const double a = p_.alpha;
    // For alpha <= pi/2 the trace is bounded at the corner; take the value
    // just below it.
    if (a <= kHalfPi) theta = std::min(theta, kHalfPi - 1e-7);
    const double xi = ling_xi(theta, a);
    const double H = 4.0 * (std::cosh(xi) - std::cos(a)) * std::sin(a);
    double sum = 0.0;
    for (std::size_t i = 0; i < s_.size(); ++i) sum += wf_[i] * std::cos(s_[i] * xi);
    return H * sum;
}

double LingTrace::operator()(double theta) const {
    if (!(theta >= -kHalfPi && theta <= kHalfPi)) throw DomainError("ling_trace: theta must lie in [-pi/2, pi/2]");
    theta = std::abs(theta);
    const double eps = kHalfPi - theta;
    if (p_.alpha > kHalfPi) {
        if (eps <= 0.0) throw SingularEvaluation("ling_trace: the trace is unbounded at the corner");
        if (eps < handoff_) return ling_corner_asymptote(p_.alpha, p_.K, p_.N1, p_.N2, eps);
    }
    return direct(theta);
}

double ling_trace(double theta, const LingParams& p) { return LingTrace(p)(theta); }

}  // namespace holestress
