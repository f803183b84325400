#include "holestress/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>

#include "holestress/chebyshev.hpp"
#include "holestress/errors.hpp"

namespace holestress {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2;

}  // namespace

BoundaryShape circle() {
    BoundaryShape s;
    s.r = [](double) { return 1.0; };
    s.dr = [](double) { return 0.0; };
    s.d2r = [](double) { return 0.0; };
    s.label = "circle";
    return s;
}

BoundaryShape ellipse(double m) {
    if (!(m > 0.0 && m < 1.0)) throw DomainError("ellipse: m must lie in (0, 1)");
    const double q = (1.0 - m) / (1.0 + m);
    const double e2 = 1.0 - q * q;
    const double c = 1.0 - m;
    BoundaryShape s;
    s.r = [=](double t) {
        const double ct = std::cos(t);
        return c / std::sqrt(1.0 - e2 * ct * ct);
    };
    s.dr = [=](double t) {
        const double ct = std::cos(t);
        const double D = 1.0 - e2 * ct * ct;
        return -0.5 * c * e2 * std::sin(2.0 * t) / (D * std::sqrt(D));
    };
    s.d2r = [=](double t) {
        const double ct = std::cos(t);
        const double D = 1.0 - e2 * ct * ct;
        const double D1 = e2 * std::sin(2.0 * t);
        const double D2 = 2.0 * e2 * std::cos(2.0 * t);
        const double sq = std::sqrt(D);
        return c * (0.75 * D1 * D1 / (D * D * sq) - 0.5 * D2 / (D * sq));
    };
    s.label = "ellipse";
    s.param = m;
    return s;
}

BoundaryShape overlapping_circles(double alpha) {
    if (!(alpha > 0.0 && alpha < kPi)) throw DomainError("overlapping_circles: alpha must lie in (0, pi)");
    const double ca = std::cos(alpha);
    const double ca2 = ca * ca;
    BoundaryShape s;
    // r = cos(a) cos(t) + sqrt(S), S = 1 - cos^2(a) sin^2(t)
    s.r = [=](double t) {
        const double st = std::sin(t);
        return ca * std::cos(t) + std::sqrt(1.0 - ca2 * st * st);
    };
    s.dr = [=](double t) {
        const double st = std::sin(t);
        const double S = 1.0 - ca2 * st * st;
        const double S1 = -ca2 * std::sin(2.0 * t);
        return -ca * st + S1 / (2.0 * std::sqrt(S));
    };
    s.d2r = [=](double t) {
        const double st = std::sin(t);
        const double S = 1.0 - ca2 * st * st;
        const double S1 = -ca2 * std::sin(2.0 * t);
        const double S2 = -2.0 * ca2 * std::cos(2.0 * t);
        const double sq = std::sqrt(S);
        return -ca * std::cos(t) + S2 / (2.0 * sq) - S1 * S1 / (4.0 * S * sq);
    };
    if (alpha != kHalfPi) s.corner = williams_exponent(2.0 * alpha);
    s.label = "overlap";
    s.param = alpha;
    return s;
}

BoundaryShape custom_from_samples(const std::vector<double>& samples, std::optional<double> corner_beta) {
    if (samples.empty()) throw InvalidArgument("custom_from_samples: no samples");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!(samples[i] > 0.0) || !std::isfinite(samples[i])) {
            std::ostringstream os;
            os << "custom_from_samples: sample " << i << " is not a positive finite radius";
            throw InvalidData(os.str());
        }
    }
    auto r = std::make_shared<const ChebSeries>(interpolate_samples(samples, 0.0, kHalfPi));
    auto dr = std::make_shared<const ChebSeries>(derivative(*r));
    auto d2r = std::make_shared<const ChebSeries>(derivative(*dr));
    BoundaryShape s;
    s.r = [r](double t) { return eval(*r, t); };
    s.dr = [dr](double t) { return eval(*dr, t); };
    s.d2r = [d2r](double t) { return eval(*d2r, t); };
    if (corner_beta) s.corner = williams_exponent(*corner_beta);
    s.label = "custom";
    return s;
}

BoundaryPoint boundary_point(const BoundaryShape& shape, double theta) {
    if (!(theta >= 0.0 && theta <= 2.0 * kPi))
        throw DomainError("boundary_point: theta must lie in [0, 2pi]");
    double u, sign;
    if (theta <= kHalfPi) {
        u = theta;
        sign = 1.0;
    } else if (theta <= kPi) {
        u = kPi - theta;
        sign = -1.0;
    } else if (theta <= 3.0 * kHalfPi) {
        u = theta - kPi;
        sign = 1.0;
    } else {
        u = 2.0 * kPi - theta;
        sign = -1.0;
    }
    u = std::clamp(u, 0.0, kHalfPi);
    const cplx e = std::polar(1.0, theta);
    const double r = shape.r(u);
    return {r * e, cplx(sign * shape.dr(u), r) * e};
}

BoundaryJet boundary_jet(const BoundaryShape& shape, double theta) {
    const double r = shape.r(theta), r1 = shape.dr(theta), r2 = shape.d2r(theta);
    const cplx e = std::polar(1.0, theta);
    return {r * e, cplx(r1, r) * e, cplx(r2 - r, 2.0 * r1) * e};
}

bool inside_hole(const BoundaryShape& shape, cplx p) {
    const double rho = std::abs(p);
    if (rho == 0.0) return true;
    double u = std::atan2(std::abs(p.imag()), std::abs(p.real()));
    return rho < shape.r(std::clamp(u, 0.0, kHalfPi));
}

}  // namespace holestress
