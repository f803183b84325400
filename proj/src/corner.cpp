#include "holestress/corner.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <sstream>

#include "holestress/errors.hpp"

namespace holestress {

namespace {

constexpr double kPi = std::numbers::pi;

double bisect(const std::function<double(double)>& f, double lo, double hi, double tol) {
    double flo = f(lo);
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// First sign change of f on a uniform scan of (lo, hi]; returns false if none.
bool first_bracket(const std::function<double(double)>& f, double lo, double hi, int cells,
                   double& a, double& b) {
    const double h = (hi - lo) / cells;
    double x0 = lo, f0 = f(x0);
    for (int i = 1; i <= cells; ++i) {
        const double x1 = lo + i * h;
        const double f1 = f(x1);
        if (f1 == 0.0 || (f0 < 0.0) != (f1 < 0.0)) {
            a = x0;
            b = x1;
            return true;
        }
        x0 = x1;
        f0 = f1;
    }
    return false;
}

}  // namespace

double williams_residual(double beta, double lambda) {
    const double x = lambda - 1.0;
    return std::sin(x * beta) + x * std::sin(beta);
}

CornerSpec williams_exponent(double beta) {
    if (!(beta > 0.0 && beta < 2.0 * kPi)) throw DomainError("williams_exponent: beta must lie in (0, 2pi)");
    CornerSpec c;
    c.beta = beta;
    if (beta == kPi) {
        c.lambda = 2.0;
        c.exponent = 1.0;
        return c;
    }
    // Scan x = lambda - 1 over (1e-8, 5] in 400 cells.
    const auto f = [beta](double x) { return std::sin(x * beta) + x * std::sin(beta); };
    const double x_lo = 1e-8, x_hi = 5.0;
    const int cells = 400;
    double a = 0.0, b = 0.0;
    if (first_bracket(f, x_lo, x_hi, cells, a, b)) {
        const double x = bisect(f, a, b, 1e-13);
        c.lambda = 1.0 + x;
        c.exponent = x;
        return c;
    }

    // No real root: the dominant roots are a complex pair. Seed Newton from
    // the first interior minimum of |f| on the scan grid.
    const double h = (x_hi - x_lo) / cells;
    double seed = -1.0;
    for (int i = 1; i < cells; ++i) {
        const double xm = x_lo + (i - 1) * h, x0 = x_lo + i * h, xp = x_lo + (i + 1) * h;
        if (std::abs(f(x0)) <= std::abs(f(xm)) && std::abs(f(x0)) <= std::abs(f(xp))) {
            seed = x0;
            break;
        }
    }
    if (seed < 0.0) {
        std::ostringstream os;
        os << "williams_exponent: no root bracket in lambda-1 in (" << x_lo << ", " << x_hi
           << "] for beta=" << beta;
        throw NumericalError(os.str());
    }
    using C = std::complex<double>;
    const double sb = std::sin(beta);
    C x(seed, 0.5);
    bool ok = false;
    for (int it = 0; it < 100; ++it) {
        const C fx = std::sin(x * beta) + x * sb;
        const C dfx = beta * std::cos(x * beta) + sb;
        const C dx = fx / dfx;
        x -= dx;
        if (std::abs(dx) < 1e-15 * std::max(1.0, std::abs(x))) {
            ok = true;
            break;
        }
    }
    if (!ok || !(x.real() > 0.0)) {
        std::ostringstream os;
        os << "williams_exponent: complex root search failed near lambda-1=" << seed
           << " for beta=" << beta;
        throw NumericalError(os.str());
    }
    c.lambda = 1.0 + x.real();
    c.exponent = x.real();
    c.real_root = false;
    return c;
}

double wedge_root_t1(double alpha) {
    if (!(alpha > kPi / 2 && alpha < kPi)) throw DomainError("wedge_root_t1: alpha must lie in (pi/2, pi)");
    const auto g = [alpha](double t) { return std::sin(2.0 * alpha * t) + t * std::sin(2.0 * alpha); };
    double a = 0.0, b = 0.0;
    if (!first_bracket(g, 1e-8, 4.0, 800, a, b)) {
        std::ostringstream os;
        os << "wedge_root_t1: no sign change on (1e-8, 4] for alpha=" << alpha;
        throw NumericalError(os.str());
    }
    return bisect(g, a, b, 1e-14);
}

double ling_corner_asymptote(double alpha, double K, double N1, double N2, double eps) {
    if (!(alpha > kPi / 2 && alpha < kPi)) throw DomainError("ling_corner_asymptote: alpha must lie in (pi/2, pi)");
    if (!(eps > 0.0 && eps < 0.2)) throw DomainError("ling_corner_asymptote: eps must lie in (0, 0.2)");
    const double t = wedge_root_t1(alpha);
    // coth(i alpha t) = -i cot(alpha t) at the pole z = i t
    const double num = 2.0 * K + (N1 - N2) * t * (t + 1.0 / std::tan(alpha) / std::tan(alpha * t));
    const double den = 2.0 * alpha * std::cos(2.0 * alpha * t) + std::sin(2.0 * alpha);
    return -num / den * 2.0 * kPi * std::sin(alpha) * std::sin(alpha * t) *
           std::pow(2.0 * std::sin(alpha) / eps, 1.0 - t);
}

}  // namespace holestress
