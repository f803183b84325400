#include "holestress/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "holestress/errors.hpp"

namespace holestress {

namespace {

void check_interval(int n, double a, double b) {
    if (n < 1) throw InvalidArgument("chebyshev: n must be >= 1");
    if (!(a < b)) throw InvalidArgument("chebyshev: require a < b");
}

}  // namespace

std::vector<double> chebyshev_nodes(int n, double a, double b) {
    check_interval(n, a, b);
    std::vector<double> t(n);
    // x_j = cos(pi (j + 1/2) / n) decreases in j; store reversed.
    for (int j = 0; j < n; ++j) {
        const double x = std::cos(std::numbers::pi * (j + 0.5) / n);
        t[n - 1 - j] = 0.5 * (a + b) + 0.5 * (b - a) * x;
    }
    return t;
}

ChebSeries interpolate_samples(const std::vector<double>& samples, double a, double b) {
    const int n = static_cast<int>(samples.size());
    check_interval(n, a, b);
    ChebSeries s;
    s.a = a;
    s.b = b;
    s.coeffs.assign(n, 0.0);
    for (int k = 0; k < n; ++k) {
        double sum = 0.0;
        for (int j = 0; j < n; ++j) {
            // samples are in increasing t, i.e. node index n-1-j
            sum += samples[n - 1 - j] * std::cos(std::numbers::pi * k * (j + 0.5) / n);
        }
        s.coeffs[k] = (k == 0 ? 1.0 : 2.0) * sum / n;
    }
    return s;
}

ChebSeries interpolate(const std::function<double(double)>& f, int n, double a, double b) {
    const auto t = chebyshev_nodes(n, a, b);
    std::vector<double> samples(n);
    for (int i = 0; i < n; ++i) {
        samples[i] = f(t[i]);
        if (!std::isfinite(samples[i])) {
            std::ostringstream os;
            os << "interpolate: non-finite sample at node " << i << " (t=" << t[i] << ")";
            throw InvalidData(os.str());
        }
    }
    return interpolate_samples(samples, a, b);
}

double eval(const ChebSeries& s, double t) {
    const double slack = 8.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(s.a), std::abs(s.b));
    if (!(t >= s.a - slack && t <= s.b + slack)) {
        std::ostringstream os;
        os << "eval: t=" << t << " outside [" << s.a << ", " << s.b << "]";
        throw DomainError(os.str());
    }
    if (s.coeffs.empty()) return 0.0;
    double x = (2.0 * t - s.a - s.b) / (s.b - s.a);
    x = std::clamp(x, -1.0, 1.0);
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t k = s.coeffs.size() - 1; k >= 1; --k) {
        const double b0 = 2.0 * x * b1 - b2 + s.coeffs[k];
        b2 = b1;
        b1 = b0;
    }
    return x * b1 - b2 + s.coeffs[0];
}

ChebSeries derivative(const ChebSeries& s) {
    ChebSeries d;
    d.a = s.a;
    d.b = s.b;
    const std::size_t n = s.coeffs.size();
    if (n <= 1) {
        d.coeffs.assign(1, 0.0);
        return d;
    }
    d.coeffs.assign(n - 1, 0.0);
    // c'_{k-1} = c'_{k+1} + 2k c_k, with c'_{n-1} = c'_n = 0
    double next = 0.0, next2 = 0.0;
    for (std::size_t k = n - 1; k >= 1; --k) {
        const double v = next2 + 2.0 * static_cast<double>(k) * s.coeffs[k];
        d.coeffs[k - 1] = v;
        next2 = next;
        next = v;
    }
    d.coeffs[0] *= 0.5;
    const double scale = 2.0 / (s.b - s.a);
    for (auto& c : d.coeffs) c *= scale;
    return d;
}

}  // namespace holestress
