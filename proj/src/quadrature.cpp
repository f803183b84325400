#include "holestress/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace holestress {

QuadratureRule legendre_rule(int n) {
    if (n < 1) throw InvalidArgument("legendre_rule: n must be >= 1");
    QuadratureRule rule;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            dp = n * (z * p1 - p2) / (z * z - 1.0);
            const double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) <= 1e-15) break;
        }
        // Recompute the derivative at the converged root for the weight.
        double p1 = 1.0, p2 = 0.0;
        for (int j = 1; j <= n; ++j) {
            const double p3 = p2;
            p2 = p1;
            p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
        }
        dp = n * (z * p1 - p2) / (z * z - 1.0);
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

QuadratureRule map_rule(const QuadratureRule& rule, double a, double b) {
    if (!(a < b)) throw InvalidArgument("map_rule: require a < b");
    QuadratureRule out;
    out.a = a;
    out.b = b;
    const double half = 0.5 * (b - a) / (0.5 * (rule.b - rule.a));
    const double rmid = 0.5 * (rule.a + rule.b);
    const double mid = 0.5 * (a + b);
    out.nodes.resize(rule.size());
    out.weights.resize(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i) {
        out.nodes[i] = mid + half * (rule.nodes[i] - rmid);
        out.weights[i] = half * rule.weights[i];
    }
    return out;
}

const QuadratureRule& cached_legendre_rule(int n) {
    static std::mutex mu;
    static std::map<int, QuadratureRule> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, legendre_rule(n)).first;
    return it->second;
}

double integrate(const std::function<double(double)>& f, double a, double b, int n) {
    if (!(a < b)) throw InvalidArgument("integrate: require a < b");
    auto g = f;
    return gauss_panel(cached_legendre_rule(n), g, a, b);
}

std::complex<double> integrate(const std::function<std::complex<double>(double)>& f, double a,
                               double b, int n) {
    if (!(a < b)) throw InvalidArgument("integrate: require a < b");
    auto g = f;
    return gauss_panel(cached_legendre_rule(n), g, a, b);
}

namespace {

template <class V, class F>
NestedResult<V> run_nested(F f, double a, double b, const NestedOptions& opt, SingularEnd end) {
    if (opt.n < 1) throw InvalidArgument("nested_integrate: n must be >= 1");
    if (!(opt.eps > 0.0)) throw InvalidArgument("nested_integrate: eps must be positive");
    const QuadratureRule& ref = cached_legendre_rule(opt.n);
    auto panel = [&](double lo, double hi) { return V(gauss_panel(ref, f, lo, hi)); };
    return nested_panels<V>(panel, a, b, opt.eps, end, opt.max_bisections, opt.rel_floor);
}

std::string failure_message(int levels, double gap) {
    std::ostringstream os;
    os << "nested_integrate: no convergence after " << levels << " bisections (gap " << gap << ")";
    return os.str();
}

}  // namespace

NestedResult<double> nested_integrate_result(const std::function<double(double)>& f, double a,
                                             double b, const NestedOptions& opt, SingularEnd end) {
    return run_nested<double>(f, a, b, opt, end);
}

NestedResult<std::complex<double>> nested_integrate_result(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const NestedOptions& opt, SingularEnd end) {
    return run_nested<std::complex<double>>(f, a, b, opt, end);
}

double nested_integrate(const std::function<double(double)>& f, double a, double b, int n,
                        double eps, SingularEnd end, int max_bisections) {
    const auto r = nested_integrate_result(f, a, b, NestedOptions{n, eps, max_bisections, 0.0}, end);
    if (!r.converged) throw ConvergenceError(failure_message(r.levels, r.gap), r.value, r.gap, r.levels);
    return r.value;
}

std::complex<double> nested_integrate(const std::function<std::complex<double>(double)>& f,
                                      double a, double b, int n, double eps, SingularEnd end,
                                      int max_bisections) {
    const auto r = nested_integrate_result(f, a, b, NestedOptions{n, eps, max_bisections, 0.0}, end);
    if (!r.converged)
        throw ConvergenceError(failure_message(r.levels, r.gap), r.value.real(), r.gap, r.levels,
                               r.value.imag());
    return r.value;
}

}  // namespace holestress
