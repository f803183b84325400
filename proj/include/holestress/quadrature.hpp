#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <type_traits>
#include <utility>
#include <vector>

#include "holestress/errors.hpp"

namespace holestress {

// Nodes and weights of a finite-interval rule, nodes strictly increasing.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    double a = -1.0;
    double b = 1.0;

    std::size_t size() const noexcept { return nodes.size(); }

    template <class F>
    auto integrate(F&& f) const {
        using R = decltype(f(0.0));
        R sum{};
        for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
        return sum;
    }
};

// n-point Gauss-Legendre rule on (-1, 1). Newton iteration on the three-term
// recurrence, tolerance 1e-15.
QuadratureRule legendre_rule(int n);

// Affine image of `rule` on (a, b).
QuadratureRule map_rule(const QuadratureRule& rule, double a, double b);

enum class SingularEnd { Left, Right };

struct NestedOptions {
    int n = 16;
    double eps = 1e-15;
    int max_bisections = 60;
    // Also accept when the gap is below rel_floor times the size of the tail
    // estimate. Zero keeps the plain absolute test; vector-valued integrands
    // with O(1) entries need a roundoff floor near 1e-14.
    double rel_floor = 0.0;
};

template <class V>
struct NestedResult {
    V value{};
    double gap = 0.0;   // last |whole - (left + right)| of the tail check
    int levels = 0;     // bisections performed
    bool converged = false;
};

inline double nested_gap(double whole, double left, double right) {
    return std::abs(whole - (left + right));
}

inline double nested_gap(std::complex<double> whole, std::complex<double> left,
                         std::complex<double> right) {
    return std::abs(whole - (left + right));
}

inline double nested_gap(const std::vector<double>& whole, const std::vector<double>& left,
                         const std::vector<double>& right) {
    double g = 0.0;
    for (std::size_t i = 0; i < whole.size(); ++i)
        g = std::max(g, std::abs(whole[i] - (left[i] + right[i])));
    return g;
}

inline double nested_norm(double v) { return std::abs(v); }
inline double nested_norm(std::complex<double> v) { return std::abs(v); }
inline double nested_norm(const std::vector<double>& v) {
    double g = 0.0;
    for (double x : v) g = std::max(g, std::abs(x));
    return g;
}

inline void nested_accumulate(double& acc, double v) { acc += v; }
inline void nested_accumulate(std::complex<double>& acc, std::complex<double> v) { acc += v; }
inline void nested_accumulate(std::vector<double>& acc, const std::vector<double>& v) {
    if (acc.empty()) acc.assign(v.size(), 0.0);
    for (std::size_t i = 0; i < v.size(); ++i) acc[i] += v[i];
}

// True when a panel [lo, hi] is too narrow for the extreme Gauss nodes of
// rules up to n=64 to stay strictly inside in double precision.
inline bool panel_unresolvable(double lo, double hi) {
    const double scale = std::max({std::abs(lo), std::abs(hi), std::numeric_limits<double>::min()});
    return !(hi - lo > 16384.0 * std::numeric_limits<double>::epsilon() * scale);
}

// Dyadic refinement toward one endpoint. `panel(lo, hi)` returns a fixed-rule
// estimate of the integral over [lo, hi]. Each level integrates the current
// tail, bisects it toward the singular end and stops when the tail estimate
// and the sum of its two halves agree within eps; the result is the sum of all
// split-off panels plus the two final halves. Never throws on non-convergence;
// see `converged`.
template <class V, class Panel>
NestedResult<V> nested_panels(Panel&& panel, double a, double b, double eps, SingularEnd end,
                              int max_bisections, double rel_floor = 0.0) {
    if (!(a < b)) throw InvalidArgument("nested_panels: require a < b");
    NestedResult<V> out;
    V total{};
    bool have_total = false;
    auto add = [&](const V& v) {
        if (!have_total) {
            total = v;
            have_total = true;
        } else {
            nested_accumulate(total, v);
        }
    };

    double lo = a, hi = b;
    V tail = panel(lo, hi);
    for (int level = 1; level <= max_bisections; ++level) {
        const double mid = 0.5 * (lo + hi);
        if (panel_unresolvable(lo, mid) || panel_unresolvable(mid, hi)) break;
        V left = panel(lo, mid);
        V right = panel(mid, hi);
        out.gap = nested_gap(tail, left, right);
        out.levels = level;
        if (out.gap < eps || (rel_floor > 0.0 && out.gap <= rel_floor * nested_norm(tail))) {
            add(left);
            add(right);
            out.value = total;
            out.converged = true;
            return out;
        }
        if (end == SingularEnd::Right) {
            add(left);
            lo = mid;
            tail = std::move(right);
        } else {
            add(right);
            hi = mid;
            tail = std::move(left);
        }
    }
    add(tail);
    out.value = total;
    out.converged = false;
    return out;
}

// Panel integrator for pointwise integrands using a reference rule on (-1, 1).
template <class F>
auto gauss_panel(const QuadratureRule& ref, F& f, double lo, double hi) {
    using R = decltype(f(lo));
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    R sum{};
    for (std::size_t i = 0; i < ref.size(); ++i) sum += ref.weights[i] * f(mid + half * ref.nodes[i]);
    return R(half * sum);
}

// Plain (single-panel) Gauss-Legendre integral over (a, b).
double integrate(const std::function<double(double)>& f, double a, double b, int n = 16);
std::complex<double> integrate(const std::function<std::complex<double>(double)>& f, double a,
                               double b, int n = 16);

// Nested Gauss-Legendre integral with refinement toward `end`. Throws
// ConvergenceError (carrying the last estimate and gap) when the bisection
// cap is reached or the tail can no longer be split in double precision.
double nested_integrate(const std::function<double(double)>& f, double a, double b, int n = 16,
                        double eps = 1e-15, SingularEnd end = SingularEnd::Right,
                        int max_bisections = 60);
std::complex<double> nested_integrate(const std::function<std::complex<double>(double)>& f,
                                      double a, double b, int n = 16, double eps = 1e-15,
                                      SingularEnd end = SingularEnd::Right,
                                      int max_bisections = 60);

// Same as nested_integrate but reports non-convergence instead of throwing.
NestedResult<double> nested_integrate_result(const std::function<double(double)>& f, double a,
                                             double b, const NestedOptions& opt = {},
                                             SingularEnd end = SingularEnd::Right);
NestedResult<std::complex<double>> nested_integrate_result(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const NestedOptions& opt = {}, SingularEnd end = SingularEnd::Right);

// Plain callables (lambdas) pick the overload from their return type.
template <class F, class R = std::decay_t<std::invoke_result_t<F&, double>>>
    requires(!std::is_same_v<std::decay_t<F>, std::function<R(double)>>)
R integrate(F&& f, double a, double b, int n = 16) {
    return integrate(std::function<R(double)>(std::forward<F>(f)), a, b, n);
}

template <class F, class R = std::decay_t<std::invoke_result_t<F&, double>>>
    requires(!std::is_same_v<std::decay_t<F>, std::function<R(double)>>)
R nested_integrate(F&& f, double a, double b, int n = 16, double eps = 1e-15,
                   SingularEnd end = SingularEnd::Right, int max_bisections = 60) {
    return nested_integrate(std::function<R(double)>(std::forward<F>(f)), a, b, n, eps, end, max_bisections);
}

template <class F, class R = std::decay_t<std::invoke_result_t<F&, double>>>
    requires(!std::is_same_v<std::decay_t<F>, std::function<R(double)>>)
NestedResult<R> nested_integrate_result(F&& f, double a, double b, const NestedOptions& opt = {},
                                        SingularEnd end = SingularEnd::Right) {
    return nested_integrate_result(std::function<R(double)>(std::forward<F>(f)), a, b, opt, end);
}

// Reference rule cache (rules are immutable once built).
const QuadratureRule& cached_legendre_rule(int n);

}  // namespace holestress
