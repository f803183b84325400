#pragma once

#include <functional>
#include <vector>

namespace holestress {

// Truncated Chebyshev expansion sum_k c_k T_k(x(t)) on [a, b], with
// x = (2t - a - b) / (b - a).
struct ChebSeries {
    std::vector<double> coeffs;
    double a = -1.0;
    double b = 1.0;

    std::size_t size() const noexcept { return coeffs.size(); }
};

// First-kind Chebyshev nodes of [a, b], in increasing order.
std::vector<double> chebyshev_nodes(int n, double a, double b);

// Degree n-1 interpolant through the first-kind nodes. Throws InvalidData
// naming the node when a sample is not finite.
ChebSeries interpolate(const std::function<double(double)>& f, int n, double a, double b);

// Same, from samples already taken at chebyshev_nodes(n, a, b).
ChebSeries interpolate_samples(const std::vector<double>& samples, double a, double b);

// Clenshaw evaluation. Throws DomainError outside [a, b] (a few ulps of slack
// at the ends).
double eval(const ChebSeries& s, double t);

// Series of d/dt, one coefficient shorter.
ChebSeries derivative(const ChebSeries& s);

}  // namespace holestress
