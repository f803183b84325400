#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "holestress/chebyshev.hpp"

namespace holestress {

using cplx = std::complex<double>;

// Basis functions B_k(theta) on [0, pi/2] and their theta-derivatives. Without
// a corner all N are Chebyshev polynomials in x = 4 theta / pi - 1; with one,
// index N-1 is (pi/2 - theta)^exponent. With corner_terms = c > 1 the indices
// N-1-j, j < c, carry (pi/2 - theta)^(exponent + j): the curvature corrections
// of the dominant corner term.
struct BasisValues {
    std::vector<double> b, db, d2b;
};
BasisValues basis_values(int N, std::optional<double> exponent, double theta, int corner_terms = 1);

// Same at a batch of angles, term-major: out[k * n + p]. Uses the SIMD
// Chebyshev kernel.
void basis_batch(int N, std::optional<double> exponent, const std::vector<double>& thetas,
                 BasisValues& out, int corner_terms = 1);

// phi(theta) = sum a_k B_k + i sum b_k B_k on [0, pi/2].
class AugmentedGoursat {
public:
    AugmentedGoursat(std::vector<double> a, std::vector<double> b,
                     std::optional<double> exponent = std::nullopt, int corner_terms = 1);

    int N() const noexcept { return static_cast<int>(a_.size()); }
    const std::vector<double>& a() const noexcept { return a_; }
    const std::vector<double>& b() const noexcept { return b_; }
    // lambda - 1 when a corner term is present.
    std::optional<double> exponent() const noexcept { return exponent_; }
    int corner_terms() const noexcept { return exponent_ ? corner_terms_ : 0; }
    std::optional<double> lambda() const noexcept {
        return exponent_ ? std::optional<double>(*exponent_ + 1.0) : std::nullopt;
    }

    cplx phi(double theta) const;
    cplx dphi(double theta) const;
    cplx d2phi(double theta) const;

private:
    std::vector<double> a_, b_;
    std::optional<double> exponent_;
    int corner_terms_ = 1;
    ChebSeries ra_, ia_, dra_, dia_, d2ra_, d2ia_;
};

cplx eval_phi(const AugmentedGoursat& g, double theta);
// Throws SingularEvaluation at theta = pi/2 when the corner exponent is < 1
// (resp. < 2 for the second derivative).
cplx eval_dphi(const AugmentedGoursat& g, double theta);
cplx eval_d2phi(const AugmentedGoursat& g, double theta);

// phi on [0, 2 pi] from the two mirror symmetries.
cplx extend(const AugmentedGoursat& g, double theta);

// {"N", "lambda" (null without corner), "a", "b"}; "corner_terms" is added
// only when it differs from 1.
std::string to_json(const AugmentedGoursat& g);
AugmentedGoursat goursat_from_json(const std::string& text);

}  // namespace holestress
