#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace holestress {

// Row-major m x n system with a tag per row saying where it came from.
struct DenseSystem {
    std::size_t rows = 0, cols = 0;
    std::vector<double> A;  // A[i * cols + j]
    std::vector<double> rhs;
    std::vector<std::string> row_labels;

    DenseSystem() = default;
    DenseSystem(std::size_t m, std::size_t n)
        : rows(m), cols(n), A(m * n, 0.0), rhs(m, 0.0), row_labels(m) {}

    double& operator()(std::size_t i, std::size_t j) { return A[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return A[i * cols + j]; }
};

struct LstsqOptions {
    bool pivoting = false;
    double rank_tol = 1e-12;  // relative to the Frobenius norm of A
    // Scale columns to unit norm before factorizing (and unscale x after).
    bool equilibrate = false;
};

struct LstsqResult {
    std::vector<double> x;
    double residual_norm = 0.0;
    // max |R_kk| / min |R_kk| of the triangular factor.
    double condition_estimate = 0.0;
};

// Householder QR least squares. Throws RankDeficiency naming the (original)
// column whose pivot falls below rank_tol * ||A||.
LstsqResult lstsq(const DenseSystem& sys, const LstsqOptions& opt = {});

}  // namespace holestress
