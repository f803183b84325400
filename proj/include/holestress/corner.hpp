#pragma once

namespace holestress {

// Williams wedge data for the corner at theta = pi/2. beta is measured
// through the solid.
struct CornerSpec {
    double beta = 0.0;
    double lambda = 0.0;
    double exponent = 0.0;  // lambda - 1, the power of the corner basis term
    // False when sin(x beta) + x sin(beta) has no real root x > 0; lambda is
    // then the real part of the dominant complex root.
    bool real_root = true;
};

// Smallest root lambda > 1 of sin((lambda-1) beta) + (lambda-1) sin(beta) = 0
// for beta in (0, 2 pi). Exactly 2 for beta = pi.
CornerSpec williams_exponent(double beta);

// Residual of the wedge relation at lambda.
double williams_residual(double beta, double lambda);

// Smallest positive root of sin(2 alpha t) + t sin(2 alpha) = 0, alpha in
// (pi/2, pi).
double wedge_root_t1(double alpha);

// Residue asymptote of Ling's sigma_x + sigma_y at distance eps = pi/2 - theta
// from the corner.
double ling_corner_asymptote(double alpha, double K, double N1, double N2, double eps);

}  // namespace holestress
