#pragma once

#include <complex>
#include <vector>

#include "holestress/goursat.hpp"
#include "holestress/linsolve.hpp"
#include "holestress/shapes.hpp"

namespace holestress {

struct CollocationGrid {
    std::vector<double> theta;  // pi (x_i + 1) / 4, x_i the Legendre roots of degree N-1
    std::vector<cplx> z, dz;
};

CollocationGrid collocation_points(int N);
CollocationGrid collocation_points(int N, const BoundaryShape& shape);

struct SolverConfig {
    int N = 64;
    double chi = 0.0;
    bool use_corner = false;
    // Corner powers lambda-1, lambda, ... carried by the last columns. One is
    // the single-term basis; two adds the curvature correction.
    int corner_terms = 1;
    int quad_n = 16;
    double quad_eps = 1e-15;
    // Roundoff floor for the vector-valued nested panels (see NestedOptions).
    double quad_rel_floor = 1e-14;
};

// Throws ConfigError when cfg violates its invariants or asks for a corner on
// a smooth shape.
void validate(const SolverConfig& cfg, const BoundaryShape& shape);

struct AssemblyStats {
    int nested_runs = 0;
    int max_levels = 0;
    double max_gap = 0.0;
};

// (4N-2) x 2N system in (a_0..a_{N-1}, b_0..b_{N-1}).
DenseSystem assemble(const BoundaryShape& shape, const SolverConfig& cfg,
                     AssemblyStats* stats = nullptr);

struct SolveDiagnostics {
    double residual_norm = 0.0;
    double condition_estimate = 0.0;
    bool pivoting = false;
    std::size_t rows = 0, cols = 0;
    AssemblyStats quadrature;
};

struct Solution {
    AugmentedGoursat goursat;
    SolveDiagnostics diagnostics;
};

Solution solve(const BoundaryShape& shape, const SolverConfig& cfg);

// Analyticity residual phi_i + (1/2 pi i) PV-integral, evaluated
// for a given phi at each collocation point.
std::vector<cplx> analyticity_residual(const AugmentedGoursat& g, const BoundaryShape& shape,
                                       const SolverConfig& cfg);

// sigma_x + sigma_y = 1 + chi + 4 Re{phi'(theta) / z'(theta)} on the boundary.
double boundary_trace(const AugmentedGoursat& g, const BoundaryShape& shape, double chi,
                      double theta);

}  // namespace holestress
