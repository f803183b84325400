#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "holestress/corner.hpp"

namespace holestress {

using cplx = std::complex<double>;

// Hole boundary r(theta) on the first quadrant, mirrored about both axes.
struct BoundaryShape {
    std::function<double(double)> r, dr, d2r;
    std::optional<CornerSpec> corner;  // corner at theta = pi/2
    std::string label;
    // Shape parameter for labelling and oracles (m for ellipse, alpha for overlap).
    double param = 0.0;
};

BoundaryShape circle();
BoundaryShape ellipse(double m);
BoundaryShape overlapping_circles(double alpha);
// r-values at chebyshev_nodes(N, 0, pi/2) in increasing theta.
BoundaryShape custom_from_samples(const std::vector<double>& samples,
                                  std::optional<double> corner_beta = std::nullopt);

struct BoundaryPoint {
    cplx z;
    cplx dz;  // dz/dtheta
};

// z = r e^{i theta} on [0, 2 pi] using the mirror images of r. At theta = pi/2
// the derivative is the limit from below.
BoundaryPoint boundary_point(const BoundaryShape& shape, double theta);

// First-quadrant z, z', z'' (theta in [0, pi/2]).
struct BoundaryJet {
    cplx z, dz, d2z;
};
BoundaryJet boundary_jet(const BoundaryShape& shape, double theta);

// True when p lies strictly inside the hole.
bool inside_hole(const BoundaryShape& shape, cplx p);

}  // namespace holestress
