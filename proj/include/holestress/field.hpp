#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "holestress/goursat.hpp"
#include "holestress/shapes.hpp"

namespace holestress {

using cplx = std::complex<double>;

// h = psi - (chi - 1) z / 2 on the boundary from the traction-free condition,
// with phi'(z) = phi'(theta) / z'(theta). Throws SingularEvaluation at a
// singular corner.
cplx recover_h(const AugmentedGoursat& g, const BoundaryShape& shape, double chi, double theta);

struct StressSample {
    cplx zeta;
    double sigma_x = 0.0, sigma_y = 0.0, tau_xy = 0.0;
};

struct Continuation {
    cplx phi, h;
    double distance = 0.0;       // approximate distance to the boundary
    bool near_boundary = false;  // closer than BoundaryField::kNearBand
};

// phi, phi', h and sigma_x + sigma_y tabulated on composite Gauss panels of
// the first quadrant (graded toward the corner), plus the mirrored full
// contour used by the Cauchy integrals.
class BoundaryField {
public:
    static constexpr double kNearBand = 1e-3;

    BoundaryField(AugmentedGoursat g, BoundaryShape shape, double chi, int panels = 48);

    const AugmentedGoursat& goursat() const noexcept { return g_; }
    const BoundaryShape& shape() const noexcept { return shape_; }
    double chi() const noexcept { return chi_; }

    // First-quadrant samples.
    const std::vector<double>& theta() const noexcept { return theta_; }
    const std::vector<cplx>& phi() const noexcept { return phi1_; }
    const std::vector<cplx>& dphi() const noexcept { return dphi1_; }
    const std::vector<cplx>& h() const noexcept { return h1_; }
    const std::vector<double>& trace() const noexcept { return trace1_; }

    // Cauchy continuation of phi and h to zeta in the solid. Throws DomainError
    // inside the hole or on the boundary.
    Continuation continue_interior(cplx zeta) const;

    // -(1/2 pi i) contour integral of phi / (z - zeta)^2, the derivative of the
    // continuation computed without differencing.
    cplx cauchy_dphi(cplx zeta) const;

    // Boundary value of the exterior function whose Cauchy data is h, at the
    // first-quadrant angle theta.
    cplx continued_h_on_boundary(double theta) const;

    // |phi + z conj(phi') + conj(psi)| including far-field parts, with psi built
    // from the continued h.
    double traction_residual(double theta) const;

private:
    struct Node {
        cplx z, wdz, phi, h;
    };
    struct Panel {
        int quadrant;
        double a, b;
        std::size_t first, count;
        double chord;
    };
    struct ContourPoint {
        cplx z, dz, phi, h;
    };

    ContourPoint sample(int quadrant, double t) const;

    AugmentedGoursat g_;
    BoundaryShape shape_;
    double chi_;
    std::vector<double> theta_;
    std::vector<cplx> phi1_, dphi1_, h1_;
    std::vector<double> trace1_;
    std::vector<Node> nodes_;
    std::vector<Panel> panels_;
};

// Stresses at zeta from finite differences of the continuation.
StressSample stress_at(const BoundaryField& field, cplx zeta);

// [(2/pi) int_0^{pi/2} |f - oracle|^2 dtheta]^{1/2}
double l2_error_phi(const AugmentedGoursat& g, const std::function<cplx(double)>& oracle);
double l2_error_trace(const AugmentedGoursat& g, const BoundaryShape& shape, double chi,
                      const std::function<double(double)>& oracle);
// Generic form used by both.
double l2_norm_quadrant(const std::function<double(double)>& sq_diff, bool singular_end);

// Max relative trace error on pi/2 - theta in [1e-3, 0.1], 200 geometrically
// spaced points.
double max_rel_error_near_corner(const AugmentedGoursat& g, const BoundaryShape& shape, double chi,
                                 const std::function<double(double)>& oracle);

struct BBox {
    double xmin, xmax, ymin, ymax;
};

struct GridSample {
    double x = 0.0, y = 0.0;
    bool valid = false;
    double sigma_x = 0.0, sigma_y = 0.0, tau_xy = 0.0;
};

// Row-major (y outer, x inner). Cells inside the hole or within the near band
// of the boundary are invalid.
std::vector<GridSample> field_grid(const BoundaryField& field, const BBox& box, int nx, int ny);

}  // namespace holestress
