#include "holestress/field.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "holestress/errors.hpp"
#include "holestress/quadrature.hpp"

namespace holestress {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
const cplx kTwoPiI(0.0, 2.0 * std::numbers::pi);

// Quadrant images, same conventions as the assembler: values map by
// `image`, theta-derivatives along the counterclockwise contour by `oriented`.
cplx image(int q, cplx w) {
    switch (q) {
        case 1: return -std::conj(w);
        case 2: return -w;
        case 3: return std::conj(w);
        default: return w;
    }
}

cplx oriented(int q, cplx w) {
    switch (q) {
        case 1: return std::conj(w);
        case 2: return -w;
        case 3: return -std::conj(w);
        default: return w;
    }
}

// phi'(z) transforms with the reflections: conjugated in quadrants 2 and 4.
cplx image_dphi(int q, cplx w) { return (q == 1 || q == 3) ? std::conj(w) : w; }

cplx h_from(cplx z, cplx phi, cplx dphi_z, double chi) {
    const double c = 0.25 * (1.0 + chi);
    return -std::conj(phi) - c * std::conj(z) - std::conj(z) * (dphi_z + c) - 0.5 * (chi - 1.0) * z;
}

}  // namespace

cplx recover_h(const AugmentedGoursat& g, const BoundaryShape& shape, double chi, double theta) {
    const auto jet = boundary_jet(shape, theta);
    return h_from(jet.z, g.phi(theta), g.dphi(theta) / jet.dz, chi);
}

BoundaryField::BoundaryField(AugmentedGoursat g, BoundaryShape shape, double chi, int panels)
    : g_(std::move(g)), shape_(std::move(shape)), chi_(chi) {
    if (panels < 4) throw InvalidArgument("BoundaryField: need at least 4 panels");
    // Uniform panels, the last one replaced by dyadic grading toward pi/2.
    std::vector<double> breaks;
    const double H = kHalfPi / panels;
    for (int k = 0; k < panels; ++k) breaks.push_back(k * H);
    double lo = (panels - 1) * H;
    while (kHalfPi - lo > 1e-10) {
        lo += 0.5 * (kHalfPi - lo);
        breaks.push_back(lo);
    }
    breaks.push_back(kHalfPi);

    const auto& rule = cached_legendre_rule(16);
    for (int q = 0; q < 4; ++q) {
        for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
            const double a = breaks[p], b = breaks[p + 1];
            Panel pan{q, a, b, nodes_.size(), rule.size(), 0.0};
            pan.chord = std::abs(boundary_jet(shape_, b).z - boundary_jet(shape_, a).z);
            for (std::size_t i = 0; i < rule.size(); ++i) {
                const double t = 0.5 * (a + b) + 0.5 * (b - a) * rule.nodes[i];
                const double w = 0.5 * (b - a) * rule.weights[i];
                const auto s = sample(q, t);
                nodes_.push_back({s.z, w * s.dz, s.phi, s.h});
                if (q == 0) {
                    const auto jet = boundary_jet(shape_, t);
                    theta_.push_back(t);
                    phi1_.push_back(s.phi);
                    dphi1_.push_back(g_.dphi(t));
                    h1_.push_back(s.h);
                    trace1_.push_back(1.0 + chi_ + 4.0 * (dphi1_.back() / jet.dz).real());
                }
            }
            panels_.push_back(pan);
        }
    }
}

BoundaryField::ContourPoint BoundaryField::sample(int q, double t) const {
    const auto jet = boundary_jet(shape_, t);
    const cplx phi1 = g_.phi(t);
    const cplx dphi1 = g_.dphi(t) / jet.dz;
    ContourPoint c;
    c.z = image(q, jet.z);
    c.dz = oriented(q, jet.dz);
    c.phi = image(q, phi1);
    c.h = h_from(c.z, c.phi, image_dphi(q, dphi1), chi_);
    return c;
}

Continuation BoundaryField::continue_interior(cplx zeta) const {
    if (inside_hole(shape_, zeta)) {
        std::ostringstream os;
        os << "continue_interior: point (" << zeta.real() << ", " << zeta.imag() << ") lies inside the hole";
        throw DomainError(os.str());
    }
    // Nearest tabulated node, then a local refinement of the distance.
    std::size_t best = 0;
    double dbest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const double d = std::abs(nodes_[i].z - zeta);
        if (d < dbest) {
            dbest = d;
            best = i;
        }
    }
    const Panel* home = nullptr;
    for (const auto& p : panels_)
        if (best >= p.first && best < p.first + p.count) home = &p;
    {
        // Golden-section search on the panel holding the nearest node.
        const double lo0 = home->a, hi0 = home->b;
        auto dist_at = [&](double t) { return std::abs(image(home->quadrant, boundary_jet(shape_, t).z) - zeta); };
        double a = lo0, b = hi0;
        const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
        double c = b - gr * (b - a), d = a + gr * (b - a);
        for (int it = 0; it < 80 && b - a > 1e-15; ++it) {
            if (dist_at(c) < dist_at(d)) b = d;
            else a = c;
            c = b - gr * (b - a);
            d = a + gr * (b - a);
        }
        dbest = std::min(dbest, dist_at(0.5 * (a + b)));
    }
    if (dbest < 1e-12 * (1.0 + std::abs(zeta))) throw DomainError("continue_interior: point lies on the boundary");

    const cplx phi_star = nodes_[best].phi, h_star = nodes_[best].h;
    cplx sphi = 0.0, sh = 0.0;
    const auto& rule = cached_legendre_rule(16);
    const bool corner = g_.exponent().has_value();

    // Adaptive bisection of a panel close to zeta, evaluating phi and h directly.
    auto adaptive = [&](auto&& self, int q, double a, double b, int depth) -> void {
        const cplx za = image(q, boundary_jet(shape_, a).z), zb = image(q, boundary_jet(shape_, b).z);
        const cplx zm = image(q, boundary_jet(shape_, 0.5 * (a + b)).z);
        const double chord = std::abs(zb - za);
        const double dmin = std::min({std::abs(za - zeta), std::abs(zb - zeta), std::abs(zm - zeta)});
        const bool at_corner = corner && b >= kHalfPi && b - a > 1e-10;
        if (depth < 48 && (chord > dmin || at_corner)) {
            const double m = 0.5 * (a + b);
            self(self, q, a, m, depth + 1);
            self(self, q, m, b, depth + 1);
            return;
        }
        for (std::size_t i = 0; i < rule.size(); ++i) {
            const double t = 0.5 * (a + b) + 0.5 * (b - a) * rule.nodes[i];
            const double w = 0.5 * (b - a) * rule.weights[i];
            const auto s = sample(q, t);
            const cplx k = w * s.dz / (s.z - zeta);
            sphi += (s.phi - phi_star) * k;
            sh += (s.h - h_star) * k;
        }
    };

    for (const auto& p : panels_) {
        double dmin = std::numeric_limits<double>::infinity();
        for (std::size_t i = p.first; i < p.first + p.count; ++i) dmin = std::min(dmin, std::abs(nodes_[i].z - zeta));
        if (p.chord > dmin) {
            adaptive(adaptive, p.quadrant, p.a, p.b, 0);
            continue;
        }
        for (std::size_t i = p.first; i < p.first + p.count; ++i) {
            const auto& n = nodes_[i];
            const cplx k = n.wdz / (n.z - zeta);
            sphi += (n.phi - phi_star) * k;
            sh += (n.h - h_star) * k;
        }
    }
    Continuation out;
    out.phi = -sphi / kTwoPiI;
    out.h = -sh / kTwoPiI;
    out.distance = dbest;
    out.near_boundary = dbest < kNearBand;
    return out;
}

cplx BoundaryField::cauchy_dphi(cplx zeta) const {
    if (inside_hole(shape_, zeta)) throw DomainError("cauchy_dphi: point lies inside the hole");
    cplx s = 0.0;
    for (const auto& n : nodes_) {
        const cplx d = n.z - zeta;
        s += n.phi * n.wdz / (d * d);
    }
    return -s / kTwoPiI;
}

cplx BoundaryField::continued_h_on_boundary(double theta) const {
    const bool top_ok = !shape_.corner && theta == kHalfPi;
    if (!(theta >= 0.0 && (theta < kHalfPi || top_ok)))
        throw DomainError("continued_h_on_boundary: theta must lie in [0, pi/2), or [0, pi/2] without a corner");
    const auto s0 = sample(0, theta);
    cplx sum = 0.0;
    for (const auto& n : nodes_) {
        const cplx d = n.z - s0.z;
        if (std::abs(d) < 1e-13) continue;  // removable point, weight negligible
        sum += (n.h - s0.h) * n.wdz / d;
    }
    return -sum / kTwoPiI;
}

double BoundaryField::traction_residual(double theta) const {
    const auto jet = boundary_jet(shape_, theta);
    const cplx z = jet.z;
    const cplx phi = g_.phi(theta);
    const cplx dphi = g_.dphi(theta) / jet.dz;
    const cplx hc = continued_h_on_boundary(theta);
    const double c = 0.25 * (1.0 + chi_);
    const cplx t = c * z + phi + z * std::conj(dphi + c) + 0.5 * (chi_ - 1.0) * std::conj(z) + std::conj(hc);
    return std::abs(t);
}

StressSample stress_at(const BoundaryField& field, cplx zeta) {
    const auto c0 = field.continue_interior(zeta);
    const double step = std::min(1e-3 * (1.0 + std::abs(zeta)), 0.25 * c0.distance);
    // Fourth-order central differences along the real axis (both functions
    // are holomorphic, so this is the complex derivative).
    const auto cm2 = field.continue_interior(zeta - 2.0 * step);
    const auto cm1 = field.continue_interior(zeta - step);
    const auto cp1 = field.continue_interior(zeta + step);
    const auto cp2 = field.continue_interior(zeta + 2.0 * step);
    const cplx dphi = (-cp2.phi + 8.0 * cp1.phi - 8.0 * cm1.phi + cm2.phi) / (12.0 * step);
    const cplx d2phi = (-cp2.phi + 16.0 * cp1.phi - 30.0 * c0.phi + 16.0 * cm1.phi - cm2.phi) / (12.0 * step * step);
    const cplx dh = (-cp2.h + 8.0 * cp1.h - 8.0 * cm1.h + cm2.h) / (12.0 * step);
    const double chi = field.chi();
    const double sum = 1.0 + chi + 4.0 * dphi.real();
    const cplx diff = 2.0 * (std::conj(zeta) * d2phi + 0.5 * (chi - 1.0) + dh);  // sigma_y - sigma_x + 2i tau
    StressSample s;
    s.zeta = zeta;
    s.sigma_x = 0.5 * (sum - diff.real());
    s.sigma_y = 0.5 * (sum + diff.real());
    s.tau_xy = 0.5 * diff.imag();
    return s;
}

double l2_norm_quadrant(const std::function<double(double)>& sq_diff, bool singular_end) {
    const int panels = 64;
    const double H = kHalfPi / panels;
    double total = 0.0;
    NestedOptions opt;
    opt.rel_floor = 1e-12;
    for (int k = 0; k < panels; ++k) {
        const bool last = k == panels - 1;
        const double a = k * H, b = last ? kHalfPi : (k + 1) * H;
        if (last && singular_end) {
            // Power-law integrands never meet the absolute test; the estimate
            // with its final tail is what we want.
            total += nested_integrate_result(sq_diff, a, b, opt, SingularEnd::Right).value;
        } else {
            total += integrate(sq_diff, a, b, 16);
        }
    }
    return std::sqrt(std::max(0.0, total / kHalfPi));
}

double l2_error_phi(const AugmentedGoursat& g, const std::function<cplx(double)>& oracle) {
    return l2_norm_quadrant([&](double t) { return std::norm(g.phi(t) - oracle(t)); },
                            g.exponent().has_value());
}

double l2_error_trace(const AugmentedGoursat& g, const BoundaryShape& shape, double chi,
                      const std::function<double(double)>& oracle) {
    return l2_norm_quadrant(
        [&](double t) {
            const auto jet = boundary_jet(shape, t);
            const double d = 1.0 + chi + 4.0 * (g.dphi(t) / jet.dz).real() - oracle(t);
            return d * d;
        },
        shape.corner.has_value());
}

double max_rel_error_near_corner(const AugmentedGoursat& g, const BoundaryShape& shape, double chi,
                                 const std::function<double(double)>& oracle) {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double eps = 0.1 * std::pow(1e-2, i / 199.0);
        const double t = kHalfPi - eps;
        const auto jet = boundary_jet(shape, t);
        const double num = 1.0 + chi + 4.0 * (g.dphi(t) / jet.dz).real();
        const double ex = oracle(t);
        worst = std::max(worst, std::abs(num - ex) / std::abs(ex));
    }
    return worst;
}

std::vector<GridSample> field_grid(const BoundaryField& field, const BBox& box, int nx, int ny) {
    if (nx < 2 || ny < 2) throw InvalidArgument("field_grid: need nx, ny >= 2");
    if (!(box.xmin < box.xmax && box.ymin < box.ymax)) throw InvalidArgument("field_grid: empty bounding box");
    std::vector<GridSample> out;
    out.reserve(static_cast<std::size_t>(nx) * ny);
    for (int j = 0; j < ny; ++j) {
        const double y = box.ymin + (box.ymax - box.ymin) * j / (ny - 1);
        for (int i = 0; i < nx; ++i) {
            const double x = box.xmin + (box.xmax - box.xmin) * i / (nx - 1);
            GridSample s;
            s.x = x;
            s.y = y;
            const cplx zeta(x, y);
            if (!inside_hole(field.shape(), zeta)) {
                try {
                    const auto c = field.continue_interior(zeta);
                    if (!c.near_boundary) {
                        const auto st = stress_at(field, zeta);
                        s.valid = true;
                        s.sigma_x = st.sigma_x;
                        s.sigma_y = st.sigma_y;
                        s.tau_xy = st.tau_xy;
                    }
                } catch (const DomainError&) {
                    // on the boundary: stays invalid
                }
            }
            out.push_back(s);
        }
    }
    return out;
}

}  // namespace holestress
