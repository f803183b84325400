#pragma once

#include <complex>
#include <vector>

namespace holestress {

using cplx = std::complex<double>;

// phi = 1/(2z) on the unit circle, uniaxial tension along x.
cplx circle_phi(double theta);

// Exact phi on the ellipse r(0) = 1 + m, r(pi/2) = 1 - m under tension along
// x: (1 - m) zeta / 2 with zeta the unit-circle preimage under
// z = 1/zeta + m zeta.
cplx ellipse_phi(double theta, double m);

// Exact sigma_x + sigma_y on the boundary. The circle accepts any far-field
// ratio chi (equal biaxial tension adds nothing to phi); the ellipse is for
// chi = 0 only.
double circle_trace(double theta, double chi = 0.0);
double ellipse_trace(double theta, double m);

struct LingParams {
    double alpha = 0.0;
    double N1 = 1.0;  // far-field tension along x
    double N2 = 0.0;  // along y
    double K = 0.0;
};

// The two semi-infinite integrals of the K relation,
// 4 K I1 + 2 (N1 - N2) I2 = N1. I1 is truncated at S with the analytic tail
// of its 1/(2 s (s^2 + 1)) asymptote added; I2 decays exponentially.
struct LingIntegrals {
    double I1 = 0.0, I2 = 0.0;
};
LingIntegrals ling_integrals(double alpha, double S = 0.0);

double ling_K(double alpha, double N1, double N2, double S = 0.0);
LingParams ling_params(double alpha, double N1, double N2);

// F(s) of the trace integrand (removable point s = 0 handled).
double ling_F(double s, const LingParams& p);

// xi(theta) of the bipolar coordinate, cosh(xi) = (1 + cos a cos g)/(cos a + cos g).
double ling_xi(double theta, double alpha);

// sigma_x + sigma_y on the boundary. Tabulates w F(s) once; evaluation at a
// new theta is a cosine sum.
class LingTrace {
public:
    explicit LingTrace(const LingParams& p, double handoff = 1e-8);
    const LingParams& params() const noexcept { return p_; }
    // pi/2 - theta below which the corner asymptote is used (alpha > pi/2).
    double handoff() const noexcept { return handoff_; }
    double operator()(double theta) const;
    // Direct integration, ignoring the handoff.
    double direct(double theta) const;

private:
    LingParams p_;
    double handoff_;
    std::vector<double> s_, wf_;
};

double ling_trace(double theta, const LingParams& p);

}  // namespace holestress
