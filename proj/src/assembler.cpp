#include "holestress/assembler.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "holestress/errors.hpp"
#include "holestress/quadrature.hpp"

namespace holestress {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2;
const cplx kI(0.0, 1.0);

// Quadrant images of first-quadrant data. `image` maps values (phi and z),
// `oriented` maps theta-derivatives including the direction of travel along
// the counterclockwise contour when each quadrant is parametrized by
// t in [0, pi/2].
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

// Per collocation point data shared by all panels.
struct Target {
    double theta;
    cplx z, dz, d2z;
    std::vector<double> b, db, d2b;  // basis at theta
};

// Integral slots per column: R1, R2, R3 as complex pairs.
constexpr std::size_t kSlots = 6;

class RowIntegrator {
public:
    RowIntegrator(const BoundaryShape& shape, const SolverConfig& cfg, std::optional<double> exponent,
                  const Target& tg, AssemblyStats& stats)
        : shape_(shape),
          cfg_(cfg),
          exponent_(exponent),
          tg_(tg),
          stats_(stats),
          N_(cfg.N),
          ref_(cached_legendre_rule(cfg.quad_n)) {
        // g_i for each column: conj(z_i) c B'_k(theta_i) / z'_i
        g_.resize(2 * N_);
        for (int k = 0; k < N_; ++k) {
            const cplx base = std::conj(tg_.z) * tg_.db[k] / tg_.dz;
            g_[k] = base;
            g_[N_ + k] = kI * base;
        }
    }

    std::size_t width() const { return kSlots * 2 * N_ + 2; }

    // Integrates over t in [lo, hi] of quadrant q. `ibp` switches the
    // conj(z) dphi part of R3 to its integrated-by-parts remainder.
    void integrate_piece(int q, double lo, double hi, bool ibp, std::vector<double>& acc) {
        const double mid = 0.5 * (lo + hi);
        run(q, lo, mid, ibp, SingularEnd::Left, acc);
        run(q, mid, hi, ibp, SingularEnd::Right, acc);
    }

    // Boundary terms [W Phi] from lo to pi/2 for the integration by parts.
    void add_ibp_boundary(int q, double lo, std::vector<double>& acc) {
        for (double t : {kHalfPi, lo}) {
            const double sgn = t == kHalfPi ? 1.0 : -1.0;
            const auto jet = boundary_jet(shape_, t);
            const cplx zq = image(q, jet.z);
            const cplx W = std::conj(zq) / (zq - tg_.z);
            const auto bv = basis_values(N_, exponent_, t, cfg_.corner_terms);
            for (int j = 0; j < 2 * N_; ++j) {
                const int k = j % N_;
                const cplx c = j < N_ ? cplx(1.0) : kI;
                const cplx v = sgn * W * oriented(q, c) * bv.b[k];
                acc[j * kSlots + 4] += v.real();
                acc[j * kSlots + 5] += v.imag();
            }
        }
    }

private:
    void run(int q, double lo, double hi, bool ibp, SingularEnd end, std::vector<double>& acc) {
        auto panel = [&](double a, double b) { return panel_sum(q, a, b, ibp); };
        auto res = nested_panels<std::vector<double>>(panel, lo, hi, cfg_.quad_eps, end, 60,
                                                      cfg_.quad_rel_floor);
        ++stats_.nested_runs;
        stats_.max_levels = std::max(stats_.max_levels, res.levels);
        stats_.max_gap = std::max(stats_.max_gap, res.gap);
        if (!res.converged) {
            std::ostringstream os;
            os << "assemble: nested quadrature did not converge at collocation theta=" << tg_.theta
               << ", quadrant " << q + 1 << ", piece [" << lo << ", " << hi << "] (gap " << res.gap
               << ")";
            throw ConvergenceError(os.str(), 0.0, res.gap, res.levels);
        }
        nested_accumulate(acc, res.value);
    }

    std::vector<double> panel_sum(int q, double a, double b, bool ibp) {
        const std::size_t n = ref_.size();
        const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
        ts_.resize(n);
        for (std::size_t p = 0; p < n; ++p) ts_[p] = mid + half * ref_.nodes[p];
        basis_batch(N_, exponent_, ts_, bv_, cfg_.corner_terms);
        std::vector<double> out(width(), 0.0);
        const cplx c_im = image(q, kI), c_re = image(q, cplx(1.0));
        const cplx p_im = oriented(q, kI), p_re = oriented(q, cplx(1.0));
        for (std::size_t p = 0; p < n; ++p) {
            const double t = ts_[p];
            const double w = half * ref_.weights[p];
            const auto jet = boundary_jet(shape_, t);
            const cplx zq = image(q, jet.z);
            const cplx dzq = oriented(q, jet.dz);
            const cplx delta = zq - tg_.z;
            const bool at_target = q == 0 && std::abs(t - tg_.theta) < 1e-10;
            const cplx K = at_target ? cplx() : dzq / delta;
            // R0 (phi-independent)
            const cplx r0 = at_target ? std::conj(tg_.dz) : (std::conj(zq) - std::conj(tg_.z)) * K;
            out[width() - 2] += w * r0.real();
            out[width() - 1] += w * r0.imag();
            cplx Wp;
            if (ibp) {
                const cplx Zt = image(q, jet.dz);
                Wp = std::conj(Zt) / delta - std::conj(zq) * Zt / (delta * delta);
            }
            for (int j = 0; j < 2 * N_; ++j) {
                const int k = j % N_;
                const bool imag_col = j >= N_;
                const cplx c = imag_col ? kI : cplx(1.0);
                const cplx cq = imag_col ? c_im : c_re;
                const cplx pq = imag_col ? p_im : p_re;
                const double B = bv_.b[k * n + p], dB = bv_.db[k * n + p];
                const double Bi = tg_.b[k];
                cplx r1, r2, r3;
                if (at_target) {
                    const double dBi = tg_.db[k], d2Bi = tg_.d2b[k];
                    r1 = std::conj(c) * dBi;
                    r2 = c * dBi;
                    r3 = (std::conj(tg_.dz) * c * dBi + std::conj(tg_.z) * c * d2Bi - g_[j] * tg_.d2z) / tg_.dz;
                } else {
                    r1 = (std::conj(cq) * B - std::conj(c) * Bi) * K;
                    r2 = (cq * B - c * Bi) * K;
                    if (ibp) r3 = -g_[j] * K - pq * B * Wp;
                    else r3 = (std::conj(zq) * pq * dB - g_[j] * dzq) / delta;
                }
                double* o = &out[j * kSlots];
                o[0] += w * r1.real();
                o[1] += w * r1.imag();
                o[2] += w * r2.real();
                o[3] += w * r2.imag();
                o[4] += w * r3.real();
                o[5] += w * r3.imag();
            }
        }
        return out;
    }

    const BoundaryShape& shape_;
    const SolverConfig& cfg_;
    std::optional<double> exponent_;
    const Target& tg_;
    AssemblyStats& stats_;
    int N_;
    const QuadratureRule& ref_;
    std::vector<cplx> g_;
    std::vector<double> ts_;
    BasisValues bv_;
};

}  // namespace

CollocationGrid collocation_points(int N) {
    if (N < 2) throw InvalidArgument("collocation_points: N must be >= 2");
    const auto rule = legendre_rule(N - 1);
    CollocationGrid g;
    for (double x : rule.nodes) g.theta.push_back(kPi * (x + 1.0) / 4.0);
    return g;
}

CollocationGrid collocation_points(int N, const BoundaryShape& shape) {
    auto g = collocation_points(N);
    for (double t : g.theta) {
        const auto bp = boundary_point(shape, t);
        g.z.push_back(bp.z);
        g.dz.push_back(bp.dz);
    }
    return g;
}

void validate(const SolverConfig& cfg, const BoundaryShape& shape) {
    if (cfg.N < 8) throw ConfigError("solver: N must be >= 8");
    if (!(cfg.quad_eps > 0.0 && cfg.quad_eps <= 1e-6)) throw ConfigError("solver: quad_eps must lie in (0, 1e-6]");
    if (cfg.quad_n < 1 || cfg.quad_n > 64) throw ConfigError("solver: quad_n must lie in [1, 64]");
    if (!std::isfinite(cfg.chi)) throw ConfigError("solver: chi must be finite");
    if (cfg.use_corner && !shape.corner) throw ConfigError("solver: corner term requested on a shape without a corner");
    if (cfg.use_corner && !(shape.corner->exponent > 0.0)) throw ConfigError("solver: corner exponent must be positive");
    if (cfg.corner_terms < 1 || cfg.corner_terms > 4) throw ConfigError("solver: corner_terms must lie in [1, 4]");
}

DenseSystem assemble(const BoundaryShape& shape, const SolverConfig& cfg, AssemblyStats* stats) {
    validate(cfg, shape);
    const int N = cfg.N;
    const std::optional<double> exponent =
        cfg.use_corner ? std::optional<double>(shape.corner->exponent) : std::nullopt;
    const auto grid = collocation_points(N, shape);
    const int M = N - 1;
    const double theta_eps = 0.5 * grid.theta.front();
    const double corner_start = kHalfPi - theta_eps;
    const double chi = cfg.chi;

    DenseSystem sys(4 * N - 2, 2 * N);
    AssemblyStats local;
    AssemblyStats& st = stats ? *stats : local;

    for (int i = 0; i < M; ++i) {
        Target tg;
        tg.theta = grid.theta[i];
        const auto jet = boundary_jet(shape, tg.theta);
        tg.z = jet.z;
        tg.dz = jet.dz;
        tg.d2z = jet.d2z;
        auto bv = basis_values(N, exponent, tg.theta, cfg.corner_terms);
        tg.b = std::move(bv.b);
        tg.db = std::move(bv.db);
        tg.d2b = std::move(bv.d2b);

        RowIntegrator ri(shape, cfg, exponent, tg, st);
        std::vector<double> acc(ri.width(), 0.0);
        for (int q = 0; q < 4; ++q) {
            const double smooth_end = exponent ? corner_start : kHalfPi;
            if (q == 0) {
                ri.integrate_piece(q, 0.0, tg.theta, false, acc);
                ri.integrate_piece(q, tg.theta, smooth_end, false, acc);
            } else {
                ri.integrate_piece(q, 0.0, smooth_end, false, acc);
            }
            if (exponent) {
                ri.integrate_piece(q, corner_start, kHalfPi, true, acc);
                ri.add_ibp_boundary(q, corner_start, acc);
            }
        }

        const cplx two_pi_i(0.0, 2.0 * kPi);
        const cplx R0(acc[ri.width() - 2], acc[ri.width() - 1]);
        const cplx C = 0.5 * (1.0 + chi) * std::conj(tg.z) + 0.5 * (1.0 + chi) * R0 / two_pi_i +
                       0.5 * (chi - 1.0) * tg.z;
        const int row_e = 2 * i, row_a = 2 * M + 2 * i;
        std::ostringstream lab;
        lab << "theta=" << tg.theta;
        sys.row_labels[row_e] = "integral-eq re " + lab.str();
        sys.row_labels[row_e + 1] = "integral-eq im " + lab.str();
        sys.row_labels[row_a] = "analyticity re " + lab.str();
        sys.row_labels[row_a + 1] = "analyticity im " + lab.str();
        sys.rhs[row_e] = -C.real();
        sys.rhs[row_e + 1] = -C.imag();
        for (int j = 0; j < 2 * N; ++j) {
            const int k = j % N;
            const cplx c = j < N ? cplx(1.0) : kI;
            const double* s = &acc[j * kSlots];
            const cplx R1(s[0], s[1]), R2(s[2], s[3]), R3(s[4], s[5]);
            const cplx phi_i = c * tg.b[k];
            const cplx g_i = std::conj(tg.z) * c * tg.db[k] / tg.dz;
            const cplx e = std::conj(phi_i) + g_i + (R1 + R3) / two_pi_i;
            const cplx an = phi_i + R2 / two_pi_i;
            sys(row_e, j) = e.real();
            sys(row_e + 1, j) = e.imag();
            sys(row_a, j) = an.real();
            sys(row_a + 1, j) = an.imag();
        }
    }

    // End conditions: Re phi(pi/2) = 0, Im phi(0) = 0.
    const int re_row = 4 * M, im_row = 4 * M + 1;
    const auto top = basis_values(N, exponent, kHalfPi, cfg.corner_terms);
    const auto bottom = basis_values(N, exponent, 0.0, cfg.corner_terms);
    for (int k = 0; k < N; ++k) {
        sys(re_row, k) = top.b[k];
        sys(im_row, N + k) = bottom.b[k];
    }
    sys.row_labels[re_row] = "end re phi(pi/2)";
    sys.row_labels[im_row] = "end im phi(0)";
    return sys;
}

Solution solve(const BoundaryShape& shape, const SolverConfig& cfg) {
    SolveDiagnostics diag;
    const auto sys = assemble(shape, cfg, &diag.quadrature);
    LstsqOptions opt;
    opt.pivoting = cfg.use_corner;
    opt.equilibrate = cfg.use_corner;
    const auto res = lstsq(sys, opt);
    const int N = cfg.N;
    std::vector<double> a(res.x.begin(), res.x.begin() + N);
    std::vector<double> b(res.x.begin() + N, res.x.end());
    diag.residual_norm = res.residual_norm;
    diag.condition_estimate = res.condition_estimate;
    diag.pivoting = opt.pivoting;
    diag.rows = sys.rows;
    diag.cols = sys.cols;
    std::optional<double> exponent =
        cfg.use_corner ? std::optional<double>(shape.corner->exponent) : std::nullopt;
    return {AugmentedGoursat(std::move(a), std::move(b), exponent, cfg.corner_terms), diag};
}

std::vector<cplx> analyticity_residual(const AugmentedGoursat& g, const BoundaryShape& shape,
                                       const SolverConfig& cfg) {
    SolverConfig c = cfg;
    c.N = g.N();
    c.use_corner = g.exponent().has_value();
    c.corner_terms = std::max(1, g.corner_terms());
    const auto sys = assemble(shape, c);
    const int M = c.N - 1;
    std::vector<double> x(g.a());
    x.insert(x.end(), g.b().begin(), g.b().end());
    std::vector<cplx> out(M);
    for (int i = 0; i < M; ++i) {
        double v[2] = {0.0, 0.0};
        for (int r = 0; r < 2; ++r)
            for (std::size_t j = 0; j < sys.cols; ++j) v[r] += sys(2 * M + 2 * i + r, j) * x[j];
        out[i] = cplx(v[0], v[1]);
    }
    return out;
}

double boundary_trace(const AugmentedGoursat& g, const BoundaryShape& shape, double chi, double theta) {
    const auto jet = boundary_jet(shape, theta);
    return 1.0 + chi + 4.0 * (g.dphi(theta) / jet.dz).real();
}

}  // namespace holestress
