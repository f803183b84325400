#include "holestress/linsolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>
#include <sstream>

#include "holestress/errors.hpp"
#include "holestress/simd.hpp"

namespace holestress {

LstsqResult lstsq(const DenseSystem& sys, const LstsqOptions& opt) {
    const std::size_t m = sys.rows, n = sys.cols;
    if (n == 0 || m < n) throw InvalidArgument("lstsq: need rows >= cols > 0");
    if (sys.A.size() != m * n || sys.rhs.size() != m) throw InvalidArgument("lstsq: inconsistent sizes");
    for (double v : sys.A)
        if (!std::isfinite(v)) throw InvalidData("lstsq: non-finite matrix entry");
    for (double v : sys.rhs)
        if (!std::isfinite(v)) throw InvalidData("lstsq: non-finite right-hand side");

    // Column-major copy so each column is a contiguous span.
    std::vector<double> Q(m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) Q[j * m + i] = sys.A[i * n + j];
    std::vector<double> scale(n, 1.0);
    if (opt.equilibrate) {
        for (std::size_t j = 0; j < n; ++j) {
            std::span<double> c(&Q[j * m], m);
            const double nrm = std::sqrt(simd::dot(c, c));
            if (nrm > 0.0) {
                scale[j] = 1.0 / nrm;
                for (double& v : c) v *= scale[j];
            }
        }
    }
    std::vector<double> y = sys.rhs;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    auto col = [&](std::size_t j, std::size_t from) {
        return std::span<double>(&Q[j * m + from], m - from);
    };

    const double norm_a = std::sqrt(simd::dot(Q, Q));
    const double tol = opt.rank_tol * norm_a;
    std::vector<double> diag(n);
    std::vector<double> v(m);

    for (std::size_t k = 0; k < n; ++k) {
        if (opt.pivoting) {
            std::size_t best = k;
            double best_norm = -1.0;
            for (std::size_t j = k; j < n; ++j) {
                auto c = col(j, k);
                const double s = simd::dot(c, c);
                if (s > best_norm) {
                    best_norm = s;
                    best = j;
                }
            }
            if (best != k) {
                std::swap_ranges(&Q[k * m], &Q[k * m] + m, &Q[best * m]);
                std::swap(perm[k], perm[best]);
            }
        }
        auto xk = col(k, k);
        const double xnorm = std::sqrt(simd::dot(xk, xk));
        if (!(xnorm > tol)) {
            std::ostringstream os;
            os << "lstsq: rank deficiency at column " << perm[k] << " (|R_kk|=" << xnorm
               << ", threshold " << tol << ")";
            throw RankDeficiency(os.str(), perm[k]);
        }
        const double alpha = xk[0] > 0.0 ? -xnorm : xnorm;
        std::span<double> vk(v.data(), m - k);
        std::copy(xk.begin(), xk.end(), vk.begin());
        vk[0] -= alpha;
        const double vv = simd::dot(vk, vk);
        for (std::size_t j = k + 1; j < n; ++j) {
            auto cj = col(j, k);
            simd::axpy(-2.0 * simd::dot(vk, cj) / vv, vk, cj);
        }
        std::span<double> yk(&y[k], m - k);
        simd::axpy(-2.0 * simd::dot(vk, yk) / vv, vk, yk);
        xk[0] = alpha;
        diag[k] = alpha;
    }

    // Back substitution on R (upper triangle of Q).
    std::vector<double> z(n);
    for (std::size_t kk = n; kk-- > 0;) {
        double s = y[kk];
        for (std::size_t j = kk + 1; j < n; ++j) s -= Q[j * m + kk] * z[j];
        z[kk] = s / diag[kk];
    }
    LstsqResult out;
    out.x.assign(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) out.x[perm[k]] = z[k] * scale[perm[k]];

    double r2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double ri = simd::dot(std::span<const double>(&sys.A[i * n], n), out.x) - sys.rhs[i];
        r2 += ri * ri;
    }
    out.residual_norm = std::sqrt(r2);
    double dmax = 0.0, dmin = std::numeric_limits<double>::infinity();
    for (double d : diag) {
        dmax = std::max(dmax, std::abs(d));
        dmin = std::min(dmin, std::abs(d));
    }
    out.condition_estimate = dmax / dmin;
    return out;
}

}  // namespace holestress
