#include "holestress/goursat.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "json.hpp"

#include "holestress/errors.hpp"
#include "holestress/simd.hpp"

namespace holestress {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

void check_theta(double theta, const char* who) {
    if (!(theta >= 0.0 && theta <= kHalfPi)) throw DomainError(std::string(who) + ": theta must lie in [0, pi/2]");
}

int cheb_terms(int N, const std::optional<double>& exponent, int corner_terms) {
    return exponent ? N - corner_terms : N;
}

// (pi/2 - theta)^p and its first two theta-derivatives.
void corner_power(double d, double p, double& v, double& dv, double& d2v) {
    v = std::pow(d, p);
    dv = -p * std::pow(d, p - 1.0);
    d2v = p * (p - 1.0) * std::pow(d, p - 2.0);
}

}  // namespace

BasisValues basis_values(int N, std::optional<double> exponent, double theta, int corner_terms) {
    BasisValues out;
    basis_batch(N, exponent, {theta}, out, corner_terms);
    return out;
}

void basis_batch(int N, std::optional<double> exponent, const std::vector<double>& thetas,
                 BasisValues& out, int corner_terms) {
    if (exponent && corner_terms < 1) throw InvalidArgument("basis: corner_terms must be >= 1");
    if (N < 1 || (exponent && N < corner_terms + 1)) throw InvalidArgument("basis: N too small");
    const std::size_t n = thetas.size();
    out.b.assign(N * n, 0.0);
    out.db.assign(N * n, 0.0);
    out.d2b.assign(N * n, 0.0);
    const int nc = cheb_terms(N, exponent, corner_terms);
    std::vector<double> xs(n);
    for (std::size_t p = 0; p < n; ++p) xs[p] = std::clamp(thetas[p] / kHalfPi * 2.0 - 1.0, -1.0, 1.0);
    simd::chebyshev_basis(xs, nc, out.b, out.db, out.d2b);
    const double s1 = 2.0 / kHalfPi, s2 = s1 * s1;
    for (std::size_t i = 0; i < static_cast<std::size_t>(nc) * n; ++i) {
        out.db[i] *= s1;
        out.d2b[i] *= s2;
    }
    if (exponent) {
        for (int j = 0; j < corner_terms; ++j) {
            const std::size_t base = static_cast<std::size_t>(N - 1 - j) * n;
            for (std::size_t p = 0; p < n; ++p)
                corner_power(kHalfPi - thetas[p], *exponent + j, out.b[base + p], out.db[base + p],
                             out.d2b[base + p]);
        }
    }
}

AugmentedGoursat::AugmentedGoursat(std::vector<double> a, std::vector<double> b,
                                   std::optional<double> exponent, int corner_terms)
    : a_(std::move(a)), b_(std::move(b)), exponent_(exponent), corner_terms_(corner_terms) {
    if (a_.size() != b_.size() || a_.empty()) throw InvalidArgument("AugmentedGoursat: a and b must have equal nonzero length");
    if (exponent_ && (corner_terms_ < 1 || static_cast<int>(a_.size()) < corner_terms_ + 1 || !(*exponent_ > 0.0)))
        throw InvalidArgument("AugmentedGoursat: corner needs N > corner_terms >= 1 and a positive exponent");
    const int nc = cheb_terms(N(), exponent_, corner_terms_);
    ra_ = {std::vector<double>(a_.begin(), a_.begin() + nc), 0.0, kHalfPi};
    ia_ = {std::vector<double>(b_.begin(), b_.begin() + nc), 0.0, kHalfPi};
    dra_ = derivative(ra_);
    dia_ = derivative(ia_);
    d2ra_ = derivative(dra_);
    d2ia_ = derivative(dia_);
}

cplx AugmentedGoursat::phi(double theta) const {
    check_theta(theta, "eval_phi");
    cplx v(eval(ra_, theta), eval(ia_, theta));
    if (exponent_) {
        for (int j = 0; j < corner_terms_; ++j) {
            const std::size_t k = a_.size() - 1 - j;
            v += cplx(a_[k], b_[k]) * std::pow(kHalfPi - theta, *exponent_ + j);
        }
    }
    return v;
}

cplx AugmentedGoursat::dphi(double theta) const {
    check_theta(theta, "eval_dphi");
    cplx v(eval(dra_, theta), eval(dia_, theta));
    if (exponent_) {
        const double d = kHalfPi - theta;
        if (d == 0.0 && *exponent_ < 1.0) throw SingularEvaluation("eval_dphi: corner derivative is unbounded at pi/2");
        for (int j = 0; j < corner_terms_; ++j) {
            const std::size_t k = a_.size() - 1 - j;
            const double p = *exponent_ + j;
            // p = 1 gives a constant derivative, including at d = 0
            const double dv = p == 1.0 ? -1.0 : -p * std::pow(d, p - 1.0);
            v += cplx(a_[k], b_[k]) * dv;
        }
    }
    return v;
}

cplx AugmentedGoursat::d2phi(double theta) const {
    check_theta(theta, "eval_d2phi");
    cplx v(eval(d2ra_, theta), eval(d2ia_, theta));
    if (exponent_) {
        const double d = kHalfPi - theta;
        for (int j = 0; j < corner_terms_; ++j) {
            const std::size_t k = a_.size() - 1 - j;
            const double p = *exponent_ + j;
            if (p == 1.0) continue;
            if (d == 0.0 && p < 2.0) throw SingularEvaluation("eval_d2phi: corner second derivative is unbounded at pi/2");
            v += cplx(a_[k], b_[k]) * (p * (p - 1.0) * std::pow(d, p - 2.0));
        }
    }
    return v;
}

cplx eval_phi(const AugmentedGoursat& g, double theta) { return g.phi(theta); }
cplx eval_dphi(const AugmentedGoursat& g, double theta) { return g.dphi(theta); }
cplx eval_d2phi(const AugmentedGoursat& g, double theta) { return g.d2phi(theta); }

cplx extend(const AugmentedGoursat& g, double theta) {
    constexpr double pi = std::numbers::pi;
    if (!(theta >= 0.0 && theta <= 2.0 * pi)) throw DomainError("extend: theta must lie in [0, 2pi]");
    if (theta <= kHalfPi) return g.phi(theta);
    if (theta <= pi) return -std::conj(g.phi(std::max(0.0, pi - theta)));
    if (theta <= 3.0 * kHalfPi) return -g.phi(std::min(kHalfPi, theta - pi));
    return std::conj(g.phi(std::clamp(2.0 * pi - theta, 0.0, kHalfPi)));
}

std::string to_json(const AugmentedGoursat& g) {
    nlohmann::ordered_json j;
    j["N"] = g.N();
    if (auto l = g.lambda()) j["lambda"] = *l;
    else j["lambda"] = nullptr;
    j["a"] = g.a();
    j["b"] = g.b();
    if (g.corner_terms() > 1) j["corner_terms"] = g.corner_terms();
    return j.dump(2);
}

AugmentedGoursat goursat_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        auto a = j.at("a").get<std::vector<double>>();
        auto b = j.at("b").get<std::vector<double>>();
        if (j.at("N").get<int>() != static_cast<int>(a.size())) throw InvalidData("goursat json: N does not match coefficient count");
        std::optional<double> e;
        if (!j.at("lambda").is_null()) e = j.at("lambda").get<double>() - 1.0;
        const int terms = j.contains("corner_terms") ? j.at("corner_terms").get<int>() : 1;
        return AugmentedGoursat(std::move(a), std::move(b), e, terms);
    } catch (const nlohmann::json::exception& ex) {
        throw InvalidData(std::string("goursat json: ") + ex.what());
    }
}

}  // namespace holestress
