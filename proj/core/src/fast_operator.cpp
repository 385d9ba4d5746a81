#include "sfbcfd/fast_operator.hpp"

#include <cmath>
#include <stdexcept>

#include "sfbcfd/dense_scheme.hpp"
#include "sfbcfd/frac_quadrature.hpp"

namespace sfbcfd {

namespace {

// f1(z) = (1 - e^{-z})/z - e^{-z},  f2(z) = 1 - (1 - e^{-z})/z.
// Both are O(z) at the origin; the closed forms lose all digits there, so
// switch to the alternating series below z = 0.1 (terms decay like z^k/k!).
void f12(double z, double& f1, double& f2) {
    if (z < 0.1) {
        f1 = 0.0;
        f2 = 0.0;
        double zk = 1.0;     // z^k
        double fact = 1.0;   // (k+1)!
        double sign = 1.0;
        for (int k = 1; k <= 12; ++k) {
            zk *= z;
            fact *= (k + 1);
            f1 += sign * zk * k / fact;
            f2 += sign * zk / fact;
            sign = -sign;
        }
    } else {
        const double em = std::exp(-z);
        const double r = (1.0 - em) / z;
        f1 = r - em;
        f2 = 1.0 - r;
    }
}

// Contribution weights of one linear interpolation panel of width w sitting
// a distance h behind the target point, against the kernel e^{-lambda x}.
void eta_zeta(double lambda, double h, double w, double& eta, double& zeta) {
    const double scale = std::exp(-lambda * h) / lambda;
    double f1, f2;
    f12(lambda * w, f1, f2);
    eta = scale * f1;
    zeta = scale * f2;
}

}  // namespace

FastOperator::FastOperator(const StaggeredGrid& grid, double alpha, SoeApproximation soe)
    : grid_(grid), alpha_(alpha), M_(grid.M), soe_(std::move(soe)) {
    if (!(alpha > 1.0 && alpha < 2.0))
        throw std::invalid_argument("fast_operator: require 1 < alpha < 2");
    if (soe_.dx_cut > grid.min_interior_stag_width() * (1.0 + 1e-12))
        throw std::invalid_argument("fast_operator: kernel cutoff exceeds smallest center spacing");
    if (soe_.X < (grid.b - grid.a) * (1.0 - 1e-12))
        throw std::invalid_argument("fast_operator: kernel support does not cover the domain");

    const int M = M_;
    const int N = soe_.size();
    const double g2 = std::tgamma(2.0 - alpha);
    const double g3 = std::tgamma(3.0 - alpha);
    const double g4 = std::tgamma(4.0 - alpha);
    inv_gamma2_ = 1.0 / g2;

    const auto& hs = grid.stag_widths;

    muL_.resize(M);
    nuL_.resize(M);
    muR_.resize(M);
    nuR_.resize(M);
    for (int i = 2; i <= M; ++i) {
        const double p = std::pow(hs[i - 1], 2.0 - alpha);
        muL_[i - 1] = (1.0 / g3 - 1.0 / g4) * p;
        nuL_[i - 1] = p / g4;
    }
    for (int i = 1; i <= M - 1; ++i) {
        const double p = std::pow(hs[i], 2.0 - alpha);
        muR_[i - 1] = (1.0 / g3 - 1.0 / g4) * p;
        nuR_[i - 1] = p / g4;
    }
    {
        auto [q11, q12] = left_boundary_row(grid, alpha);
        muL_[0] = q11;  // coefficient of u_1
        nuL_[0] = q12;  // coefficient of u_2
        auto [qMm1, qMM] = right_boundary_row(grid, alpha);
        nuR_[M - 1] = qMm1;  // coefficient of u_{M-1}
        muR_[M - 1] = qMM;   // coefficient of u_M
    }

    // boundary-extrapolation weights shared with the direct tables
    const double h1 = grid.widths[0], h2 = grid.widths[1];
    const double wAa = (2.0 * h1 + h2) / (h1 + h2);
    const double wBa = h1 / (h1 + h2);
    const double hM = grid.widths[M - 1], hM1 = grid.widths[M - 2];
    const double wAb = (2.0 * hM + hM1) / (hM1 + hM);
    const double wBb = hM / (hM1 + hM);

    rhoL_.resize(static_cast<std::size_t>(M - 1) * N);
    sigmaL_.resize(static_cast<std::size_t>(M - 1) * N);
    decayL_.resize(static_cast<std::size_t>(M - 1) * N);
    rhoR_.resize(static_cast<std::size_t>(M - 1) * N);
    sigmaR_.resize(static_cast<std::size_t>(M - 1) * N);
    decayR_.resize(static_cast<std::size_t>(M - 1) * N);

    for (int i = 2; i <= M; ++i) {
        const std::size_t row = static_cast<std::size_t>(i - 2) * N;
        const double h = hs[i - 1];
        const double w = hs[i - 2];
        for (int s = 0; s < N; ++s) {
            const double lam = soe_.lambdas[s];
            double eta, zeta;
            eta_zeta(lam, h, w, eta, zeta);
            decayL_[row + s] = std::exp(-lam * h);
            if (i == 2) {
                rhoL_[row + s] = wAa * eta + zeta;
                sigmaL_[row + s] = -wBa * eta;
            } else {
                rhoL_[row + s] = eta;
                sigmaL_[row + s] = zeta;
            }
        }
    }
    for (int i = 1; i <= M - 1; ++i) {
        const std::size_t row = static_cast<std::size_t>(i - 1) * N;
        const double h = hs[i];
        const double w = hs[i + 1];
        for (int s = 0; s < N; ++s) {
            const double lam = soe_.lambdas[s];
            double eta, zeta;
            eta_zeta(lam, h, w, eta, zeta);
            decayR_[row + s] = std::exp(-lam * h);
            if (i == M - 1) {
                rhoR_[row + s] = -wBb * eta;
                sigmaR_[row + s] = wAb * eta + zeta;
            } else {
                rhoR_[row + s] = eta;
                sigmaR_[row + s] = zeta;
            }
        }
    }
}

std::size_t FastOperator::table_bytes() const {
    return sizeof(double) * (rhoL_.size() + sigmaL_.size() + decayL_.size() + rhoR_.size() +
                             sigmaR_.size() + decayR_.size());
}

std::vector<double> FastOperator::fast_g_left(std::span<const double> v) const {
    const int M = M_;
    const int N = soe_.size();
    if (static_cast<int>(v.size()) != M)
        throw std::invalid_argument("fast_operator: v must have length M");

    std::vector<double> g(M);
    g[0] = muL_[0] * v[0] + nuL_[0] * v[1];

    std::vector<double> S(N, 0.0);
    for (int i = 2; i <= M; ++i) {
        const std::size_t row = static_cast<std::size_t>(i - 2) * N;
        // generic row feeds (u_{i-2}, u_{i-1}); the seed row folds in (u_1, u_2)
        const double ua = (i == 2) ? v[0] : v[i - 3];
        const double ub = (i == 2) ? v[1] : v[i - 2];
        double hist = 0.0;
        for (int s = 0; s < N; ++s) {
            S[s] = decayL_[row + s] * ((i == 2) ? 0.0 : S[s]) + rhoL_[row + s] * ua +
                   sigmaL_[row + s] * ub;
            hist += soe_.thetas[s] * S[s];
        }
        g[i - 1] = inv_gamma2_ * hist + muL_[i - 1] * v[i - 2] + nuL_[i - 1] * v[i - 1];
    }
    return g;
}

std::vector<double> FastOperator::fast_g_right(std::span<const double> v) const {
    const int M = M_;
    const int N = soe_.size();
    if (static_cast<int>(v.size()) != M)
        throw std::invalid_argument("fast_operator: v must have length M");

    std::vector<double> g(M);
    g[M - 1] = nuR_[M - 1] * v[M - 2] + muR_[M - 1] * v[M - 1];

    std::vector<double> S(N, 0.0);
    for (int i = M - 1; i >= 1; --i) {
        const std::size_t row = static_cast<std::size_t>(i - 1) * N;
        // generic row feeds (u_{i+2}, u_{i+1}); the seed row folds in (u_{M-1}, u_M)
        const double ua = (i == M - 1) ? v[M - 2] : v[i + 1];
        const double ub = (i == M - 1) ? v[M - 1] : v[i];
        double hist = 0.0;
        for (int s = 0; s < N; ++s) {
            S[s] = decayR_[row + s] * ((i == M - 1) ? 0.0 : S[s]) + rhoR_[row + s] * ua +
                   sigmaR_[row + s] * ub;
            hist += soe_.thetas[s] * S[s];
        }
        g[i - 1] = inv_gamma2_ * hist + nuR_[i - 1] * v[i - 1] + muR_[i - 1] * v[i];
    }
    return g;
}

std::vector<double> FastOperator::apply(const OperatorScaling& scaling, double gamma,
                                        std::span<const double> v) const {
    const int M = M_;
    const std::vector<double> gL = fast_g_left(v);
    const std::vector<double> gR = fast_g_right(v);

    std::vector<double> out(M);
    for (int r = 0; r < M; ++r) {
        double acc = 0.0;
        if (r < M - 1) {
            acc += gamma * scaling.dplusL[r] * (gL[r + 1] - gL[r]) +
                   (1.0 - gamma) * scaling.dplusR[r] * (gR[r + 1] - gR[r]);
        }
        if (r > 0) {
            acc -= gamma * scaling.dminusL[r] * (gL[r] - gL[r - 1]) +
                   (1.0 - gamma) * scaling.dminusR[r] * (gR[r] - gR[r - 1]);
        }
        out[r] = acc;
    }
    return out;
}

std::vector<double> FastOperator::apply_B(const ProblemSpec& problem, double t,
                                          std::span<const double> v) const {
    return apply(build_scaling(grid_, problem, t), problem.gamma, v);
}

SoeApproximation build_soe_for_grid(const StaggeredGrid& grid, double alpha, double eps) {
    return build_soe(alpha, eps, grid.min_interior_stag_width(), grid.b - grid.a);
}

}  // namespace sfbcfd
