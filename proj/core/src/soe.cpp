#include "sfbcfd/soe.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sfbcfd {

namespace {

struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Golub-Welsch for the Jacobi weight (1-x)^a (1+x)^b on [-1, 1].
// Legendre is the special case a = b = 0.
QuadRule gauss_jacobi(int n, double a, double b) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        const double s = 2.0 * k + a + b;
        J(k, k) = (k == 0) ? (b - a) / (a + b + 2.0)
                           : (b * b - a * a) / (s * (s + 2.0));
        if (k > 0) {
            const double e2 = 4.0 * k * (k + a) * (k + b) * (k + a + b) /
                              (s * s * (s + 1.0) * (s - 1.0));
            const double e = std::sqrt(e2);
            J(k, k - 1) = e;
            J(k - 1, k) = e;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("soe: Jacobi-matrix eigensolve failed");
    const double mu0 = std::pow(2.0, a + b + 1.0) * std::tgamma(a + 1.0) *
                       std::tgamma(b + 1.0) / std::tgamma(a + b + 2.0);
    QuadRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int k = 0; k < n; ++k) {
        r.nodes[k] = es.eigenvalues()(k);
        const double v0 = es.eigenvectors()(0, k);
        r.weights[k] = mu0 * v0 * v0;
    }
    return r;
}

QuadRule gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

// Candidate node set for a given panel order; not yet verified or truncated.
SoeApproximation assemble(double alpha, double eps, double dx_cut, double X, int order) {
    const double gam = std::tgamma(alpha - 1.0);
    const double beta = alpha - 2.0;

    SoeApproximation soe;
    soe.alpha = alpha;
    soe.eps = eps;
    soe.dx_cut = dx_cut;
    soe.X = X;

    // largest power of two with t0 * X <= 1; the [0, t0] panel resolves the
    // integrable singularity of t^{alpha-2} with a Gauss-Jacobi rule
    double t0 = 1.0;
    while (t0 * X > 1.0) t0 *= 0.5;
    while (2.0 * t0 * X <= 1.0) t0 *= 2.0;

    {
        const QuadRule gj = gauss_jacobi(order, 0.0, beta);
        const double scale = std::pow(0.5 * t0, alpha - 1.0) / gam;
        for (int k = 0; k < order; ++k) {
            soe.lambdas.push_back(0.5 * t0 * (gj.nodes[k] + 1.0));
            soe.thetas.push_back(scale * gj.weights[k]);
        }
    }

    // frequency cutoff: beyond T_max the tail of the integral is below eps/4
    // uniformly on [dx_cut, X] (worst case x = dx_cut)
    double T_max = t0;
    while (std::pow(T_max, beta) * std::exp(-dx_cut * T_max) / (dx_cut * gam) > 0.25 * eps)
        T_max *= 2.0;

    const QuadRule gl = gauss_legendre(order);
    for (double c = t0; c < T_max; c *= 4.0) {
        const double half = 1.5 * c;   // panel [c, 4c]
        const double mid = 2.5 * c;
        for (int k = 0; k < order; ++k) {
            const double t = mid + half * gl.nodes[k];
            soe.lambdas.push_back(t);
            soe.thetas.push_back(half * gl.weights[k] * std::pow(t, beta) / gam);
        }
        if (soe.size() > 4096)
            throw std::runtime_error("soe: node count exceeds 4096");
    }
    return soe;
}

double max_sample_error(const SoeApproximation& soe, int samples) {
    double worst = 0.0;
    const double ratio = std::log(soe.X / soe.dx_cut);
    for (int k = 0; k < samples; ++k) {
        const double x = soe.dx_cut * std::exp(ratio * k / (samples - 1));
        worst = std::max(worst, std::abs(eval_soe(soe, x) - std::pow(x, 1.0 - soe.alpha)));
    }
    return worst;
}

// Drop the weakest terms while their combined contribution at x = dx_cut
// (where every term is largest) stays below eps/10.
void truncate(SoeApproximation& soe) {
    const int n = soe.size();
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<double> mag(n);
    for (int k = 0; k < n; ++k)
        mag[k] = soe.thetas[k] * std::exp(-soe.lambdas[k] * soe.dx_cut);
    std::sort(idx.begin(), idx.end(), [&](int p, int q) { return mag[p] < mag[q]; });

    std::vector<bool> keep(n, true);
    double dropped = 0.0;
    for (int k : idx) {
        if (dropped + std::abs(mag[k]) >= 0.1 * soe.eps) break;
        dropped += std::abs(mag[k]);
        keep[k] = false;
    }
    std::vector<double> lam, th;
    for (int k = 0; k < n; ++k) {
        if (keep[k]) {
            lam.push_back(soe.lambdas[k]);
            th.push_back(soe.thetas[k]);
        }
    }
    soe.lambdas = std::move(lam);
    soe.thetas = std::move(th);
}

}  // namespace

SoeApproximation build_soe(double alpha, double eps, double dx_cut, double X) {
    if (!(alpha > 1.0 && alpha < 2.0))
        throw std::invalid_argument("soe: require 1 < alpha < 2");
    if (!(eps > 0.0)) throw std::invalid_argument("soe: require eps > 0");
    if (!(dx_cut > 0.0 && dx_cut < X))
        throw std::invalid_argument("soe: require 0 < dx_cut < X");

    int order = (eps >= 1e-6) ? 10 : 16;
    for (int attempt = 0; attempt < 3; ++attempt, order += 8) {
        SoeApproximation soe = assemble(alpha, eps, dx_cut, X, order);
        if (max_sample_error(soe, 2000) > 0.5 * eps) continue;
        truncate(soe);
        if (max_sample_error(soe, 2000) <= eps) return soe;
    }
    throw std::runtime_error("soe: failed to reach requested accuracy");
}

double eval_soe(const SoeApproximation& soe, double x) {
    double acc = 0.0;
    for (int k = 0; k < soe.size(); ++k)
        acc += soe.thetas[k] * std::exp(-soe.lambdas[k] * x);
    return acc;
}

}  // namespace sfbcfd
