#pragma once

#include <vector>

namespace sfbcfd {

/// Sum-of-exponentials approximation of the power kernel:
///   x^{1-alpha} ~= sum_s thetas[s] * exp(-lambdas[s] * x)
/// valid to absolute accuracy eps on [dx_cut, X].
struct SoeApproximation {
    double alpha = 0.0;
    double eps = 0.0;
    double dx_cut = 0.0;
    double X = 0.0;
    std::vector<double> lambdas;
    std::vector<double> thetas;

    int size() const { return static_cast<int>(lambdas.size()); }
};

/// Build the approximation from the integral representation
///   x^{1-alpha} = (1/Gamma(alpha-1)) * int_0^inf exp(-x t) t^{alpha-2} dt
/// discretized with a Gauss-Jacobi rule near t = 0 and dyadic Gauss-Legendre
/// panels on [t0, T_max]. The result is verified on a dense geometric sample
/// of [dx_cut, X]; throws std::runtime_error if the target accuracy cannot be
/// met or the node count would exceed 4096.
SoeApproximation build_soe(double alpha, double eps, double dx_cut, double X);

/// Evaluate sum_s theta_s exp(-lambda_s x).
double eval_soe(const SoeApproximation& soe, double x);

}  // namespace sfbcfd
