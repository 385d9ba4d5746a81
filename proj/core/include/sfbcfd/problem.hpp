#pragma once

#include <functional>
#include <vector>

#include "sfbcfd/grid.hpp"

namespace sfbcfd {

/// Two-sided variable-coefficient fractional diffusion problem on [a, b]:
///   du/dt - d/dx [ gamma K^L(x,t) d/dx J_a^{2-alpha} u
///                + (1-gamma) K^R(x,t) d/dx J_b^{2-alpha} u ] = f,
/// with flux boundary data p(a,t) = phi_a(t), p(b,t) = phi_b(t).
struct ProblemSpec {
    double alpha = 1.5;
    double gamma = 0.5;   ///< left/right weighting, 0 <= gamma <= 1
    double a = 0.0;
    double b = 1.0;
    double T = 1.0;

    std::function<double(double, double)> KL;  ///< K^L(x, t) >= 0
    std::function<double(double, double)> KR;  ///< K^R(x, t) >= 0
    std::function<double(double, double)> f;   ///< source term
    std::function<double(double)> phi_a;       ///< flux at x = a
    std::function<double(double)> phi_b;       ///< flux at x = b
    std::function<double(double)> u0;          ///< initial condition

    // Manufactured solutions; empty when unknown.
    std::function<double(double, double)> exact_u;
    std::function<double(double, double)> exact_p;
};

/// Diffusivity scalings entering the discrete flux divergence. For row i
/// (0-based r = i-1):
///   dplus[r]  = K(x_{i+1/2}, t) / (h_{i+1/2} h_i),   zero at r = M-1,
///   dminus[r] = K(x_{i-1/2}, t) / (h_{i-1/2} h_i),   zero at r = 0.
struct OperatorScaling {
    std::vector<double> dplusL, dminusL;
    std::vector<double> dplusR, dminusR;
};

/// Evaluate the scalings at time t. Throws std::invalid_argument if either
/// diffusivity is negative (or NaN) at any sampled interior edge.
OperatorScaling build_scaling(const StaggeredGrid& grid, const ProblemSpec& problem, double t);

}  // namespace sfbcfd
