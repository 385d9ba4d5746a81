#pragma once

#include <Eigen/Dense>

#include <vector>

#include "sfbcfd/frac_quadrature.hpp"
#include "sfbcfd/problem.hpp"

namespace sfbcfd {

/// Dense M x M stiffness A(t) with (A u)_i the discrete flux divergence
/// at cell i, so that du/dt = A u + F.
struct DenseStiffness {
    Eigen::MatrixXd A;
    double t = 0.0;
};

/// Assemble A(t) from precomputed left/right quadrature tables.
DenseStiffness assemble_stiffness(const StaggeredGrid& grid, const ProblemSpec& problem,
                                  const DirectCoefficients& left,
                                  const DirectCoefficients& right, double t);

/// Crank-Nicolson source vector at the half level (t_n + t_{n-1})/2, with
/// the flux boundary data folded into the first and last rows.
std::vector<double> cn_rhs_source(const StaggeredGrid& grid, const ProblemSpec& problem,
                                  double t_prev, double t_next);

/// One Crank-Nicolson step by dense LU:
///   (I - tau/2 A(t_next)) u_next = (I + tau/2 A(t_prev)) u_prev + tau F.
/// Throws std::runtime_error on a numerically singular system.
std::vector<double> dense_cn_step(const Eigen::MatrixXd& A_prev, const Eigen::MatrixXd& A_next,
                                  const std::vector<double>& u_prev,
                                  const std::vector<double>& source, double tau);

/// Recover the flux at all M+1 edges from u at time t; endpoint values come
/// straight from the boundary data.
std::vector<double> recover_flux(const StaggeredGrid& grid, const ProblemSpec& problem,
                                 const DirectCoefficients& left, const DirectCoefficients& right,
                                 const std::vector<double>& u, double t);

}  // namespace sfbcfd
