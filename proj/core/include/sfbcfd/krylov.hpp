#pragma once

#include <functional>
#include <vector>

#include "sfbcfd/problem.hpp"

namespace sfbcfd {

enum class Method {
    DenseGE,        ///< dense assembly + LU per time level
    DenseBiCGSTAB,  ///< dense assembly, iterative solve
    FastBiCGSTAB    ///< matrix-free exponential-sum operator, iterative solve
};

struct SolveConfig {
    Method method = Method::FastBiCGSTAB;
    int N = 0;               ///< time steps
    double rel_tol = 1e-10;  ///< BiCGSTAB stop: ||r|| <= rel_tol * ||b||
    int max_iters = 0;       ///< 0 means M
    double soe_eps = 1e-10;  ///< kernel accuracy for the fast operator
};

struct BicgstabResult {
    std::vector<double> x;
    int iters = 0;
    int applies = 0;  ///< operator applications, for cost accounting
    bool converged = false;
};

/// Preconditioner-free BiCGSTAB on an operator given as a callback.
BicgstabResult bicgstab(const std::function<std::vector<double>(const std::vector<double>&)>& op,
                        const std::vector<double>& b, const std::vector<double>& x0,
                        double rel_tol, int max_iters);

struct MarchResult {
    std::vector<double> u_final;  ///< M cell values at t = T
    std::vector<double> p_final;  ///< M+1 edge fluxes at t = T
    double wall_seconds = 0.0;
    long total_iters = 0;
    long total_applies = 0;
    double avg_iters = 0.0;  ///< BiCGSTAB iterations per time level (0 for LU)
    bool converged = false;
};

/// Crank-Nicolson march of N steps from t = 0 to t = T.
MarchResult cn_march(const StaggeredGrid& grid, const ProblemSpec& problem,
                     const SolveConfig& config);

}  // namespace sfbcfd
