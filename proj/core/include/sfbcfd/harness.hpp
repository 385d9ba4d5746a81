#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sfbcfd/krylov.hpp"
#include "sfbcfd/problem.hpp"

namespace sfbcfd {

enum class GridKind { Uniform, Perturbed, Graded };

struct GridParams {
    GridKind kind = GridKind::Uniform;
    double xi = 0.5;            ///< perturbation amplitude (Perturbed)
    double kappa = 1.0;         ///< grading exponent (Graded)
    std::uint64_t seed = 1234;  ///< base seed; each refinement uses seed + M
};

/// Mesh for one refinement level; graded meshes reuse the problem's
/// left/right weighting as the split fraction.
StaggeredGrid make_grid(const ProblemSpec& problem, int M, const GridParams& gp);

/// Discrete max-norm errors against the manufactured solution at t = T: u
/// over cell centers, p over interior edges only (the endpoint fluxes are
/// imposed data).
double error_u_max(const StaggeredGrid& grid, const ProblemSpec& problem,
                   const std::vector<double>& u);
double error_p_max(const StaggeredGrid& grid, const ProblemSpec& problem,
                   const std::vector<double>& p);

struct ConvergenceRow {
    int M = 0;
    int N = 0;
    double error_u = 0.0;
    double order_u = 0.0;  ///< NaN on the coarsest level
    double error_p = 0.0;
    double order_p = 0.0;  ///< NaN on the coarsest level
    double cpu_ms = 0.0;
    double avg_iters = 0.0;
};

/// Refinement study over the given M values. N_fixed = 0 means N = M at
/// every level. Throws std::runtime_error if any march fails to converge.
std::vector<ConvergenceRow> run_convergence(const ProblemSpec& problem, const GridParams& gp,
                                            const std::vector<int>& Ms, int N_fixed,
                                            const SolveConfig& base);

struct CompareRow {
    int M = 0;
    double max_diff_u = 0.0;
    double max_diff_p = 0.0;
    double fast_ms = 0.0;
    double dense_ms = 0.0;
    bool dense_skipped = false;  ///< true when M exceeds the dense cap
};

/// Fast (matrix-free) vs dense-LU march on identical inputs.
std::vector<CompareRow> run_compare(const ProblemSpec& problem, const GridParams& gp,
                                    const std::vector<int>& Ms, int N, double soe_eps,
                                    int cap_dense_M);

/// Locale-independent CSV with header
///   M,N,error_u,order_u,error_p,order_p,cpu_ms,avg_iters
/// Reals use 5 significant digits; NaN orders render as empty fields.
/// Identical rows always serialize to identical bytes.
std::string emit_csv(const std::vector<ConvergenceRow>& rows);
void write_csv(const std::vector<ConvergenceRow>& rows, const std::string& path);

}  // namespace sfbcfd
