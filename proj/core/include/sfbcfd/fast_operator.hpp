#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sfbcfd/problem.hpp"
#include "sfbcfd/soe.hpp"

namespace sfbcfd {

/// Matrix-free application of the discrete flux-divergence operator using
/// exponential-sum compression of the quadrature history. Each evaluation of
/// the discrete fractional integrals costs O(M * N_exp) via the one-step
/// recurrences of the running sums; no O(M^2) table is ever formed.
///
/// Precondition on the kernel approximation: soe.dx_cut must not exceed the
/// smallest distance between adjacent cell centers, and soe.X must cover the
/// domain length b - a.
class FastOperator {
public:
    FastOperator(const StaggeredGrid& grid, double alpha, SoeApproximation soe);

    double alpha() const { return alpha_; }
    int size() const { return M_; }
    const SoeApproximation& soe() const { return soe_; }

    /// Discrete left/right fractional integrals of v, length M each.
    std::vector<double> fast_g_left(std::span<const double> v) const;
    std::vector<double> fast_g_right(std::span<const double> v) const;

    /// w = B v with the diffusivity scalings taken as given.
    std::vector<double> apply(const OperatorScaling& scaling, double gamma,
                              std::span<const double> v) const;

    /// Convenience wrapper that evaluates the scalings at time t first.
    std::vector<double> apply_B(const ProblemSpec& problem, double t,
                                std::span<const double> v) const;

    /// Bytes held by the six precomputed (M-1) x N_exp recurrence tables.
    std::size_t table_bytes() const;

private:
    const StaggeredGrid& grid_;
    double alpha_;
    int M_;
    SoeApproximation soe_;

    // local (nearest-neighbour) coefficients of g_i, length M each
    std::vector<double> muL_, nuL_, muR_, nuR_;
    // recurrence tables, row-major (M-1) x N_exp
    std::vector<double> rhoL_, sigmaL_, decayL_;  // rows i = 2..M
    std::vector<double> rhoR_, sigmaR_, decayR_;  // rows i = 1..M-1
    double inv_gamma2_;                           // 1 / Gamma(2 - alpha)
};

/// SOE kernel sized for a grid: cutoff at the smallest center spacing,
/// support out to the domain length.
SoeApproximation build_soe_for_grid(const StaggeredGrid& grid, double alpha, double eps);

}  // namespace sfbcfd
