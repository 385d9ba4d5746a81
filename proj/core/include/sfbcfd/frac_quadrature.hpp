#pragma once

#include <span>
#include <utility>
#include <vector>

#include "sfbcfd/grid.hpp"

namespace sfbcfd {

/// Quadrature coefficients for the left/right Riemann-Liouville fractional
/// integrals of the piecewise-linear interpolant on a staggered grid.
///
/// Left tables: g^L_i = sum_{j=1..max(i,2)} q[i,j] u_j (row 1 reaches column 2
/// through the boundary extrapolation). Right tables mirror: row M reaches
/// column M-1. Stored packed per row; immutable after build.
class DirectCoefficients {
public:
    DirectCoefficients(const StaggeredGrid& grid, double alpha, bool left);

    double alpha() const { return alpha_; }
    int size() const { return M_; }
    bool is_left() const { return left_; }

    /// q coefficient, 1-based indices; zero outside the stored pattern.
    double q(int i, int j) const;
    /// auxiliary omega table, 1-based indices; zero outside the pattern.
    double omega(int i, int j) const;

    /// Columns [col_begin(i), col_end(i)] carry the nonzeros of row i (1-based).
    int col_begin(int i) const;
    int col_end(int i) const;

private:
    double alpha_;
    int M_;
    bool left_;
    std::vector<double> q_;
    std::vector<double> omega_;
    std::vector<std::size_t> q_offset_;      // row r starts at q_[q_offset_[r]]
    std::vector<std::size_t> omega_offset_;
};

DirectCoefficients build_left_coefficients(const StaggeredGrid& grid, double alpha);
DirectCoefficients build_right_coefficients(const StaggeredGrid& grid, double alpha);

/// Direct O(M^2) evaluation of the discrete fractional integrals.
std::vector<double> eval_g_left(const DirectCoefficients& coeffs, std::span<const double> u);
std::vector<double> eval_g_right(const DirectCoefficients& coeffs, std::span<const double> u);

/// (q^L_{1,1}, q^L_{1,2}): the two-term i=1 left row, computed in O(1).
std::pair<double, double> left_boundary_row(const StaggeredGrid& grid, double alpha);
/// (q^R_{M,M-1}, q^R_{M,M}): the two-term i=M right row, computed in O(1).
std::pair<double, double> right_boundary_row(const StaggeredGrid& grid, double alpha);

}  // namespace sfbcfd
