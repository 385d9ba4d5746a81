#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sfbcfd {

/// Staggered block-centered mesh of the interval [a, b].
///
/// Cell edges x_{1/2} < x_{3/2} < ... < x_{M+1/2} carry the flux unknowns,
/// cell centers x_i = (x_{i-1/2} + x_{i+1/2})/2 carry the primal unknowns.
/// Immutable after construction; freely shareable across threads.
struct StaggeredGrid {
    double a = 0.0;
    double b = 0.0;
    int M = 0;

    std::vector<double> edges;        ///< M+1 entries, edges[k] = x_{k+1/2}
    std::vector<double> centers;      ///< M entries, centers[i] = x_{i+1}
    std::vector<double> widths;       ///< M entries, widths[i] = h_{i+1}
    std::vector<double> stag_widths;  ///< M+1 entries, stag_widths[k] = h_{k+1/2}

    /// Smallest distance between adjacent cell centers (interior staggered width).
    double min_interior_stag_width() const;
};

/// Validate a strictly increasing edge set and derive centers/widths.
/// Throws std::invalid_argument on a >= b, M < 3, non-monotone edges, or a
/// cell thinner than 1e-14*(b-a).
StaggeredGrid make_grid_from_edges(double a, double b, std::vector<double> edges);

StaggeredGrid build_uniform(double a, double b, int M);

/// Uniform edges displaced by h*xi*(lambda_i - 1/2) with lambda_i uniform in
/// (0,1) from a splitmix64 stream seeded by `seed`; endpoints stay at a, b.
StaggeredGrid build_perturbed(double a, double b, int M, double xi, std::uint64_t seed);

/// Two-piece power-law grading with split index floor(gamma*M); kappa = 1
/// reproduces the uniform grid exactly.
StaggeredGrid build_graded(double a, double b, int M, double gamma, double kappa);

/// Plain-text grid file: header "# edges M=<int> a=<real> b=<real>", then one
/// edge per line. The reader re-validates all grid invariants.
void write_grid_file(const StaggeredGrid& grid, const std::string& path);
StaggeredGrid read_grid_file(const std::string& path);

}  // namespace sfbcfd
