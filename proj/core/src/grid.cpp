#include "sfbcfd/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace sfbcfd {

namespace {

// splitmix64: tiny, portable, seedable; identical streams on every platform.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform on (0,1): top 53 bits, zero mapped to the midpoint
    double next_unit() {
        double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return u > 0.0 ? u : 0.5;
    }
};

void check_domain(double a, double b, int M) {
    if (!(a < b)) throw std::invalid_argument("grid: require a < b");
    if (M < 3) throw std::invalid_argument("grid: require M >= 3");
}

}  // namespace

double StaggeredGrid::min_interior_stag_width() const {
    double m = stag_widths[1];
    for (int k = 2; k < M; ++k) m = std::min(m, stag_widths[k]);
    return m;
}

StaggeredGrid make_grid_from_edges(double a, double b, std::vector<double> edges) {
    const int M = static_cast<int>(edges.size()) - 1;
    check_domain(a, b, M);
    if (edges.front() != a || edges.back() != b)
        throw std::invalid_argument("grid: edges must start at a and end at b");
    const double hmin = 1e-14 * (b - a);
    for (int i = 0; i < M; ++i)
        if (!(edges[i + 1] - edges[i] > hmin))
            throw std::invalid_argument("grid: edges not strictly increasing (cell below 1e-14*(b-a))");

    StaggeredGrid g;
    g.a = a;
    g.b = b;
    g.M = M;
    g.edges = std::move(edges);
    g.centers.resize(M);
    g.widths.resize(M);
    g.stag_widths.resize(M + 1);
    for (int i = 0; i < M; ++i) {
        g.centers[i] = 0.5 * (g.edges[i] + g.edges[i + 1]);
        g.widths[i] = g.edges[i + 1] - g.edges[i];
    }
    g.stag_widths[0] = 0.5 * g.widths[0];
    for (int i = 1; i < M; ++i) g.stag_widths[i] = 0.5 * (g.widths[i - 1] + g.widths[i]);
    g.stag_widths[M] = 0.5 * g.widths[M - 1];
    return g;
}

StaggeredGrid build_uniform(double a, double b, int M) {
    check_domain(a, b, M);
    const double h = (b - a) / M;
    std::vector<double> edges(M + 1);
    for (int i = 0; i <= M; ++i) edges[i] = a + i * h;
    edges[M] = b;
    return make_grid_from_edges(a, b, std::move(edges));
}

StaggeredGrid build_perturbed(double a, double b, int M, double xi, std::uint64_t seed) {
    check_domain(a, b, M);
    if (!(xi >= 0.0 && xi <= 1.0)) throw std::invalid_argument("grid: require 0 <= xi <= 1");
    const double h = (b - a) / M;
    SplitMix64 rng(seed);
    std::vector<double> edges(M + 1);
    edges[0] = a;
    edges[M] = b;
    for (int i = 1; i < M; ++i) edges[i] = a + i * h + h * xi * (rng.next_unit() - 0.5);
    return make_grid_from_edges(a, b, std::move(edges));
}

StaggeredGrid build_graded(double a, double b, int M, double gamma, double kappa) {
    check_domain(a, b, M);
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw std::invalid_argument("grid: require 0 <= gamma <= 1");
    if (!(kappa >= 1.0)) throw std::invalid_argument("grid: require kappa >= 1");
    const int split = static_cast<int>(std::floor(gamma * M));
    std::vector<double> edges(M + 1);
    for (int i = 0; i <= M; ++i) {
        if (i <= split && split > 0) {
            edges[i] = a + gamma * (b - a) * std::pow(static_cast<double>(i) / split, kappa);
        } else {
            edges[i] = b - (1.0 - gamma) * (b - a) *
                               std::pow(static_cast<double>(M - i) / (M - split), kappa);
        }
    }
    edges[0] = a;
    edges[M] = b;
    return make_grid_from_edges(a, b, std::move(edges));
}

void write_grid_file(const StaggeredGrid& grid, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("grid: cannot open for writing: " + path);
    char buf[96];
    std::snprintf(buf, sizeof(buf), "# edges M=%d a=%.17g b=%.17g\n", grid.M, grid.a, grid.b);
    out << buf;
    for (double e : grid.edges) {
        std::snprintf(buf, sizeof(buf), "%.17g\n", e);
        out << buf;
    }
    if (!out) throw std::runtime_error("grid: write failed: " + path);
}

StaggeredGrid read_grid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("grid: cannot open for reading: " + path);
    std::string header;
    std::getline(in, header);
    int M = 0;
    double a = 0.0, b = 0.0;
    if (std::sscanf(header.c_str(), "# edges M=%d a=%lg b=%lg", &M, &a, &b) != 3)
        throw std::runtime_error("grid: bad header in " + path);
    std::vector<double> edges;
    edges.reserve(M + 1);
    double v = 0.0;
    while (in >> v) edges.push_back(v);
    if (static_cast<int>(edges.size()) != M + 1)
        throw std::runtime_error("grid: expected M+1 edges in " + path);
    return make_grid_from_edges(a, b, std::move(edges));
}

}  // namespace sfbcfd
