#include "sfbcfd/frac_quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace sfbcfd {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 1.0 && alpha < 2.0))
        throw std::invalid_argument("frac_quadrature: require 1 < alpha < 2");
}

struct GammaFactors {
    double g3;  // Gamma(3-alpha)
    double g4;  // Gamma(4-alpha)
    explicit GammaFactors(double alpha)
        : g3(std::tgamma(3.0 - alpha)), g4(std::tgamma(4.0 - alpha)) {}
};

}  // namespace

DirectCoefficients::DirectCoefficients(const StaggeredGrid& grid, double alpha, bool left)
    : alpha_(alpha), M_(grid.M), left_(left) {
    check_alpha(alpha);
    const GammaFactors G(alpha);
    const double e2 = 2.0 - alpha;
    const double e3 = 3.0 - alpha;
    const int M = M_;
    const auto& x = grid.centers;
    const auto& hs = grid.stag_widths;

    q_offset_.resize(M + 1);
    omega_offset_.resize(M + 1);

    if (left_) {
        // row lengths: q row 1 has 2 entries, row i>=2 has i; omega row i has i
        q_offset_[0] = 0;
        omega_offset_[0] = 0;
        for (int r = 0; r < M; ++r) {
            const int i = r + 1;
            q_offset_[r + 1] = q_offset_[r] + (i == 1 ? 2 : i);
            omega_offset_[r + 1] = omega_offset_[r] + i;
        }
        q_.resize(q_offset_[M]);
        omega_.resize(omega_offset_[M]);

        const double h1 = grid.widths[0], h2 = grid.widths[1];
        const double wA = (2.0 * h1 + h2) / (h1 + h2);
        const double wB = h1 / (h1 + h2);

        for (int i = 1; i <= M; ++i) {
            const double xi = x[i - 1];
            double* w = &omega_[omega_offset_[i - 1]];  // w[j-1] = omega_{i,j}
            w[0] = (std::pow(xi - x[0], e3) - std::pow(xi - grid.a, e3)) / (G.g4 * hs[0]);
            for (int j = 2; j <= i; ++j)
                w[j - 1] = (std::pow(xi - x[j - 1], e3) - std::pow(xi - x[j - 2], e3)) /
                           (G.g4 * hs[j - 1]);
            auto wj = [&](int j) { return (j >= 1 && j <= i) ? w[j - 1] : 0.0; };

            const double P = std::pow(xi - grid.a, e2) / G.g3;
            double* qr = &q_[q_offset_[i - 1]];
            qr[0] = wA * P + wB * wj(1) + wj(2);
            qr[1] = -wB * P - wB * wj(1) - wj(2) + wj(3);
            for (int j = 3; j <= i; ++j) qr[j - 1] = wj(j + 1) - wj(j);
        }
    } else {
        // row lengths: q row i<=M-1 has M-i+1 entries, row M has 2; omega row i has M-i+1
        q_offset_[0] = 0;
        omega_offset_[0] = 0;
        for (int r = 0; r < M; ++r) {
            const int i = r + 1;
            q_offset_[r + 1] = q_offset_[r] + (i == M ? 2 : M - i + 1);
            omega_offset_[r + 1] = omega_offset_[r] + (M - i + 1);
        }
        q_.resize(q_offset_[M]);
        omega_.resize(omega_offset_[M]);

        const double hM = grid.widths[M - 1], hM1 = grid.widths[M - 2];
        const double wA = (2.0 * hM + hM1) / (hM1 + hM);
        const double wB = hM / (hM1 + hM);

        for (int i = 1; i <= M; ++i) {
            const double xi = x[i - 1];
            double* w = &omega_[omega_offset_[i - 1]];  // w[j-i] = omega_{i,j}
            for (int j = i; j <= M - 1; ++j)
                w[j - i] = (std::pow(x[j] - xi, e3) - std::pow(x[j - 1] - xi, e3)) /
                           (G.g4 * hs[j]);
            w[M - i] = (std::pow(grid.b - xi, e3) - std::pow(x[M - 1] - xi, e3)) / (G.g4 * hs[M]);
            auto wj = [&](int j) { return (j >= i && j <= M) ? w[j - i] : 0.0; };

            const double Q = std::pow(grid.b - xi, e2) / G.g3;
            double* qr = &q_[q_offset_[i - 1]];
            const int c0 = (i == M) ? M - 1 : i;  // first stored column
            for (int j = i; j <= M - 2; ++j) qr[j - c0] = wj(j) - wj(j - 1);
            qr[M - 1 - c0] = -wB * Q - wj(M - 2) + wj(M - 1) + wB * wj(M);
            qr[M - c0] = wA * Q - wj(M - 1) - wB * wj(M);
        }
    }
}

int DirectCoefficients::col_begin(int i) const { return left_ ? 1 : std::min(i, M_ - 1); }
int DirectCoefficients::col_end(int i) const { return left_ ? std::max(i, 2) : M_; }

double DirectCoefficients::q(int i, int j) const {
    if (i < 1 || i > M_ || j < col_begin(i) || j > col_end(i)) return 0.0;
    return q_[q_offset_[i - 1] + (j - col_begin(i))];
}

double DirectCoefficients::omega(int i, int j) const {
    if (left_) {
        if (i < 1 || i > M_ || j < 1 || j > i) return 0.0;
        return omega_[omega_offset_[i - 1] + (j - 1)];
    }
    if (i < 1 || i > M_ || j < i || j > M_) return 0.0;
    return omega_[omega_offset_[i - 1] + (j - i)];
}

DirectCoefficients build_left_coefficients(const StaggeredGrid& grid, double alpha) {
    return DirectCoefficients(grid, alpha, true);
}

DirectCoefficients build_right_coefficients(const StaggeredGrid& grid, double alpha) {
    return DirectCoefficients(grid, alpha, false);
}

std::vector<double> eval_g_left(const DirectCoefficients& coeffs, std::span<const double> u) {
    const int M = coeffs.size();
    if (static_cast<int>(u.size()) != M)
        throw std::invalid_argument("eval_g_left: u must have length M");
    std::vector<double> g(M);
    for (int i = 1; i <= M; ++i) {
        double acc = 0.0;
        for (int j = coeffs.col_begin(i); j <= coeffs.col_end(i); ++j)
            acc += coeffs.q(i, j) * u[j - 1];
        g[i - 1] = acc;
    }
    return g;
}

std::vector<double> eval_g_right(const DirectCoefficients& coeffs, std::span<const double> u) {
    return eval_g_left(coeffs, u);  // same row-sweep; pattern is encoded in the table
}

std::pair<double, double> left_boundary_row(const StaggeredGrid& grid, double alpha) {
    check_alpha(alpha);
    const GammaFactors G(alpha);
    const double h1 = grid.widths[0], h2 = grid.widths[1];
    const double wA = (2.0 * h1 + h2) / (h1 + h2);
    const double wB = h1 / (h1 + h2);
    const double P = std::pow(grid.stag_widths[0], 2.0 - alpha) / G.g3;
    const double w11 = -std::pow(grid.stag_widths[0], 2.0 - alpha) / G.g4;
    return {wA * P + wB * w11, -wB * P - wB * w11};
}

std::pair<double, double> right_boundary_row(const StaggeredGrid& grid, double alpha) {
    check_alpha(alpha);
    const GammaFactors G(alpha);
    const int M = grid.M;
    const double hM = grid.widths[M - 1], hM1 = grid.widths[M - 2];
    const double wA = (2.0 * hM + hM1) / (hM1 + hM);
    const double wB = hM / (hM1 + hM);
    const double Q = std::pow(grid.stag_widths[M], 2.0 - alpha) / G.g3;
    const double wMM = std::pow(grid.stag_widths[M], 2.0 - alpha) / G.g4;
    return {-wB * Q + wB * wMM, wA * Q - wB * wMM};
}

}  // namespace sfbcfd
