#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "sfbcfd/frac_quadrature.hpp"

using namespace sfbcfd;

namespace {

std::vector<double> random_vector(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = dist(rng);
    return v;
}

}  // namespace

TEST_CASE("q tables reproduce constants and linears exactly") {
    // the interpolant of a (piecewise) linear function is that function, so
    // the discrete integral must hit the closed forms to roundoff
    for (unsigned seed = 1; seed <= 5; ++seed) {
        const StaggeredGrid g = build_perturbed(0.0, 2.0, 24, 0.5, seed);
        for (double alpha : {1.2, 1.5, 1.8}) {
            const DirectCoefficients L = build_left_coefficients(g, alpha);
            const DirectCoefficients R = build_right_coefficients(g, alpha);

            std::vector<double> ones(g.M, 1.0);
            std::vector<double> lin(g.M);
            for (int i = 0; i < g.M; ++i) lin[i] = g.centers[i];

            const auto gc_l = eval_g_left(L, ones);
            const auto gl_l = eval_g_left(L, lin);
            const auto gc_r = eval_g_right(R, ones);
            const auto gl_r = eval_g_right(R, lin);
            for (int i = 1; i <= g.M; ++i) {
                const double xi = g.centers[i - 1];
                CHECK(gc_l[i - 1] ==
                      doctest::Approx(oracle::left_const(xi, g.a, alpha)).epsilon(1e-12));
                CHECK(gl_l[i - 1] ==
                      doctest::Approx(oracle::left_linear(xi, g.a, alpha)).epsilon(1e-12));
                CHECK(gc_r[i - 1] ==
                      doctest::Approx(oracle::right_const(xi, g.b, alpha)).epsilon(1e-12));
                CHECK(gl_r[i - 1] ==
                      doctest::Approx(oracle::right_linear(xi, g.b, alpha)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("q tables match panel-antiderivative oracle on random data") {
    const double alpha = 1.6;
    const StaggeredGrid g = build_perturbed(0.0, 1.0, 20, 0.4, 42);
    const DirectCoefficients L = build_left_coefficients(g, alpha);
    const DirectCoefficients R = build_right_coefficients(g, alpha);
    const std::vector<double> u = random_vector(g.M, 7);

    const auto gl = eval_g_left(L, u);
    const auto gr = eval_g_right(R, u);
    const auto gl_ref = oracle::g_left(g, u, alpha);
    const auto gr_ref = oracle::g_right(g, u, alpha);
    for (int i = 0; i < g.M; ++i) {
        CHECK(gl[i] == doctest::Approx(gl_ref[i]).epsilon(1e-11));
        CHECK(gr[i] == doctest::Approx(gr_ref[i]).epsilon(1e-11));
    }
}

TEST_CASE("uniform-grid rows have the Toeplitz increment structure") {
    const double alpha = 1.7;
    const int M = 16;
    const StaggeredGrid g = build_uniform(0.0, 1.0, M);
    const double h = 1.0 / M;
    const DirectCoefficients L = build_left_coefficients(g, alpha);

    // closed-form difference coefficients on a uniform grid
    const double scale = std::pow(h, 2.0 - alpha) / std::tgamma(4.0 - alpha);
    auto toeplitz = [&](int k) {
        if (k == 1) return scale;
        if (k == 2) return scale * (std::pow(2.0, 3.0 - alpha) - 3.0);
        return scale * (std::pow(static_cast<double>(k), 3.0 - alpha) -
                        3.0 * std::pow(k - 1.0, 3.0 - alpha) +
                        3.0 * std::pow(k - 2.0, 3.0 - alpha) - std::pow(k - 3.0, 3.0 - alpha));
    };
    for (int i = 3; i <= M; ++i)
        for (int j = 3; j <= i; ++j)
            CHECK(L.q(i, j) - L.q(i - 1, j) ==
                  doctest::Approx(toeplitz(i - j + 1)).epsilon(1e-12));
}

TEST_CASE("O(1) boundary rows equal the table rows") {
    const StaggeredGrid g = build_perturbed(0.0, 2.0, 12, 0.5, 3);
    for (double alpha : {1.3, 1.9}) {
        const DirectCoefficients L = build_left_coefficients(g, alpha);
        const DirectCoefficients R = build_right_coefficients(g, alpha);
        const auto [q11, q12] = left_boundary_row(g, alpha);
        CHECK(q11 == doctest::Approx(L.q(1, 1)).epsilon(1e-14));
        CHECK(q12 == doctest::Approx(L.q(1, 2)).epsilon(1e-14));
        const auto [qa, qb] = right_boundary_row(g, alpha);
        CHECK(qa == doctest::Approx(R.q(g.M, g.M - 1)).epsilon(1e-14));
        CHECK(qb == doctest::Approx(R.q(g.M, g.M)).epsilon(1e-14));
    }
}

TEST_CASE("q accessor is zero outside the stored pattern") {
    const StaggeredGrid g = build_uniform(0.0, 1.0, 8);
    const DirectCoefficients L = build_left_coefficients(g, 1.5);
    const DirectCoefficients R = build_right_coefficients(g, 1.5);
    CHECK(L.q(3, 4) == 0.0);
    CHECK(L.q(1, 3) == 0.0);
    CHECK(L.q(0, 1) == 0.0);
    CHECK(L.q(9, 1) == 0.0);
    CHECK(R.q(4, 3) == 0.0);
    CHECK(R.q(8, 6) == 0.0);
    CHECK(L.col_begin(5) == 1);
    CHECK(L.col_end(5) == 5);
    CHECK(L.col_end(1) == 2);
    CHECK(R.col_begin(8) == 7);
    CHECK(R.col_begin(2) == 2);
    CHECK(R.col_end(2) == 8);
}
