#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <vector>

#include "sfbcfd/krylov.hpp"
#include "sfbcfd/problems.hpp"

using namespace sfbcfd;

namespace {

std::function<std::vector<double>(const std::vector<double>&)> matvec(const Eigen::MatrixXd& A) {
    return [&A](const std::vector<double>& v) {
        Eigen::VectorXd y = A * Eigen::Map<const Eigen::VectorXd>(v.data(), v.size());
        return std::vector<double>(y.data(), y.data() + y.size());
    };
}

Eigen::MatrixXd diagonally_dominant(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Eigen::MatrixXd A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = dist(rng);
    for (int i = 0; i < n; ++i) A(i, i) += n;
    return A;
}

}  // namespace

TEST_CASE("bicgstab solves a nonsymmetric system to the requested tolerance") {
    const int n = 40;
    const Eigen::MatrixXd A = diagonally_dominant(n, 3);
    Eigen::VectorXd xs = Eigen::VectorXd::LinSpaced(n, -1.0, 1.0);
    Eigen::VectorXd b = A * xs;

    const std::vector<double> bb(b.data(), b.data() + n);
    const std::vector<double> x0(n, 0.0);
    const BicgstabResult r = bicgstab(matvec(A), bb, x0, 1e-12, 200);
    REQUIRE(r.converged);
    CHECK(r.iters > 0);
    CHECK(r.applies >= 2 * r.iters);  // two operator products per iteration
    for (int i = 0; i < n; ++i) CHECK(r.x[i] == doctest::Approx(xs(i)).epsilon(1e-9));
}

TEST_CASE("bicgstab reports non-convergence when starved of iterations") {
    const int n = 60;
    const Eigen::MatrixXd A = diagonally_dominant(n, 9);
    std::vector<double> b(n, 1.0);
    const BicgstabResult r = bicgstab(matvec(A), b, std::vector<double>(n, 0.0), 1e-14, 1);
    CHECK_FALSE(r.converged);
}

TEST_CASE("bicgstab accepts a zero right-hand side") {
    const Eigen::MatrixXd A = diagonally_dominant(8, 1);
    const BicgstabResult r =
        bicgstab(matvec(A), std::vector<double>(8, 0.0), std::vector<double>(8, 1.0), 1e-12, 10);
    CHECK(r.converged);
    for (double v : r.x) CHECK(v == 0.0);
}

TEST_CASE("all three march methods agree on a manufactured problem") {
    const ProblemSpec prob = example2(1.5, 0.5);
    const StaggeredGrid g = build_uniform(prob.a, prob.b, 24);

    SolveConfig cfg;
    cfg.N = 16;
    cfg.method = Method::DenseGE;
    const MarchResult lu = cn_march(g, prob, cfg);
    cfg.method = Method::DenseBiCGSTAB;
    const MarchResult it = cn_march(g, prob, cfg);
    cfg.method = Method::FastBiCGSTAB;
    const MarchResult fast = cn_march(g, prob, cfg);

    REQUIRE(lu.converged);
    REQUIRE(it.converged);
    REQUIRE(fast.converged);
    CHECK(it.avg_iters > 0.0);
    CHECK(fast.total_applies > 0);
    for (int i = 0; i < g.M; ++i) {
        CHECK(it.u_final[i] == doctest::Approx(lu.u_final[i]).epsilon(1e-8));
        CHECK(fast.u_final[i] == doctest::Approx(lu.u_final[i]).epsilon(1e-7));
    }
    for (int k = 0; k <= g.M; ++k)
        CHECK(fast.p_final[k] == doctest::Approx(lu.p_final[k]).epsilon(1e-7));
}

TEST_CASE("march preconditions") {
    const ProblemSpec prob = example2(1.5, 0.5);
    const StaggeredGrid g = build_uniform(prob.a, prob.b, 8);
    SolveConfig cfg;
    cfg.N = 0;
    CHECK_THROWS_AS(cn_march(g, prob, cfg), std::invalid_argument);
}
