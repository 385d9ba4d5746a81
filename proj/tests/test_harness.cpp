#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sfbcfd/harness.hpp"
#include "sfbcfd/problems.hpp"

using namespace sfbcfd;

TEST_CASE("csv serialization is stable byte-for-byte") {
    ConvergenceRow r1;
    r1.M = 32;
    r1.N = 64;
    r1.error_u = 3.0553e-03;
    r1.order_u = std::nan("");
    r1.error_p = 2.3359e-03;
    r1.order_p = std::nan("");
    r1.cpu_ms = 12.5;
    r1.avg_iters = 4.25;
    ConvergenceRow r2 = r1;
    r2.M = 64;
    r2.error_u = 7.568e-04;
    r2.order_u = 2.0134;
    r2.error_p = 6.3144e-04;
    r2.order_p = 1.8872;

    const std::string expected =
        "M,N,error_u,order_u,error_p,order_p,cpu_ms,avg_iters\n"
        "32,64,3.0553e-03,,2.3359e-03,,1.2500e+01,4.2500e+00\n"
        "64,64,7.5680e-04,2.0134e+00,6.3144e-04,1.8872e+00,1.2500e+01,4.2500e+00\n";
    CHECK(emit_csv({r1, r2}) == expected);
    CHECK(emit_csv({r1, r2}) == emit_csv({r1, r2}));
}

TEST_CASE("error norms vanish on exact data") {
    const ProblemSpec prob = example2(1.5, 0.5);
    const StaggeredGrid g = build_uniform(prob.a, prob.b, 16);
    std::vector<double> u(g.M), p(g.M + 1);
    for (int i = 0; i < g.M; ++i) u[i] = prob.exact_u(g.centers[i], prob.T);
    for (int k = 0; k <= g.M; ++k) p[k] = prob.exact_p(g.edges[k], prob.T);
    CHECK(error_u_max(g, prob, u) == 0.0);
    CHECK(error_p_max(g, prob, p) == 0.0);
}

TEST_CASE("perturbed refinements draw a fresh grid per level") {
    const ProblemSpec prob = example1(1.8, 0.5);
    GridParams gp;
    gp.kind = GridKind::Perturbed;
    gp.xi = 1.0 / 3.0;
    gp.seed = 777;
    const StaggeredGrid g = make_grid(prob, 32, gp);
    const StaggeredGrid ref = build_perturbed(prob.a, prob.b, 32, gp.xi, 777 + 32);
    CHECK(g.edges == ref.edges);
}

TEST_CASE("convergence runner fills orders from the second row on") {
    const ProblemSpec prob = example2(1.5, 0.5);
    GridParams gp;  // uniform
    SolveConfig cfg;
    cfg.method = Method::FastBiCGSTAB;
    const auto rows = run_convergence(prob, gp, {16, 32}, 64, cfg);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].N == 64);
    CHECK(std::isnan(rows[0].order_u));
    CHECK_FALSE(std::isnan(rows[1].order_u));
    CHECK(rows[1].error_u < rows[0].error_u);
}

TEST_CASE("compare runner respects the dense cap") {
    const ProblemSpec prob = example4(1.5, 0.5);
    GridParams gp;
    const auto rows = run_compare(prob, gp, {16, 32}, 16, 1e-10, 16);
    REQUIRE(rows.size() == 2);
    CHECK_FALSE(rows[0].dense_skipped);
    CHECK(rows[0].max_diff_u <= 1e-7);
    CHECK(rows[1].dense_skipped);
}

TEST_CASE("ex3 rejects asymmetric weighting") {
    CHECK_THROWS_AS(example3(1.4, 0.4), std::invalid_argument);
    CHECK_NOTHROW(example3(1.4, 0.5));
    CHECK_THROWS_AS(problem_by_name("nope", 1.5, 0.5), std::invalid_argument);
}
