#include <doctest.h>

#include <cstdio>
#include <stdexcept>

#include "sfbcfd/grid.hpp"

using namespace sfbcfd;

TEST_CASE("uniform grid geometry") {
    const StaggeredGrid g = build_uniform(0.0, 2.0, 8);
    CHECK(g.M == 8);
    CHECK(g.edges.front() == 0.0);
    CHECK(g.edges.back() == 2.0);
    for (int i = 0; i < 8; ++i) {
        CHECK(g.widths[i] == doctest::Approx(0.25).epsilon(1e-14));
        CHECK(g.centers[i] == doctest::Approx(0.125 + 0.25 * i).epsilon(1e-14));
    }
    CHECK(g.stag_widths[0] == doctest::Approx(0.125));
    CHECK(g.stag_widths[8] == doctest::Approx(0.125));
    CHECK(g.stag_widths[4] == doctest::Approx(0.25));
    CHECK(g.min_interior_stag_width() == doctest::Approx(0.25));
}

TEST_CASE("perturbed grid is deterministic in the seed") {
    const StaggeredGrid g1 = build_perturbed(0.0, 1.0, 32, 0.4, 99);
    const StaggeredGrid g2 = build_perturbed(0.0, 1.0, 32, 0.4, 99);
    const StaggeredGrid g3 = build_perturbed(0.0, 1.0, 32, 0.4, 100);
    CHECK(g1.edges == g2.edges);
    CHECK(g1.edges != g3.edges);
    CHECK(g1.edges.front() == 0.0);
    CHECK(g1.edges.back() == 1.0);
    for (int i = 0; i < 32; ++i) CHECK(g1.widths[i] > 0.0);
}

TEST_CASE("graded grid with kappa = 1 is uniform") {
    const StaggeredGrid g = build_graded(0.0, 2.0, 16, 0.5, 1.0);
    const StaggeredGrid u = build_uniform(0.0, 2.0, 16);
    for (int i = 0; i <= 16; ++i)
        CHECK(g.edges[i] == doctest::Approx(u.edges[i]).epsilon(1e-14));
}

TEST_CASE("graded grid clusters near both ends") {
    const StaggeredGrid g = build_graded(0.0, 1.0, 64, 0.5, 2.0);
    CHECK(g.edges.front() == 0.0);
    CHECK(g.edges.back() == 1.0);
    CHECK(g.widths.front() < g.widths[31]);
    CHECK(g.widths.back() < g.widths[31]);
}

TEST_CASE("grid preconditions") {
    CHECK_THROWS_AS(build_uniform(1.0, 0.0, 8), std::invalid_argument);
    CHECK_THROWS_AS(build_uniform(0.0, 1.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_perturbed(0.0, 1.0, 8, 1.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_graded(0.0, 1.0, 8, 0.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(make_grid_from_edges(0.0, 1.0, {0.0, 0.5, 0.25, 1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_grid_from_edges(0.0, 1.0, {0.1, 0.5, 0.75, 1.0}),
                    std::invalid_argument);
}

TEST_CASE("grid file round-trip") {
    const StaggeredGrid g = build_perturbed(-1.0, 3.0, 17, 0.3, 7);
    const std::string path = "grid_roundtrip.txt";
    write_grid_file(g, path);
    const StaggeredGrid r = read_grid_file(path);
    REQUIRE(r.M == g.M);
    for (int i = 0; i <= g.M; ++i) CHECK(r.edges[i] == g.edges[i]);
    std::remove(path.c_str());
}
