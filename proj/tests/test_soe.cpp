#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "sfbcfd/soe.hpp"

using namespace sfbcfd;

namespace {

double sampled_max_error(const SoeApproximation& soe, int samples) {
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double x =
            soe.dx_cut * std::exp(std::log(soe.X / soe.dx_cut) * k / (samples - 1));
        worst = std::max(worst, std::abs(eval_soe(soe, x) - std::pow(x, 1.0 - soe.alpha)));
    }
    return worst;
}

}  // namespace

TEST_CASE("kernel compression meets the requested accuracy") {
    for (double alpha : {1.2, 1.5, 1.8}) {
        for (double eps : {1e-6, 1e-10}) {
            const SoeApproximation soe = build_soe(alpha, eps, 1e-3, 2.0);
            CHECK(soe.size() > 0);
            CHECK(soe.size() <= 4096);
            CHECK(sampled_max_error(soe, 3000) <= eps);
        }
    }
}

TEST_CASE("nodes and weights are positive and finite") {
    const SoeApproximation soe = build_soe(1.5, 1e-8, 1e-4, 2.0);
    for (int s = 0; s < soe.size(); ++s) {
        CHECK(soe.lambdas[s] > 0.0);
        CHECK(soe.thetas[s] > 0.0);
        CHECK(std::isfinite(soe.lambdas[s]));
        CHECK(std::isfinite(soe.thetas[s]));
    }
}

TEST_CASE("tighter tolerance needs no fewer terms") {
    const SoeApproximation loose = build_soe(1.5, 1e-4, 1e-3, 1.0);
    const SoeApproximation tight = build_soe(1.5, 1e-10, 1e-3, 1.0);
    CHECK(tight.size() >= loose.size());
}

TEST_CASE("soe preconditions") {
    CHECK_THROWS_AS(build_soe(2.5, 1e-8, 1e-3, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(build_soe(1.5, -1e-8, 1e-3, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(build_soe(1.5, 1e-8, 2.0, 1.0), std::invalid_argument);
}
