// Microbenchmarks contrasting the O(M * N_exp) matrix-free operator with a
// dense O(M^2) matrix-vector product.

#include <benchmark/benchmark.h>

#include <Eigen/Dense>

#include <cmath>
#include <memory>
#include <vector>

#include "sfbcfd/dense_scheme.hpp"
#include "sfbcfd/fast_operator.hpp"
#include "sfbcfd/problems.hpp"

namespace {

void BM_FastApply(benchmark::State& state) {
    const int M = static_cast<int>(state.range(0));
    const sfbcfd::ProblemSpec prob = sfbcfd::example2(1.5, 0.5);
    const sfbcfd::StaggeredGrid grid = sfbcfd::build_uniform(prob.a, prob.b, M);
    const sfbcfd::FastOperator B(grid, prob.alpha,
                                 sfbcfd::build_soe_for_grid(grid, prob.alpha, 1e-6));
    const sfbcfd::OperatorScaling s = sfbcfd::build_scaling(grid, prob, prob.T);
    std::vector<double> v(M);
    for (int i = 0; i < M; ++i) v[i] = std::sin(0.01 * i);

    for (auto _ : state) {
        auto w = B.apply(s, prob.gamma, v);
        benchmark::DoNotOptimize(w.data());
    }
    state.counters["n_exp"] = B.soe().size();
    state.counters["table_MB"] = static_cast<double>(B.table_bytes()) / (1 << 20);
    state.SetComplexityN(M);
}
BENCHMARK(BM_FastApply)->RangeMultiplier(2)->Range(1 << 10, 1 << 16)->Complexity();

void BM_DenseMatvec(benchmark::State& state) {
    const int M = static_cast<int>(state.range(0));
    Eigen::MatrixXd A(M, M);
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < M; ++j) A(i, j) = 1.0 / (1.0 + std::abs(i - j));
    Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(M, 0.0, 1.0);
    Eigen::VectorXd y(M);

    for (auto _ : state) {
        y.noalias() = A * x;
        benchmark::DoNotOptimize(y.data());
    }
    state.SetComplexityN(M);
}
BENCHMARK(BM_DenseMatvec)->RangeMultiplier(2)->Range(1 << 10, 1 << 13)->Complexity();

void BM_DenseAssembly(benchmark::State& state) {
    const int M = static_cast<int>(state.range(0));
    const sfbcfd::ProblemSpec prob = sfbcfd::example2(1.5, 0.5);
    const sfbcfd::StaggeredGrid grid = sfbcfd::build_uniform(prob.a, prob.b, M);
    const auto L = sfbcfd::build_left_coefficients(grid, prob.alpha);
    const auto R = sfbcfd::build_right_coefficients(grid, prob.alpha);

    for (auto _ : state) {
        auto A = sfbcfd::assemble_stiffness(grid, prob, L, R, 0.5);
        benchmark::DoNotOptimize(A.A.data());
    }
    state.SetComplexityN(M);
}
BENCHMARK(BM_DenseAssembly)->RangeMultiplier(2)->Range(1 << 6, 1 << 10)->Complexity();

}  // namespace

BENCHMARK_MAIN();
