// Command-line harness for the fractional diffusion solvers.
//
// Exit codes: 0 success, 1 bad usage or invalid parameters, 2 solver failure.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "sfbcfd/fast_operator.hpp"
#include "sfbcfd/harness.hpp"
#include "sfbcfd/problems.hpp"
#include "sfbcfd/soe.hpp"

namespace {

struct CommonOpts {
    std::string problem = "ex1";
    double alpha = 1.5;
    double gamma = 0.5;
    std::string grid = "uniform";
    double xi = 0.5;
    double kappa = 1.0;
    std::uint64_t seed = 1234;
    std::string method = "fast";
    double tol = 1e-10;
    double soe_eps = 1e-10;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--problem", o.problem, "benchmark problem")
        ->check(CLI::IsMember({"ex1", "ex2", "ex3", "ex4"}));
    cmd->add_option("--alpha", o.alpha, "fractional order in (1,2)");
    cmd->add_option("--gamma", o.gamma, "left/right weighting in [0,1]");
    cmd->add_option("--grid", o.grid, "mesh family")
        ->check(CLI::IsMember({"uniform", "perturbed", "graded"}));
    cmd->add_option("--xi", o.xi, "perturbation amplitude");
    cmd->add_option("--kappa", o.kappa, "grading exponent");
    cmd->add_option("--seed", o.seed, "perturbation seed");
    cmd->add_option("--method", o.method, "solver")
        ->check(CLI::IsMember({"fast", "dense-ge", "dense-bicgstab"}));
    cmd->add_option("--tol", o.tol, "BiCGSTAB relative tolerance");
    cmd->add_option("--soe-eps", o.soe_eps, "kernel compression accuracy");
}

sfbcfd::GridParams grid_params(const CommonOpts& o) {
    sfbcfd::GridParams gp;
    if (o.grid == "uniform") gp.kind = sfbcfd::GridKind::Uniform;
    else if (o.grid == "perturbed") gp.kind = sfbcfd::GridKind::Perturbed;
    else gp.kind = sfbcfd::GridKind::Graded;
    gp.xi = o.xi;
    gp.kappa = o.kappa;
    gp.seed = o.seed;
    return gp;
}

sfbcfd::Method method_of(const CommonOpts& o) {
    if (o.method == "fast") return sfbcfd::Method::FastBiCGSTAB;
    if (o.method == "dense-ge") return sfbcfd::Method::DenseGE;
    return sfbcfd::Method::DenseBiCGSTAB;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    std::fwrite(text.data(), 1, text.size(), f);
    std::fclose(f);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"block-centered solvers for two-sided fractional diffusion"};
    app.set_config("--config");
    app.require_subcommand(1);

    CommonOpts o;
    int M = 64;
    int N = 0;
    std::vector<int> Ms;
    std::string out_path;
    int cap_dense_M = 1 << 10;
    double dx_cut = 1e-4, X = 2.0, eps = 1e-10;
    int samples = 10000;
    int reps = 5;

    CLI::App* solve = app.add_subcommand("solve", "march one problem instance to t = T");
    add_common(solve, o);
    solve->add_option("--M", M, "number of cells")->check(CLI::PositiveNumber);
    solve->add_option("--N", N, "time steps (0 means N = M)");
    solve->add_option("--out", out_path, "CSV output path (default stdout)");

    CLI::App* conv = app.add_subcommand("convergence", "refinement study over several M");
    add_common(conv, o);
    conv->add_option("--M", Ms, "cell counts, coarse to fine")->required();
    conv->add_option("--N", N, "time steps (0 means N = M)");
    conv->add_option("--out", out_path, "CSV output path (default stdout)");

    CLI::App* comp = app.add_subcommand("compare", "fast vs dense solver on identical inputs");
    add_common(comp, o);
    comp->add_option("--M", Ms, "cell counts")->required();
    comp->add_option("--N", N, "time steps (0 means N = M)");
    comp->add_option("--cap-dense-M", cap_dense_M, "skip the dense solve above this M");

    CLI::App* soec = app.add_subcommand("soe-check", "verify the exponential-sum kernel");
    soec->add_option("--alpha", o.alpha, "fractional order in (1,2)");
    soec->add_option("--eps", eps, "target accuracy");
    soec->add_option("--dx-cut", dx_cut, "lower end of the approximation interval");
    soec->add_option("--X", X, "upper end of the approximation interval");
    soec->add_option("--samples", samples, "geometric sample count");

    CLI::App* bench = app.add_subcommand("bench", "time the matrix-free operator");
    add_common(bench, o);
    bench->add_option("--M", M, "number of cells")->check(CLI::PositiveNumber);
    bench->add_option("--reps", reps, "repetitions to average over");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            sfbcfd::ProblemSpec prob = sfbcfd::problem_by_name(o.problem, o.alpha, o.gamma);
            sfbcfd::StaggeredGrid grid = sfbcfd::make_grid(prob, M, grid_params(o));
            sfbcfd::SolveConfig cfg;
            cfg.method = method_of(o);
            cfg.N = (N > 0) ? N : M;
            cfg.rel_tol = o.tol;
            cfg.soe_eps = o.soe_eps;
            sfbcfd::MarchResult r = sfbcfd::cn_march(grid, prob, cfg);
            if (!r.converged) {
                std::cerr << "solve: iterative solver did not converge\n";
                return 2;
            }
            sfbcfd::ConvergenceRow row;
            row.M = M;
            row.N = cfg.N;
            row.error_u = sfbcfd::error_u_max(grid, prob, r.u_final);
            row.error_p = sfbcfd::error_p_max(grid, prob, r.p_final);
            row.order_u = std::nan("");
            row.order_p = std::nan("");
            row.cpu_ms = 1e3 * r.wall_seconds;
            row.avg_iters = r.avg_iters;
            write_text(out_path, sfbcfd::emit_csv({row}));
        } else if (conv->parsed()) {
            sfbcfd::ProblemSpec prob = sfbcfd::problem_by_name(o.problem, o.alpha, o.gamma);
            sfbcfd::SolveConfig cfg;
            cfg.method = method_of(o);
            cfg.rel_tol = o.tol;
            cfg.soe_eps = o.soe_eps;
            auto rows = sfbcfd::run_convergence(prob, grid_params(o), Ms, N, cfg);
            write_text(out_path, sfbcfd::emit_csv(rows));
        } else if (comp->parsed()) {
            sfbcfd::ProblemSpec prob = sfbcfd::problem_by_name(o.problem, o.alpha, o.gamma);
            const int steps = (N > 0) ? N : Ms.front();
            auto rows =
                sfbcfd::run_compare(prob, grid_params(o), Ms, steps, o.soe_eps, cap_dense_M);
            std::printf("M,max_diff_u,max_diff_p,fast_ms,dense_ms\n");
            for (const auto& r : rows) {
                if (r.dense_skipped)
                    std::printf("%d,,,%.4e,\n", r.M, r.fast_ms);
                else
                    std::printf("%d,%.4e,%.4e,%.4e,%.4e\n", r.M, r.max_diff_u, r.max_diff_p,
                                r.fast_ms, r.dense_ms);
            }
        } else if (soec->parsed()) {
            sfbcfd::SoeApproximation soe = sfbcfd::build_soe(o.alpha, eps, dx_cut, X);
            double worst = 0.0;
            for (int k = 0; k < samples; ++k) {
                const double x =
                    dx_cut * std::exp(std::log(X / dx_cut) * k / (samples - 1));
                worst = std::max(worst,
                                 std::abs(sfbcfd::eval_soe(soe, x) -
                                          std::pow(x, 1.0 - o.alpha)));
            }
            std::printf("terms=%d max_error=%.4e target=%.4e\n", soe.size(), worst, eps);
        } else if (bench->parsed()) {
            sfbcfd::ProblemSpec prob = sfbcfd::problem_by_name(o.problem, o.alpha, o.gamma);
            sfbcfd::StaggeredGrid grid = sfbcfd::make_grid(prob, M, grid_params(o));
            sfbcfd::SoeApproximation soe =
                sfbcfd::build_soe_for_grid(grid, prob.alpha, o.soe_eps);
            sfbcfd::FastOperator B(grid, prob.alpha, std::move(soe));
            std::vector<double> v(M);
            for (int i = 0; i < M; ++i) v[i] = std::sin(0.1 * i) + 1.0;
            sfbcfd::OperatorScaling s = sfbcfd::build_scaling(grid, prob, prob.T);

            volatile double sink = 0.0;
            const auto t0 = std::chrono::steady_clock::now();
            for (int r = 0; r < reps; ++r) {
                std::vector<double> w = B.apply(s, prob.gamma, v);
                sink = sink + w[M / 2];
            }
            const double ms = 1e3 *
                              std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                                  .count() /
                              reps;
            std::printf("M=%d n_exp=%d apply_ms=%.4e table_bytes=%zu\n", M, B.soe().size(), ms,
                        B.table_bytes());
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
