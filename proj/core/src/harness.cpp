#include "sfbcfd/harness.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace sfbcfd {

namespace {

std::string format_real(double v) {
    char buf[48];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::scientific, 4);
    if (ec != std::errc{}) throw std::runtime_error("csv: number formatting failed");
    return std::string(buf, ptr);
}

double observed_order(double e_coarse, double e_fine, int M_coarse, int M_fine) {
    return std::log(e_coarse / e_fine) /
           std::log(static_cast<double>(M_fine) / M_coarse);
}

}  // namespace

StaggeredGrid make_grid(const ProblemSpec& problem, int M, const GridParams& gp) {
    switch (gp.kind) {
        case GridKind::Uniform:
            return build_uniform(problem.a, problem.b, M);
        case GridKind::Perturbed:
            return build_perturbed(problem.a, problem.b, M, gp.xi,
                                   gp.seed + static_cast<std::uint64_t>(M));
        case GridKind::Graded:
            return build_graded(problem.a, problem.b, M, problem.gamma, gp.kappa);
    }
    throw std::invalid_argument("harness: unknown grid kind");
}

double error_u_max(const StaggeredGrid& grid, const ProblemSpec& problem,
                   const std::vector<double>& u) {
    if (!problem.exact_u) throw std::invalid_argument("harness: problem has no exact solution");
    double worst = 0.0;
    for (int i = 0; i < grid.M; ++i)
        worst = std::max(worst, std::abs(u[i] - problem.exact_u(grid.centers[i], problem.T)));
    return worst;
}

double error_p_max(const StaggeredGrid& grid, const ProblemSpec& problem,
                   const std::vector<double>& p) {
    if (!problem.exact_p) throw std::invalid_argument("harness: problem has no exact flux");
    double worst = 0.0;
    for (int k = 1; k < grid.M; ++k)
        worst = std::max(worst, std::abs(p[k] - problem.exact_p(grid.edges[k], problem.T)));
    return worst;
}

std::vector<ConvergenceRow> run_convergence(const ProblemSpec& problem, const GridParams& gp,
                                            const std::vector<int>& Ms, int N_fixed,
                                            const SolveConfig& base) {
    std::vector<ConvergenceRow> rows;
    rows.reserve(Ms.size());
    for (int M : Ms) {
        const StaggeredGrid grid = make_grid(problem, M, gp);
        SolveConfig cfg = base;
        cfg.N = (N_fixed > 0) ? N_fixed : M;

        const MarchResult r = cn_march(grid, problem, cfg);
        if (!r.converged)
            throw std::runtime_error("harness: solver failed to converge at M = " +
                                     std::to_string(M));

        ConvergenceRow row;
        row.M = M;
        row.N = cfg.N;
        row.error_u = error_u_max(grid, problem, r.u_final);
        row.error_p = error_p_max(grid, problem, r.p_final);
        row.cpu_ms = 1e3 * r.wall_seconds;
        row.avg_iters = r.avg_iters;
        if (rows.empty()) {
            row.order_u = std::nan("");
            row.order_p = std::nan("");
        } else {
            const ConvergenceRow& prev = rows.back();
            row.order_u = observed_order(prev.error_u, row.error_u, prev.M, row.M);
            row.order_p = observed_order(prev.error_p, row.error_p, prev.M, row.M);
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<CompareRow> run_compare(const ProblemSpec& problem, const GridParams& gp,
                                    const std::vector<int>& Ms, int N, double soe_eps,
                                    int cap_dense_M) {
    std::vector<CompareRow> rows;
    rows.reserve(Ms.size());
    for (int M : Ms) {
        const StaggeredGrid grid = make_grid(problem, M, gp);

        SolveConfig fast_cfg;
        fast_cfg.method = Method::FastBiCGSTAB;
        fast_cfg.N = N;
        fast_cfg.soe_eps = soe_eps;
        const MarchResult fast = cn_march(grid, problem, fast_cfg);
        if (!fast.converged)
            throw std::runtime_error("harness: fast solver failed to converge at M = " +
                                     std::to_string(M));

        CompareRow row;
        row.M = M;
        row.fast_ms = 1e3 * fast.wall_seconds;
        if (M > cap_dense_M) {
            row.dense_skipped = true;
        } else {
            SolveConfig dense_cfg;
            dense_cfg.method = Method::DenseGE;
            dense_cfg.N = N;
            const MarchResult dense = cn_march(grid, problem, dense_cfg);
            row.dense_ms = 1e3 * dense.wall_seconds;
            for (int i = 0; i < M; ++i)
                row.max_diff_u =
                    std::max(row.max_diff_u, std::abs(fast.u_final[i] - dense.u_final[i]));
            for (int k = 0; k <= M; ++k)
                row.max_diff_p =
                    std::max(row.max_diff_p, std::abs(fast.p_final[k] - dense.p_final[k]));
        }
        rows.push_back(row);
    }
    return rows;
}

std::string emit_csv(const std::vector<ConvergenceRow>& rows) {
    std::string out = "M,N,error_u,order_u,error_p,order_p,cpu_ms,avg_iters\n";
    for (const ConvergenceRow& r : rows) {
        out += std::to_string(r.M);
        out += ',';
        out += std::to_string(r.N);
        out += ',';
        out += format_real(r.error_u);
        out += ',';
        if (!std::isnan(r.order_u)) out += format_real(r.order_u);
        out += ',';
        out += format_real(r.error_p);
        out += ',';
        if (!std::isnan(r.order_p)) out += format_real(r.order_p);
        out += ',';
        out += format_real(r.cpu_ms);
        out += ',';
        out += format_real(r.avg_iters);
        out += '\n';
    }
    return out;
}

void write_csv(const std::vector<ConvergenceRow>& rows, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("csv: cannot open for writing: " + path);
    out << emit_csv(rows);
    if (!out) throw std::runtime_error("csv: write failed: " + path);
}

}  // namespace sfbcfd
