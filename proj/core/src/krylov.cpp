#include "sfbcfd/krylov.hpp"

#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "sfbcfd/dense_scheme.hpp"
#include "sfbcfd/fast_operator.hpp"
#include "sfbcfd/frac_quadrature.hpp"

namespace sfbcfd {

namespace {

using Vec = Eigen::VectorXd;

Vec to_eigen(const std::vector<double>& v) {
    return Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::vector<double> from_eigen(const Vec& v) {
    return std::vector<double>(v.data(), v.data() + v.size());
}

}  // namespace

BicgstabResult bicgstab(const std::function<std::vector<double>(const std::vector<double>&)>& op,
                        const std::vector<double>& b, const std::vector<double>& x0,
                        double rel_tol, int max_iters) {
    const int M = static_cast<int>(b.size());
    if (static_cast<int>(x0.size()) != M)
        throw std::invalid_argument("bicgstab: x0 and b must agree in length");

    BicgstabResult res;
    Vec x = to_eigen(x0);
    Vec bb = to_eigen(b);

    auto apply = [&](const Vec& v) {
        ++res.applies;
        return to_eigen(op(from_eigen(v)));
    };

    const double bnorm = bb.norm();
    if (bnorm == 0.0) {
        res.x.assign(M, 0.0);
        res.converged = true;
        return res;
    }
    const double tol = rel_tol * bnorm;

    Vec r = bb - apply(x);
    if (r.norm() <= tol) {
        res.x = from_eigen(x);
        res.converged = true;
        return res;
    }
    const Vec r0 = r;
    Vec p = r;
    double rho = r0.dot(r);

    for (int k = 0; k < max_iters; ++k) {
        ++res.iters;
        Vec v = apply(p);
        const double r0v = r0.dot(v);
        if (rho == 0.0 || r0v == 0.0) break;  // breakdown
        const double alpha = rho / r0v;
        Vec s = r - alpha * v;
        if (s.norm() <= tol) {
            x += alpha * p;
            res.x = from_eigen(x);
            res.converged = true;
            return res;
        }
        Vec t = apply(s);
        const double tt = t.squaredNorm();
        if (tt == 0.0) break;
        const double omega = t.dot(s) / tt;
        if (omega == 0.0) break;
        x += alpha * p + omega * s;
        r = s - omega * t;
        if (r.norm() <= tol) {
            res.x = from_eigen(x);
            res.converged = true;
            return res;
        }
        const double rho_next = r0.dot(r);
        const double beta = (rho_next / rho) * (alpha / omega);
        rho = rho_next;
        p = r + beta * (p - omega * v);
    }
    res.x = from_eigen(x);
    res.converged = false;
    return res;
}

MarchResult cn_march(const StaggeredGrid& grid, const ProblemSpec& problem,
                     const SolveConfig& config) {
    if (config.N < 1) throw std::invalid_argument("cn_march: require N >= 1");
    const int M = grid.M;
    const int N = config.N;
    const double tau = problem.T / N;
    const int max_iters = config.max_iters > 0 ? config.max_iters : M;

    const auto t_start = std::chrono::steady_clock::now();

    MarchResult out;
    std::vector<double> u(M);
    for (int i = 0; i < M; ++i) u[i] = problem.u0(grid.centers[i]);
    out.converged = true;

    if (config.method == Method::FastBiCGSTAB) {
        const SoeApproximation soe =
            build_soe_for_grid(grid, problem.alpha, config.soe_eps);
        const FastOperator B(grid, problem.alpha, soe);

        OperatorScaling s_prev = build_scaling(grid, problem, 0.0);
        for (int n = 1; n <= N; ++n) {
            const double t_prev = (n - 1) * tau, t_next = n * tau;
            OperatorScaling s_next = build_scaling(grid, problem, t_next);

            std::vector<double> F = cn_rhs_source(grid, problem, t_prev, t_next);
            std::vector<double> Bu = B.apply(s_prev, problem.gamma, u);
            std::vector<double> rhs(M);
            for (int i = 0; i < M; ++i) rhs[i] = u[i] + 0.5 * tau * Bu[i] + tau * F[i];

            auto op = [&](const std::vector<double>& v) {
                std::vector<double> Bv = B.apply(s_next, problem.gamma, v);
                std::vector<double> w(M);
                for (int i = 0; i < M; ++i) w[i] = v[i] - 0.5 * tau * Bv[i];
                return w;
            };
            BicgstabResult it = bicgstab(op, rhs, u, config.rel_tol, max_iters);
            out.total_iters += it.iters;
            out.total_applies += it.applies;
            if (!it.converged) {
                out.converged = false;
                break;
            }
            u = std::move(it.x);
            s_prev = std::move(s_next);
        }

        const std::vector<double> gL = B.fast_g_left(u);
        const std::vector<double> gR = B.fast_g_right(u);
        out.p_final.resize(M + 1);
        out.p_final[0] = problem.phi_a(problem.T);
        out.p_final[M] = problem.phi_b(problem.T);
        for (int k = 1; k < M; ++k) {
            const double xe = grid.edges[k];
            out.p_final[k] =
                problem.gamma * problem.KL(xe, problem.T) * (gL[k] - gL[k - 1]) /
                    grid.stag_widths[k] +
                (1.0 - problem.gamma) * problem.KR(xe, problem.T) * (gR[k] - gR[k - 1]) /
                    grid.stag_widths[k];
        }
    } else {
        const DirectCoefficients left = build_left_coefficients(grid, problem.alpha);
        const DirectCoefficients right = build_right_coefficients(grid, problem.alpha);

        Eigen::MatrixXd A_prev = assemble_stiffness(grid, problem, left, right, 0.0).A;
        for (int n = 1; n <= N; ++n) {
            const double t_prev = (n - 1) * tau, t_next = n * tau;
            Eigen::MatrixXd A_next = assemble_stiffness(grid, problem, left, right, t_next).A;
            std::vector<double> F = cn_rhs_source(grid, problem, t_prev, t_next);

            if (config.method == Method::DenseGE) {
                u = dense_cn_step(A_prev, A_next, u, F, tau);
            } else {
                Vec uu = to_eigen(u);
                Vec rhs = uu + 0.5 * tau * (A_prev * uu) + tau * to_eigen(F);
                auto op = [&](const std::vector<double>& v) {
                    Vec vv = to_eigen(v);
                    return from_eigen(Vec(vv - 0.5 * tau * (A_next * vv)));
                };
                BicgstabResult it =
                    bicgstab(op, from_eigen(rhs), u, config.rel_tol, max_iters);
                out.total_iters += it.iters;
                out.total_applies += it.applies;
                if (!it.converged) {
                    out.converged = false;
                    break;
                }
                u = std::move(it.x);
            }
            A_prev = std::move(A_next);
        }
        out.p_final = recover_flux(grid, problem, left, right, u, problem.T);
    }

    out.u_final = std::move(u);
    out.avg_iters = static_cast<double>(out.total_iters) / N;
    out.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return out;
}

}  // namespace sfbcfd
