#include "sfbcfd/dense_scheme.hpp"

#include <stdexcept>

namespace sfbcfd {

OperatorScaling build_scaling(const StaggeredGrid& grid, const ProblemSpec& problem, double t) {
    const int M = grid.M;
    OperatorScaling s;
    s.dplusL.assign(M, 0.0);
    s.dminusL.assign(M, 0.0);
    s.dplusR.assign(M, 0.0);
    s.dminusR.assign(M, 0.0);
    for (int k = 1; k < M; ++k) {
        const double xe = grid.edges[k];
        const double kl = problem.KL(xe, t);
        const double kr = problem.KR(xe, t);
        // zero is allowed (several benchmark coefficients vanish at t = 0)
        if (!(kl >= 0.0) || !(kr >= 0.0))
            throw std::invalid_argument("scheme: diffusivity must be non-negative on interior edges");
        // edge k is the upper edge of cell k-1 and the lower edge of cell k
        s.dplusL[k - 1] = kl / (grid.stag_widths[k] * grid.widths[k - 1]);
        s.dminusL[k] = kl / (grid.stag_widths[k] * grid.widths[k]);
        s.dplusR[k - 1] = kr / (grid.stag_widths[k] * grid.widths[k - 1]);
        s.dminusR[k] = kr / (grid.stag_widths[k] * grid.widths[k]);
    }
    return s;
}

DenseStiffness assemble_stiffness(const StaggeredGrid& grid, const ProblemSpec& problem,
                                  const DirectCoefficients& left,
                                  const DirectCoefficients& right, double t) {
    const int M = grid.M;
    const double gam = problem.gamma;
    const OperatorScaling s = build_scaling(grid, problem, t);

    DenseStiffness out;
    out.t = t;
    out.A = Eigen::MatrixXd::Zero(M, M);
    for (int i = 1; i <= M; ++i) {
        const int r = i - 1;
        for (int j = 1; j <= M; ++j) {
            const double dL = s.dplusL[r] * (left.q(i + 1, j) - left.q(i, j)) -
                              s.dminusL[r] * (left.q(i, j) - left.q(i - 1, j));
            const double dR = s.dplusR[r] * (right.q(i + 1, j) - right.q(i, j)) -
                              s.dminusR[r] * (right.q(i, j) - right.q(i - 1, j));
            const double v = gam * dL + (1.0 - gam) * dR;
            if (v != 0.0) out.A(r, j - 1) = v;
        }
    }
    return out;
}

std::vector<double> cn_rhs_source(const StaggeredGrid& grid, const ProblemSpec& problem,
                                  double t_prev, double t_next) {
    const int M = grid.M;
    const double t_half = 0.5 * (t_prev + t_next);
    std::vector<double> F(M);
    for (int i = 0; i < M; ++i) F[i] = problem.f(grid.centers[i], t_half);
    F[0] -= 0.5 * (problem.phi_a(t_prev) + problem.phi_a(t_next)) / grid.widths[0];
    F[M - 1] += 0.5 * (problem.phi_b(t_prev) + problem.phi_b(t_next)) / grid.widths[M - 1];
    return F;
}

std::vector<double> dense_cn_step(const Eigen::MatrixXd& A_prev, const Eigen::MatrixXd& A_next,
                                  const std::vector<double>& u_prev,
                                  const std::vector<double>& source, double tau) {
    const int M = static_cast<int>(u_prev.size());
    Eigen::Map<const Eigen::VectorXd> u(u_prev.data(), M);
    Eigen::Map<const Eigen::VectorXd> F(source.data(), M);

    Eigen::MatrixXd lhs = Eigen::MatrixXd::Identity(M, M) - 0.5 * tau * A_next;
    Eigen::VectorXd rhs = u + 0.5 * tau * (A_prev * u) + tau * F;

    Eigen::PartialPivLU<Eigen::MatrixXd> lu(lhs);
    const Eigen::MatrixXd& LU = lu.matrixLU();
    for (int k = 0; k < M; ++k)
        if (LU(k, k) == 0.0)
            throw std::runtime_error("scheme: singular Crank-Nicolson system");
    Eigen::VectorXd x = lu.solve(rhs);
    return std::vector<double>(x.data(), x.data() + M);
}

std::vector<double> recover_flux(const StaggeredGrid& grid, const ProblemSpec& problem,
                                 const DirectCoefficients& left, const DirectCoefficients& right,
                                 const std::vector<double>& u, double t) {
    const int M = grid.M;
    const std::vector<double> gL = eval_g_left(left, u);
    const std::vector<double> gR = eval_g_right(right, u);

    std::vector<double> p(M + 1);
    p[0] = problem.phi_a(t);
    p[M] = problem.phi_b(t);
    for (int k = 1; k < M; ++k) {
        const double xe = grid.edges[k];
        const double slopeL = (gL[k] - gL[k - 1]) / grid.stag_widths[k];
        const double slopeR = (gR[k] - gR[k - 1]) / grid.stag_widths[k];
        p[k] = problem.gamma * problem.KL(xe, t) * slopeL +
               (1.0 - problem.gamma) * problem.KR(xe, t) * slopeR;
    }
    return p;
}

}  // namespace sfbcfd
