#include "extising/bogoliubov.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace extising {

namespace {
constexpr double kZeroClamp = 1e-12;
constexpr double kZeroMode = 1e-10;
constexpr double kResidualLimit = 1e-6;
}

BogoliubovSolution diagonalize(const QuadraticForm& qf) {
    const int n = qf.size();
    const Eigen::MatrixXd m = qf.a_mat + qf.b_mat;

    Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::MatrixXd& u = svd.matrixU();
    const Eigen::MatrixXd& v = svd.matrixV();
    const Eigen::VectorXd& sigma = svd.singularValues(); // descending

    BogoliubovSolution sol;
    sol.xi.resize(n);
    sol.phi.resize(n, n);
    sol.psi.resize(n, n);

    // Ascending mode order; phi_k from the right singular vectors,
    // psi_k from the left ones.
    for (int k = 0; k < n; ++k) {
        const int src = n - 1 - k;
        double xi = sigma(src);
        if (xi < kZeroClamp) xi = 0.0;
        sol.xi(k) = xi;
        sol.phi.row(k) = v.col(src).transpose();
        sol.psi.row(k) = u.col(src).transpose();
        if (xi < kZeroMode) {
            // Zero mode: relative sign is arbitrary; make phi_k's first
            // nonzero component positive for deterministic output.
            for (int i = 0; i < n; ++i) {
                const double c = sol.phi(k, i);
                if (std::abs(c) > 1e-12) {
                    if (c < 0.0) sol.phi.row(k) = -sol.phi.row(k);
                    break;
                }
            }
        }
    }

    const Eigen::MatrixXd mt = qf.a_mat - qf.b_mat;
    double residual = 0.0;
    for (int k = 0; k < n; ++k) {
        residual = std::max(residual,
                            (m * sol.phi.row(k).transpose() - sol.xi(k) * sol.psi.row(k).transpose())
                                .cwiseAbs()
                                .maxCoeff());
        residual = std::max(residual,
                            (mt * sol.psi.row(k).transpose() - sol.xi(k) * sol.phi.row(k).transpose())
                                .cwiseAbs()
                                .maxCoeff());
    }
    if (residual > kResidualLimit)
        throw NumericalError("bogoliubov: coupled-equation residual " + std::to_string(residual));

    return sol;
}

Eigen::VectorXd energies_from_squared_problem(const QuadraticForm& qf) {
    const Eigen::MatrixXd m = qf.a_mat + qf.b_mat;
    // (a+b)(a-b) = m m^T, symmetric positive semidefinite.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m * m.transpose());
    Eigen::VectorXd xi = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return xi; // already ascending
}

} // namespace extising
