#ifndef EXTISING_BOGOLIUBOV_HPP
#define EXTISING_BOGOLIUBOV_HPP

#include <Eigen/Core>

#include "extising/quadratic.hpp"

namespace extising {

/// Quasiparticle description of the ground state. Row k of phi and psi
/// holds the transformation vectors of mode k; xi is sorted ascending
/// and clamped to zero below 1e-12.
///
/// The rows satisfy (a_mat + b_mat) phi_k^T = xi_k psi_k^T and
/// (a_mat - b_mat) psi_k^T = xi_k phi_k^T.
struct BogoliubovSolution {
    Eigen::VectorXd xi;
    Eigen::MatrixXd phi;
    Eigen::MatrixXd psi;

    int size() const { return static_cast<int>(xi.size()); }

    /// Ground-state (vacuum) energy, -1/2 sum_k xi_k.
    double ground_energy() const { return -0.5 * xi.sum(); }
};

/// Solves the coupled mode equations via an SVD of (a_mat + b_mat).
/// Throws NumericalError if the residual of the coupled equations
/// exceeds 1e-6 after sign fixing.
BogoliubovSolution diagonalize(const QuadraticForm& qf);

/// Cross-check path: quasiparticle energies from the eigenvalues of
/// (a_mat + b_mat)(a_mat - b_mat), sorted ascending. Less accurate near
/// zero modes; kept for validation only.
Eigen::VectorXd energies_from_squared_problem(const QuadraticForm& qf);

} // namespace extising

#endif
