#ifndef EXTISING_QUADRATIC_HPP
#define EXTISING_QUADRATIC_HPP

#include <Eigen/Core>

#include "extising/model.hpp"

namespace extising {

/// Quadratic-fermion representation of the open chain: a_mat is the
/// symmetric hopping-plus-field matrix (diagonal -h, off-diagonal J_r at
/// distance r), b_mat the antisymmetric pairing matrix (+J_r above the
/// diagonal, -J_r below). No wraparound entries.
struct QuadraticForm {
    Eigen::MatrixXd a_mat;
    Eigen::MatrixXd b_mat;

    int size() const { return static_cast<int>(a_mat.rows()); }
};

QuadraticForm build_quadratic_form(const ModelParams& params, const CouplingTable& couplings);

/// Convenience overload with the model's own normalized couplings.
QuadraticForm build_quadratic_form(const ModelParams& params);

} // namespace extising

#endif
