#ifndef EXTISING_CORRELATORS_HPP
#define EXTISING_CORRELATORS_HPP

#include <Eigen/Core>

#include "extising/bogoliubov.hpp"

namespace extising {

/// Ground-state contraction matrix g_ij = <B_i A_j> = -(psi^T phi)_ij.
/// All observables below follow from it by Wick's theorem.
struct CorrelationData {
    Eigen::MatrixXd g;

    int size() const { return static_cast<int>(g.rows()); }
};

/// Magnetizations and two-point correlators for one pair of sites
/// (1-based, i < j).
struct CorrelatorSet {
    int i = 0;
    int j = 0;
    double mz_i = 0.0;
    double mz_j = 0.0;
    double cxx = 0.0;
    double cyy = 0.0;
    double czz = 0.0;
};

CorrelationData correlation_matrix(const BogoliubovSolution& sol);

/// <sigma_z> at site i (1-based).
double magnetization_z(const CorrelationData& data, int i);

/// <sigma_x_i sigma_x_j>, an r x r determinant with r = j - i.
double correlator_xx(const CorrelationData& data, int i, int j);

/// <sigma_y_i sigma_y_j>, the companion determinant.
double correlator_yy(const CorrelationData& data, int i, int j);

/// <sigma_z_i sigma_z_j> = g_ii g_jj - g_ji g_ij.
double correlator_zz(const CorrelationData& data, int i, int j);

CorrelatorSet correlator_set(const CorrelationData& data, int i, int j);

} // namespace extising

#endif
