#ifndef EXTISING_ORACLE_HPP
#define EXTISING_ORACLE_HPP

#include <Eigen/Core>

#include "extising/entanglement.hpp"

namespace extising {

/// Brute-force reference path: the full 2^n spin Hamiltonian, its exact
/// ground state, and observables evaluated directly on that vector.
/// Test- and validation-only; capped at n = 12 sites.
///
/// Basis convention: basis index s encodes site i (1-based) in bit
/// n - i, so site 1 is the most significant bit; bit 0 means spin up
/// (sigma_z = +1).
struct DenseSpinSystem {
    int n = 0;
    Eigen::MatrixXd hamiltonian;
    double ground_energy = 0.0;
    Eigen::VectorXd ground_state;
    double gap = 0.0; ///< E_1 - E_0
};

/// Builds and fully diagonalizes the dense spin Hamiltonian.
/// Throws SizeError for n > 12.
DenseSpinSystem build_spin_hamiltonian(const ModelParams& params);
DenseSpinSystem build_spin_hamiltonian(const ModelParams& params, const CouplingTable& couplings);

/// Magnetizations and two-point correlators evaluated directly on the
/// exact ground state. Throws DegeneracyError if the gap is below 1e-6
/// (the ground vector is then an arbitrary mix of a quasi-degenerate
/// pair and comparisons are meaningless).
CorrelatorSet oracle_observables(const DenseSpinSystem& sys, int i, int j);

struct OracleTwoSite {
    TwoSiteState state;
    double log_negativity = 0.0;
    double concurrence = 0.0;
};

/// Exact two-site reduced density matrix by partial trace, plus both
/// measures. Same gap guard as oracle_observables.
OracleTwoSite oracle_two_site_and_measures(const DenseSpinSystem& sys, int i, int j);

/// Monogamy score of site 1 evaluated on the exact ground state.
MonogamyResult oracle_monogamy(const DenseSpinSystem& sys);

/// Reduced density matrices of arbitrary n-site state vectors (test
/// hooks for injected GHZ / W / Bell vectors).
Eigen::Matrix2d partial_trace_site(const Eigen::VectorXd& state, int n, int i);
Eigen::Matrix4d partial_trace_pair(const Eigen::VectorXd& state, int n, int i, int j);

/// Monogamy score of site 1 for an arbitrary pure state; the one-tangle
/// is 4 det(rho_1), valid without any symmetry assumption.
MonogamyResult state_monogamy(const Eigen::VectorXd& state, int n);

/// Maximum absolute deviations between the free-fermion path and the
/// dense oracle over a randomized parameter sample.
struct EquivalenceReport {
    int points = 0;
    double energy = 0.0;
    double magnetization = 0.0;
    double correlator = 0.0;
    double rho = 0.0;
    double measure = 0.0;
    double monogamy = 0.0;

    double max_deviation() const;
};

/// Runs `points` randomized comparisons with n in {4,6,8,10},
/// z in [1, n-1], alpha in [0,3], h in [1.2,4.0] excluding |h-2|<0.05,
/// redrawing any point whose many-body gap is below 1e-6.
EquivalenceReport run_equivalence_suite(int points, unsigned seed);

} // namespace extising

#endif
