#ifndef EXTISING_ENTANGLEMENT_HPP
#define EXTISING_ENTANGLEMENT_HPP

#include <vector>

#include <Eigen/Core>

#include "extising/correlators.hpp"

namespace extising {

enum class Measure { LogNegativity, Concurrence };

/// Two-site reduced density matrix (real symmetric 4x4 in this model,
/// basis |00>, |01>, |10>, |11> of the pair).
struct TwoSiteState {
    Eigen::Matrix4d rho;
    int i = 0;
    int j = 0;
};

/// Pairwise entanglement E_r between the anchor site and site anchor+r.
struct EntanglementProfile {
    ModelParams params;
    int anchor = 1;
    Measure measure = Measure::LogNegativity;
    std::vector<double> e; ///< e[r-1] = E_r, r = 1..n-anchor
};

struct MonogamyResult {
    double one_tangle = 0.0;   ///< squared concurrence of site 1 vs the rest
    double pairwise_sum = 0.0; ///< sum of squared pairwise concurrences
    double delta = 0.0;        ///< one_tangle - pairwise_sum, >= 0 (CKW)
};

/// Assembles rho_ij from mz_i, mz_j and the diagonal correlators.
/// Throws PositivityError if the smallest eigenvalue is below -1e-6.
TwoSiteState two_site_state(const CorrelationData& data, int i, int j);

/// log2 of the trace norm of the partial transpose (first subsystem).
double log_negativity(const Eigen::Matrix4d& rho);
inline double log_negativity(const TwoSiteState& state) { return log_negativity(state.rho); }

/// Wootters concurrence from the square roots of the eigenvalues of
/// rho rho~, rho~ = (sy x sy) rho* (sy x sy).
double concurrence(const Eigen::Matrix4d& rho);
inline double concurrence(const TwoSiteState& state) { return concurrence(state.rho); }

/// Ground-state correlation data for a model, full pipeline.
CorrelationData solve_correlations(const ModelParams& params, const CouplingTable& couplings);
CorrelationData solve_correlations(const ModelParams& params);

/// E_r for r = 1..n-anchor with the couplings of the params themselves.
EntanglementProfile entanglement_profile(const ModelParams& params, Measure measure,
                                         int anchor = 1);
/// Same with an explicit coupling table (e.g. a truncated one).
EntanglementProfile entanglement_profile(const ModelParams& params,
                                         const CouplingTable& couplings, Measure measure,
                                         int anchor = 1);

/// Monogamy score with site 1 as the node.
MonogamyResult monogamy_score(const ModelParams& params);
MonogamyResult monogamy_score(const ModelParams& params, const CouplingTable& couplings);

} // namespace extising

#endif
