#include "extising/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace extising {

namespace {

Eigen::Matrix4d pauli_zz() {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m.diagonal() << 1, -1, -1, 1;
    return m;
}

Eigen::Matrix4d pauli_xx() {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 3) = m(1, 2) = m(2, 1) = m(3, 0) = 1;
    return m;
}

Eigen::Matrix4d pauli_yy() { // (sy x sy) is real
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 3) = m(3, 0) = -1;
    m(1, 2) = m(2, 1) = 1;
    return m;
}

Eigen::Matrix4d pauli_zi() {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m.diagonal() << 1, 1, -1, -1;
    return m;
}

Eigen::Matrix4d pauli_iz() {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m.diagonal() << 1, -1, 1, -1;
    return m;
}

} // namespace

TwoSiteState two_site_state(const CorrelationData& data, int i, int j) {
    const CorrelatorSet c = correlator_set(data, i, j);
    TwoSiteState state;
    state.i = i;
    state.j = j;
    state.rho = 0.25 * (Eigen::Matrix4d::Identity() + c.mz_i * pauli_zi() + c.mz_j * pauli_iz() +
                        c.cxx * pauli_xx() + c.cyy * pauli_yy() + c.czz * pauli_zz());

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(state.rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-6)
        throw PositivityError("two_site_state: rho(" + std::to_string(i) + "," +
                              std::to_string(j) + ") has eigenvalue " +
                              std::to_string(es.eigenvalues().minCoeff()));
    return state;
}

double log_negativity(const Eigen::Matrix4d& rho) {
    // Partial transpose on the first qubit: swap the block rows.
    Eigen::Matrix4d pt = rho;
    pt.block<2, 2>(0, 2) = rho.block<2, 2>(2, 0);
    pt.block<2, 2>(2, 0) = rho.block<2, 2>(0, 2);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(pt, Eigen::EigenvaluesOnly);
    const double trace_norm = es.eigenvalues().cwiseAbs().sum();
    return std::max(0.0, std::log2(trace_norm));
}

double concurrence(const Eigen::Matrix4d& rho) {
    const Eigen::Matrix4d yy = pauli_yy();
    const Eigen::Matrix4d prod = rho * (yy * rho * yy); // rho real in this model
    Eigen::EigenSolver<Eigen::Matrix4d> es(prod, /*computeEigenvectors=*/false);
    std::array<double, 4> lam;
    for (int i = 0; i < 4; ++i) lam[i] = std::sqrt(std::max(0.0, es.eigenvalues()(i).real()));
    std::sort(lam.begin(), lam.end(), std::greater<>());
    return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

CorrelationData solve_correlations(const ModelParams& params, const CouplingTable& couplings) {
    return correlation_matrix(diagonalize(build_quadratic_form(params, couplings)));
}

CorrelationData solve_correlations(const ModelParams& params) {
    return solve_correlations(params, build_couplings(params));
}

namespace {

double evaluate(const TwoSiteState& state, Measure measure) {
    return measure == Measure::LogNegativity ? log_negativity(state) : concurrence(state);
}

} // namespace

EntanglementProfile entanglement_profile(const ModelParams& params,
                                         const CouplingTable& couplings, Measure measure,
                                         int anchor) {
    if (anchor < 1 || anchor + 1 > params.n)
        throw DomainError("entanglement_profile: anchor must satisfy 1 <= anchor <= n-1");
    const CorrelationData data = solve_correlations(params, couplings);
    EntanglementProfile profile;
    profile.params = params;
    profile.anchor = anchor;
    profile.measure = measure;
    profile.e.reserve(params.n - anchor);
    for (int r = 1; r <= params.n - anchor; ++r) {
        try {
            profile.e.push_back(evaluate(two_site_state(data, anchor, anchor + r), measure));
        } catch (const PositivityError& e) {
            throw PositivityError(std::string(e.what()) + " [r=" + std::to_string(r) +
                                  ", params=" + params.to_json_string() + "]");
        }
    }
    return profile;
}

EntanglementProfile entanglement_profile(const ModelParams& params, Measure measure, int anchor) {
    return entanglement_profile(params, build_couplings(params), measure, anchor);
}

MonogamyResult monogamy_score(const ModelParams& params, const CouplingTable& couplings) {
    if (params.n < 3) throw DomainError("monogamy_score: need n >= 3");
    const CorrelationData data = solve_correlations(params, couplings);
    MonogamyResult result;
    const double mz1 = magnetization_z(data, 1);
    result.one_tangle = 1.0 - mz1 * mz1; // 4 det(rho_1) for a pure global state
    for (int i = 2; i <= params.n; ++i) {
        const double c = concurrence(two_site_state(data, 1, i));
        result.pairwise_sum += c * c;
    }
    result.delta = result.one_tangle - result.pairwise_sum;
    return result;
}

MonogamyResult monogamy_score(const ModelParams& params) {
    return monogamy_score(params, build_couplings(params));
}

} // namespace extising
