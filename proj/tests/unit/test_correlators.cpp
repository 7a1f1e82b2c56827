#include "doctest.h"

#include <cmath>

#include "extising/entanglement.hpp"
#include "extising/oracle.hpp"

using namespace extising;

TEST_CASE("polarized limit pins the sign convention") {
    ModelParams params{8, 1, 1.5, 100.0};
    const CorrelationData data = solve_correlations(params);

    // The dense reference gives m_z -> -1 in the polarized limit; with
    // m_z = -G_ii that pins G -> +identity. Perturbative corrections
    // are O(J/h) = 1e-2 at h = 100.
    const DenseSpinSystem sys = build_spin_hamiltonian(params);
    const CorrelatorSet ref = oracle_observables(sys, 3, 6);
    CHECK(ref.mz_i == doctest::Approx(-1.0).epsilon(1e-3));

    CHECK((data.g - Eigen::MatrixXd::Identity(8, 8)).cwiseAbs().maxCoeff() < 2e-2);
    for (int i = 1; i <= 8; ++i)
        CHECK(magnetization_z(data, i) == doctest::Approx(-1.0).epsilon(1e-3));
    for (int i = 1; i <= 8; ++i)
        for (int j = i + 1; j <= 8; ++j) {
            CHECK(std::abs(correlator_xx(data, i, j)) < 2e-2);
            CHECK(std::abs(correlator_yy(data, i, j)) < 2e-2);
            CHECK(correlator_zz(data, i, j) == doctest::Approx(1.0).epsilon(1e-3));
        }
}

TEST_CASE("transverse magnetization vanishes at zero field") {
    ModelParams params{10, 1, 1.5, 0.0};
    const CorrelationData data = solve_correlations(params);
    CHECK(std::abs(magnetization_z(data, 5)) < 1e-2);
}

TEST_CASE("all correlators match the dense reference") {
    for (ModelParams params : {ModelParams{8, 1, 1.5, 2.5}, ModelParams{8, 3, 1.5, 2.5},
                               ModelParams{8, 2, 0.8, 1.5}, ModelParams{3, 2, 1.0, 1.5}}) {
        const CorrelationData data = solve_correlations(params);
        const DenseSpinSystem sys = build_spin_hamiltonian(params);
        for (int i = 1; i <= params.n; ++i)
            for (int j = i + 1; j <= params.n; ++j) {
                const CorrelatorSet ff = correlator_set(data, i, j);
                const CorrelatorSet ref = oracle_observables(sys, i, j);
                CHECK(std::abs(ff.mz_i - ref.mz_i) < 1e-8);
                CHECK(std::abs(ff.mz_j - ref.mz_j) < 1e-8);
                CHECK(std::abs(ff.cxx - ref.cxx) < 1e-8);
                CHECK(std::abs(ff.cyy - ref.cyy) < 1e-8);
                CHECK(std::abs(ff.czz - ref.czz) < 1e-8);
            }
    }
}

TEST_CASE("site bounds") {
    ModelParams params{6, 2, 1.0, 2.5};
    const CorrelationData data = solve_correlations(params);
    CHECK_THROWS_AS(magnetization_z(data, 0), DomainError);
    CHECK_THROWS_AS(magnetization_z(data, 7), DomainError);
    CHECK_THROWS_AS(correlator_xx(data, 3, 3), DomainError);
    CHECK_THROWS_AS(correlator_yy(data, 4, 2), DomainError);
    CHECK_THROWS_AS(correlator_zz(data, 1, 7), DomainError);
}

TEST_CASE("long-distance determinants underflow to zero, not NaN") {
    // nearest-neighbor, gapped: correlations decay exponentially, so a
    // 250-site determinant is far below double range
    ModelParams params{256, 1, 1.5, 2.5};
    const CorrelationData data = solve_correlations(params);
    const double far = correlator_xx(data, 1, 251);
    CHECK(std::isfinite(far));
    CHECK(std::abs(far) < 1e-12);
}
