#include "extising/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

namespace extising {

namespace {

// sigma_z eigenvalue of site i (1-based) in basis state s.
inline double z_of(std::size_t s, int n, int i) {
    return ((s >> (n - i)) & 1u) ? -1.0 : 1.0;
}

inline std::size_t flip(std::size_t s, int n, int i) { return s ^ (std::size_t{1} << (n - i)); }

void check_gap(const DenseSpinSystem& sys) {
    if (sys.gap < 1e-6)
        throw DegeneracyError("oracle: many-body gap " + std::to_string(sys.gap) +
                              " below 1e-6, ground state ill-defined for comparison");
}

void check_sites(int n, int i, int j) {
    if (i < 1 || j > n || i >= j) throw DomainError("oracle: need 1 <= i < j <= n");
}

} // namespace

DenseSpinSystem build_spin_hamiltonian(const ModelParams& params,
                                       const CouplingTable& couplings) {
    params.validate();
    if (params.n > 12)
        throw SizeError("dense oracle is capped at n = 12, got n = " + std::to_string(params.n));

    const int n = params.n;
    const std::size_t dim = std::size_t{1} << n;
    DenseSpinSystem sys;
    sys.n = n;
    sys.hamiltonian = Eigen::MatrixXd::Zero(dim, dim);

    for (std::size_t s = 0; s < dim; ++s) {
        double diag = 0.0;
        for (int i = 1; i <= n; ++i) diag += 0.5 * params.h * z_of(s, n, i);
        sys.hamiltonian(s, s) += diag;

        for (int i = 1; i <= n; ++i) {
            for (int r = 1; r <= couplings.z() && i + r <= n; ++r) {
                double string = 1.0;
                for (int m = i + 1; m < i + r; ++m) string *= z_of(s, n, m);
                const std::size_t t = flip(flip(s, n, i), n, i + r);
                sys.hamiltonian(t, s) += couplings.j[r - 1] * string;
            }
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sys.hamiltonian);
    sys.ground_energy = es.eigenvalues()(0);
    sys.ground_state = es.eigenvectors().col(0);
    sys.gap = es.eigenvalues()(1) - es.eigenvalues()(0);
    return sys;
}

DenseSpinSystem build_spin_hamiltonian(const ModelParams& params) {
    return build_spin_hamiltonian(params, build_couplings(params));
}

CorrelatorSet oracle_observables(const DenseSpinSystem& sys, int i, int j) {
    check_gap(sys);
    check_sites(sys.n, i, j);
    const Eigen::VectorXd& v = sys.ground_state;
    const std::size_t dim = v.size();

    CorrelatorSet set;
    set.i = i;
    set.j = j;
    for (std::size_t s = 0; s < dim; ++s) {
        const double p = v(s) * v(s);
        const double zi = z_of(s, sys.n, i), zj = z_of(s, sys.n, j);
        set.mz_i += p * zi;
        set.mz_j += p * zj;
        set.czz += p * zi * zj;

        const std::size_t t = flip(flip(s, sys.n, i), sys.n, j);
        const double cross = v(t) * v(s);
        set.cxx += cross;
        // sigma_y|b> = i (1-2b) |1-b>, so the two i's combine to -z_i z_j.
        set.cyy += -zi * zj * cross;
    }
    return set;
}

Eigen::Matrix2d partial_trace_site(const Eigen::VectorXd& state, int n, int i) {
    if (i < 1 || i > n) throw DomainError("partial_trace_site: site out of range");
    Eigen::Matrix2d rho = Eigen::Matrix2d::Zero();
    const std::size_t dim = state.size();
    for (std::size_t s = 0; s < dim; ++s) {
        const int a = static_cast<int>((s >> (n - i)) & 1u);
        rho(a, a) += state(s) * state(s);
        if (a == 0) rho(0, 1) += state(s) * state(flip(s, n, i));
    }
    rho(1, 0) = rho(0, 1);
    return rho;
}

Eigen::Matrix4d partial_trace_pair(const Eigen::VectorXd& state, int n, int i, int j) {
    check_sites(n, i, j);
    Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
    const std::size_t dim = state.size();
    for (std::size_t s = 0; s < dim; ++s) {
        const int a = static_cast<int>((s >> (n - i)) & 1u);
        const int b = static_cast<int>((s >> (n - j)) & 1u);
        const int row = 2 * a + b;
        for (int ap = 0; ap < 2; ++ap) {
            for (int bp = 0; bp < 2; ++bp) {
                std::size_t t = s;
                if (ap != a) t = flip(t, n, i);
                if (bp != b) t = flip(t, n, j);
                rho(row, 2 * ap + bp) += state(s) * state(t);
            }
        }
    }
    return rho;
}

OracleTwoSite oracle_two_site_and_measures(const DenseSpinSystem& sys, int i, int j) {
    check_gap(sys);
    OracleTwoSite out;
    out.state.i = i;
    out.state.j = j;
    out.state.rho = partial_trace_pair(sys.ground_state, sys.n, i, j);
    out.log_negativity = log_negativity(out.state.rho);
    out.concurrence = concurrence(out.state.rho);
    return out;
}

MonogamyResult state_monogamy(const Eigen::VectorXd& state, int n) {
    if (n < 3) throw DomainError("state_monogamy: need n >= 3");
    MonogamyResult result;
    result.one_tangle = 4.0 * partial_trace_site(state, n, 1).determinant();
    for (int i = 2; i <= n; ++i) {
        const double c = concurrence(partial_trace_pair(state, n, 1, i));
        result.pairwise_sum += c * c;
    }
    result.delta = result.one_tangle - result.pairwise_sum;
    return result;
}

MonogamyResult oracle_monogamy(const DenseSpinSystem& sys) {
    check_gap(sys);
    return state_monogamy(sys.ground_state, sys.n);
}

double EquivalenceReport::max_deviation() const {
    return std::max({energy, magnetization, correlator, rho, measure, monogamy});
}

EquivalenceReport run_equivalence_suite(int points, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick_n(0, 3);
    std::uniform_real_distribution<double> pick_alpha(0.0, 3.0);
    std::uniform_real_distribution<double> pick_h(1.2, 4.0);
    const int sizes[4] = {4, 6, 8, 10};

    EquivalenceReport rep;
    while (rep.points < points) {
        ModelParams params;
        params.n = sizes[pick_n(rng)];
        params.z = std::uniform_int_distribution<int>(1, params.n - 1)(rng);
        params.alpha = pick_alpha(rng);
        do {
            params.h = pick_h(rng);
        } while (std::abs(params.h - 2.0) < 0.05);

        const DenseSpinSystem sys = build_spin_hamiltonian(params);
        if (sys.gap < 1e-6) continue; // quasi-degenerate, redraw

        const CorrelationData data = solve_correlations(params);
        const BogoliubovSolution sol = diagonalize(build_quadratic_form(params));
        rep.energy = std::max(rep.energy, std::abs(sol.ground_energy() - sys.ground_energy));

        for (int i = 1; i <= params.n; ++i)
            for (int j = i + 1; j <= params.n; ++j) {
                const CorrelatorSet exact = oracle_observables(sys, i, j);
                const CorrelatorSet ff = correlator_set(data, i, j);
                rep.magnetization = std::max({rep.magnetization, std::abs(ff.mz_i - exact.mz_i),
                                              std::abs(ff.mz_j - exact.mz_j)});
                rep.correlator = std::max({rep.correlator, std::abs(ff.cxx - exact.cxx),
                                           std::abs(ff.cyy - exact.cyy),
                                           std::abs(ff.czz - exact.czz)});

                const OracleTwoSite ref = oracle_two_site_and_measures(sys, i, j);
                const TwoSiteState state = two_site_state(data, i, j);
                rep.rho = std::max(rep.rho,
                                   (state.rho - ref.state.rho).cwiseAbs().maxCoeff());
                rep.measure = std::max({rep.measure,
                                        std::abs(log_negativity(state) - ref.log_negativity),
                                        std::abs(concurrence(state) - ref.concurrence)});
            }

        const MonogamyResult ff_delta = monogamy_score(params);
        const MonogamyResult exact_delta = oracle_monogamy(sys);
        rep.monogamy = std::max(rep.monogamy, std::abs(ff_delta.delta - exact_delta.delta));

        ++rep.points;
    }
    return rep;
}

} // namespace extising
