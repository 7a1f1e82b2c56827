#ifndef EXTISING_MODEL_HPP
#define EXTISING_MODEL_HPP

#include <string>
#include <vector>

#include "extising/errors.hpp"

namespace extising {

/// Parameters of a Z-neighbor extended Ising chain. The overall coupling
/// scale is pinned to 1, so the transverse field h is dimensionless.
struct ModelParams {
    int n = 256;        ///< number of sites, >= 2
    int z = 255;        ///< coordination number, 1 <= z <= n-1
    double alpha = 1.5; ///< coupling decay exponent, >= 0
    double h = 2.5;     ///< transverse field

    void validate() const;

    static ModelParams from_json_string(const std::string& text);
    std::string to_json_string() const;
};

/// Normalized coupling profile: j[r-1] = r^(-alpha) / a for r = 1..z,
/// with a chosen so the couplings sum to 1.
struct CouplingTable {
    std::vector<double> j;
    double a = 1.0;

    int z() const { return static_cast<int>(j.size()); }
};

/// Generalized harmonic number sum_{r=1..z} r^(-alpha).
double harmonic_number(int z, double alpha);

/// Riemann zeta for alpha > 1, absolute error <= 1e-12.
/// Throws DomainError for alpha <= 1 (divergent).
double riemann_zeta(double alpha);

namespace detail {
/// Zeta on the whole real line except s = 1 (Euler-Maclaurin for
/// s >= 0.5, functional equation below). Used by the momentum module.
double zeta_analytic(double s);
}

/// Couplings of a standalone z-neighbor model, normalized by
/// harmonic_number(z, alpha).
CouplingTable build_couplings(const ModelParams& params);

/// First z couplings of a longer table, keeping the original
/// normalization. This is the fully connected model with its
/// interaction tail cut off, used for mimicry comparisons.
CouplingTable truncate_couplings(const CouplingTable& full, int z);

} // namespace extising

#endif
