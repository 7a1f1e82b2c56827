#ifndef EXTISING_MOMENTUM_HPP
#define EXTISING_MOMENTUM_HPP

#include <utility>
#include <vector>

#include "extising/model.hpp"

namespace extising {

/// Quasiparticle dispersion sampled on a momentum grid.
struct DispersionCurve {
    std::vector<double> k;
    std::vector<double> omega;
};

/// (Re, Im) of sum_r J_r e^{ikr} for a finite coupling table.
std::pair<double, double> structure_factor(const CouplingTable& couplings, double k);

/// Same in the thermodynamic limit (infinite range, zeta normalization).
/// Throws DomainError for alpha <= 1.
std::pair<double, double> structure_factor_thermo(double alpha, double k);

/// omega_k = 2 sqrt((h/2 - Re)^2 + Im^2) pointwise on the grid.
DispersionCurve dispersion(const CouplingTable& couplings, double h,
                           const std::vector<double>& grid);
DispersionCurve dispersion_thermo(double alpha, double h, const std::vector<double>& grid);

/// Half-integer momenta k = +-(2m+1) pi / n, sorted ascending.
std::vector<double> half_integer_grid(int n);

/// d omega / dk by centered differences (one-sided at the ends).
std::vector<double> group_velocity(const DispersionCurve& curve);

/// Field at which the k = pi gap closes: 2 sum_r (-1)^r J_r.
double critical_field_pi(const CouplingTable& couplings);

/// Thermodynamic-limit closed form 2 (2^(1-alpha) - 1).
double critical_field_pi_thermo(double alpha);

/// Locates the h in [h_lo, h_hi] where omega_k(h) vanishes, by
/// golden-section minimization; throws BracketError if the minimum over
/// the bracket stays above 1e-9.
double verify_gap_closing(const CouplingTable& couplings, double k, double h_lo, double h_hi);

} // namespace extising

#endif
