#include "extising/momentum.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace extising {

std::pair<double, double> structure_factor(const CouplingTable& couplings, double k) {
    double re = 0.0, im = 0.0;
    for (int r = couplings.z(); r >= 1; --r) {
        re += couplings.j[r - 1] * std::cos(k * r);
        im += couplings.j[r - 1] * std::sin(k * r);
    }
    return {re, im};
}

namespace {

// Li_s(e^{ik}) for 0 < k < 2*pi via the Hurwitz-type expansion
//   Gamma(1-s) (-ik)^(s-1) + sum_n zeta(s-n) (ik)^n / n!.
// The expansion has removable singularities at integer s; those are
// sidestepped by a tiny shift, well below plotting accuracy.
std::complex<double> polylog_unit_circle(double s, double k) {
    if (std::abs(s - std::round(s)) < 1e-8) s += 1e-8;
    const double pi = std::numbers::pi;
    const std::complex<double> branch =
        std::tgamma(1.0 - s) * std::pow(k, s - 1.0) *
        std::exp(std::complex<double>(0.0, -pi * (s - 1.0) / 2.0));
    std::complex<double> acc = branch;
    std::complex<double> pw(1.0, 0.0); // (ik)^n / n!
    const std::complex<double> ik(0.0, k);
    for (int n = 0; n < 120; ++n) {
        const std::complex<double> term = detail::zeta_analytic(s - n) * pw;
        acc += term;
        if (n > 8 && std::abs(term) < 1e-16 * std::abs(acc)) break;
        pw *= ik / static_cast<double>(n + 1);
    }
    return acc;
}

} // namespace

std::pair<double, double> structure_factor_thermo(double alpha, double k) {
    if (alpha <= 1.0 + 1e-9)
        throw DomainError("thermodynamic limit requires alpha > 1, got " + std::to_string(alpha));
    if (k == 0.0) return {1.0, 0.0};
    const double sign = k < 0.0 ? -1.0 : 1.0;
    const std::complex<double> li = polylog_unit_circle(alpha, std::abs(k));
    const double norm = riemann_zeta(alpha);
    return {li.real() / norm, sign * li.imag() / norm};
}

namespace {

double omega_from(double h, std::pair<double, double> jk) {
    const double d = h / 2.0 - jk.first;
    return 2.0 * std::sqrt(d * d + jk.second * jk.second);
}

DispersionCurve sample(const std::vector<double>& grid,
                       const std::function<std::pair<double, double>(double)>& jk, double h) {
    DispersionCurve curve;
    curve.k = grid;
    curve.omega.reserve(grid.size());
    for (double k : grid) curve.omega.push_back(omega_from(h, jk(k)));
    return curve;
}

} // namespace

DispersionCurve dispersion(const CouplingTable& couplings, double h,
                           const std::vector<double>& grid) {
    return sample(grid, [&](double k) { return structure_factor(couplings, k); }, h);
}

DispersionCurve dispersion_thermo(double alpha, double h, const std::vector<double>& grid) {
    return sample(grid, [&](double k) { return structure_factor_thermo(alpha, k); }, h);
}

std::vector<double> half_integer_grid(int n) {
    if (n < 2 || n % 2 != 0) throw DomainError("half-integer grid requires even n >= 2");
    std::vector<double> ks;
    ks.reserve(n);
    const double step = 2.0 * std::numbers::pi / n;
    for (int m = n / 2 - 1; m >= 0; --m) ks.push_back(-(m + 0.5) * step);
    for (int m = 0; m < n / 2; ++m) ks.push_back((m + 0.5) * step);
    return ks;
}

std::vector<double> group_velocity(const DispersionCurve& curve) {
    const auto& k = curve.k;
    const auto& w = curve.omega;
    const std::size_t n = k.size();
    if (n < 3) throw DomainError("group_velocity: need at least 3 grid points");
    std::vector<double> vg(n);
    vg[0] = (w[1] - w[0]) / (k[1] - k[0]);
    vg[n - 1] = (w[n - 1] - w[n - 2]) / (k[n - 1] - k[n - 2]);
    for (std::size_t i = 1; i + 1 < n; ++i) vg[i] = (w[i + 1] - w[i - 1]) / (k[i + 1] - k[i - 1]);
    return vg;
}

double critical_field_pi(const CouplingTable& couplings) {
    double acc = 0.0;
    for (int r = couplings.z(); r >= 1; --r)
        acc += (r % 2 == 0 ? 1.0 : -1.0) * couplings.j[r - 1];
    return 2.0 * acc;
}

double critical_field_pi_thermo(double alpha) {
    return 2.0 * (std::pow(2.0, 1.0 - alpha) - 1.0);
}

double verify_gap_closing(const CouplingTable& couplings, double k, double h_lo, double h_hi) {
    if (!(h_lo < h_hi)) throw BracketError("verify_gap_closing: empty bracket");
    const auto jk = structure_factor(couplings, k);
    const auto f = [&](double h) { return omega_from(h, jk); };

    // Golden-section: omega_k(h) is V-shaped in h, so the minimizer is
    // the gap-closing point whenever the gap actually closes.
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = h_lo, b = h_hi;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > 1e-10) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - gr * (b - a); fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + gr * (b - a); fd = f(d);
        }
    }
    const double h_star = 0.5 * (a + b);
    if (f(h_star) > 1e-9)
        throw BracketError("omega_k(h) does not vanish on the bracket (min " +
                           std::to_string(f(h_star)) + ")");
    return h_star;
}

} // namespace extising
