#include "extising/model.hpp"

#include <cmath>
#include <numbers>

#include "json.hpp"

namespace extising {

void ModelParams::validate() const {
    if (n < 2) throw DomainError("n must be >= 2, got " + std::to_string(n));
    if (z < 1 || z > n - 1)
        throw DomainError("z must satisfy 1 <= z <= n-1, got z=" + std::to_string(z) +
                          " with n=" + std::to_string(n));
    if (alpha < 0.0) throw DomainError("alpha must be >= 0, got " + std::to_string(alpha));
    if (!std::isfinite(h)) throw DomainError("h must be finite");
}

ModelParams ModelParams::from_json_string(const std::string& text) {
    nlohmann::json obj;
    try {
        obj = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad JSON config: ") + e.what());
    }
    ModelParams p;
    try {
        p.n = obj.at("n").get<int>();
        p.alpha = obj.at("alpha").get<double>();
        p.h = obj.at("h").get<double>();
        p.z = obj.contains("z") ? obj.at("z").get<int>() : p.n - 1;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad JSON config: ") + e.what());
    }
    p.validate();
    return p;
}

std::string ModelParams::to_json_string() const {
    nlohmann::json obj{{"n", n}, {"z", z}, {"alpha", alpha}, {"h", h}};
    return obj.dump();
}

double harmonic_number(int z, double alpha) {
    if (z < 1) throw DomainError("harmonic_number: z must be >= 1");
    double sum = 0.0;
    // Sum smallest terms first.
    for (int r = z; r >= 1; --r) sum += std::pow(static_cast<double>(r), -alpha);
    return sum;
}

namespace detail {

double zeta_analytic(double s) {
    if (std::abs(s - 1.0) < 1e-14) throw DomainError("zeta has a pole at s = 1");
    if (s < 0.5) {
        if (std::abs(s) < 1e-300) return -0.5;
        // zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s)
        const double pi = std::numbers::pi;
        return std::pow(2.0, s) * std::pow(pi, s - 1.0) * std::sin(pi * s / 2.0) *
               std::tgamma(1.0 - s) * zeta_analytic(1.0 - s);
    }
    // Euler-Maclaurin: partial sum to M plus tail corrections.
    constexpr int M = 64;
    static constexpr double bern[] = {1.0 / 6.0,   -1.0 / 30.0,    1.0 / 42.0, -1.0 / 30.0,
                                      5.0 / 66.0,  -691.0 / 2730.0, 7.0 / 6.0,  -3617.0 / 510.0};
    double sum = 0.0;
    for (int r = M - 1; r >= 1; --r) sum += std::pow(static_cast<double>(r), -s);
    const double Ms = std::pow(static_cast<double>(M), -s);
    sum += Ms / 2.0;
    sum += Ms * M / (s - 1.0);
    double factor = s;          // rising factorial (s)(s+1)...(s+2j-2)
    double power = Ms / M;      // M^(-s-2j+1)
    double fact = 2.0;          // (2j)!
    for (int j = 1; j <= 8; ++j) {
        sum += bern[j - 1] / fact * factor * power;
        factor *= (s + 2 * j - 1) * (s + 2 * j);
        power /= static_cast<double>(M) * M;
        fact *= (2 * j + 1) * (2 * j + 2);
    }
    return sum;
}

} // namespace detail

double riemann_zeta(double alpha) {
    if (alpha <= 1.0 + 1e-9)
        throw DomainError("riemann_zeta: alpha must exceed 1, got " + std::to_string(alpha));
    return detail::zeta_analytic(alpha);
}

CouplingTable build_couplings(const ModelParams& params) {
    params.validate();
    CouplingTable table;
    table.a = harmonic_number(params.z, params.alpha);
    table.j.resize(params.z);
    for (int r = 1; r <= params.z; ++r)
        table.j[r - 1] = std::pow(static_cast<double>(r), -params.alpha) / table.a;
    return table;
}

CouplingTable truncate_couplings(const CouplingTable& full, int z) {
    if (z < 1 || z > full.z())
        throw DomainError("truncate_couplings: z must satisfy 1 <= z <= " +
                          std::to_string(full.z()));
    CouplingTable table;
    table.a = full.a;
    table.j.assign(full.j.begin(), full.j.begin() + z);
    return table;
}

} // namespace extising
