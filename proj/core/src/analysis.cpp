#include "extising/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "json.hpp"

#include "extising/momentum.hpp"

namespace extising {

namespace {

constexpr double kZeroThreshold = 1e-8;

} // namespace

int entanglement_range(const EntanglementProfile& profile) {
    const int len = static_cast<int>(profile.e.size());
    if (len == 0) throw DomainError("entanglement_range: empty profile");
    int rc = len; // no r* inside the profile: entanglement reaches the end
    for (int r = len; r >= 1; --r) {
        if (profile.e[r - 1] >= kZeroThreshold) break;
        rc = r;
    }
    return rc;
}

PowerLawFit fit_power_law(const EntanglementProfile& profile) {
    // Maximal strictly decreasing initial segment with E_r above the
    // zero threshold; this stops before any U-shape upturn.
    std::vector<std::pair<double, double>> pts; // (log r, log E_r)
    for (std::size_t idx = 0; idx < profile.e.size(); ++idx) {
        const double e = profile.e[idx];
        if (e <= kZeroThreshold) break;
        if (idx > 0 && e >= profile.e[idx - 1]) break;
        pts.emplace_back(std::log(static_cast<double>(idx + 1)), std::log(e));
    }
    if (pts.size() < 3)
        throw InsufficientDataError("fit_power_law: only " + std::to_string(pts.size()) +
                                    " usable points on the decreasing segment");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = static_cast<double>(pts.size());
    PowerLawFit fit;
    fit.exponent = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    fit.intercept = (sy - fit.exponent * sx) / m;
    fit.r_min = 1;
    fit.r_max = static_cast<int>(pts.size());
    double ss = 0;
    for (const auto& [x, y] : pts) {
        const double d = y - (fit.intercept + fit.exponent * x);
        ss += d * d;
    }
    fit.residual = std::sqrt(ss / m);
    return fit;
}

namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw DomainError("profile length mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

} // namespace

std::vector<MimicryReport> find_Zc(const ModelParams& params_base, double tolerance,
                                   Measure measure) {
    params_base.validate();
    if (params_base.z != params_base.n - 1)
        throw DomainError("find_Zc: the target must be the fully connected model (z = n-1)");

    const CouplingTable full = build_couplings(params_base);
    const EntanglementProfile target = entanglement_profile(params_base, full, measure);
    const int rc_target = entanglement_range(target);

    std::vector<MimicryReport> reports;
    const int z_cap = params_base.n / 4;
    for (int z = 1; z <= z_cap; ++z) {
        ModelParams candidate = params_base;
        candidate.z = z;
        const EntanglementProfile profile =
            entanglement_profile(candidate, truncate_couplings(full, z), measure);

        MimicryReport report;
        report.candidate_z = z;
        report.max_abs_diff = max_abs_diff(profile.e, target.e);
        report.rc_target = rc_target;
        report.rc_candidate = entanglement_range(profile);
        report.matched =
            report.max_abs_diff <= tolerance && report.rc_candidate == report.rc_target;
        reports.push_back(report);
        if (report.matched) return reports;
    }
    throw NoMatchError("find_Zc: no z <= n/4 = " + std::to_string(z_cap) +
                       " matches the fully connected profile within " +
                       std::to_string(tolerance));
}

RetunedMimicry retuned_mimicry(const ModelParams& target, int candidate_z,
                               const std::vector<double>& alpha_grid, Measure measure) {
    target.validate();
    if (candidate_z < 1 || candidate_z >= target.z)
        throw DomainError("retuned_mimicry: need 1 <= candidate_z < target.z");
    if (alpha_grid.empty()) throw DomainError("retuned_mimicry: empty alpha grid");

    const EntanglementProfile reference = entanglement_profile(target, measure);

    RetunedMimicry best;
    best.max_abs_diff = std::numeric_limits<double>::infinity();
    for (double alpha : alpha_grid) {
        ModelParams candidate = target;
        candidate.z = candidate_z;
        candidate.alpha = alpha;
        const double d = max_abs_diff(entanglement_profile(candidate, measure).e, reference.e);
        if (d < best.max_abs_diff) {
            best.max_abs_diff = d;
            best.alpha_prime = alpha;
        }
    }
    return best;
}

namespace {

template <typename T>
std::vector<T> as_list(const nlohmann::json& j, const char* key) {
    std::vector<T> out;
    if (!j.contains(key)) return out;
    const auto& v = j.at(key);
    if (v.is_array())
        for (const auto& e : v) out.push_back(e.get<T>());
    else
        out.push_back(v.get<T>());
    return out;
}

} // namespace

ScanRequest ScanRequest::from_json_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("scan grid: invalid JSON: ") + e.what());
    }
    try {
        ScanRequest req;
        req.n = as_list<int>(j, "n");
        req.z = as_list<int>(j, "z");
        req.alpha = as_list<double>(j, "alpha");
        req.h = as_list<double>(j, "h");
        if (req.n.empty() || req.alpha.empty() || req.h.empty())
            throw ConfigError("scan grid: keys n, alpha, h are required");
        req.anchor = j.value("anchor", 1);
        req.threads = j.value("threads", 1);
        if (j.contains("measure")) {
            const std::string m = j.at("measure").get<std::string>();
            if (m == "logneg")
                req.measure = Measure::LogNegativity;
            else if (m == "concurrence")
                req.measure = Measure::Concurrence;
            else
                throw ConfigError("scan grid: measure must be 'logneg' or 'concurrence'");
        }
        if (j.contains("outputs")) {
            req.with_range = req.with_fit = req.with_monogamy = req.with_dispersion = false;
            for (const auto& o : j.at("outputs")) {
                const std::string name = o.get<std::string>();
                if (name == "range")
                    req.with_range = true;
                else if (name == "fit")
                    req.with_fit = true;
                else if (name == "monogamy")
                    req.with_monogamy = true;
                else if (name == "dispersion")
                    req.with_dispersion = true;
                else
                    throw ConfigError("scan grid: unknown output '" + name + "'");
            }
        }
        return req;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("scan grid: ") + e.what());
    }
}

namespace {

void run_point(const ScanRequest& req, ScanRow& row, std::size_t n_values) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    row.values.assign(n_values, nan);
    try {
        ModelParams params{row.n, row.z, row.alpha, row.h};
        params.validate();
        const CouplingTable couplings = build_couplings(params);

        std::size_t col = 0;
        if (req.with_range || req.with_fit) {
            const EntanglementProfile profile =
                entanglement_profile(params, couplings, req.measure, req.anchor);
            if (req.with_range) row.values[col++] = entanglement_range(profile);
            if (req.with_fit) {
                const PowerLawFit fit = fit_power_law(profile);
                row.values[col++] = fit.exponent;
                row.values[col++] = fit.intercept;
                row.values[col++] = fit.r_min;
                row.values[col++] = fit.r_max;
                row.values[col++] = fit.residual;
            }
        }
        if (req.with_monogamy) {
            const MonogamyResult m = monogamy_score(params, couplings);
            row.values[col++] = m.one_tangle;
            row.values[col++] = m.pairwise_sum;
            row.values[col++] = m.delta;
        }
        if (req.with_dispersion) {
            const DispersionCurve curve =
                dispersion(couplings, params.h, half_integer_grid(params.n % 2 ? params.n + 1
                                                                               : params.n));
            row.values[col++] = *std::min_element(curve.omega.begin(), curve.omega.end());
            row.values[col++] = critical_field_pi(couplings);
        }
        row.status = "ok";
    } catch (const std::exception& e) {
        std::string msg = e.what();
        for (char& c : msg) // keep the CSV single-field without quoting rules
            if (c == ',' || c == '\n') c = ';';
        row.status = msg;
    }
}

} // namespace

ScanTable scan(const ScanRequest& request) {
    ScanTable table;
    table.columns = {"n", "z", "alpha", "h", "status"};
    if (request.with_range) table.columns.push_back("r_c");
    if (request.with_fit)
        for (const char* c : {"fit_exponent", "fit_intercept", "fit_r_min", "fit_r_max",
                              "fit_residual"})
            table.columns.push_back(c);
    if (request.with_monogamy)
        for (const char* c : {"one_tangle", "pairwise_sum", "delta"}) table.columns.push_back(c);
    if (request.with_dispersion)
        for (const char* c : {"omega_min", "h_c_pi"}) table.columns.push_back(c);
    const std::size_t n_values = table.columns.size() - 5;

    for (int n : request.n) {
        std::vector<int> zs = request.z;
        if (zs.empty()) zs.push_back(n - 1);
        for (int z : zs)
            for (double alpha : request.alpha)
                for (double h : request.h) {
                    ScanRow row;
                    row.n = n;
                    row.z = z;
                    row.alpha = alpha;
                    row.h = h;
                    table.rows.push_back(row);
                }
    }

    const int workers = std::max(1, request.threads);
    if (workers == 1 || table.rows.size() < 2) {
        for (ScanRow& row : table.rows) run_point(request, row, n_values);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const int count = std::min<std::size_t>(workers, table.rows.size());
        for (int t = 0; t < count; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < table.rows.size();
                     i = next.fetch_add(1))
                    run_point(request, table.rows[i], n_values);
            });
        for (std::thread& t : pool) t.join();
    }
    return table;
}

} // namespace extising
