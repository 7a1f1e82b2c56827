#ifndef EXTISING_ANALYSIS_HPP
#define EXTISING_ANALYSIS_HPP

#include <string>
#include <vector>

#include "extising/entanglement.hpp"

namespace extising {

/// Ordinary least-squares fit of log E_r against log r.
struct PowerLawFit {
    double exponent = 0.0;  ///< fitted slope
    double intercept = 0.0; ///< fitted log-intercept
    int r_min = 0;          ///< first separation used
    int r_max = 0;          ///< last separation used
    double residual = 0.0;  ///< RMS of the log-residuals
};

/// Comparison of one finite-Z profile against the fully connected target.
struct MimicryReport {
    int candidate_z = 0;
    double max_abs_diff = 0.0;
    int rc_target = 0;
    int rc_candidate = 0;
    bool matched = false;
};

struct RetunedMimicry {
    double alpha_prime = 0.0;
    double max_abs_diff = 0.0;
};

/// Smallest r* such that E_r < 1e-8 for every r >= r*; the full profile
/// length if the last entry is still nonzero (entanglement reaches the
/// far end of the chain).
int entanglement_range(const EntanglementProfile& profile);

/// OLS on the maximal strictly decreasing initial segment with
/// E_r > 1e-8. Throws InsufficientDataError below 3 usable points.
PowerLawFit fit_power_law(const EntanglementProfile& profile);

/// Ascending search for the smallest Z whose profile matches the fully
/// connected one. Candidates are the fully connected couplings with the
/// tail cut off (shared normalization), so the comparison isolates the
/// effect of the missing long-distance terms. Requires
/// params_base.z == n-1; stops at the first match, capped at Z = n/4;
/// throws NoMatchError if nothing under the cap matches.
std::vector<MimicryReport> find_Zc(const ModelParams& params_base, double tolerance = 1e-3,
                                   Measure measure = Measure::LogNegativity);

/// Grid search over the decay exponent of a standalone candidate_z
/// model, minimizing the max-abs profile difference from the target.
RetunedMimicry retuned_mimicry(const ModelParams& target, int candidate_z,
                               const std::vector<double>& alpha_grid,
                               Measure measure = Measure::LogNegativity);

/// Grid sweep over {n, z, alpha, h}. Parsed from a JSON object whose
/// keys "n", "z", "alpha", "h" hold scalars or arrays; "z" may be
/// omitted (fully connected, z = n-1 per point). Optional keys:
/// "anchor" (default 1), "measure" ("logneg" | "concurrence"),
/// "outputs" (array drawn from "range", "fit", "monogamy",
/// "dispersion"), "threads" (default 1).
struct ScanRequest {
    std::vector<int> n;
    std::vector<int> z; ///< empty means n-1 per point
    std::vector<double> alpha;
    std::vector<double> h;
    int anchor = 1;
    Measure measure = Measure::LogNegativity;
    bool with_range = true;
    bool with_fit = false;
    bool with_monogamy = false;
    bool with_dispersion = false;
    int threads = 1;

    static ScanRequest from_json_string(const std::string& text);
};

struct ScanRow {
    int n = 0;
    int z = 0;
    double alpha = 0.0;
    double h = 0.0;
    std::string status;         ///< "ok" or the captured error message
    std::vector<double> values; ///< aligned with ScanTable::columns past the fixed ones
};

struct ScanTable {
    std::vector<std::string> columns; ///< n,z,alpha,h,status, then per-output columns
    std::vector<ScanRow> rows;        ///< lexicographic in (n, z, alpha, h)
};

/// Runs the sweep; per-point failures are recorded in the row status
/// and never abort the sweep. Row order is independent of the thread
/// count.
ScanTable scan(const ScanRequest& request);

} // namespace extising

#endif
