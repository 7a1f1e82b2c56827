// Command-line front end: dispersion curves, correlators, entanglement
// profiles, monogamy scores, grid sweeps, and the brute-force
// cross-check suite.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "extising/analysis.hpp"
#include "extising/io.hpp"
#include "extising/momentum.hpp"
#include "extising/oracle.hpp"

namespace {

using namespace extising;

struct CommonOptions {
    ModelParams params;
    std::string config_path;
    std::string out_path;
    std::string format = "csv";
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Registers the shared flags on a subcommand. Flag values override the
// JSON config, which overrides the defaults.
void add_common(CLI::App* cmd, CommonOptions& opt, bool with_z = true) {
    cmd->set_help_flag("--help", "print this help message and exit"); // frees -h for the field
    cmd->add_option("--config", opt.config_path,
                    "JSON config file with keys n, z, alpha, h (missing z means n-1)");
    cmd->add_option("--n", opt.params.n, "number of sites")->capture_default_str();
    if (with_z) cmd->add_option("--z", opt.params.z, "coordination number (default n-1)");
    cmd->add_option("--alpha", opt.params.alpha, "coupling decay exponent")
        ->capture_default_str();
    cmd->add_option("--h", opt.params.h, "transverse field")->capture_default_str();
    cmd->add_option("--out", opt.out_path, "output path (default: stdout)");
    cmd->add_option("--format", opt.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

ModelParams resolve_params(const CLI::App* cmd, const CommonOptions& opt) {
    ModelParams p = opt.params;
    if (!opt.config_path.empty()) {
        p = ModelParams::from_json_string(read_file(opt.config_path));
        // explicit flags win over the config file
        if (cmd->count("--n")) p.n = opt.params.n;
        if (cmd->get_option_no_throw("--z") && cmd->count("--z")) p.z = opt.params.z;
        if (cmd->count("--alpha")) p.alpha = opt.params.alpha;
        if (cmd->count("--h")) p.h = opt.params.h;
    }
    if (!cmd->count("--z") && opt.config_path.empty()) p.z = p.n - 1;
    p.validate();
    return p;
}

void emit(const CommonOptions& opt, const Table& table,
          std::chrono::steady_clock::time_point start) {
    const std::string text = render(table, parse_format(opt.format));
    if (opt.out_path.empty())
        std::cout << text;
    else
        write_text_atomic(opt.out_path, text);
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    std::cerr << table.rows.size() << " rows written in " << elapsed.count() << " s\n";
}

Measure parse_measure(const std::string& name) {
    if (name == "logneg") return Measure::LogNegativity;
    if (name == "concurrence") return Measure::Concurrence;
    throw ConfigError("unknown measure '" + name + "'");
}

void dump_quadratic(const std::string& path, const QuadraticForm& qf) {
    Table table;
    table.columns = {"matrix", "row"};
    for (int c = 0; c < qf.size(); ++c) table.columns.push_back("c" + std::to_string(c));
    for (const char* name : {"A", "B"}) {
        const Eigen::MatrixXd& m = name[0] == 'A' ? qf.a_mat : qf.b_mat;
        for (int r = 0; r < qf.size(); ++r) {
            std::vector<std::string> cells{name, std::to_string(r)};
            for (int c = 0; c < qf.size(); ++c) cells.push_back(format_double(m(r, c)));
            table.rows.push_back(std::move(cells));
        }
    }
    write_text_atomic(path, render_csv(table));
}

int run(int argc, char** argv) {
    CLI::App app{"Long-range extended Ising chain: free-fermion ground-state solver, "
                 "two-site entanglement, and finite-range mimicry analysis"};
    app.require_subcommand(1);

    // dispersion
    CommonOptions disp_opt;
    bool thermodynamic = false;
    auto* disp = app.add_subcommand("dispersion", "quasiparticle dispersion on the "
                                                  "half-integer momentum grid");
    add_common(disp, disp_opt);
    disp->add_flag("--thermodynamic", thermodynamic,
                   "infinite-range thermodynamic limit (requires alpha > 1)");

    // correlators
    CommonOptions corr_opt;
    int corr_anchor = 1;
    std::string quad_path;
    auto* corr = app.add_subcommand("correlators",
                                    "magnetizations and two-point correlators from the anchor");
    add_common(corr, corr_opt);
    corr->add_option("--anchor", corr_anchor, "anchor site (1-based)")->capture_default_str();
    corr->add_option("--dump-quadratic", quad_path,
                     "also write the quadratic-form matrices A and B as CSV to this path");

    // profile
    CommonOptions prof_opt;
    int prof_anchor = 1;
    std::string prof_measure = "logneg";
    auto* prof = app.add_subcommand("profile", "two-site entanglement profile E_r");
    add_common(prof, prof_opt);
    prof->add_option("--anchor", prof_anchor, "anchor site (1-based)")->capture_default_str();
    prof->add_option("--measure", prof_measure, "logneg or concurrence")
        ->check(CLI::IsMember({"logneg", "concurrence"}))
        ->capture_default_str();

    // monogamy
    CommonOptions mono_opt;
    auto* mono = app.add_subcommand("monogamy", "monogamy score of site 1");
    add_common(mono, mono_opt);

    // scan
    std::string grid_path, scan_out, scan_format = "csv";
    int scan_threads = 0;
    auto* scan_cmd = app.add_subcommand("scan", "grid sweep driven by a JSON grid spec");
    scan_cmd->add_option("--grid", grid_path, "JSON grid spec file")->required();
    scan_cmd->add_option("--threads", scan_threads, "worker threads (overrides the grid spec)");
    scan_cmd->add_option("--out", scan_out, "output path (default: stdout)");
    scan_cmd->add_option("--format", scan_format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    // oracle-check
    unsigned seed = 1;
    int points = 50;
    double check_tolerance = 1e-8;
    auto* check = app.add_subcommand("oracle-check",
                                     "randomized equivalence suite against exact "
                                     "diagonalization at small n");
    check->add_option("--seed", seed, "RNG seed")->capture_default_str();
    check->add_option("--points", points, "number of random parameter points")
        ->capture_default_str();
    check->add_option("--tolerance", check_tolerance, "pass threshold on the max deviation")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);
    const auto start = std::chrono::steady_clock::now();

    if (disp->parsed()) {
        const ModelParams p = resolve_params(disp, disp_opt);
        const DispersionCurve curve =
            thermodynamic ? dispersion_thermo(p.alpha, p.h, half_integer_grid(p.n))
                          : dispersion(build_couplings(p), p.h, half_integer_grid(p.n));
        const std::vector<double> vg = group_velocity(curve);
        Table table;
        table.columns = {"k", "omega", "v_g"};
        for (std::size_t i = 0; i < curve.k.size(); ++i)
            table.rows.push_back(
                {format_double(curve.k[i]), format_double(curve.omega[i]), format_double(vg[i])});
        emit(disp_opt, table, start);
    } else if (corr->parsed()) {
        const ModelParams p = resolve_params(corr, corr_opt);
        if (!quad_path.empty()) dump_quadratic(quad_path, build_quadratic_form(p));
        const CorrelationData data = solve_correlations(p);
        Table table;
        table.columns = {"i", "j", "mz_i", "mz_j", "cxx", "cyy", "czz"};
        for (int j = corr_anchor + 1; j <= p.n; ++j) {
            const CorrelatorSet set = correlator_set(data, corr_anchor, j);
            table.rows.push_back({std::to_string(set.i), std::to_string(set.j),
                                  format_double(set.mz_i), format_double(set.mz_j),
                                  format_double(set.cxx), format_double(set.cyy),
                                  format_double(set.czz)});
        }
        emit(corr_opt, table, start);
    } else if (prof->parsed()) {
        const ModelParams p = resolve_params(prof, prof_opt);
        const EntanglementProfile profile =
            entanglement_profile(p, parse_measure(prof_measure), prof_anchor);
        Table table;
        table.columns = {"r", "E_r"};
        for (std::size_t r = 1; r <= profile.e.size(); ++r)
            table.rows.push_back({std::to_string(r), format_double(profile.e[r - 1])});
        emit(prof_opt, table, start);
    } else if (mono->parsed()) {
        const ModelParams p = resolve_params(mono, mono_opt);
        const MonogamyResult m = monogamy_score(p);
        Table table;
        table.columns = {"one_tangle", "pairwise_sum", "delta"};
        table.rows.push_back({format_double(m.one_tangle), format_double(m.pairwise_sum),
                              format_double(m.delta)});
        emit(mono_opt, table, start);
    } else if (scan_cmd->parsed()) {
        ScanRequest request = ScanRequest::from_json_string(read_file(grid_path));
        if (scan_threads > 0) request.threads = scan_threads;
        const ScanTable result = scan(request);
        CommonOptions opt;
        opt.out_path = scan_out;
        opt.format = scan_format;
        emit(opt, to_table(result), start);
    } else if (check->parsed()) {
        const EquivalenceReport rep = run_equivalence_suite(points, seed);
        std::cout << "points: " << rep.points << "\n"
                  << "max |dE0|:      " << format_double(rep.energy) << "\n"
                  << "max |d m_z|:    " << format_double(rep.magnetization) << "\n"
                  << "max |d C^aa|:   " << format_double(rep.correlator) << "\n"
                  << "max |d rho|:    " << format_double(rep.rho) << "\n"
                  << "max |d E, C|:   " << format_double(rep.measure) << "\n"
                  << "max |d delta|:  " << format_double(rep.monogamy) << "\n"
                  << "max deviation:  " << format_double(rep.max_deviation()) << "\n";
        if (rep.max_deviation() >= check_tolerance) {
            std::cerr << "FAIL: deviation exceeds " << format_double(check_tolerance) << "\n";
            return 1;
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
