#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "schatten/matrix_io.hpp"
#include "schatten/scenarios.hpp"

namespace {

using schatten::CompactSet;
using schatten::Matrix;
using schatten::ScenarioParams;
using schatten::ScenarioReport;

constexpr int kExitPass = 0;
constexpr int kExitScenarioFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Options {
    std::string a_path, b_path, c_path, t_path;
    std::string example;
    std::string n_range;
    std::string mode = "exhaustive";
    std::string out_path;
    std::string format = "json";
    std::uint64_t seed = 42;
    int restarts = 8;
    double tol = 1e-10;
    int max_iter = 5000;
    int samples = 1000;
    int budget = 20000;
    double threshold = 1e-6;
    bool timing = false;
};

// inclusive "a..b" sweep or a single integer
std::vector<int> parse_range(const std::string& text) {
    auto fail = [&]() {
        throw CLI::ValidationError("--n", "expected N or A..B, got '" + text +
                                            "'");
    };
    std::size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            std::size_t pos = 0;
            int n = std::stoi(text, &pos);
            if (pos != text.size()) fail();
            return {n};
        }
        std::size_t lo_end = 0, hi_end = 0;
        const std::string lo_s = text.substr(0, dots);
        const std::string hi_s = text.substr(dots + 2);
        int lo = std::stoi(lo_s, &lo_end);
        int hi = std::stoi(hi_s, &hi_end);
        if (lo_end != lo_s.size() || hi_end != hi_s.size() || hi < lo) fail();
        std::vector<int> out;
        for (int n = lo; n <= hi; ++n) out.push_back(n);
        return out;
    } catch (const std::invalid_argument&) {
        fail();
    } catch (const std::out_of_range&) {
        fail();
    }
    return {};
}

ScenarioParams scenario_params(const Options& opt) {
    ScenarioParams p;
    p.seed = opt.seed;
    p.restarts = opt.restarts;
    p.tol = opt.tol;
    p.max_iter = opt.max_iter;
    p.sample_count = opt.samples;
    p.budget = opt.budget;
    p.threshold = opt.threshold;
    return p;
}

void emit(const Options& opt, const std::string& payload) {
    if (opt.out_path.empty()) {
        std::cout << payload;
        std::cout.flush();
        return;
    }
    schatten::io::write_text_file(opt.out_path, payload);
}

int finish_reports(const Options& opt, std::vector<ScenarioReport> reports) {
    std::sort(reports.begin(), reports.end(),
              [](const ScenarioReport& x, const ScenarioReport& y) {
                  return x.scenario < y.scenario;
              });
    std::ostringstream out;
    bool all_pass = true;
    for (const ScenarioReport& r : reports) {
        out << r.to_json_line(opt.timing) << '\n';
        all_pass = all_pass && r.pass;
    }
    emit(opt, out.str());
    return all_pass ? kExitPass : kExitScenarioFail;
}

std::string converge_csv(const ScenarioReport& r) {
    std::ostringstream out;
    out << "n,radius,delta\n";
    out.precision(17);
    for (const auto& row : r.extra.at("delta_table"))
        out << row[0].get<long long>() << ',' << row[1].get<double>() << ','
            << row[2].get<double>() << '\n';
    return out.str();
}

int run_vn_max(const Options& opt) {
    Matrix a = schatten::io::load_matrix(opt.a_path);
    Matrix b = schatten::io::load_matrix(opt.b_path);
    return finish_reports(
        opt, {schatten::scenario::run_von_neumann(a, b, scenario_params(opt))});
}

int run_hermitian(const Options& opt) {
    Matrix c = schatten::io::load_matrix(opt.c_path);
    Matrix t = schatten::io::load_matrix(opt.t_path);
    return finish_reports(
        opt,
        {schatten::scenario::run_hermitian_bounds(c, t, scenario_params(opt))});
}

int run_range(const Options& opt) {
    Matrix c = schatten::io::load_matrix(opt.c_path);
    Matrix t = schatten::io::load_matrix(opt.t_path);
    return finish_reports(
        opt,
        {schatten::scenario::run_range_geometry(c, t, scenario_params(opt))});
}

int run_converge(const Options& opt) {
    std::vector<int> n_list = parse_range(opt.n_range);
    ScenarioReport report;
    if (!opt.example.empty()) {
        report = schatten::scenario::run_truncation_convergence(
            opt.example, n_list, scenario_params(opt));
    } else {
        Matrix c = schatten::io::load_matrix(opt.c_path);
        Matrix t = schatten::io::load_matrix(opt.t_path);
        report = schatten::scenario::run_truncation_convergence(
            c, t, n_list, scenario_params(opt));
    }
    if (opt.format == "csv") {
        emit(opt, converge_csv(report));
        return report.pass ? kExitPass : kExitScenarioFail;
    }
    return finish_reports(opt, {report});
}

int run_hausdorff(const Options& opt) {
    CompactSet a = schatten::io::load_set(opt.a_path);
    CompactSet b = schatten::io::load_set(opt.b_path);
    std::ostringstream out;
    out.precision(17);
    out << schatten::sets::hausdorff_distance(a, b) << '\n';
    emit(opt, out.str());
    return kExitPass;
}

int run_spectrum(const Options& opt) {
    Matrix c = schatten::io::load_matrix(opt.c_path);
    Matrix t = schatten::io::load_matrix(opt.t_path);
    schatten::EigenDecomposition dc =
        schatten::spectra::eigen_decompose_normal(c);
    schatten::EigenDecomposition dt =
        schatten::spectra::eigen_decompose_normal(t);
    schatten::SpectrumMode mode = opt.mode == "sampled"
                                      ? schatten::SpectrumMode::Sampled
                                      : schatten::SpectrumMode::Exhaustive;
    schatten::CSpectrumSample sample = schatten::spectra::c_spectrum(
        dc.sequence, dt.sequence, mode, opt.budget, opt.seed);

    if (opt.format == "csv") {
        std::ostringstream out;
        out << "re,im\n";
        out.precision(17);
        for (const auto& z : sample.points)
            out << z.real() << ',' << z.imag() << '\n';
        emit(opt, out.str());
        return kExitPass;
    }
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (const auto& z : sample.points)
        points.push_back(nlohmann::ordered_json::array({z.real(), z.imag()}));
    nlohmann::ordered_json j{{"exhaustive", sample.exhaustive},
                             {"seed", opt.seed},
                             {"points", points}};
    emit(opt, j.dump() + "\n");
    return kExitPass;
}

int run_demo(const Options& opt) {
    ScenarioParams p = scenario_params(opt);
    std::vector<ScenarioReport> reports;

    auto [a, b] = schatten::scenario::builtin_example("diag-von-neumann", 2);
    reports.push_back(schatten::scenario::run_von_neumann(a, b, p));

    auto [c, t] = schatten::scenario::builtin_example("diag-hermitian", 2);
    reports.push_back(schatten::scenario::run_hermitian_bounds(c, t, p));

    std::vector<int> sweep;
    for (int n = 4; n <= 12; ++n) sweep.push_back(n);
    reports.push_back(
        schatten::scenario::run_truncation_convergence("geometric-shift", sweep, p));

    auto [rc, rt] = schatten::scenario::builtin_example("geometric-shift", 4);
    reports.push_back(schatten::scenario::run_range_geometry(rc, rt, p));

    return finish_reports(opt, reports);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "schattenlab: finite-truncation laboratory for trace inequalities "
        "and C-numerical-range geometry"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool with_optimizer) {
        cmd->add_option("--seed", opt.seed, "master seed (default 42)");
        cmd->add_option("--out", opt.out_path, "output path (default stdout)");
        cmd->add_flag("--timing", opt.timing,
                      "include wall_time_s in reports (non-reproducible)");
        if (with_optimizer) {
            cmd->add_option("--restarts", opt.restarts, "optimizer restarts");
            cmd->add_option("--tol", opt.tol, "optimizer gain tolerance");
            cmd->add_option("--max-iter", opt.max_iter,
                            "optimizer iteration cap");
        }
    };

    CLI::App* vn = app.add_subcommand(
        "vn-max", "max |tr(AUBV)| vs the singular-value closed form");
    vn->add_option("--a", opt.a_path, "matrix A (json)")->required();
    vn->add_option("--b", opt.b_path, "matrix B (json)")->required();
    add_common(vn, true);

    CLI::App* herm = app.add_subcommand(
        "hermitian", "orbit extremes of tr(CU†TU) for hermitian pairs");
    herm->add_option("--c", opt.c_path, "matrix C (json)")->required();
    herm->add_option("--t", opt.t_path, "matrix T (json)")->required();
    add_common(herm, true);

    CLI::App* range = app.add_subcommand(
        "range", "spectrum/range sandwich and star-center probe");
    range->add_option("--c", opt.c_path, "matrix C (json)")->required();
    range->add_option("--t", opt.t_path, "matrix T (json)")->required();
    range->add_option("--samples", opt.samples, "range sample count");
    add_common(range, true);

    CLI::App* conv = app.add_subcommand(
        "converge", "truncation sweep toward the limiting disc");
    conv->add_option("--example", opt.example,
                     "built-in example id (geometric-shift, ...)");
    conv->add_option("--c", opt.c_path, "matrix C (json)");
    conv->add_option("--t", opt.t_path, "matrix T (json)");
    conv->add_option("--n", opt.n_range, "truncations, N or A..B inclusive")
        ->required();
    conv->add_option("--tol", opt.threshold, "final-delta threshold");
    conv->add_option("--format", opt.format, "json | csv");
    add_common(conv, false);

    CLI::App* haus = app.add_subcommand(
        "hausdorff", "Hausdorff distance between two set files");
    haus->add_option("--a", opt.a_path, "set A (json, or csv cloud)")
        ->required();
    haus->add_option("--b", opt.b_path, "set B (json, or csv cloud)")
        ->required();
    haus->add_option("--out", opt.out_path, "output path (default stdout)");

    CLI::App* spec = app.add_subcommand(
        "spectrum", "C-spectrum pairing sums of a normal pair");
    spec->add_option("--c", opt.c_path, "matrix C (json)")->required();
    spec->add_option("--t", opt.t_path, "matrix T (json)")->required();
    spec->add_option("--mode", opt.mode, "exhaustive | sampled");
    spec->add_option("--budget", opt.budget, "sampled-mode draw count");
    spec->add_option("--format", opt.format, "json | csv");
    spec->add_option("--seed", opt.seed, "master seed (default 42)");
    spec->add_option("--out", opt.out_path, "output path (default stdout)");

    CLI::App* demo = app.add_subcommand(
        "demo", "run the built-in showcase scenarios");
    demo->add_option("--samples", opt.samples, "range sample count");
    add_common(demo, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        // CLI11 uses 0 for --help; anything else is a usage error
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (vn->parsed()) return run_vn_max(opt);
        if (herm->parsed()) return run_hermitian(opt);
        if (range->parsed()) return run_range(opt);
        if (conv->parsed()) {
            if (opt.example.empty() && (opt.c_path.empty() ||
                                        opt.t_path.empty())) {
                std::cerr << "converge: need --example or both --c and --t\n";
                return kExitUsage;
            }
            if (opt.format != "json" && opt.format != "csv") {
                std::cerr << "converge: --format must be json or csv\n";
                return kExitUsage;
            }
            return run_converge(opt);
        }
        if (haus->parsed()) return run_hausdorff(opt);
        if (spec->parsed()) {
            if (opt.mode != "exhaustive" && opt.mode != "sampled") {
                std::cerr << "spectrum: --mode must be exhaustive or sampled\n";
                return kExitUsage;
            }
            if (opt.format != "json" && opt.format != "csv") {
                std::cerr << "spectrum: --format must be json or csv\n";
                return kExitUsage;
            }
            return run_spectrum(opt);
        }
        if (demo->parsed()) return run_demo(opt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const schatten::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const schatten::Error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
