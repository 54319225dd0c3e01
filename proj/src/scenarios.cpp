#include "schatten/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

namespace schatten {

namespace {

using nlohmann::ordered_json;

class Stopwatch {
  public:
    double seconds() const {
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ =
        std::chrono::steady_clock::now();
};

std::uint64_t matrix_hash(const Matrix& a) {
    return util::fnv1a(a.data(),
                       static_cast<std::size_t>(a.size()) * sizeof(Complex));
}

ordered_json pair_digest(const Matrix& c, const Matrix& t,
                         const ScenarioParams& params) {
    return ordered_json{{"c_rows", c.rows()},
                        {"c_cols", c.cols()},
                        {"t_rows", t.rows()},
                        {"t_cols", t.cols()},
                        {"c_hash", util::hex64(matrix_hash(c))},
                        {"t_hash", util::hex64(matrix_hash(t))},
                        {"seed", params.seed}};
}

// gap relative to max(1, |claimed|): relative for large magnitudes,
// absolute below 1, and well-defined at claimed = 0
double hybrid_gap(double claimed, double abs_gap) {
    return abs_gap / std::max(1.0, std::abs(claimed));
}

}  // namespace

ordered_json ScenarioReport::to_json(bool include_timing) const {
    ordered_json j{{"scenario", scenario},  {"digest", digest},
                   {"claimed", claimed},    {"achieved", achieved},
                   {"abs_gap", abs_gap},    {"rel_gap", rel_gap},
                   {"tolerance", tolerance}, {"pass", pass},
                   {"extra", extra}};
    if (include_timing) j["wall_time_s"] = wall_time_s;
    return j;
}

std::string ScenarioReport::to_json_line(bool include_timing) const {
    return to_json(include_timing).dump();
}

namespace scenario {

ScenarioReport run_von_neumann(const Matrix& a, const Matrix& b,
                               const ScenarioParams& params) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw ShapeMismatch(
            "run_von_neumann: need square matrices of equal dimension");
    Stopwatch clock;
    ScenarioReport report;
    report.scenario = "von-neumann-max";
    report.digest = pair_digest(a, b, params);

    report.claimed = range::s_range_radius(a, b);
    OrbitResult best = orbit::alternating_bilinear_max(a, b, params.orbit());
    report.achieved = best.objective;
    report.abs_gap = std::abs(report.claimed - report.achieved);
    report.rel_gap = hybrid_gap(report.claimed, report.abs_gap);
    report.tolerance = params.rel_tol;
    report.pass = report.rel_gap <= params.rel_tol;
    report.extra = ordered_json{{"iterations", best.iterations},
                                {"restarts_used", best.restarts_used}};
    report.wall_time_s = clock.seconds();
    return report;
}

ScenarioReport run_hermitian_bounds(const Matrix& c, const Matrix& t,
                                    const ScenarioParams& params) {
    Stopwatch clock;
    ScenarioReport report;
    report.scenario = "hermitian-bounds";
    report.digest = pair_digest(c, t, params);

    HermitianExtremes claimed = spectra::hermitian_orbit_extremes(c, t);
    const int n = static_cast<int>(c.rows());
    // ascend in doubled dimension: the formulas are suprema over all
    // truncations and need the zero padding whenever the eigenvalue sign
    // patterns of c and t differ
    Matrix c2 = core::zero_pad(c, 2 * n, 2 * n);
    Matrix t2 = core::zero_pad(t, 2 * n, 2 * n);
    OrbitResult up = orbit::similarity_orbit_ascent(c2, t2, 0.0,
                                                    params.orbit());
    OrbitResult down = orbit::similarity_orbit_ascent(c2, t2, M_PI,
                                                      params.orbit());
    double achieved_max = up.objective;
    double achieved_min = -down.objective;

    double trace_ct = core::trace(c * t).real();
    bool trace_inside = claimed.min - params.slack_algebraic <= trace_ct &&
                        trace_ct <= claimed.max + params.slack_algebraic;

    double gap_max = std::abs(claimed.max - achieved_max);
    double gap_min = std::abs(claimed.min - achieved_min);
    report.claimed = claimed.max;
    report.achieved = achieved_max;
    report.abs_gap = std::max(gap_max, gap_min);
    report.rel_gap = hybrid_gap(claimed.max, report.abs_gap);
    report.tolerance = params.abs_tol;
    report.pass = report.abs_gap <= params.abs_tol && trace_inside;
    report.extra = ordered_json{{"claimed_min", claimed.min},
                                {"claimed_max", claimed.max},
                                {"achieved_min", achieved_min},
                                {"achieved_max", achieved_max},
                                {"trace_ct", trace_ct},
                                {"trace_inside", trace_inside}};
    report.wall_time_s = clock.seconds();
    return report;
}

namespace {

ScenarioReport convergence_core(const std::string& label,
                                const ordered_json& digest,
                                const std::vector<int>& n_list,
                                const std::function<double(int)>& radius_at,
                                double limit_radius,
                                const ScenarioParams& params) {
    if (n_list.size() < 2)
        throw EmptySequence(
            "run_truncation_convergence: need at least 2 truncations");
    for (std::size_t i = 1; i < n_list.size(); ++i)
        if (n_list[i] < n_list[i - 1])
            throw std::invalid_argument(
                "run_truncation_convergence: n_list must be non-decreasing");

    ScenarioReport report;
    report.scenario = label;
    report.digest = digest;

    std::vector<CompactSet> truncated;
    std::vector<double> radii;
    truncated.reserve(n_list.size());
    for (int n : n_list) {
        radii.push_back(radius_at(n));
        truncated.push_back(CompactSet::disc(radii.back()));
    }
    CompactSet limit = CompactSet::disc(limit_radius);
    HarnessReport harness =
        sets::convergence_harness(truncated, limit, params.threshold);

    ordered_json table = ordered_json::array();
    for (std::size_t i = 0; i < n_list.size(); ++i)
        table.push_back(ordered_json::array(
            {n_list[i], radii[i], harness.deltas[i]}));

    report.claimed = limit_radius;
    report.achieved = radii.back();
    report.abs_gap = harness.deltas.back();
    report.rel_gap = hybrid_gap(limit_radius, report.abs_gap);
    report.tolerance = params.threshold;
    report.pass = harness.verdict;
    report.extra = ordered_json{{"delta_table", table},
                                {"threshold", harness.threshold}};
    return report;
}

}  // namespace

ScenarioReport run_truncation_convergence(const std::string& example_id,
                                          const std::vector<int>& n_list,
                                          const ScenarioParams& params) {
    Stopwatch clock;
    ordered_json digest{{"example", example_id}, {"seed", params.seed}};
    auto radius_at = [&](int n) {
        auto [c, t] = builtin_example(example_id, n);
        return range::s_range_radius(c, t);
    };
    ScenarioReport report = convergence_core(
        "truncation-convergence", digest, n_list, radius_at,
        builtin_limit_radius(example_id), params);
    report.wall_time_s = clock.seconds();
    return report;
}

ScenarioReport run_truncation_convergence(const Matrix& c, const Matrix& t,
                                          const std::vector<int>& n_list,
                                          const ScenarioParams& params) {
    if (c.rows() != c.cols() || t.rows() != t.cols() || c.rows() != t.rows())
        throw ShapeMismatch(
            "run_truncation_convergence: need square matrices of equal "
            "dimension");
    Stopwatch clock;
    for (int n : n_list)
        if (n < 1 || n > c.rows())
            throw ShapeMismatch(
                "run_truncation_convergence: truncation size out of range");
    auto radius_at = [&](int n) {
        // leading block = cut-out against the standard basis
        return range::s_range_radius(c.topLeftCorner(n, n),
                                     t.topLeftCorner(n, n));
    };
    ScenarioReport report = convergence_core(
        "truncation-convergence", pair_digest(c, t, params), n_list,
        radius_at, range::s_range_radius(c, t), params);
    report.wall_time_s = clock.seconds();
    return report;
}

ScenarioReport run_range_geometry(const Matrix& c, const Matrix& t,
                                  const ScenarioParams& params) {
    if (c.rows() != c.cols() || t.rows() != t.cols() || c.rows() != t.rows())
        throw ShapeMismatch(
            "run_range_geometry: need square matrices of equal dimension");
    Stopwatch clock;
    ScenarioReport report;
    report.scenario = "range-geometry";
    report.digest = pair_digest(c, t, params);

    const int n = static_cast<int>(c.rows());
    EigenDecomposition dc = spectra::eigen_decompose_normal(c);
    EigenDecomposition dt = spectra::eigen_decompose_normal(t);
    CSpectrumSample spectrum = spectra::c_spectrum(
        dc.sequence, dt.sequence, SpectrumMode::Exhaustive);

    std::uint64_t range_seed = util::split_seed(params.seed, 101);
    RangeSample range_sample =
        range::sample_similarity_range(c, t, params.sample_count, range_seed);
    InclusionReport inclusion = range::hull_inclusion_check(
        c, t, range_sample, spectrum, params.slack_algebraic);
    bool witnesses_tight =
        inclusion.max_spectrum_margin <= params.slack_witness;

    // star probe along segments from the truncation star center toward
    // sampled range points, walked inward from each endpoint
    Complex center = core::trace(c) * core::trace(t) /
                     Complex(static_cast<double>(n), 0.0);
    int w_count = std::min<int>(params.probe_targets,
                                static_cast<int>(range_sample.points.size()));
    double max_residual = 0.0;
    for (int k = 0; k < w_count; ++k) {
        Complex w = range_sample.points[k];
        std::vector<Complex> targets;
        targets.reserve(params.probe_grid);
        for (int g = 0; g < params.probe_grid; ++g) {
            double s =
                1.0 - static_cast<double>(g) / params.probe_grid;  // 1 .. 1/g
            targets.push_back(center + s * (w - center));
        }
        OrbitParams probe = params.orbit();
        // the Haar witness that produced w, regenerated from its stream
        probe.warm_starts = {
            orbit::haar_unitary(n, util::split_seed(range_seed, k))};
        std::vector<double> residuals =
            range::star_center_probe(c, t, targets, probe);
        max_residual =
            std::max(max_residual,
                     *std::max_element(residuals.begin(), residuals.end()));
    }
    bool probe_ok = max_residual <= params.slack_optimizer;

    report.claimed = 0.0;
    report.achieved = max_residual;
    report.abs_gap = max_residual;
    report.rel_gap = max_residual;
    report.tolerance = params.slack_optimizer;
    report.pass = inclusion.pass && witnesses_tight && probe_ok;
    report.extra =
        ordered_json{{"spectrum_points", spectrum.points.size()},
                     {"range_points", range_sample.points.size()},
                     {"max_spectrum_margin", inclusion.max_spectrum_margin},
                     {"max_range_margin", inclusion.max_range_margin},
                     {"witness_slack", params.slack_witness},
                     {"hull_slack", params.slack_algebraic},
                     {"max_probe_residual", max_residual},
                     {"probe_slack", params.slack_optimizer}};
    report.wall_time_s = clock.seconds();
    return report;
}

std::pair<Matrix, Matrix> builtin_example(const std::string& id, int n) {
    if (id == "geometric-shift") {
        if (n < 1)
            throw std::invalid_argument("builtin_example: geometric-shift needs n >= 1");
        Matrix c = Matrix::Zero(n, n);
        Matrix t = Matrix::Zero(n, n);
        for (int j = 0; j < n; ++j)
            c(j, j) = std::pow(2.0, -(j + 1));
        // weight 2^{-k} sits at diagonal position k+1
        for (int k = 1; k < n; ++k)
            t(k, k) = std::pow(2.0, -k);
        return {c, t};
    }
    if (id == "diag-von-neumann") {
        if (n != 2)
            throw std::invalid_argument(
                "builtin_example: diag-von-neumann is a 2 x 2 pair");
        Matrix a = Matrix::Zero(2, 2), b = Matrix::Zero(2, 2);
        a(0, 0) = 2.0;
        a(1, 1) = 1.0;
        b(0, 0) = 3.0;
        b(1, 1) = 1.0;
        return {a, b};
    }
    if (id == "diag-hermitian") {
        if (n != 2)
            throw std::invalid_argument(
                "builtin_example: diag-hermitian is a 2 x 2 pair");
        Matrix a = Matrix::Zero(2, 2), b = Matrix::Zero(2, 2);
        a(0, 0) = 2.0;
        a(1, 1) = -1.0;
        b(0, 0) = 3.0;
        b(1, 1) = -5.0;
        return {a, b};
    }
    throw std::invalid_argument("builtin_example: unknown id '" + id + "'");
}

std::vector<std::string> builtin_example_ids() {
    return {"geometric-shift", "diag-von-neumann", "diag-hermitian"};
}

double builtin_limit_radius(const std::string& id) {
    if (id == "geometric-shift") return 1.0 / 3.0;
    if (id == "diag-von-neumann") return 7.0;
    if (id == "diag-hermitian") return 13.0;
    throw std::invalid_argument("builtin_limit_radius: unknown id '" + id +
                                "'");
}

}  // namespace scenario
}  // namespace schatten
