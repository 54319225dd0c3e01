#include <cmath>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schatten/numerical_range.hpp"
#include "schatten/operator_core.hpp"
#include "schatten/scenarios.hpp"
#include "schatten/set_convergence.hpp"
#include "schatten/spectra.hpp"
#include "schatten/unitary_orbit.hpp"

namespace py = pybind11;

using schatten::CompactSet;
using schatten::Complex;
using schatten::Matrix;
using schatten::OrbitParams;
using schatten::OrbitResult;
using schatten::ScenarioParams;
using schatten::ScenarioReport;
using schatten::SchattenIndex;

namespace {

// Python side passes p as a float; math.inf selects the operator norm.
SchattenIndex as_index(double p) {
    return std::isinf(p) ? SchattenIndex::inf() : SchattenIndex(p);
}

schatten::EigenSequence as_sequence(const std::vector<Complex>& values,
                                    const std::string& model_tag) {
    schatten::EigenSequence s;
    s.values = values;
    s.model = schatten::RankModel::from_tag(model_tag);
    return s;
}

py::object report_to_dict(const ScenarioReport& r, bool include_timing) {
    py::module_ json = py::module_::import("json");
    return json.attr("loads")(r.to_json(include_timing).dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Finite matrix truncations of Schatten-class operators: trace "
        "inequalities, orbit optimizers, numerical-range geometry, and "
        "Hausdorff set convergence.";

    py::register_exception<schatten::Error>(m, "SchattenError");

    // --- operator core ------------------------------------------------------
    m.def(
        "schatten_norm",
        [](const Matrix& a, double p) {
            return schatten::core::schatten_norm(a, as_index(p));
        },
        py::arg("a"), py::arg("p"),
        "||A||_p; pass math.inf for the operator norm.");
    m.def(
        "singular_values",
        [](const Matrix& a) {
            return schatten::core::schmidt_decompose(a).singular_values;
        },
        py::arg("a"), "Non-increasing singular values, clamped at zero.");
    m.def(
        "trace", [](const Matrix& a) { return schatten::core::trace(a); },
        py::arg("a"));
    m.def(
        "positive_negative_parts",
        [](const Matrix& a) {
            schatten::HermitianSplit s =
                schatten::core::positive_negative_parts(a);
            return py::make_tuple(s.positive_part, s.negative_part);
        },
        py::arg("a"), "Spectral split A = P - N with P, N >= 0 and PN = 0.");
    m.def("zero_pad", &schatten::core::zero_pad, py::arg("a"), py::arg("rows"),
          py::arg("cols"));
    m.def("cut_out_block", &schatten::core::cut_out_block, py::arg("a"),
          py::arg("basis"), py::arg("n"),
          "Leading n x n compression onto the first n basis columns.");
    m.def("truncate_projection", &schatten::core::truncate_projection,
          py::arg("a"), py::arg("basis"), py::arg("k"));

    // --- spectra ------------------------------------------------------------
    m.def(
        "eigenvalues_normal",
        [](const Matrix& t) {
            return schatten::spectra::eigen_decompose_normal(t)
                .sequence.values;
        },
        py::arg("t"),
        "Eigenvalues of a normal matrix, sorted by non-increasing modulus.");
    m.def(
        "modified_sequence",
        [](const std::vector<Complex>& nonzero, const std::string& model,
           int length) {
            return schatten::spectra::modified_sequence(
                       nonzero, schatten::RankModel::from_tag(model), length)
                .values;
        },
        py::arg("nonzero"), py::arg("model"), py::arg("length"),
        "Zero-padded eigenvalue window: model is 'finite_rank', "
        "'finite_kernel:<k>', or 'interleave'.");

    py::class_<schatten::CSpectrumSample>(m, "CSpectrumSample")
        .def_readonly("points", &schatten::CSpectrumSample::points)
        .def_readonly("exhaustive", &schatten::CSpectrumSample::exhaustive);
    m.def(
        "c_spectrum",
        [](const std::vector<Complex>& c_values,
           const std::vector<Complex>& t_values, bool exhaustive, int budget,
           std::uint64_t seed) {
            return schatten::spectra::c_spectrum(
                as_sequence(c_values, "finite_rank"),
                as_sequence(t_values, "finite_rank"),
                exhaustive ? schatten::SpectrumMode::Exhaustive
                           : schatten::SpectrumMode::Sampled,
                budget, seed);
        },
        py::arg("c_values"), py::arg("t_values"), py::arg("exhaustive") = true,
        py::arg("budget") = 20000, py::arg("seed") = 42,
        "Pairing sums over permutations of the T-side values.");

    py::class_<schatten::HermitianExtremes>(m, "HermitianExtremes")
        .def_readonly("max", &schatten::HermitianExtremes::max)
        .def_readonly("min", &schatten::HermitianExtremes::min);
    m.def("hermitian_orbit_extremes",
          &schatten::spectra::hermitian_orbit_extremes, py::arg("c"),
          py::arg("t"),
          "max/min of tr(C U* T U) via the positive/negative-part pairings.");
    m.def(
        "scaled_diagonal_sum",
        [](const Matrix& c, const Matrix& basis, int n, double q) {
            return schatten::spectra::scaled_diagonal_sum(c, basis, n,
                                                          as_index(q));
        },
        py::arg("c"), py::arg("basis"), py::arg("n"), py::arg("q"));

    // --- unitary orbit ------------------------------------------------------
    py::class_<OrbitParams>(m, "OrbitParams")
        .def(py::init<>())
        .def_readwrite("restarts", &OrbitParams::restarts)
        .def_readwrite("tol", &OrbitParams::tol)
        .def_readwrite("max_iter", &OrbitParams::max_iter)
        .def_readwrite("seed", &OrbitParams::seed)
        .def_readwrite("warm_starts", &OrbitParams::warm_starts);

    py::class_<OrbitResult>(m, "OrbitResult")
        .def_readonly("value", &OrbitResult::value)
        .def_readonly("objective", &OrbitResult::objective)
        .def_readonly("witnesses", &OrbitResult::witnesses)
        .def_readonly("iterations", &OrbitResult::iterations)
        .def_readonly("history", &OrbitResult::history)
        .def_readonly("restarts_used", &OrbitResult::restarts_used);

    m.def("haar_unitary", &schatten::orbit::haar_unitary, py::arg("n"),
          py::arg("seed"), "Deterministic Haar-distributed unitary.");
    m.def("singular_pairing", &schatten::orbit::singular_pairing, py::arg("c"),
          py::arg("t"), "sum_j s_j(C) s_j(T).");
    m.def(
        "orbit_value",
        [](const Matrix& c, const Matrix& t, const Matrix& u) {
            return schatten::orbit::orbit_value(c, t, u);
        },
        py::arg("c"), py::arg("t"), py::arg("u"), "tr(C U* T U).");
    m.def(
        "orbit_value",
        [](const Matrix& c, const Matrix& t, const Matrix& u,
           const Matrix& v) {
            return schatten::orbit::orbit_value(c, t, u, v);
        },
        py::arg("c"), py::arg("t"), py::arg("u"), py::arg("v"),
        "tr(C U T V).");
    m.def("alternating_bilinear_max",
          &schatten::orbit::alternating_bilinear_max, py::arg("c"),
          py::arg("t"), py::arg("params") = OrbitParams{},
          "Maximizes |tr(C U T V)| over unitary pairs.");
    m.def("similarity_orbit_ascent", &schatten::orbit::similarity_orbit_ascent,
          py::arg("c"), py::arg("t"), py::arg("theta"),
          py::arg("params") = OrbitParams{},
          "Maximizes Re(e^{-i theta} tr(C U* T U)).");
    m.def("similarity_target_descent",
          &schatten::orbit::similarity_target_descent, py::arg("c"),
          py::arg("t"), py::arg("z"), py::arg("params") = OrbitParams{},
          "Minimizes |tr(C U* T U) - z|; objective is the attained distance.");

    // --- numerical range ----------------------------------------------------
    py::class_<schatten::RangeSample>(m, "RangeSample")
        .def_readonly("points", &schatten::RangeSample::points)
        .def_readonly("sample_count", &schatten::RangeSample::sample_count)
        .def_readonly("seed", &schatten::RangeSample::seed);

    py::class_<schatten::SupportProfile>(m, "SupportProfile")
        .def_readonly("directions", &schatten::SupportProfile::directions)
        .def_readonly("support_values",
                      &schatten::SupportProfile::support_values)
        .def("contains", &schatten::SupportProfile::contains, py::arg("z"),
             py::arg("slack"));

    py::class_<schatten::InclusionReport>(m, "InclusionReport")
        .def_readonly("spectrum_margins",
                      &schatten::InclusionReport::spectrum_margins)
        .def_readonly("range_margins",
                      &schatten::InclusionReport::range_margins)
        .def_readonly("max_spectrum_margin",
                      &schatten::InclusionReport::max_spectrum_margin)
        .def_readonly("max_range_margin",
                      &schatten::InclusionReport::max_range_margin)
        .def_readonly("slack", &schatten::InclusionReport::slack)
        .def_readonly("pass_", &schatten::InclusionReport::pass);

    m.def("s_range_radius", &schatten::range::s_range_radius, py::arg("c"),
          py::arg("t"), "Radius of the equivalence-orbit disc.");
    m.def("sample_similarity_range", &schatten::range::sample_similarity_range,
          py::arg("c"), py::arg("t"), py::arg("count"), py::arg("seed"));
    m.def("sample_equivalence_range",
          &schatten::range::sample_equivalence_range, py::arg("c"),
          py::arg("t"), py::arg("count"), py::arg("seed"));
    m.def("support_profile", &schatten::range::support_profile, py::arg("c"),
          py::arg("t"), py::arg("directions"),
          py::arg("params") = OrbitParams{});
    m.def("star_center_probe", &schatten::range::star_center_probe,
          py::arg("c"), py::arg("t"), py::arg("targets"),
          py::arg("params") = OrbitParams{},
          "Residuals min_U |tr(C U* T U) - z| per target.");
    m.def("hull_inclusion_check", &schatten::range::hull_inclusion_check,
          py::arg("c"), py::arg("t"), py::arg("range_points"),
          py::arg("spectrum"), py::arg("slack"));

    // --- compact sets -------------------------------------------------------
    py::class_<CompactSet>(m, "CompactSet")
        .def_static("cloud", &CompactSet::cloud, py::arg("points"))
        .def_static("disc", &CompactSet::disc, py::arg("radius"))
        .def_static("polygon", &CompactSet::polygon, py::arg("vertices"))
        .def_property_readonly("kind", &CompactSet::kind_tag)
        .def_property_readonly("points", &CompactSet::points)
        .def_property_readonly("radius", &CompactSet::radius)
        .def("distance_to", &CompactSet::distance_to, py::arg("z"))
        .def("contains", &CompactSet::contains, py::arg("z"),
             py::arg("slack") = 0.0);

    py::class_<schatten::HarnessReport>(m, "HarnessReport")
        .def_readonly("deltas", &schatten::HarnessReport::deltas)
        .def_readonly("verdict", &schatten::HarnessReport::verdict)
        .def_readonly("threshold", &schatten::HarnessReport::threshold);

    m.def("hausdorff_distance", &schatten::sets::hausdorff_distance,
          py::arg("a"), py::arg("b"));
    m.def("epsilon_cover_check", &schatten::sets::epsilon_cover_check,
          py::arg("a"), py::arg("b"), py::arg("eps"));
    m.def("convex_hull", &schatten::sets::convex_hull, py::arg("points"),
          "Strictly convex hull, ccw from the lexicographic minimum.");
    m.def("extremes_of_real_sets", &schatten::sets::extremes_of_real_sets,
          py::arg("seq"), "Per-set (max, min) lists for real sets.");
    m.def("convergence_harness", &schatten::sets::convergence_harness,
          py::arg("seq"), py::arg("limit"), py::arg("threshold"));

    // --- scenarios ----------------------------------------------------------
    py::class_<ScenarioParams>(m, "ScenarioParams")
        .def(py::init<>())
        .def_readwrite("seed", &ScenarioParams::seed)
        .def_readwrite("restarts", &ScenarioParams::restarts)
        .def_readwrite("tol", &ScenarioParams::tol)
        .def_readwrite("max_iter", &ScenarioParams::max_iter)
        .def_readwrite("sample_count", &ScenarioParams::sample_count)
        .def_readwrite("direction_count", &ScenarioParams::direction_count)
        .def_readwrite("probe_targets", &ScenarioParams::probe_targets)
        .def_readwrite("probe_grid", &ScenarioParams::probe_grid)
        .def_readwrite("budget", &ScenarioParams::budget)
        .def_readwrite("threshold", &ScenarioParams::threshold)
        .def_readwrite("rel_tol", &ScenarioParams::rel_tol)
        .def_readwrite("abs_tol", &ScenarioParams::abs_tol);

    py::class_<ScenarioReport>(m, "ScenarioReport")
        .def_readonly("scenario", &ScenarioReport::scenario)
        .def_readonly("claimed", &ScenarioReport::claimed)
        .def_readonly("achieved", &ScenarioReport::achieved)
        .def_readonly("abs_gap", &ScenarioReport::abs_gap)
        .def_readonly("rel_gap", &ScenarioReport::rel_gap)
        .def_readonly("tolerance", &ScenarioReport::tolerance)
        .def_readonly("pass_", &ScenarioReport::pass)
        .def("to_dict", &report_to_dict, py::arg("include_timing") = false)
        .def("to_json_line", &ScenarioReport::to_json_line,
             py::arg("include_timing") = false);

    m.def("run_von_neumann", &schatten::scenario::run_von_neumann,
          py::arg("a"), py::arg("b"), py::arg("params") = ScenarioParams{});
    m.def("run_hermitian_bounds", &schatten::scenario::run_hermitian_bounds,
          py::arg("c"), py::arg("t"), py::arg("params") = ScenarioParams{});
    m.def(
        "run_truncation_convergence",
        [](const std::string& example_id, const std::vector<int>& n_list,
           const ScenarioParams& params) {
            return schatten::scenario::run_truncation_convergence(
                example_id, n_list, params);
        },
        py::arg("example_id"), py::arg("n_list"),
        py::arg("params") = ScenarioParams{});
    m.def(
        "run_truncation_convergence",
        [](const Matrix& c, const Matrix& t, const std::vector<int>& n_list,
           const ScenarioParams& params) {
            return schatten::scenario::run_truncation_convergence(c, t, n_list,
                                                                  params);
        },
        py::arg("c"), py::arg("t"), py::arg("n_list"),
        py::arg("params") = ScenarioParams{});
    m.def("run_range_geometry", &schatten::scenario::run_range_geometry,
          py::arg("c"), py::arg("t"), py::arg("params") = ScenarioParams{});
    m.def("builtin_example", &schatten::scenario::builtin_example,
          py::arg("id"), py::arg("n"));
    m.def("builtin_example_ids", &schatten::scenario::builtin_example_ids);
    m.def("builtin_limit_radius", &schatten::scenario::builtin_limit_radius,
          py::arg("id"));
}
