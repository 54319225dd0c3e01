#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "schatten/numerical_range.hpp"
#include "schatten/operator_core.hpp"
#include "schatten/set_convergence.hpp"
#include "schatten/spectra.hpp"
#include "schatten/unitary_orbit.hpp"

namespace schatten {

// Knobs shared by the scenario runners. Tolerances are declared here (and
// echoed into the reports) rather than read from any global state.
struct ScenarioParams {
    std::uint64_t seed = 42;
    int restarts = 8;
    double tol = 1e-10;
    int max_iter = 5000;
    int sample_count = 1000;     // range cloud size
    int direction_count = 64;    // support profile grid
    int probe_targets = 10;      // star probe: sampled w count
    int probe_grid = 10;         // star probe: points per segment
    int budget = 20000;          // sampled spectrum budget
    double threshold = 1e-6;     // harness / convergence verdict
    double rel_tol = 1e-8;       // von Neumann relative gap
    double abs_tol = 1e-6;       // hermitian ascent absolute gap
    double slack_algebraic = 1e-9;
    double slack_witness = 1e-10;
    double slack_optimizer = 1e-6;

    OrbitParams orbit() const {
        OrbitParams p;
        p.restarts = restarts;
        p.tol = tol;
        p.max_iter = max_iter;
        p.seed = seed;
        return p;
    }
};

// Uniform result record for the inequality scenarios. `digest` identifies
// the inputs (dimensions, seed, content hashes); `extra` carries
// scenario-specific tables (delta tables, margins, endpoints).
struct ScenarioReport {
    std::string scenario;
    nlohmann::ordered_json digest;
    double claimed = 0.0;
    double achieved = 0.0;
    double abs_gap = 0.0;
    double rel_gap = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double wall_time_s = 0.0;
    nlohmann::ordered_json extra;

    // Timing is opt-in so identical invocations stay byte-identical.
    nlohmann::ordered_json to_json(bool include_timing = false) const;
    // Single JSON-lines row (compact, no trailing newline).
    std::string to_json_line(bool include_timing = false) const;
};

namespace scenario {

// max |tr(A U B V)| == sum_j s_j(A) s_j(B), verified by the alternating
// optimizer. Pass at params.rel_tol relative gap.
ScenarioReport run_von_neumann(const Matrix& a, const Matrix& b,
                               const ScenarioParams& params = {});

// Hermitian orbit interval from the pairing formulas vs gradient ascent at
// theta in {0, pi}, plus the membership check min <= tr(CT) <= max. The
// ascent runs on the pair embedded in doubled dimension (C + 0 block,
// T + 0 block): the formulas describe the sup over all truncations, which
// the plain n-dimensional orbit misses whenever the eigenvalue sign
// patterns of C and T differ. Pass at params.abs_tol absolute gap.
ScenarioReport run_hermitian_bounds(const Matrix& c, const Matrix& t,
                                    const ScenarioParams& params = {});

// Truncation convergence toward the limiting disc: runs the harness over
// the n-indexed truncations of a built-in example id...
ScenarioReport run_truncation_convergence(const std::string& example_id,
                                          const std::vector<int>& n_list,
                                          const ScenarioParams& params = {});

// ...or of an explicitly given pair, truncated to leading n x n blocks.
// The limiting disc radius is taken from the full pair.
ScenarioReport run_truncation_convergence(const Matrix& c, const Matrix& t,
                                          const std::vector<int>& n_list,
                                          const ScenarioParams& params = {});

// Spectrum/range sandwich plus star-center probe for a normal pair
// (n <= 8 so the spectrum is exhaustive). Probe targets run along segments
// from the finite-truncation star center tr(C) tr(T) / n to sampled range
// points. Pass when every margin and residual is within its slack.
ScenarioReport run_range_geometry(const Matrix& c, const Matrix& t,
                                  const ScenarioParams& params = {});

// Built-in example registry (hermetic inputs for tests and the demo).
// Ids: "geometric-shift" (C = diag(2^-1..2^-n) against T carrying weight
// 2^-k at position k+1, the shifted geometric pair whose truncation radii
// converge to 1/3), "diag-von-neumann" (diag(2,1) / diag(3,1)),
// "diag-hermitian" (diag(2,-1) / diag(3,-5)).
std::pair<Matrix, Matrix> builtin_example(const std::string& id, int n);
std::vector<std::string> builtin_example_ids();

// Limiting disc radius for a built-in id ("geometric-shift" -> 1/3;
// diagonal pairs -> their finite radius).
double builtin_limit_radius(const std::string& id);

}  // namespace scenario
}  // namespace schatten
