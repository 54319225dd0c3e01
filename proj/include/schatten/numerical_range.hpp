#pragma once

#include <cstdint>
#include <vector>

#include "schatten/operator_core.hpp"
#include "schatten/set_convergence.hpp"
#include "schatten/spectra.hpp"
#include "schatten/unitary_orbit.hpp"

namespace schatten {

enum class RangeKind { SimilarityOrbit, EquivalenceOrbit };

// Monte-Carlo cloud of orbit values. Sample k is generated from
// util::split_seed(seed, k) (and, for equivalence orbits, a second stream),
// so any single witness can be regenerated from (seed, k).
struct RangeSample {
    std::vector<Complex> points;
    RangeKind kind = RangeKind::SimilarityOrbit;
    int sample_count = 0;
    std::uint64_t seed = 0;
};

// Support function h(phi) = max Re(e^{-i phi} tr(C U* T U)) on a direction
// grid; the intersection of the half-planes is an outer estimate of the
// range's convex hull.
struct SupportProfile {
    std::vector<double> directions;
    std::vector<double> support_values;

    // z satisfies every half-plane inequality, each relaxed by slack.
    bool contains(Complex z, double slack) const;
};

// Outcome of the spectrum-vs-range sandwich check.
struct InclusionReport {
    // |witnessed orbit value - spectrum point| per spectrum point.
    std::vector<double> spectrum_margins;
    // distance to the spectrum's convex hull per range point (0 inside).
    std::vector<double> range_margins;
    double max_spectrum_margin = 0.0;
    double max_range_margin = 0.0;
    double slack = 0.0;
    bool pass = false;
};

namespace range {

// Cloud of tr(C U_k* T U_k) over Haar samples. count >= 1.
RangeSample sample_similarity_range(const Matrix& c, const Matrix& t,
                                    int count, std::uint64_t seed);

// Cloud of tr(C U_k T V_k) over independent Haar pairs.
RangeSample sample_equivalence_range(const Matrix& c, const Matrix& t,
                                     int count, std::uint64_t seed);

// Radius sum_j s_j(C) s_j(T) of the equivalence-orbit disc.
double s_range_radius(const Matrix& c, const Matrix& t);

// Origin-centered disc of the given radius (radius >= 0).
CompactSet disc(double radius);

// Support values on the given directions via similarity_orbit_ascent,
// warm-starting each direction with its predecessor's witness.
SupportProfile support_profile(const Matrix& c, const Matrix& t,
                               const std::vector<double>& directions,
                               const OrbitParams& params = {});

// Residuals min_U |tr(C U* T U) - z| for each target, each solve
// warm-started with the previous target's witness plus params.warm_starts.
std::vector<double> star_center_probe(const Matrix& c, const Matrix& t,
                                      const std::vector<Complex>& targets,
                                      const OrbitParams& params = {});

// Checks the sandwich P_C(T) subset W_C(T) subset conv(P_C(T)) on samples:
// (i) every spectrum point is attained by an explicit permutation-unitary
// witness to `slack`; (ii) every range point is inside the spectrum hull
// expanded by `slack`. The operators are needed to build the witnesses.
InclusionReport hull_inclusion_check(const Matrix& c, const Matrix& t,
                                     const RangeSample& range_points,
                                     const CSpectrumSample& spectrum,
                                     double slack);

}  // namespace range
}  // namespace schatten
