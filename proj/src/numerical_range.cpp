#include "schatten/numerical_range.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace schatten {

bool SupportProfile::contains(Complex z, double slack) const {
    for (std::size_t k = 0; k < directions.size(); ++k) {
        Complex w = std::exp(Complex(0.0, -directions[k]));
        if ((w * z).real() > support_values[k] + slack) return false;
    }
    return true;
}

namespace range {

namespace {

void require_square_pair(const Matrix& c, const Matrix& t, const char* who) {
    if (c.rows() != c.cols() || t.rows() != t.cols() || c.rows() != t.rows())
        throw ShapeMismatch(std::string(who) +
                            ": c, t must be square and of equal dimension");
}

}  // namespace

RangeSample sample_similarity_range(const Matrix& c, const Matrix& t,
                                    int count, std::uint64_t seed) {
    require_square_pair(c, t, "sample_similarity_range");
    if (count < 1)
        throw std::invalid_argument(
            "sample_similarity_range: count must be >= 1");
    const int n = static_cast<int>(c.rows());
    RangeSample out;
    out.kind = RangeKind::SimilarityOrbit;
    out.sample_count = count;
    out.seed = seed;
    out.points.resize(count);
    util::parallel_for(count, [&](int k) {
        Matrix u = orbit::haar_unitary(n, util::split_seed(seed, k));
        out.points[k] = (c * u.adjoint() * t * u).trace();
    });
    return out;
}

RangeSample sample_equivalence_range(const Matrix& c, const Matrix& t,
                                     int count, std::uint64_t seed) {
    if (c.cols() != t.rows() || t.cols() != c.rows())
        throw ShapeMismatch(
            "sample_equivalence_range: need c (p x q) against t (q x p)");
    if (count < 1)
        throw std::invalid_argument(
            "sample_equivalence_range: count must be >= 1");
    const int p = static_cast<int>(c.rows());
    const int q = static_cast<int>(c.cols());
    RangeSample out;
    out.kind = RangeKind::EquivalenceOrbit;
    out.sample_count = count;
    out.seed = seed;
    out.points.resize(count);
    util::parallel_for(count, [&](int k) {
        Matrix u = orbit::haar_unitary(q, util::split_seed(seed, 2 * k));
        Matrix v = orbit::haar_unitary(p, util::split_seed(seed, 2 * k + 1));
        out.points[k] = (c * u * t * v).trace();
    });
    return out;
}

double s_range_radius(const Matrix& c, const Matrix& t) {
    if (c.cols() != t.rows() || t.cols() != c.rows())
        throw ShapeMismatch(
            "s_range_radius: need c (p x q) against t (q x p)");
    return orbit::singular_pairing(c, t);
}

CompactSet disc(double radius) { return CompactSet::disc(radius); }

SupportProfile support_profile(const Matrix& c, const Matrix& t,
                               const std::vector<double>& directions,
                               const OrbitParams& params) {
    require_square_pair(c, t, "support_profile");
    if (directions.empty())
        throw EmptyInput("support_profile: no directions");
    SupportProfile profile;
    profile.directions = directions;
    profile.support_values.resize(directions.size());
    OrbitParams local = params;
    for (std::size_t k = 0; k < directions.size(); ++k) {
        OrbitResult r =
            orbit::similarity_orbit_ascent(c, t, directions[k], local);
        profile.support_values[k] = r.objective;
        // neighbouring directions have neighbouring optima
        local.warm_starts = {r.witnesses[0]};
    }
    return profile;
}

std::vector<double> star_center_probe(const Matrix& c, const Matrix& t,
                                      const std::vector<Complex>& targets,
                                      const OrbitParams& params) {
    require_square_pair(c, t, "star_center_probe");
    std::vector<double> residuals(targets.size());
    OrbitParams local = params;
    for (std::size_t k = 0; k < targets.size(); ++k) {
        OrbitResult r =
            orbit::similarity_target_descent(c, t, targets[k], local);
        residuals[k] = r.objective;
        local.warm_starts = params.warm_starts;
        local.warm_starts.insert(local.warm_starts.begin(), r.witnesses[0]);
    }
    return residuals;
}

InclusionReport hull_inclusion_check(const Matrix& c, const Matrix& t,
                                     const RangeSample& range_points,
                                     const CSpectrumSample& spectrum,
                                     double slack) {
    require_square_pair(c, t, "hull_inclusion_check");
    if (spectrum.points.empty())
        throw EmptyInput("hull_inclusion_check: empty spectrum sample");
    if (range_points.points.empty())
        throw EmptyInput("hull_inclusion_check: empty range sample");
    if (slack < 0.0)
        throw std::invalid_argument("hull_inclusion_check: slack must be >= 0");

    const int n = static_cast<int>(c.rows());
    if (n > 8)
        throw TooLargeForExhaustive(
            "hull_inclusion_check: witness search capped at n = 8");

    // Eigenvalue sequences give the cheap pairing values; the matrix witness
    // is built only for the best permutation found per spectrum point.
    EigenDecomposition dc = spectra::eigen_decompose_normal(c);
    EigenDecomposition dt = spectra::eigen_decompose_normal(t);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perms;
    std::vector<Complex> pairings;
    do {
        Complex acc(0.0, 0.0);
        for (int j = 0; j < n; ++j)
            acc += dc.sequence.values[j] * dt.sequence.values[perm[j]];
        perms.push_back(perm);
        pairings.push_back(acc);
    } while (std::next_permutation(perm.begin(), perm.end()));

    InclusionReport report;
    report.slack = slack;
    report.spectrum_margins.resize(spectrum.points.size());

    for (std::size_t i = 0; i < spectrum.points.size(); ++i) {
        const Complex target = spectrum.points[i];
        std::size_t best = 0;
        double best_gap = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < pairings.size(); ++k) {
            double gap = std::abs(pairings[k] - target);
            if (gap < best_gap) {
                best_gap = gap;
                best = k;
            }
        }

        // U maps the c-eigenvector for entry j onto the t-eigenvector for
        // entry perms[best][j]; then tr(C U* T U) is the pairing sum.
        Matrix u(n, n);
        for (int j = 0; j < n; ++j)
            u.col(j) = dt.basis.col(perms[best][j]);
        u = u * dc.basis.adjoint();
        Complex witnessed = orbit::orbit_value(c, t, u);
        report.spectrum_margins[i] = std::abs(witnessed - target);
    }

    std::vector<Complex> hull = sets::convex_hull(spectrum.points);
    report.range_margins.resize(range_points.points.size());
    for (std::size_t i = 0; i < range_points.points.size(); ++i)
        report.range_margins[i] =
            sets::hull_distance(hull, range_points.points[i]);

    report.max_spectrum_margin =
        report.spectrum_margins.empty()
            ? 0.0
            : *std::max_element(report.spectrum_margins.begin(),
                                report.spectrum_margins.end());
    report.max_range_margin =
        report.range_margins.empty()
            ? 0.0
            : *std::max_element(report.range_margins.begin(),
                                report.range_margins.end());
    report.pass = report.max_spectrum_margin <= slack &&
                  report.max_range_margin <= slack;
    return report;
}

}  // namespace range
}  // namespace schatten
