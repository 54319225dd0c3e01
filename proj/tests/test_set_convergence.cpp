#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "schatten/set_convergence.hpp"
#include "schatten/spectra.hpp"
#include "test_helpers.hpp"

using namespace schatten;
using testutil::diag;

namespace {

CompactSet random_cloud(int count, std::uint64_t seed, double scale = 2.0) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> dist(-scale, scale);
    std::vector<Complex> pts;
    pts.reserve(count);
    for (int j = 0; j < count; ++j) pts.emplace_back(dist(gen), dist(gen));
    return CompactSet::cloud(std::move(pts));
}

}  // namespace

TEST_CASE("CompactSet construction and gates") {
    CHECK(CompactSet::cloud({Complex(1, 2)}).kind_tag() == "cloud");
    CHECK(CompactSet::disc(2.0).kind_tag() == "disc");
    CHECK(CompactSet::polygon({Complex(0, 0), Complex(1, 0), Complex(0, 1)})
              .kind_tag() == "polygon");
    CHECK_THROWS_AS(CompactSet::cloud({}), EmptySet);
    CHECK_THROWS_AS(CompactSet::disc(-0.5), NegativeRadius);
    CHECK_THROWS_AS(CompactSet::disc(std::nan("")), NegativeRadius);
    // collinear vertices cannot span a polygon
    CHECK_THROWS_AS(
        CompactSet::polygon({Complex(0, 0), Complex(1, 0), Complex(2, 0)}),
        EmptySet);
}

TEST_CASE("CompactSet::polygon hulls its input counterclockwise") {
    // square with an interior point; hull drops the interior point
    CompactSet p = CompactSet::polygon(
        {Complex(1, 1), Complex(0, 0), Complex(1, 0), Complex(0.5, 0.5),
         Complex(0, 1)});
    REQUIRE(p.points().size() == 4);
    // ccw from the lexicographically smallest vertex
    CHECK(p.points()[0] == Complex(0, 0));
    CHECK(p.points()[1] == Complex(1, 0));
    CHECK(p.points()[2] == Complex(1, 1));
    CHECK(p.points()[3] == Complex(0, 1));
}

TEST_CASE("distance_to and contains by kind") {
    CompactSet d = CompactSet::disc(1.0);
    CHECK(d.distance_to(Complex(0.5, 0.5)) == 0.0);
    CHECK(d.distance_to(Complex(2, 0)) == doctest::Approx(1.0));
    CHECK(d.contains(Complex(0.5, 0.5)));
    CHECK(!d.contains(Complex(1, 1)));
    CHECK(d.contains(Complex(1, 1), 0.5));  // sqrt(2) - 1 < 0.5

    CompactSet zero = CompactSet::disc(0.0);
    CHECK(zero.distance_to(Complex(0, 0)) == 0.0);
    CHECK(zero.distance_to(Complex(3, 4)) == doctest::Approx(5.0));

    CompactSet cloud = CompactSet::cloud({Complex(0, 0), Complex(2, 0)});
    CHECK(cloud.distance_to(Complex(1, 0)) == doctest::Approx(1.0));
    CHECK(cloud.contains(Complex(2, 0)));
    CHECK(!cloud.contains(Complex(1, 0)));

    CompactSet square = CompactSet::polygon(
        {Complex(0, 0), Complex(2, 0), Complex(2, 2), Complex(0, 2)});
    CHECK(square.distance_to(Complex(1, 1)) == 0.0);  // interior
    CHECK(square.distance_to(Complex(3, 1)) == doctest::Approx(1.0));
    CHECK(square.distance_to(Complex(3, 3)) ==
          doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("convex_hull: degenerate and generic inputs") {
    CHECK(sets::convex_hull({Complex(1, 1)}).size() == 1);
    CHECK(sets::convex_hull({Complex(0, 0), Complex(1, 0), Complex(0.5, 0)})
              .size() == 2);
    std::vector<Complex> hull = sets::convex_hull(
        {Complex(0, 0), Complex(1, 0), Complex(1, 1), Complex(0.5, 0.5)});
    CHECK(hull.size() == 3);  // interior point dropped
}

TEST_CASE("hull_distance: point, segment, polygon") {
    std::vector<Complex> pt = {Complex(1, 1)};
    CHECK(sets::hull_distance(pt, Complex(1, 1)) == 0.0);
    CHECK(sets::hull_distance(pt, Complex(4, 5)) == doctest::Approx(5.0));
    std::vector<Complex> seg = {Complex(0, 0), Complex(2, 0)};
    CHECK(sets::hull_distance(seg, Complex(1, 0)) == doctest::Approx(0.0));
    CHECK(sets::hull_distance(seg, Complex(1, 1)) == doctest::Approx(1.0));
    CHECK(sets::hull_distance(seg, Complex(-1, 0)) == doctest::Approx(1.0));
}

TEST_CASE("hausdorff_distance: spec examples") {
    CompactSet origin = CompactSet::cloud({Complex(0, 0)});
    CompactSet three = CompactSet::cloud({Complex(3, 0)});
    CHECK(sets::hausdorff_distance(origin, three) == doctest::Approx(3.0));

    CHECK(sets::hausdorff_distance(CompactSet::disc(1.0),
                                   CompactSet::disc(2.0)) ==
          doctest::Approx(1.0).epsilon(1e-14));

    CompactSet corners = CompactSet::cloud(
        {Complex(1, 1), Complex(1, -1), Complex(-1, 1), Complex(-1, -1)});
    CHECK(sets::hausdorff_distance(corners, origin) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("hausdorff_distance: metric axioms on random clouds") {
    for (std::uint64_t seed : {401ull, 402ull, 403ull}) {
        CompactSet a = random_cloud(12, seed);
        CompactSet b = random_cloud(9, seed + 100);
        CompactSet c = random_cloud(15, seed + 200);
        double ab = sets::hausdorff_distance(a, b);
        double ba = sets::hausdorff_distance(b, a);
        double ac = sets::hausdorff_distance(a, c);
        double cb = sets::hausdorff_distance(c, b);
        CHECK(ab == ba);
        CHECK(ab >= 0.0);
        CHECK(ab <= ac + cb + 1e-12);
        CHECK(sets::hausdorff_distance(a, a) <= 1e-12);
    }
}

TEST_CASE("hausdorff_distance: mixed representations") {
    // disc vs a fine cloud of the same disc: within the mesh size
    const int rings = 40, spokes = 80;
    std::vector<Complex> mesh;
    for (int r = 0; r <= rings; ++r)
        for (int s = 0; s < spokes; ++s)
            mesh.push_back(std::polar(1.0 * r / rings,
                                      2.0 * M_PI * s / spokes));
    double mesh_size = std::max(1.0 / rings, 2.0 * M_PI / spokes);
    CompactSet cloud = CompactSet::cloud(mesh);
    CompactSet disc = CompactSet::disc(1.0);
    CHECK(sets::hausdorff_distance(disc, cloud) <= mesh_size);
    CHECK(sets::hausdorff_distance(cloud, disc) <= mesh_size);

    // polygon vs its own vertex cloud: the cloud misses interior points
    CompactSet square = CompactSet::polygon(
        {Complex(0, 0), Complex(2, 0), Complex(2, 2), Complex(0, 2)});
    CompactSet verts = CompactSet::cloud(square.points());
    double d = sets::hausdorff_distance(square, verts);
    // farthest interior point is the center, sqrt(2) from every vertex
    CHECK(d == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));

    // disc inside polygon: sup over the disc resolved by branch and bound
    CompactSet big = CompactSet::polygon(
        {Complex(-3, -3), Complex(3, -3), Complex(3, 3), Complex(-3, 3)});
    double dd = sets::hausdorff_distance(CompactSet::disc(1.0), big);
    // directed: disc -> polygon is 0; polygon -> disc from corners
    CHECK(dd == doctest::Approx(3.0 * std::sqrt(2.0) - 1.0).epsilon(1e-6));
}

TEST_CASE("epsilon_cover_check: boundary and equivalence") {
    CompactSet a = CompactSet::cloud({Complex(0, 0)});
    CompactSet b = CompactSet::cloud({Complex(3, 0)});
    CHECK(!sets::epsilon_cover_check(a, b, 2.9));
    CHECK(sets::epsilon_cover_check(a, b, 3.0));
    CHECK(sets::epsilon_cover_check(a, a, 0.0));
    CHECK_THROWS_AS(sets::epsilon_cover_check(a, b, -1.0),
                    std::invalid_argument);

    // equivalence with the metric across random instances
    std::mt19937_64 gen(411);
    for (int trial = 0; trial < 50; ++trial) {
        CompactSet x = random_cloud(8, gen());
        CompactSet y = random_cloud(11, gen());
        double d = sets::hausdorff_distance(x, y);
        for (double eps : {d * 0.95, d, d * 1.05})
            CHECK(sets::epsilon_cover_check(x, y, eps) == (d <= eps));
    }
}

TEST_CASE("extremes_of_real_sets: examples and gates") {
    std::vector<CompactSet> seq;
    for (int n = 1; n <= 8; ++n)
        seq.push_back(CompactSet::cloud(
            {Complex(-1.0 + 1.0 / n, 0), Complex(1.0 - 1.0 / n, 0)}));
    auto [maxes, mins] = sets::extremes_of_real_sets(seq);
    REQUIRE(maxes.size() == 8);
    for (int j = 0; j < 8; ++j) {
        CHECK(maxes[j] == doctest::Approx(1.0 - 1.0 / (j + 1)));
        CHECK(mins[j] == doctest::Approx(-1.0 + 1.0 / (j + 1)));
    }
    // radius-zero disc counts as the real singleton {0}
    auto [m2, n2] = sets::extremes_of_real_sets({CompactSet::disc(0.0)});
    CHECK(m2[0] == 0.0);
    CHECK(n2[0] == 0.0);

    CHECK_THROWS_AS(sets::extremes_of_real_sets({}), EmptyInput);
    CHECK_THROWS_AS(
        sets::extremes_of_real_sets({CompactSet::cloud({Complex(0, 1)})}),
        NotRealSet);
    CHECK_THROWS_AS(sets::extremes_of_real_sets({CompactSet::disc(1.0)}),
                    NotRealSet);
}

TEST_CASE("convergence_harness: geometric disc sequence") {
    // r_n = sum_{j<=n} 4^{-j} -> 1/3 with delta_n = (1/3) 4^{-n}
    std::vector<CompactSet> seq;
    std::vector<double> radii;
    double r = 0.0;
    for (int n = 1; n <= 12; ++n) {
        r += std::pow(4.0, -n);
        radii.push_back(r);
        seq.push_back(CompactSet::disc(r));
    }
    HarnessReport report =
        sets::convergence_harness(seq, CompactSet::disc(1.0 / 3.0), 1e-6);
    REQUIRE(report.deltas.size() == 12);
    for (int n = 1; n <= 12; ++n)
        CHECK(report.deltas[n - 1] ==
              doctest::Approx(std::pow(4.0, -n) / 3.0).epsilon(1e-12));
    CHECK(report.verdict);
    CHECK(report.threshold == 1e-6);

    // truncating at n = 8 leaves the final delta above 1e-6
    std::vector<CompactSet> short_seq(seq.begin(), seq.begin() + 8);
    HarnessReport early =
        sets::convergence_harness(short_seq, CompactSet::disc(1.0 / 3.0),
                                  1e-6);
    CHECK(!early.verdict);
}

TEST_CASE("convergence_harness: constant sequence and gates") {
    CompactSet pt = CompactSet::cloud({Complex(1, 1)});
    HarnessReport report = sets::convergence_harness({pt, pt, pt}, pt, 1e-12);
    for (double d : report.deltas) CHECK(d == 0.0);
    CHECK(report.verdict);
    CHECK_THROWS_AS(sets::convergence_harness({pt}, pt, 1e-6), EmptySequence);

    // a tail that jumps by more than 10% spoils the verdict
    std::vector<CompactSet> bumpy;
    for (double r : {1.0, 0.5, 0.25, 0.12, 0.3, 0.05})
        bumpy.push_back(CompactSet::disc(r));
    HarnessReport bad =
        sets::convergence_harness(bumpy, CompactSet::disc(0.0), 1.0);
    CHECK(!bad.verdict);
}

TEST_CASE("max and min track the Hausdorff rate for real sets") {
    // quantified continuity: |max A_n - max A| <= delta_n, same for min
    std::mt19937_64 gen(421);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<Complex> limit_pts;
    for (int j = 0; j < 20; ++j) limit_pts.emplace_back(dist(gen), 0.0);
    CompactSet limit = CompactSet::cloud(limit_pts);
    std::vector<CompactSet> seq;
    for (int n = 1; n <= 10; ++n) {
        std::vector<Complex> pts;
        for (Complex z : limit_pts)
            pts.emplace_back(z.real() + dist(gen) / (5.0 * n), 0.0);
        seq.push_back(CompactSet::cloud(pts));
    }
    HarnessReport report = sets::convergence_harness(seq, limit, 1.0);
    auto [maxes, mins] = sets::extremes_of_real_sets(seq);
    auto [lim_max, lim_min] = sets::extremes_of_real_sets({limit});
    for (int n = 0; n < 10; ++n) {
        CHECK(std::abs(maxes[n] - lim_max[0]) <= report.deltas[n] + 1e-12);
        CHECK(std::abs(mins[n] - lim_min[0]) <= report.deltas[n] + 1e-12);
    }
}

TEST_CASE("interval hulls of hermitian truncations converge to the "
          "full-dimension interval") {
    // doubled-size pair whose leading blocks grow toward the full matrices
    const int full = 8;
    Matrix c = testutil::random_hermitian(full, 431);
    Matrix t = testutil::random_hermitian(full, 432);
    HermitianExtremes target = spectra::hermitian_orbit_extremes(c, t);
    CompactSet limit = CompactSet::cloud(
        {Complex(target.min, 0), Complex(target.max, 0)});
    std::vector<CompactSet> seq;
    for (int n = 2; n <= full; ++n) {
        Matrix cn = core::zero_pad(c.topLeftCorner(n, n), full, full);
        Matrix tn = core::zero_pad(t.topLeftCorner(n, n), full, full);
        HermitianExtremes e = spectra::hermitian_orbit_extremes(cn, tn);
        seq.push_back(CompactSet::cloud(
            {Complex(e.min, 0), Complex(e.max, 0)}));
    }
    HarnessReport report = sets::convergence_harness(seq, limit, 1e-9);
    CHECK(report.deltas.back() < 1e-9);
}
