#pragma once

#include <string>
#include <utility>
#include <vector>

#include "schatten/operator_core.hpp"

namespace schatten {

// Nonempty compact subset of the plane in one of three representations:
// a finite point cloud, a closed origin-centered disc, or a filled convex
// polygon with vertices stored counterclockwise.
class CompactSet {
  public:
    enum class Kind { PointCloud, Disc, ConvexPolygon };

    static CompactSet cloud(std::vector<Complex> points);
    static CompactSet disc(double radius);
    // Vertices may arrive in any order; they are hulled and stored ccw.
    // Gate: at least 3 non-collinear vertices.
    static CompactSet polygon(std::vector<Complex> vertices);

    Kind kind() const { return kind_; }
    // Cloud points or polygon vertices (ccw). Empty for discs.
    const std::vector<Complex>& points() const { return points_; }
    double radius() const { return radius_; }

    // Exact euclidean distance from z to the set (0 inside).
    double distance_to(Complex z) const;
    bool contains(Complex z, double slack = 0.0) const;

    std::string kind_tag() const;  // "cloud" | "disc" | "polygon"

  private:
    CompactSet(Kind k, std::vector<Complex> pts, double r)
        : kind_(k), points_(std::move(pts)), radius_(r) {}
    Kind kind_;
    std::vector<Complex> points_;
    double radius_ = 0.0;
};

// Output of the convergence harness: one Hausdorff distance per sequence
// member and the verdict that the tail sank below the threshold.
struct HarnessReport {
    std::vector<double> deltas;
    bool verdict = false;
    double threshold = 0.0;
};

namespace sets {

// Strictly convex hull, ccw, starting from the lexicographically smallest
// point. Degenerate inputs collapse to 1 or 2 points.
std::vector<Complex> convex_hull(std::vector<Complex> points);

// Distance from z to the filled hull (vertex list ccw as produced above).
double hull_distance(const std::vector<Complex>& hull, Complex z);

// Hausdorff distance. Cloud pairs and convex-source/convex-target pairs are
// exact; directed sups from a region onto a cloud are resolved by certified
// branch-and-bound to a 1e-9 gap (the attained value is returned).
double hausdorff_distance(const CompactSet& a, const CompactSet& b);

// True iff each set lies in the closed eps-neighborhood of the other,
// decided by the same directed-sup machinery as hausdorff_distance.
bool epsilon_cover_check(const CompactSet& a, const CompactSet& b, double eps);

// Per-set max and min over sets of real numbers. Gate: every member set
// real to 1e-12 (clouds with near-real points, or discs of radius <= 1e-12).
std::pair<std::vector<double>, std::vector<double>> extremes_of_real_sets(
    const std::vector<CompactSet>& seq);

// Hausdorff distance of each member to the limit plus the verdict: the
// final delta is <= threshold and the last third of the deltas is
// non-increasing up to 10% jitter.
HarnessReport convergence_harness(const std::vector<CompactSet>& seq,
                                  const CompactSet& limit, double threshold);

}  // namespace sets
}  // namespace schatten
