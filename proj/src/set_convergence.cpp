#include "schatten/set_convergence.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace schatten {

namespace {

double cross(Complex o, Complex a, Complex b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
}

double segment_distance(Complex p, Complex a, Complex b) {
    Complex ab = b - a;
    double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = ((p.real() - a.real()) * ab.real() +
                (p.imag() - a.imag()) * ab.imag()) /
               len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

}  // namespace

CompactSet CompactSet::cloud(std::vector<Complex> points) {
    if (points.empty()) throw EmptySet("CompactSet::cloud: no points");
    return CompactSet(Kind::PointCloud, std::move(points), 0.0);
}

CompactSet CompactSet::disc(double radius) {
    if (radius < 0.0 || std::isnan(radius))
        throw NegativeRadius("CompactSet::disc: radius must be >= 0");
    return CompactSet(Kind::Disc, {}, radius);
}

CompactSet CompactSet::polygon(std::vector<Complex> vertices) {
    if (vertices.empty()) throw EmptySet("CompactSet::polygon: no vertices");
    std::vector<Complex> hull = sets::convex_hull(std::move(vertices));
    if (hull.size() < 3)
        throw EmptySet(
            "CompactSet::polygon: vertices collapse to fewer than 3 hull "
            "corners");
    return CompactSet(Kind::ConvexPolygon, std::move(hull), 0.0);
}

double CompactSet::distance_to(Complex z) const {
    switch (kind_) {
        case Kind::PointCloud: {
            double best = std::abs(z - points_[0]);
            for (std::size_t j = 1; j < points_.size(); ++j)
                best = std::min(best, std::abs(z - points_[j]));
            return best;
        }
        case Kind::Disc:
            return std::max(0.0, std::abs(z) - radius_);
        case Kind::ConvexPolygon:
            return sets::hull_distance(points_, z);
    }
    return 0.0;
}

bool CompactSet::contains(Complex z, double slack) const {
    return distance_to(z) <= slack;
}

std::string CompactSet::kind_tag() const {
    switch (kind_) {
        case Kind::PointCloud:
            return "cloud";
        case Kind::Disc:
            return "disc";
        case Kind::ConvexPolygon:
            return "polygon";
    }
    return "cloud";
}

namespace sets {

std::vector<Complex> convex_hull(std::vector<Complex> points) {
    std::sort(points.begin(), points.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const std::size_t n = points.size();
    if (n <= 2) return points;

    std::vector<Complex> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], points[i]) <= 0.0)
            --k;
        hull[k++] = points[i];
    }
    for (std::size_t i = n - 1, lo = k + 1; i-- > 0;) {  // upper chain
        while (k >= lo && cross(hull[k - 2], hull[k - 1], points[i]) <= 0.0)
            --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);  // last point repeats the first
    return hull;
}

double hull_distance(const std::vector<Complex>& hull, Complex z) {
    const std::size_t n = hull.size();
    if (n == 0) throw EmptySet("hull_distance: empty hull");
    if (n == 1) return std::abs(z - hull[0]);
    if (n == 2) return segment_distance(z, hull[0], hull[1]);

    bool inside = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (cross(hull[i], hull[(i + 1) % n], z) < 0.0) {
            inside = false;
            break;
        }
    }
    if (inside) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
        best = std::min(best, segment_distance(z, hull[i], hull[(i + 1) % n]));
    return best;
}

namespace {

// Nearest point of `s` to z (the metric projection; z itself when inside).
Complex project_onto(const CompactSet& s, Complex z) {
    switch (s.kind()) {
        case CompactSet::Kind::PointCloud: {
            Complex best = s.points()[0];
            double d = std::abs(z - best);
            for (const Complex& p : s.points()) {
                double dp = std::abs(z - p);
                if (dp < d) {
                    d = dp;
                    best = p;
                }
            }
            return best;
        }
        case CompactSet::Kind::Disc: {
            double m = std::abs(z);
            if (m <= s.radius() || m == 0.0) return z;
            return z * (s.radius() / m);
        }
        case CompactSet::Kind::ConvexPolygon: {
            const auto& h = s.points();
            const std::size_t n = h.size();
            bool inside = true;
            for (std::size_t i = 0; i < n; ++i) {
                if (cross(h[i], h[(i + 1) % n], z) < 0.0) {
                    inside = false;
                    break;
                }
            }
            if (inside) return z;
            Complex best = h[0];
            double d = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < n; ++i) {
                Complex a = h[i], b = h[(i + 1) % n];
                Complex ab = b - a;
                double len2 = std::norm(ab);
                double t = len2 == 0.0
                               ? 0.0
                               : std::clamp(((z.real() - a.real()) * ab.real() +
                                             (z.imag() - a.imag()) * ab.imag()) /
                                                len2,
                                            0.0, 1.0);
                Complex q = a + t * ab;
                double dq = std::abs(z - q);
                if (dq < d) {
                    d = dq;
                    best = q;
                }
            }
            return best;
        }
    }
    return z;
}

bool is_convex_region(const CompactSet& s) {
    return s.kind() == CompactSet::Kind::Disc ||
           s.kind() == CompactSet::Kind::ConvexPolygon;
}

constexpr double kBnbGap = 1e-9;

// Exact containment of the origin-centered disc of radius r in a convex
// ccw hull: the center's inward margin must be >= r on every edge. This
// short-circuits the boundary search below, whose Lipschitz bounds cannot
// certify an identically-zero distance without covering the whole circle.
bool disc_inside_polygon(double r, const std::vector<Complex>& hull) {
    const std::size_t n = hull.size();
    for (std::size_t i = 0; i < n; ++i) {
        Complex a = hull[i], b = hull[(i + 1) % n];
        double len = std::abs(b - a);
        if (len == 0.0) continue;
        if (cross(a, b, Complex(0.0, 0.0)) / len < r) return false;
    }
    return true;
}

// sup over the boundary circle |z| = r of d(z, b), certified via the
// 1-Lipschitz arc bound. Used for disc sources over non-convex targets.
double circle_sup(double r, const CompactSet& b) {
    struct Node {
        double lo, hi, bound;
    };
    auto value = [&](double phi) {
        return b.distance_to(Complex(r * std::cos(phi), r * std::sin(phi)));
    };
    const double two_pi = 2.0 * M_PI;
    double best = value(0.0);
    auto cmp = [](const Node& a, const Node& b) { return a.bound < b.bound; };
    std::priority_queue<Node, std::vector<Node>, decltype(cmp)> heap(cmp);
    auto push = [&](double lo, double hi) {
        double mid = 0.5 * (lo + hi);
        double v = value(mid);
        best = std::max(best, v);
        double bound = v + 0.5 * r * (hi - lo);
        if (bound > best + kBnbGap) heap.push({lo, hi, bound});
    };
    for (int k = 0; k < 16; ++k)
        push(two_pi * k / 16.0, two_pi * (k + 1) / 16.0);
    while (!heap.empty()) {
        Node n = heap.top();
        heap.pop();
        if (n.bound <= best + kBnbGap) break;
        double mid = 0.5 * (n.lo + n.hi);
        push(n.lo, mid);
        push(mid, n.hi);
    }
    return best;
}

// sup over the filled region a of d(z, b) by quadtree branch-and-bound;
// valid for any target b because d(., b) is 1-Lipschitz. Lower bounds are
// evaluated at points projected into a, so they are always attained.
double region_sup(const CompactSet& a, const CompactSet& b) {
    double half = 0.0;
    Complex center(0.0, 0.0);
    if (a.kind() == CompactSet::Kind::Disc) {
        half = a.radius();
    } else {
        double xlo = a.points()[0].real(), xhi = xlo;
        double ylo = a.points()[0].imag(), yhi = ylo;
        for (const Complex& p : a.points()) {
            xlo = std::min(xlo, p.real());
            xhi = std::max(xhi, p.real());
            ylo = std::min(ylo, p.imag());
            yhi = std::max(yhi, p.imag());
        }
        center = Complex(0.5 * (xlo + xhi), 0.5 * (ylo + yhi));
        half = 0.5 * std::max(xhi - xlo, yhi - ylo);
    }
    if (half == 0.0) return b.distance_to(center);

    struct Node {
        Complex c;
        double h, bound;
    };
    double best = 0.0;
    auto probe = [&](Complex z) {
        Complex inside = project_onto(a, z);
        best = std::max(best, b.distance_to(inside));
    };
    probe(center);
    auto cmp = [](const Node& x, const Node& y) { return x.bound < y.bound; };
    std::priority_queue<Node, std::vector<Node>, decltype(cmp)> heap(cmp);
    const double sqrt2 = std::sqrt(2.0);
    auto push = [&](Complex c, double h) {
        // skip boxes fully outside a
        if (a.distance_to(c) > h * sqrt2) return;
        probe(c);
        double bound = b.distance_to(c) + h * sqrt2;
        if (bound > best + kBnbGap) heap.push({c, h, bound});
    };
    push(center, half);
    while (!heap.empty()) {
        Node n = heap.top();
        heap.pop();
        if (n.bound <= best + kBnbGap) break;
        double h = 0.5 * n.h;
        for (int sx = -1; sx <= 1; sx += 2)
            for (int sy = -1; sy <= 1; sy += 2)
                push(n.c + Complex(sx * h, sy * h), h);
    }
    return best;
}

// sup_{z in a} d(z, b)
double directed_sup(const CompactSet& a, const CompactSet& b) {
    switch (a.kind()) {
        case CompactSet::Kind::PointCloud: {
            double best = 0.0;
            for (const Complex& p : a.points())
                best = std::max(best, b.distance_to(p));
            return best;
        }
        case CompactSet::Kind::Disc: {
            if (b.kind() == CompactSet::Kind::Disc)
                return std::max(0.0, a.radius() - b.radius());
            if (b.kind() == CompactSet::Kind::ConvexPolygon) {
                if (a.radius() == 0.0) return b.distance_to(Complex(0.0, 0.0));
                if (disc_inside_polygon(a.radius(), b.points())) return 0.0;
                // d(., b) convex on the disc: sup sits on the boundary circle
                return circle_sup(a.radius(), b);
            }
            return region_sup(a, b);
        }
        case CompactSet::Kind::ConvexPolygon: {
            if (is_convex_region(b)) {
                // d(., b) convex: maximum over a attained at a vertex
                double best = 0.0;
                for (const Complex& v : a.points())
                    best = std::max(best, b.distance_to(v));
                return best;
            }
            return region_sup(a, b);
        }
    }
    return 0.0;
}

}  // namespace

double hausdorff_distance(const CompactSet& a, const CompactSet& b) {
    return std::max(directed_sup(a, b), directed_sup(b, a));
}

bool epsilon_cover_check(const CompactSet& a, const CompactSet& b,
                         double eps) {
    if (eps < 0.0)
        throw std::invalid_argument("epsilon_cover_check: eps must be >= 0");
    if (a.kind() == CompactSet::Kind::PointCloud &&
        b.kind() == CompactSet::Kind::PointCloud) {
        // independent quantifier loops (the cross-check the metric is
        // tested against)
        for (const Complex& z : a.points())
            if (b.distance_to(z) > eps) return false;
        for (const Complex& z : b.points())
            if (a.distance_to(z) > eps) return false;
        return true;
    }
    return directed_sup(a, b) <= eps && directed_sup(b, a) <= eps;
}

std::pair<std::vector<double>, std::vector<double>> extremes_of_real_sets(
    const std::vector<CompactSet>& seq) {
    if (seq.empty()) throw EmptyInput("extremes_of_real_sets: no sets");
    constexpr double kRealEps = 1e-12;
    std::vector<double> maxes, mins;
    maxes.reserve(seq.size());
    mins.reserve(seq.size());
    for (const CompactSet& s : seq) {
        switch (s.kind()) {
            case CompactSet::Kind::PointCloud: {
                double hi = -std::numeric_limits<double>::infinity();
                double lo = std::numeric_limits<double>::infinity();
                for (const Complex& p : s.points()) {
                    if (std::abs(p.imag()) >= kRealEps)
                        throw NotRealSet(
                            "extremes_of_real_sets: cloud point off the real "
                            "axis");
                    hi = std::max(hi, p.real());
                    lo = std::min(lo, p.real());
                }
                maxes.push_back(hi);
                mins.push_back(lo);
                break;
            }
            case CompactSet::Kind::Disc: {
                if (s.radius() >= kRealEps)
                    throw NotRealSet(
                        "extremes_of_real_sets: disc of positive radius is "
                        "not real");
                maxes.push_back(s.radius());
                mins.push_back(-s.radius());
                break;
            }
            case CompactSet::Kind::ConvexPolygon:
                throw NotRealSet(
                    "extremes_of_real_sets: polygons are two-dimensional");
        }
    }
    return {std::move(maxes), std::move(mins)};
}

HarnessReport convergence_harness(const std::vector<CompactSet>& seq,
                                  const CompactSet& limit, double threshold) {
    if (seq.size() < 2)
        throw EmptySequence("convergence_harness: need at least 2 sets");
    HarnessReport report;
    report.threshold = threshold;
    report.deltas.reserve(seq.size());
    for (const CompactSet& s : seq)
        report.deltas.push_back(hausdorff_distance(s, limit));

    bool ok = report.deltas.back() <= threshold;
    // last third non-increasing up to 10% jitter (tiny absolute floor so
    // exact zeros do not trip the ratio test)
    std::size_t start = (2 * seq.size()) / 3;
    if (start > 0) --start;
    for (std::size_t j = start + 1; j < report.deltas.size() && ok; ++j)
        ok = report.deltas[j] <= 1.1 * report.deltas[j - 1] + 1e-15;
    report.verdict = ok;
    return report;
}

}  // namespace sets
}  // namespace schatten
