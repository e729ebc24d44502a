// Slim partial linear spaces: every line has exactly three points, two
// points lie on at most one line. Built once, validated, then immutable;
// all metric queries run off a cached all-pairs BFS table.
//
// On top of the raw structure this module provides the near-polygon
// toolkit used everywhere else: convex closure, quads (convex diameter-2
// subspaces) with their (2,t2) parameters and big/ovoidal classification,
// gluing of disjoint big quads, and geometric hyperplanes.

#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nearhex/f2linalg.hpp"

namespace nearhex::geom {

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BadLine : GeometryError { using GeometryError::GeometryError; };
struct NotPartialLinear : GeometryError { using GeometryError::GeometryError; };
struct NotCollinear : GeometryError { using GeometryError::GeometryError; };
struct NotDistanceTwo : GeometryError { using GeometryError::GeometryError; };
struct TooFewCommonNeighbours : GeometryError { using GeometryError::GeometryError; };
struct NotDisjoint : GeometryError { using GeometryError::GeometryError; };
struct NotBig : GeometryError { using GeometryError::GeometryError; };
struct AxiomViolation : GeometryError { using GeometryError::GeometryError; };

inline constexpr int kUnreachable = 255;

struct Quad {
    std::vector<int> points;  // sorted
    int t2 = 0;
    bool big = false;
};

struct QuadIndex {
    std::vector<Quad> quads;                  // sorted by point set
    std::vector<std::vector<int>> by_point;   // quad ids through each point
    std::vector<int> quad_of_pair;            // flat n*n, -1 if none; d=2 pairs only
};

class IncidenceGeometry {
public:
    // Empty placeholder; only build() produces a usable geometry.
    IncidenceGeometry() = default;

    // Validates and precomputes everything. Lines are canonicalised to
    // sorted triples and stored sorted.
    static IncidenceGeometry build(int num_points,
                                   std::vector<std::array<int, 3>> lines,
                                   std::string name = {});

    int num_points() const { return n_; }
    const std::vector<std::array<int, 3>>& lines() const { return lines_; }
    int num_lines() const { return int(lines_.size()); }
    const std::array<int, 3>& line(int li) const { return lines_[li]; }
    const std::string& name() const { return name_; }

    bool connected() const { return connected_; }
    int diameter() const { return diameter_; }

    int dist(int x, int y) const { return dist_[std::size_t(x) * n_ + y]; }
    bool collinear(int x, int y) const { return x != y && dist(x, y) == 1; }
    // Line id through two collinear points, -1 otherwise.
    int line_between(int x, int y) const { return pair_line_[std::size_t(x) * n_ + y]; }
    int third_point(int x, int y) const;

    const std::vector<int>& lines_through(int x) const { return lines_through_[x]; }
    // Neighbours of x as a bitset (x excluded).
    const f2::BitVector& adj(int x) const { return adj_[x]; }
    // Points at distance exactly d from x, cached for d <= 3.
    const f2::BitVector& sphere_bits(int x, int d) const;
    std::vector<int> sphere(int x, int d) const;

    // Quad index over all distance-2 pairs with >= 2 common neighbours.
    // Built lazily, cached; only meaningful for dense near polygons.
    const QuadIndex& quads() const;

private:
    int n_ = 0;
    std::string name_;
    std::vector<std::array<int, 3>> lines_;
    std::vector<std::vector<int>> lines_through_;
    std::vector<f2::BitVector> adj_;
    std::vector<f2::BitVector> sphere_[4];  // sphere_[d][x] for d = 0..3
    std::vector<std::uint8_t> dist_;        // flat n*n
    std::vector<int> pair_line_;            // flat n*n
    bool connected_ = false;
    int diameter_ = 0;

    struct QuadCache;
    std::shared_ptr<QuadCache> quad_cache_;
};

// points listed ascending; set ops via bitsets internally.
std::vector<int> bits_to_points(const f2::BitVector& b);
f2::BitVector points_to_bits(int n, const std::vector<int>& pts);

// Near 2n-gon axioms: connected, diameter n, no point collinear-or-equal
// to all others, and every (point, line) pair has a unique nearest point.
bool is_near_2n_gon(const IncidenceGeometry& g, int n);

// First (point, line) violating the {d, d+1, d+1} line-distance pattern,
// or nullopt if the pattern holds everywhere. Holds iff g is a near
// polygon, so this doubles as an exhaustive axiom witness.
std::optional<std::pair<int, int>> line_distance_pattern_violation(const IncidenceGeometry& g);

// Smallest convex subspace containing the seed: fixpoint of adding third
// points of secant lines and geodesic-interior points, ascending order.
std::vector<int> convex_closure(const IncidenceGeometry& g, const std::vector<int>& seed);
// Line-closure only (smallest subspace), no convexity.
std::vector<int> subspace_closure(const IncidenceGeometry& g, const std::vector<int>& seed);

Quad quad_of(const IncidenceGeometry& g, int x, int y);

struct PointQuadClass {
    bool classical = false;
    int dmin = 0;
    int gate = -1;            // classical only
    std::vector<int> ovoid;   // ovoidal only: the nearest-point ovoid
};
PointQuadClass classify_point_quad(const IncidenceGeometry& g, int x, const Quad& q);

struct BigQuadReport {
    long lhs = 0;        // |P|
    long rhs = 0;        // |Q| (1 + 2(t - t2))
    bool equality = false;
    bool big = false;
    bool consistent = false;  // equality <=> big
};
BigQuadReport verify_big_quad_inequality(const IncidenceGeometry& g, const Quad& q);

// For disjoint big quads: z_x = unique point of q2 nearest x in q1; returns
// the quad {x * z_x}. Verifies that x -> z_x is an isomorphism q1 -> q2.
Quad glue_quads(const IncidenceGeometry& g, const Quad& q1, const Quad& q2);

// Points at distance <= diameter-1 from x.
std::vector<int> special_hyperplane(const IncidenceGeometry& g, int x);
// Proper nonempty subspace meeting every line (in 1 or 3 points).
bool is_geometric_hyperplane(const IncidenceGeometry& g, const std::vector<int>& h);

// t+1 when every point lies on the same number of lines, absent otherwise.
std::optional<int> uniform_line_count(const IncidenceGeometry& g);
// t2 -> number of quads of that type through x.
std::map<int, int> quad_type_counts(const IncidenceGeometry& g, int x);

// Subgeometry induced on a point subset: keeps lines fully inside, relabels
// points ascending. to_parent maps new ids back.
struct InducedGeometry {
    IncidenceGeometry g;
    std::vector<int> to_parent;
};
InducedGeometry induced_geometry(const IncidenceGeometry& g, const std::vector<int>& points,
                                 std::string name = {});

}  // namespace nearhex::geom
