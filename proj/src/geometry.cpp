#include "nearhex/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <mutex>
#include <queue>

namespace nearhex::geom {

using f2::BitVector;

std::vector<int> bits_to_points(const BitVector& b) {
    std::vector<int> out;
    const auto& w = b.words();
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::uint64_t x = w[i];
        while (x) {
            out.push_back(int(i * 64 + std::countr_zero(x)));
            x &= x - 1;
        }
    }
    return out;
}

f2::BitVector points_to_bits(int n, const std::vector<int>& pts) {
    BitVector b(n);
    for (int p : pts) b.set(p, true);
    return b;
}

struct IncidenceGeometry::QuadCache {
    std::once_flag once;
    std::unique_ptr<QuadIndex> index;
};

IncidenceGeometry IncidenceGeometry::build(int num_points,
                                           std::vector<std::array<int, 3>> lines,
                                           std::string name) {
    if (num_points <= 0) throw BadLine("geometry needs at least one point");
    for (auto& l : lines) {
        for (int p : l)
            if (p < 0 || p >= num_points) throw BadLine("point id out of range");
        std::sort(l.begin(), l.end());
        if (l[0] == l[1] || l[1] == l[2]) throw BadLine("repeated point in line");
    }
    std::sort(lines.begin(), lines.end());
    for (std::size_t i = 1; i < lines.size(); ++i)
        if (lines[i] == lines[i - 1]) throw NotPartialLinear("duplicate line");

    IncidenceGeometry g;
    g.n_ = num_points;
    g.name_ = std::move(name);
    g.lines_ = std::move(lines);
    g.lines_through_.resize(num_points);
    g.adj_.assign(num_points, BitVector(num_points));
    g.pair_line_.assign(std::size_t(num_points) * num_points, -1);

    for (std::size_t li = 0; li < g.lines_.size(); ++li) {
        const auto& l = g.lines_[li];
        for (int a : l)
            for (int b : l) {
                if (a == b) continue;
                auto& slot = g.pair_line_[std::size_t(a) * num_points + b];
                if (slot != -1) throw NotPartialLinear("two points on two lines");
                slot = int(li);
                g.adj_[a].set(b, true);
            }
        for (int p : l) g.lines_through_[p].push_back(int(li));
    }

    // All-pairs BFS with bitset frontiers.
    g.dist_.assign(std::size_t(num_points) * num_points, kUnreachable);
    g.diameter_ = 0;
    g.connected_ = true;
    for (int s = 0; s < num_points; ++s) {
        BitVector visited(num_points), frontier(num_points);
        visited.set(s, true);
        frontier.set(s, true);
        g.dist_[std::size_t(s) * num_points + s] = 0;
        int d = 0;
        while (!frontier.is_zero()) {
            BitVector next(num_points);
            // next |= adj[p] for every frontier point.
            for (int p : bits_to_points(frontier)) next ^= g.adj_[p] & (g.adj_[p] ^ next);
            BitVector fresh = next;
            fresh &= visited;           // fresh = next & visited
            fresh ^= next;              // fresh = next & ~visited
            ++d;
            for (int p : bits_to_points(fresh))
                g.dist_[std::size_t(s) * num_points + p] = std::uint8_t(d);
            visited ^= fresh;
            frontier = fresh;
        }
        if (visited.count() != std::size_t(num_points)) g.connected_ = false;
        for (int y = 0; y < num_points; ++y) {
            int dy = g.dist_[std::size_t(s) * num_points + y];
            if (dy != kUnreachable) g.diameter_ = std::max(g.diameter_, dy);
        }
    }

    for (int d = 0; d <= 3; ++d) {
        g.sphere_[d].assign(num_points, BitVector(num_points));
        for (int x = 0; x < num_points; ++x)
            for (int y = 0; y < num_points; ++y)
                if (g.dist(x, y) == d) g.sphere_[d][x].set(y, true);
    }

    g.quad_cache_ = std::make_shared<QuadCache>();
    return g;
}

int IncidenceGeometry::third_point(int x, int y) const {
    int li = line_between(x, y);
    if (li < 0) throw NotCollinear("points are not collinear");
    for (int p : lines_[li])
        if (p != x && p != y) return p;
    throw NotCollinear("degenerate line");  // unreachable on validated input
}

const BitVector& IncidenceGeometry::sphere_bits(int x, int d) const {
    assert(d >= 0 && d <= 3);
    return sphere_[d][x];
}

std::vector<int> IncidenceGeometry::sphere(int x, int d) const {
    if (d <= 3) return bits_to_points(sphere_[d][x]);
    std::vector<int> out;
    for (int y = 0; y < n_; ++y)
        if (dist(x, y) == d) out.push_back(y);
    return out;
}

bool is_near_2n_gon(const IncidenceGeometry& g, int n) {
    if (!g.connected() || g.diameter() != n) return false;
    int np = g.num_points();
    for (int x = 0; x < np; ++x) {
        // No point may be at distance <= 1 from every point (degenerate).
        bool dominates = true;
        for (int y = 0; y < np && dominates; ++y)
            if (g.dist(x, y) > 1) dominates = false;
        if (dominates) return false;
    }
    for (int x = 0; x < np; ++x)
        for (const auto& l : g.lines()) {
            int best = kUnreachable, count = 0;
            for (int p : l) {
                int d = g.dist(x, p);
                if (d < best) { best = d; count = 1; }
                else if (d == best) ++count;
            }
            if (count != 1) return false;
        }
    return true;
}

std::optional<std::pair<int, int>> line_distance_pattern_violation(const IncidenceGeometry& g) {
    for (int x = 0; x < g.num_points(); ++x)
        for (std::size_t li = 0; li < g.lines().size(); ++li) {
            const auto& l = g.lines()[li];
            int d0 = g.dist(x, l[0]), d1 = g.dist(x, l[1]), d2 = g.dist(x, l[2]);
            int lo = std::min({d0, d1, d2}), hi = std::max({d0, d1, d2});
            int at_lo = (d0 == lo) + (d1 == lo) + (d2 == lo);
            if (hi != lo + 1 || at_lo != 1) return std::make_pair(x, int(li));
        }
    return std::nullopt;
}

namespace {

// One closure pass; returns true if S grew. Adds third points of secant
// lines, then geodesic-interior points for distances 2 and 3 (bitset
// formulas); larger distances fall back to a full scan.
bool closure_pass(const IncidenceGeometry& g, BitVector& s) {
    bool grew = false;
    auto add = [&](int p) {
        if (!s.get(p)) { s.set(p, true); grew = true; }
    };
    for (const auto& l : g.lines()) {
        int in = s.get(l[0]) + s.get(l[1]) + s.get(l[2]);
        if (in == 2)
            for (int p : l) add(p);
    }
    std::vector<int> pts = bits_to_points(s);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            int x = pts[i], y = pts[j], d = g.dist(x, y);
            if (d == 2) {
                BitVector mid = g.adj(x) & g.adj(y);
                for (int p : bits_to_points(mid)) add(p);
            } else if (d == 3) {
                BitVector near_x = g.adj(x) & g.sphere_bits(y, 2);
                BitVector near_y = g.sphere_bits(x, 2) & g.adj(y);
                for (int p : bits_to_points(near_x)) add(p);
                for (int p : bits_to_points(near_y)) add(p);
            } else if (d > 3 && d < kUnreachable) {
                for (int z = 0; z < g.num_points(); ++z)
                    if (g.dist(x, z) + g.dist(z, y) == d) add(z);
            }
        }
    return grew;
}

}  // namespace

std::vector<int> convex_closure(const IncidenceGeometry& g, const std::vector<int>& seed) {
    BitVector s = points_to_bits(g.num_points(), seed);
    while (closure_pass(g, s)) {}
    return bits_to_points(s);
}

std::vector<int> subspace_closure(const IncidenceGeometry& g, const std::vector<int>& seed) {
    BitVector s = points_to_bits(g.num_points(), seed);
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& l : g.lines()) {
            int in = s.get(l[0]) + s.get(l[1]) + s.get(l[2]);
            if (in == 2) {
                for (int p : l)
                    if (!s.get(p)) { s.set(p, true); grew = true; }
            }
        }
    }
    return bits_to_points(s);
}

namespace {

Quad make_quad(const IncidenceGeometry& g, std::vector<int> points) {
    Quad q;
    q.points = std::move(points);
    BitVector bits = points_to_bits(g.num_points(), q.points);
    // t2 + 1 = number of fully internal lines through each point; a quad is
    // a GQ(2,t2), so the count must be uniform and the size must match.
    std::vector<int> internal(q.points.size(), 0);
    for (const auto& l : g.lines())
        if (bits.get(l[0]) && bits.get(l[1]) && bits.get(l[2]))
            for (int p : l) {
                auto it = std::lower_bound(q.points.begin(), q.points.end(), p);
                ++internal[it - q.points.begin()];
            }
    int t2p1 = internal.empty() ? 0 : internal[0];
    for (int c : internal)
        if (c != t2p1) throw AxiomViolation("closure is not point-regular");
    q.t2 = t2p1 - 1;
    if (q.t2 < 1 || int(q.points.size()) != 3 * (1 + 2 * q.t2))
        throw AxiomViolation("closure is not a generalized quadrangle");
    BitVector covered = bits;
    for (int p : q.points) {
        covered ^= g.adj(p) & (g.adj(p) ^ covered);  // covered |= adj(p)
    }
    q.big = covered.count() == std::size_t(g.num_points());
    return q;
}

}  // namespace

Quad quad_of(const IncidenceGeometry& g, int x, int y) {
    if (g.dist(x, y) != 2) throw NotDistanceTwo("points not at distance 2");
    if ((g.adj(x) & g.adj(y)).count() < 2)
        throw TooFewCommonNeighbours("fewer than two common neighbours");
    return make_quad(g, convex_closure(g, {x, y}));
}

const QuadIndex& IncidenceGeometry::quads() const {
    std::call_once(quad_cache_->once, [this] {
        auto idx = std::make_unique<QuadIndex>();
        idx->by_point.resize(n_);
        idx->quad_of_pair.assign(std::size_t(n_) * n_, -1);
        for (int x = 0; x < n_; ++x)
            for (int y = x + 1; y < n_; ++y) {
                if (dist(x, y) != 2) continue;
                if (idx->quad_of_pair[std::size_t(x) * n_ + y] != -1) continue;
                if ((adj(x) & adj(y)).count() < 2) continue;
                Quad q = quad_of(*this, x, y);
                int id = int(idx->quads.size());
                for (std::size_t i = 0; i < q.points.size(); ++i)
                    for (std::size_t j = i + 1; j < q.points.size(); ++j) {
                        int a = q.points[i], b = q.points[j];
                        if (dist(a, b) == 2) {
                            idx->quad_of_pair[std::size_t(a) * n_ + b] = id;
                            idx->quad_of_pair[std::size_t(b) * n_ + a] = id;
                        }
                    }
                for (int p : q.points) idx->by_point[p].push_back(id);
                idx->quads.push_back(std::move(q));
            }
        quad_cache_->index = std::move(idx);
    });
    return *quad_cache_->index;
}

PointQuadClass classify_point_quad(const IncidenceGeometry& g, int x, const Quad& q) {
    PointQuadClass out;
    out.dmin = kUnreachable;
    for (int p : q.points) out.dmin = std::min(out.dmin, g.dist(x, p));
    std::vector<int> nearest;
    for (int p : q.points)
        if (g.dist(x, p) == out.dmin) nearest.push_back(p);
    if (nearest.size() == 1) {
        out.classical = true;
        out.gate = nearest[0];
        for (int p : q.points)
            if (g.dist(x, p) != out.dmin + g.dist(out.gate, p))
                throw AxiomViolation("unique nearest point is not a gate");
        return out;
    }
    // Nearest points must form an ovoid of the quad: pairwise non-collinear
    // and meeting every internal line.
    for (std::size_t i = 0; i < nearest.size(); ++i)
        for (std::size_t j = i + 1; j < nearest.size(); ++j)
            if (g.collinear(nearest[i], nearest[j]))
                throw AxiomViolation("nearest points are not an ovoid (collinear pair)");
    BitVector qbits = points_to_bits(g.num_points(), q.points);
    BitVector obits = points_to_bits(g.num_points(), nearest);
    for (const auto& l : g.lines()) {
        if (!(qbits.get(l[0]) && qbits.get(l[1]) && qbits.get(l[2]))) continue;
        if (!(obits.get(l[0]) || obits.get(l[1]) || obits.get(l[2])))
            throw AxiomViolation("nearest points miss an internal line");
    }
    out.ovoid = std::move(nearest);
    return out;
}

BigQuadReport verify_big_quad_inequality(const IncidenceGeometry& g, const Quad& q) {
    BigQuadReport r;
    auto t1 = uniform_line_count(g);
    if (!t1) throw AxiomViolation("line count through points is not uniform");
    int t = *t1 - 1;
    r.lhs = g.num_points();
    r.rhs = long(q.points.size()) * (1 + 2 * (t - q.t2));
    r.equality = r.lhs == r.rhs;
    r.big = q.big;
    r.consistent = r.equality == r.big;
    return r;
}

Quad glue_quads(const IncidenceGeometry& g, const Quad& q1, const Quad& q2) {
    BitVector b1 = points_to_bits(g.num_points(), q1.points);
    BitVector b2 = points_to_bits(g.num_points(), q2.points);
    if (!(b1 & b2).is_zero()) throw NotDisjoint("quads share a point");
    if (!q1.big || !q2.big) throw NotBig("both quads must be big");
    std::vector<int> image;  // z_x per point of q1, in q1.points order
    for (int x : q1.points) {
        BitVector cand = g.adj(x) & b2;
        if (cand.count() != 1) throw AxiomViolation("no unique nearest point in second quad");
        image.push_back(cand.first_set());
    }
    std::vector<int> sorted_image = image;
    std::sort(sorted_image.begin(), sorted_image.end());
    if (std::adjacent_find(sorted_image.begin(), sorted_image.end()) != sorted_image.end() ||
        sorted_image.size() != q2.points.size())
        throw AxiomViolation("nearest-point map is not a bijection");
    for (std::size_t i = 0; i < q1.points.size(); ++i)
        for (std::size_t j = i + 1; j < q1.points.size(); ++j)
            if (g.collinear(q1.points[i], q1.points[j]) != g.collinear(image[i], image[j]))
                throw AxiomViolation("nearest-point map is not an isomorphism");
    std::vector<int> glued;
    for (std::size_t i = 0; i < q1.points.size(); ++i)
        glued.push_back(g.third_point(q1.points[i], image[i]));
    std::sort(glued.begin(), glued.end());
    if (std::adjacent_find(glued.begin(), glued.end()) != glued.end())
        throw AxiomViolation("glued point set collapses");
    Quad out = make_quad(g, std::move(glued));
    return out;
}

std::vector<int> special_hyperplane(const IncidenceGeometry& g, int x) {
    std::vector<int> h;
    for (int y = 0; y < g.num_points(); ++y)
        if (g.dist(x, y) <= g.diameter() - 1) h.push_back(y);
    return h;
}

bool is_geometric_hyperplane(const IncidenceGeometry& g, const std::vector<int>& h) {
    if (h.empty() || int(h.size()) >= g.num_points()) return false;
    BitVector bits = points_to_bits(g.num_points(), h);
    for (const auto& l : g.lines()) {
        int in = bits.get(l[0]) + bits.get(l[1]) + bits.get(l[2]);
        if (in != 1 && in != 3) return false;
    }
    return true;
}

std::optional<int> uniform_line_count(const IncidenceGeometry& g) {
    if (g.num_points() == 0) return std::nullopt;
    std::size_t c = g.lines_through(0).size();
    for (int x = 1; x < g.num_points(); ++x)
        if (g.lines_through(x).size() != c) return std::nullopt;
    return int(c);
}

std::map<int, int> quad_type_counts(const IncidenceGeometry& g, int x) {
    const QuadIndex& idx = g.quads();
    std::map<int, int> out;
    for (int id : idx.by_point[x]) ++out[idx.quads[id].t2];
    return out;
}

InducedGeometry induced_geometry(const IncidenceGeometry& g, const std::vector<int>& points,
                                 std::string name) {
    InducedGeometry out;
    out.to_parent = points;
    std::sort(out.to_parent.begin(), out.to_parent.end());
    std::vector<int> to_new(g.num_points(), -1);
    for (std::size_t i = 0; i < out.to_parent.size(); ++i) to_new[out.to_parent[i]] = int(i);
    std::vector<std::array<int, 3>> lines;
    for (const auto& l : g.lines()) {
        if (to_new[l[0]] >= 0 && to_new[l[1]] >= 0 && to_new[l[2]] >= 0)
            lines.push_back({to_new[l[0]], to_new[l[1]], to_new[l[2]]});
    }
    out.g = IncidenceGeometry::build(int(out.to_parent.size()), std::move(lines), std::move(name));
    return out;
}

}  // namespace nearhex::geom
