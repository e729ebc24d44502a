// Certification suite. Each check replays one structural fact about a
// geometry or its cocycle group model and reports Pass, Fail (with the
// lexicographically first witness) or Skipped (out of scope). Group-level
// checks run on the canonical model and, when the commutator form has a
// nontrivial radical, also on the minimal quotient model; GQ-level checks
// run on every faithful linear quotient of the universal module.

#include "nearhex/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

#include "nearhex/catalog.hpp"
#include "nearhex/f2linalg.hpp"
#include "nearhex/repgroup.hpp"

namespace nearhex::verify {

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        default: return "skipped";
    }
}

nlohmann::json CheckResult::to_json(bool with_millis) const {
    nlohmann::json w = witness.is_null() ? nlohmann::json::object() : witness;
    if (!reason.empty()) w["reason"] = reason;
    nlohmann::json j{{"check", check},
                     {"geometry", geometry},
                     {"status", to_string(status)},
                     {"witness", w}};
    if (with_millis) j["millis"] = millis;
    return j;
}

namespace {

using f2::BitMatrix;
using f2::BitVector;
using geom::IncidenceGeometry;
using geom::Quad;
using rep::GroupElement;
using json = nlohmann::json;

bool disjoint_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else return false;
    }
    return true;
}

// -1 unless x is collinear with exactly one point of pts.
int unique_neighbour_in(const IncidenceGeometry& g, int x, const std::vector<int>& pts) {
    int found = -1;
    for (int p : pts) {
        if (!g.collinear(x, p)) continue;
        if (found >= 0) return -1;
        found = p;
    }
    return found;
}

// Two disjoint big quads, the subspace Y they span, and (when Y is proper)
// the projection x -> (x1, x2) of outside points plus the partner map
// between the two quads.
struct YConfig {
    int q1 = -1, q2 = -1;
    int t2 = 0;
    std::vector<int> y;
    BitVector y_bits;
    bool proper = false;
    bool ok = false;
    int bad_point = -1;
    std::vector<int> x1, x2;    // per outside point, its unique neighbour in q1/q2
    std::vector<int> partner;   // per quad point, its unique neighbour in the other quad
};

// Full or minimal-quotient group model; radical is of the model's own space.
struct Model {
    std::string label;
    const rep::CocycleGroup* gr = nullptr;
    std::vector<BitVector> radical;
};

// Faithful abelian model of a GQ: point coordinates in some quotient of V.
struct GqModel {
    int dim = 0;
    std::vector<BitVector> coords;
};

struct GqData {
    std::vector<GqModel> models;  // [0] is the full module
    bool pair_kernel = false;     // a 2-dim faithful kernel would exist
};

struct QuadSub {
    std::vector<GroupElement> elems;  // sorted subgroup generated by the quad
    std::vector<GroupElement> zi;     // elements with central vector part
};

struct Ctx {
    const IncidenceGeometry& g;
    std::string name;
    int n = 0;
    int t = -1;  // uniform lines-per-point minus one, -1 if nonuniform
    bool hexagon = false;
    bool gq = false;

    Ctx(const IncidenceGeometry& gg, std::string nm) : g(gg), name(std::move(nm)) {
        if (name.empty()) name = g.name();
        n = g.num_points();
        auto ulc = geom::uniform_line_count(g);
        t = ulc ? *ulc - 1 : -1;
        if (g.connected() && n > 1) {
            if (g.diameter() == 3 && geom::is_near_2n_gon(g, 3)) hexagon = true;
            else if (g.diameter() == 2 && geom::is_near_2n_gon(g, 2)) gq = true;
        }
    }

    const rep::RepSpace& rs() {
        if (!rs_) rs_ = rep::universal_module(g);
        return *rs_;
    }

    // Canonical model plus the minimal quotient when the radical is
    // nontrivial; empty with no_model_reason set when no model exists.
    const std::vector<Model>& models() {
        if (models_) return *models_;
        models_.emplace();
        const rep::RepSpace* r = nullptr;
        try {
            r = &rs();
        } catch (const std::exception& e) {
            no_model_reason = e.what();
            return *models_;
        }
        try {
            full_.emplace(rep::build_representation(*r));
            models_->push_back({"full", &*full_, r->radical_basis});
        } catch (const rep::InconsistentSystem&) {
        }
        if (!r->radical_basis.empty()) {
            try {
                minimal_.emplace(rep::build_minimal_representation(*r));
                models_->push_back({"minimal", &*minimal_, {}});
            } catch (const std::exception&) {
            }
        }
        if (models_->empty())
            no_model_reason =
                "no non-abelian representation of this shape (the central-bit line system is "
                "inconsistent)";
        return *models_;
    }
    std::string no_model_reason;

    const std::vector<YConfig>& yconfigs() {
        if (ycfgs_) return *ycfgs_;
        ycfgs_.emplace();
        const auto& qi = g.quads();
        for (int i = 0; i < int(qi.quads.size()); ++i) {
            if (!qi.quads[i].big) continue;
            for (int j = i + 1; j < int(qi.quads.size()); ++j) {
                if (!qi.quads[j].big) continue;
                if (!disjoint_sorted(qi.quads[i].points, qi.quads[j].points)) continue;
                YConfig cf;
                cf.q1 = i;
                cf.q2 = j;
                cf.t2 = qi.quads[i].t2;
                std::vector<int> seed = qi.quads[i].points;
                seed.insert(seed.end(), qi.quads[j].points.begin(), qi.quads[j].points.end());
                cf.y = geom::subspace_closure(g, seed);
                cf.y_bits = geom::points_to_bits(n, cf.y);
                cf.proper = int(cf.y.size()) < n;
                if (cf.proper) {
                    cf.ok = true;
                    cf.partner.assign(n, -1);
                    for (int p : qi.quads[i].points) {
                        cf.partner[p] = unique_neighbour_in(g, p, qi.quads[j].points);
                        if (cf.partner[p] < 0 && cf.ok) { cf.ok = false; cf.bad_point = p; }
                    }
                    for (int p : qi.quads[j].points) {
                        cf.partner[p] = unique_neighbour_in(g, p, qi.quads[i].points);
                        if (cf.partner[p] < 0 && cf.ok) { cf.ok = false; cf.bad_point = p; }
                    }
                    if (cf.ok) {
                        cf.x1.assign(n, -1);
                        cf.x2.assign(n, -1);
                        for (int x = 0; x < n && cf.ok; ++x) {
                            if (cf.y_bits.get(x)) continue;
                            cf.x1[x] = unique_neighbour_in(g, x, qi.quads[i].points);
                            cf.x2[x] = unique_neighbour_in(g, x, qi.quads[j].points);
                            if (cf.x1[x] < 0 || cf.x2[x] < 0) { cf.ok = false; cf.bad_point = x; }
                        }
                    }
                }
                ycfgs_->push_back(std::move(cf));
            }
        }
        return *ycfgs_;
    }

    const GqData& gq_models() {
        if (gqd_) return *gqd_;
        gqd_.emplace();
        const auto& r = rs();
        gqd_->models.push_back({r.dim_v, r.coords});
        // Kernels that keep the model faithful avoid every point vector and
        // every two-point sum.
        std::set<BitVector> banned;
        for (int x = 0; x < n; ++x) banned.insert(r.coords[x]);
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) banned.insert(r.coords[x] ^ r.coords[y]);
        std::vector<BitVector> free_vecs;
        for (std::uint64_t w = 1; w < (std::uint64_t(1) << r.dim_v); ++w) {
            BitVector v = BitVector::from_word(std::size_t(r.dim_v), w);
            if (!banned.count(v)) free_vecs.push_back(v);
        }
        std::set<BitVector> free_set(free_vecs.begin(), free_vecs.end());
        for (const auto& w : free_vecs) gqd_->models.push_back(project_model(r, w));
        for (std::size_t i = 0; i < free_vecs.size(); ++i)
            for (std::size_t j = i + 1; j < free_vecs.size(); ++j)
                if (free_set.count(free_vecs[i] ^ free_vecs[j])) gqd_->pair_kernel = true;
        return *gqd_;
    }

    const std::vector<std::array<int, 3>>& three_arcs() {
        if (!arcs3_) {
            arcs3_.emplace();
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    if (g.dist(a, b) != 2) continue;
                    for (int cpt = b + 1; cpt < n; ++cpt)
                        if (g.dist(a, cpt) == 2 && g.dist(b, cpt) == 2)
                            arcs3_->push_back({a, b, cpt});
                }
        }
        return *arcs3_;
    }

    bool arc_complete(const std::array<int, 3>& arc) const {
        for (int z = 0; z < n; ++z) {
            if (z == arc[0] || z == arc[1] || z == arc[2]) continue;
            if (g.dist(z, arc[0]) == 2 && g.dist(z, arc[1]) == 2 && g.dist(z, arc[2]) == 2)
                return false;
        }
        return true;
    }

    const rep::GoodSubsetWitness& good_subset() {
        if (!gsw_) gsw_ = rep::good_subset_search(rs());
        return *gsw_;
    }

    const QuadSub& quad_sub(std::size_t model_idx, int quad_id) {
        auto key = std::make_pair(model_idx, quad_id);
        auto it = quad_subs_.find(key);
        if (it != quad_subs_.end()) return it->second;
        const Model& m = models()[model_idx];
        std::vector<GroupElement> gens;
        for (int p : g.quads().quads[quad_id].points) gens.push_back(m.gr->point_image(p));
        QuadSub qs;
        qs.elems = rep::subgroup_closure(*m.gr, gens);
        for (const auto& e : qs.elems)
            if (central_vec(m, e.v)) qs.zi.push_back(e);
        return quad_subs_.emplace(key, std::move(qs)).first->second;
    }

    static bool central_vec(const Model& m, const BitVector& v) {
        return v.is_zero() || (!m.radical.empty() && f2::in_span(m.radical, v));
    }

    bool glued_shape() {
        if (!glued_shape_) glued_shape_ = cat::verify_params(g, "hex_vi_glued").matches;
        return *glued_shape_;
    }

private:
    static GqModel project_model(const rep::RepSpace& r, const BitVector& kernel) {
        int d = r.dim_v;
        std::vector<BitVector> basis{kernel};
        for (int i = 0; i < d && int(basis.size()) < d; ++i) {
            BitVector u = BitVector::unit(std::size_t(d), std::size_t(i));
            if (!f2::in_span(basis, u)) basis.push_back(u);
        }
        BitMatrix bm{std::size_t(d), std::size_t(d)};
        for (int jc = 0; jc < d; ++jc)
            for (int ir = 0; ir < d; ++ir) bm.set(std::size_t(ir), std::size_t(jc), basis[jc].get(std::size_t(ir)));
        auto inv = bm.inverse();
        GqModel m;
        m.dim = d - 1;
        for (const auto& vx : r.coords) {
            BitVector full = inv->mul(vx);
            BitVector q(std::size_t(d - 1));
            for (int i = 1; i < d; ++i) q.set(std::size_t(i - 1), full.get(std::size_t(i)));
            m.coords.push_back(std::move(q));
        }
        return m;
    }

    std::optional<rep::RepSpace> rs_;
    std::optional<std::vector<Model>> models_;
    std::optional<rep::CocycleGroup> full_, minimal_;
    std::optional<std::vector<YConfig>> ycfgs_;
    std::optional<GqData> gqd_;
    std::optional<std::vector<std::array<int, 3>>> arcs3_;
    std::optional<rep::GoodSubsetWitness> gsw_;
    std::map<std::pair<std::size_t, int>, QuadSub> quad_subs_;
    std::optional<bool> glued_shape_;
};

CheckResult base(const Ctx& c, const char* id) {
    CheckResult r;
    r.check = id;
    r.geometry = c.name;
    r.status = Status::Pass;
    return r;
}

CheckResult skip(CheckResult r, std::string reason) {
    r.status = Status::Skipped;
    r.reason = std::move(reason);
    return r;
}

CheckResult fail(CheckResult r, json witness, std::string reason) {
    r.status = Status::Fail;
    r.witness = std::move(witness);
    r.reason = std::move(reason);
    return r;
}

constexpr const char* kHexOnly = "applies to near hexagons";
constexpr const char* kGqOnly = "applies to generalized quadrangles";
constexpr const char* kNoBigPairs = "no disjoint pair of big quads";
constexpr const char* kNoProperSpan =
    "the span of every disjoint big-quad pair is the whole point set";

// ---------------------------------------------------------------------------
// Quad geometry (big-quad counting, glueing, outside-point projections).
// ---------------------------------------------------------------------------

// |P| >= |Q| (1 + 2(t - t2)) for every quad, with equality iff the quad is
// big; bigness is constant across quads of the same type.
CheckResult check_big_quad_point_count(Ctx& c) {
    auto r = base(c, "big_quad_point_count");
    if (!c.hexagon) return skip(r, kHexOnly);
    const auto& qi = c.g.quads();
    std::map<int, int> first_big;  // t2 -> 0/1 of the first quad seen
    for (int i = 0; i < int(qi.quads.size()); ++i) {
        const Quad& q = qi.quads[i];
        auto rep = geom::verify_big_quad_inequality(c.g, q);
        if (!rep.consistent)
            return fail(r,
                        json{{"quad", i}, {"t2", q.t2}, {"points", rep.lhs}, {"bound", rep.rhs},
                             {"big", q.big}},
                        "point count does not match the bigness of the quad");
        auto [it, fresh] = first_big.emplace(q.t2, q.big ? 1 : 0);
        if (!fresh && it->second != (q.big ? 1 : 0))
            return fail(r, json{{"quad", i}, {"t2", q.t2}},
                        "quads of one type disagree about being big");
    }
    if (qi.quads.empty()) return skip(r, "the geometry has no quads");
    return r;
}

// Disjoint big quads are isomorphic via nearest points, and x * z_x is
// again a big quad of the same type.
CheckResult check_disjoint_big_quad_glue(Ctx& c) {
    auto r = base(c, "disjoint_big_quad_glue");
    if (!c.hexagon) return skip(r, kHexOnly);
    const auto& cfgs = c.yconfigs();
    if (cfgs.empty()) return skip(r, kNoBigPairs);
    const auto& qi = c.g.quads();
    for (const auto& cf : cfgs) {
        Quad q3;
        try {
            q3 = geom::glue_quads(c.g, qi.quads[cf.q1], qi.quads[cf.q2]);
        } catch (const geom::GeometryError& e) {
            return fail(r, json{{"quads", {cf.q1, cf.q2}}, {"error", e.what()}},
                        "nearest-point map is not an isomorphism");
        }
        int a = q3.points[0], b = -1;
        for (int p : q3.points)
            if (c.g.dist(a, p) == 2) { b = p; break; }
        int id = b >= 0 ? qi.quad_of_pair[std::size_t(a) * c.n + b] : -1;
        if (id < 0 || qi.quads[id].points != q3.points || !qi.quads[id].big ||
            qi.quads[id].t2 != cf.t2)
            return fail(r, json{{"quads", {cf.q1, cf.q2}}},
                        "glued point set is not a big quad of the same type");
    }
    return r;
}

// For x outside Y = <Q1, Q2>: the projections and their partners form a
// quadrangle x1 ~ z_x1 ~ ... with both diagonals at distance two.
CheckResult check_outside_point_quadrangle(Ctx& c) {
    auto r = base(c, "outside_point_quadrangle");
    if (!c.hexagon) return skip(r, kHexOnly);
    const auto& cfgs = c.yconfigs();
    if (cfgs.empty()) return skip(r, kNoBigPairs);
    bool any = false;
    for (const auto& cf : cfgs) {
        if (!cf.proper) continue;
        any = true;
        if (!cf.ok)
            return fail(r, json{{"quads", {cf.q1, cf.q2}}, {"point", cf.bad_point}},
                        "projection into a big quad is not unique");
        for (int x = 0; x < c.n; ++x) {
            if (cf.y_bits.get(x)) continue;
            int x1 = cf.x1[x], x2 = cf.x2[x];
            int zx1 = cf.partner[x1], zx2 = cf.partner[x2];
            bool ok = c.g.dist(zx1, x2) == 1 && c.g.dist(zx2, x1) == 1 &&
                      c.g.dist(x1, x2) == 2 && c.g.dist(zx1, zx2) == 2;
            if (!ok)
                return fail(r,
                            json{{"quads", {cf.q1, cf.q2}}, {"x", x}, {"x1", x1}, {"x2", x2},
                                 {"z_x1", zx1}, {"z_x2", zx2}},
                            "projections of an outside point do not form a quadrangle");
        }
    }
    if (!any) return skip(r, kNoProperSpan);
    return r;
}

// For a line disjoint from Y and x != y on it: y1 lies on the line x1 z_x2
// exactly when y2 lies on x2 z_x1, and then the two projections pair up.
CheckResult check_outside_line_correspondence(Ctx& c) {
    auto r = base(c, "outside_line_correspondence");
    if (!c.hexagon) return skip(r, kHexOnly);
    const auto& cfgs = c.yconfigs();
    if (cfgs.empty()) return skip(r, kNoBigPairs);
    bool any_proper = false, any_line = false;
    for (const auto& cf : cfgs) {
        if (!cf.proper || !cf.ok) continue;
        any_proper = true;
        for (int li = 0; li < c.g.num_lines(); ++li) {
            const auto& l = c.g.line(li);
            if (cf.y_bits.get(l[0]) || cf.y_bits.get(l[1]) || cf.y_bits.get(l[2])) continue;
            any_line = true;
            for (int ia = 0; ia < 3; ++ia)
                for (int ib = ia + 1; ib < 3; ++ib) {
                    int x = l[ia], y = l[ib];
                    int x1 = cf.x1[x], x2 = cf.x2[x], y1 = cf.x1[y], y2 = cf.x2[y];
                    int zx1 = cf.partner[x1], zx2 = cf.partner[x2];
                    json w{{"quads", {cf.q1, cf.q2}}, {"line", li}, {"x", x}, {"y", y}};
                    if (!c.g.collinear(x1, zx2) || !c.g.collinear(x2, zx1))
                        return fail(r, w, "projection partners are not collinear");
                    int t1 = c.g.third_point(x1, zx2);  // x1 * z_x2 in q1
                    int t2p = c.g.third_point(x2, zx1); // x2 * z_x1 in q2
                    bool a_side = (y1 == zx2 || y1 == t1);
                    bool b_side = (y2 == zx1 || y2 == t2p);
                    if (a_side != b_side)
                        return fail(r, w, "line correspondence fails in one projection only");
                    if (a_side && !((y1 == zx2 && y2 == t2p) || (y1 == t1 && y2 == zx1)))
                        return fail(r, w, "paired projections do not swap partner and third point");
                }
        }
    }
    if (!any_proper) return skip(r, kNoProperSpan);
    if (!any_line) return skip(r, "no line is disjoint from the span of a disjoint big-quad pair");
    return r;
}

// d(z_x^i, z_y^j) is at most 2 exactly when the lines x^j y^j and
// x^j z_x^i coincide, and 3 otherwise.
CheckResult check_partner_line_distances(Ctx& c) {
    auto r = base(c, "partner_line_distances");
    if (!c.hexagon) return skip(r, kHexOnly);
    const auto& cfgs = c.yconfigs();
    if (cfgs.empty()) return skip(r, kNoBigPairs);
    bool any_proper = false, any_line = false;
    for (const auto& cf : cfgs) {
        if (!cf.proper || !cf.ok) continue;
        any_proper = true;
        for (int li = 0; li < c.g.num_lines(); ++li) {
            const auto& l = c.g.line(li);
            if (cf.y_bits.get(l[0]) || cf.y_bits.get(l[1]) || cf.y_bits.get(l[2])) continue;
            any_line = true;
            for (int ia = 0; ia < 3; ++ia)
                for (int ib = ia + 1; ib < 3; ++ib) {
                    int x = l[ia], y = l[ib];
                    json w{{"quads", {cf.q1, cf.q2}}, {"line", li}, {"x", x}, {"y", y}};
                    // (i, j) = (1, 2) and (2, 1)
                    for (int swap = 0; swap < 2; ++swap) {
                        int xj = swap ? cf.x1[x] : cf.x2[x];
                        int yj = swap ? cf.x1[y] : cf.x2[y];
                        int zxi = swap ? cf.partner[cf.x2[x]] : cf.partner[cf.x1[x]];
                        int zyj = cf.partner[yj];
                        if (xj == yj) return fail(r, w, "distinct outside points project together");
                        if (!c.g.collinear(xj, zxi))
                            return fail(r, w, "projection partner is not collinear");
                        bool coincide = (yj == zxi || yj == c.g.third_point(xj, zxi));
                        int d = c.g.dist(zxi, zyj);
                        if (coincide ? d > 2 : d != 3) {
                            w["distance"] = d;
                            w["coincide"] = coincide;
                            return fail(r, w, "partner distance disagrees with line coincidence");
                        }
                    }
                }
        }
    }
    if (!any_proper) return skip(r, kNoProperSpan);
    if (!any_line) return skip(r, "no line is disjoint from the span of a disjoint big-quad pair");
    return r;
}

// For a big quad disjoint from Y and x, y in it at distance two, the two
// cross partner distances are (2,3) or (3,2).
CheckResult check_outside_quad_distance_pattern(Ctx& c) {
    auto r = base(c, "outside_quad_distance_pattern");
    if (!c.hexagon) return skip(r, kHexOnly);
    const auto& cfgs = c.yconfigs();
    if (cfgs.empty()) return skip(r, kNoBigPairs);
    const auto& qi = c.g.quads();
    bool any_proper = false, any_quad = false;
    for (const auto& cf : cfgs) {
        if (!cf.proper || !cf.ok) continue;
        any_proper = true;
        for (int k = 0; k < int(qi.quads.size()); ++k) {
            const Quad& q = qi.quads[k];
            if (!q.big) continue;
            bool outside = true;
            for (int p : q.points)
                if (cf.y_bits.get(p)) { outside = false; break; }
            if (!outside) continue;
            any_quad = true;
            for (std::size_t ia = 0; ia < q.points.size(); ++ia)
                for (std::size_t ib = ia + 1; ib < q.points.size(); ++ib) {
                    int x = q.points[ia], y = q.points[ib];
                    if (c.g.dist(x, y) != 2) continue;
                    int da = c.g.dist(cf.partner[cf.x1[x]], cf.partner[cf.x2[y]]);
                    int db = c.g.dist(cf.partner[cf.x2[x]], cf.partner[cf.x1[y]]);
                    if (!((da == 2 && db == 3) || (da == 3 && db == 2)))
                        return fail(r,
                                    json{{"quads", {cf.q1, cf.q2}}, {"quad", k}, {"x", x},
                                         {"y", y}, {"distances", {da, db}}},
                                    "cross partner distances are not (2,3) or (3,2)");
                }
        }
    }
    if (!any_proper) return skip(r, kNoProperSpan);
    if (!any_quad) return skip(r, "no big quad is disjoint from the span of a disjoint big-quad pair");
    return r;
}

// ---------------------------------------------------------------------------
// GQ representation checks, quantified over all faithful linear models.
// ---------------------------------------------------------------------------

// Diameter-two geometries have zero distance-3 form: every model is abelian.
CheckResult check_gq_abelian_representation(Ctx& c) {
    auto r = base(c, "gq_abelian_representation");
    if (!c.gq) return skip(r, kGqOnly);
    const auto& rsp = c.rs();
    int nd = rep::np_dim(c.g);
    if (rsp.npdim != 0 || nd != 0)
        return fail(r, json{{"npdim", rsp.npdim}, {"independent_npdim", nd}},
                    "distance-3 form does not vanish");
    auto gr = rep::build_representation(rsp);
    if (gr.nonabelian()) return fail(r, json{}, "canonical model is non-abelian");
    return r;
}

// The faithful models are exactly V and its quotients by kernels avoiding
// point vectors and pair sums; the dimension set is {4}, {4,5} or {6} for
// t = 1, 2, 4 and no two-dimensional kernel survives.
CheckResult check_gq_model_orders(Ctx& c) {
    auto r = base(c, "gq_model_orders");
    if (!c.gq) return skip(r, kGqOnly);
    std::set<int> expect;
    if (c.t == 1) expect = {4};
    else if (c.t == 2) expect = {4, 5};
    else if (c.t == 4) expect = {6};
    else return skip(r, "line parameter outside the slim classification");
    const auto& gd = c.gq_models();
    std::set<int> dims;
    for (const auto& m : gd.models) dims.insert(m.dim);
    if (dims != expect)
        return fail(r, json{{"dims", std::vector<int>(dims.begin(), dims.end())}},
                    "faithful model dimensions differ from the expected set");
    if (gd.pair_kernel)
        return fail(r, json{}, "a two-dimensional faithful kernel exists");
    for (const auto& m : gd.models) {
        std::set<BitVector> img;
        for (const auto& v : m.coords) {
            if (v.is_zero())
                return fail(r, json{{"dim", m.dim}}, "a point maps to the identity");
            img.insert(v);
        }
        if (int(img.size()) != c.n)
            return fail(r, json{{"dim", m.dim}}, "point images collide");
        for (int li = 0; li < c.g.num_lines(); ++li) {
            const auto& l = c.g.line(li);
            if (!(m.coords[l[0]] ^ m.coords[l[1]] ^ m.coords[l[2]]).is_zero())
                return fail(r, json{{"dim", m.dim}, {"line", li}}, "line relation breaks");
        }
    }
    return r;
}

// Outside the 16-element t=2 model, the product of two distinct point
// images is a point image only for collinear points.
CheckResult check_gq_noncollinear_pair_product(Ctx& c) {
    auto r = base(c, "gq_noncollinear_pair_product");
    if (!c.gq) return skip(r, kGqOnly);
    for (const auto& m : c.gq_models().models) {
        if (c.t == 2 && m.dim == 4) continue;
        std::set<BitVector> img(m.coords.begin(), m.coords.end());
        for (int x = 0; x < c.n; ++x)
            for (int y = x + 1; y < c.n; ++y) {
                if (c.g.dist(x, y) != 2) continue;
                if (img.count(m.coords[x] ^ m.coords[y]))
                    return fail(r, json{{"dim", m.dim}, {"x", x}, {"y", y}},
                                "noncollinear pair product is a point image");
            }
    }
    return r;
}

// Every 15-point hyperplane section of GQ(2,4) that induces a (2,2)-subGQ
// spans a 5-dimensional subspace.
CheckResult check_gq_subquad_span(Ctx& c) {
    auto r = base(c, "gq_subquad_span");
    if (!c.gq) return skip(r, kGqOnly);
    if (c.t != 4) return skip(r, "applies to GQ(2,4)");
    const auto& rsp = c.rs();
    int found = 0;
    for (std::uint64_t w = 1; w < (std::uint64_t(1) << rsp.dim_v); ++w) {
        BitVector f = BitVector::from_word(std::size_t(rsp.dim_v), w);
        std::vector<int> sec;
        for (int x = 0; x < c.n; ++x)
            if (!f.dot(rsp.coords[x])) sec.push_back(x);
        if (sec.size() != 15) continue;
        auto ind = geom::induced_geometry(c.g, sec);
        if (!ind.g.connected()) continue;
        auto ulc = geom::uniform_line_count(ind.g);
        if (!ulc || *ulc != 3 || !geom::is_near_2n_gon(ind.g, 2)) continue;
        ++found;
        std::vector<BitVector> vecs;
        for (int x : sec) vecs.push_back(rsp.coords[x]);
        if (f2::rank_of(vecs) != 5)
            return fail(r, json{{"functional", f.to_string()}, {"rank", int(f2::rank_of(vecs))}},
                        "a (2,2)-subquadrangle does not span dimension five");
    }
    if (found == 0) return fail(r, json{}, "no (2,2)-subquadrangle section found");
    return r;
}

// In GQ(2,2): the 16-element model is exactly the one where every complete
// 3-arc multiplies to the identity.
CheckResult check_gq_triad_criterion(Ctx& c) {
    auto r = base(c, "gq_triad_criterion");
    if (!c.gq) return skip(r, kGqOnly);
    if (c.t != 2) return skip(r, "applies to GQ(2,2)");
    const auto& arcs = c.three_arcs();
    for (const auto& m : c.gq_models().models) {
        bool all_zero = true;
        std::array<int, 3> bad{-1, -1, -1};
        for (const auto& a : arcs) {
            if (!c.arc_complete(a)) continue;
            if (!(m.coords[a[0]] ^ m.coords[a[1]] ^ m.coords[a[2]]).is_zero()) {
                all_zero = false;
                if (bad[0] < 0) bad = a;
            }
        }
        if ((m.dim == 4) != all_zero)
            return fail(r, json{{"dim", m.dim}, {"arc", {bad[0], bad[1], bad[2]}}},
                        "complete 3-arc products disagree with the model size");
    }
    return r;
}

// In the 16-element model, a zero-sum triple is a line or a complete 3-arc.
CheckResult check_gq_zero_sum_triples(Ctx& c) {
    auto r = base(c, "gq_zero_sum_triples");
    if (!c.gq) return skip(r, kGqOnly);
    if (c.t != 2) return skip(r, "applies to GQ(2,2)");
    for (const auto& m : c.gq_models().models) {
        if (m.dim != 4) continue;
        for (int a = 0; a < c.n; ++a)
            for (int b = a + 1; b < c.n; ++b)
                for (int e = b + 1; e < c.n; ++e) {
                    if (!(m.coords[a] ^ m.coords[b] ^ m.coords[e]).is_zero()) continue;
                    int li = c.g.line_between(a, b);
                    bool is_line = li >= 0 && c.g.third_point(a, b) == e;
                    bool is_arc = c.g.dist(a, b) == 2 && c.g.dist(a, e) == 2 &&
                                  c.g.dist(b, e) == 2 && c.arc_complete({a, b, e});
                    if (!is_line && !is_arc)
                        return fail(r, json{{"triple", {a, b, e}}},
                                    "zero-sum triple is neither a line nor a complete 3-arc");
                }
    }
    return r;
}

// A 3-arc whose product is a point image forces the 16-element t=2 model,
// and the arc is incomplete.
CheckResult check_gq_arc_product_constraint(Ctx& c) {
    auto r = base(c, "gq_arc_product_constraint");
    if (!c.gq) return skip(r, kGqOnly);
    const auto& arcs = c.three_arcs();
    for (const auto& m : c.gq_models().models) {
        std::set<BitVector> img(m.coords.begin(), m.coords.end());
        for (const auto& a : arcs) {
            BitVector s = m.coords[a[0]] ^ m.coords[a[1]] ^ m.coords[a[2]];
            if (!img.count(s)) continue;
            if (!(c.t == 2 && m.dim == 4 && !c.arc_complete(a)))
                return fail(r, json{{"dim", m.dim}, {"arc", {a[0], a[1], a[2]}}},
                            "arc product is a point image outside the allowed model");
        }
    }
    return r;
}

// |{r_a r_x : x noncollinear a} meet {r_b r_x : x noncollinear b}| = t + 2
// for every noncollinear pair a, b.
CheckResult check_gq_pair_set_intersection(Ctx& c) {
    auto r = base(c, "gq_pair_set_intersection");
    if (!c.gq) return skip(r, kGqOnly);
    for (const auto& m : c.gq_models().models) {
        for (int a = 0; a < c.n; ++a)
            for (int b = a + 1; b < c.n; ++b) {
                if (c.g.dist(a, b) != 2) continue;
                std::set<BitVector> A, B;
                for (int x = 0; x < c.n; ++x) {
                    if (x != a && c.g.dist(a, x) == 2) A.insert(m.coords[a] ^ m.coords[x]);
                    if (x != b && c.g.dist(b, x) == 2) B.insert(m.coords[b] ^ m.coords[x]);
                }
                int common = 0;
                for (const auto& v : A) common += B.count(v) ? 1 : 0;
                if (common != c.t + 2)
                    return fail(r, json{{"dim", m.dim}, {"a", a}, {"b", b}, {"common", common}},
                                "pair-product sets meet in the wrong number of elements");
            }
    }
    return r;
}

// Nonzero non-point elements are noncollinear pair products, except for a
// single element in the 32-element t=2 model, which equals every complete
// 3-arc product.
CheckResult check_gq_nonpoint_element_form(Ctx& c) {
    auto r = base(c, "gq_nonpoint_element_form");
    if (!c.gq) return skip(r, kGqOnly);
    for (const auto& m : c.gq_models().models) {
        std::set<BitVector> img(m.coords.begin(), m.coords.end());
        std::set<BitVector> pair_sums;
        for (int x = 0; x < c.n; ++x)
            for (int y = x + 1; y < c.n; ++y)
                if (c.g.dist(x, y) == 2) pair_sums.insert(m.coords[x] ^ m.coords[y]);
        std::vector<BitVector> missing;
        for (std::uint64_t w = 1; w < (std::uint64_t(1) << m.dim); ++w) {
            BitVector v = BitVector::from_word(std::size_t(m.dim), w);
            if (!img.count(v) && !pair_sums.count(v)) missing.push_back(v);
        }
        if (c.t == 2 && m.dim == 4) {
            std::uint64_t nonpoint = (std::uint64_t(1) << m.dim) - 1 - img.size();
            if (nonpoint != 0)
                return fail(r, json{{"dim", m.dim}}, "16-element model has non-point elements");
            continue;
        }
        if (c.t == 2 && m.dim == 5) {
            if (missing.size() != 1)
                return fail(r, json{{"dim", m.dim}, {"missing", int(missing.size())}},
                            "expected exactly one inexpressible element");
            for (const auto& a : c.three_arcs()) {
                if (!c.arc_complete(a)) continue;
                if ((m.coords[a[0]] ^ m.coords[a[1]] ^ m.coords[a[2]]) != missing[0])
                    return fail(r, json{{"arc", {a[0], a[1], a[2]}}},
                                "complete 3-arc product differs from the special element");
            }
            continue;
        }
        if (!missing.empty())
            return fail(r, json{{"dim", m.dim}, {"element", missing[0].to_string()}},
                        "a non-point element is not a noncollinear pair product");
    }
    return r;
}

// ---------------------------------------------------------------------------
// Group model checks.
// ---------------------------------------------------------------------------

// The existence certificate agrees with what actually builds: full/any
// consistency flags versus the constructions, monotone in the quotient.
CheckResult check_representation_existence(Ctx& c) {
    auto r = base(c, "representation_existence");
    if (!c.hexagon && !c.gq) return skip(r, "applies to near polygons of diameter at most three");
    const auto& rsp = c.rs();
    auto er = rep::representation_existence(rsp);
    json w{{"full_model", er.full_model},       {"any_model", er.any_model},
           {"radical_dim", er.radical_dim},     {"singular_dim", er.singular_dim},
           {"full_rank_gap", er.full_rank_gap}, {"quotient_rank_gap", er.quotient_rank_gap}};
    bool built_full = true;
    try {
        rep::build_representation(rsp);
    } catch (const rep::InconsistentSystem&) {
        built_full = false;
    }
    if (built_full != er.full_model)
        return fail(r, w, "certificate disagrees with the full-space construction");
    if (built_full != (er.full_rank_gap == 0))
        return fail(r, w, "full-space rank gap disagrees with solvability");
    if (er.any_model != (er.quotient_rank_gap == 0))
        return fail(r, w, "quotient rank gap disagrees with the any-model flag");
    if (er.full_model && !er.any_model)
        return fail(r, w, "existence is not monotone in the quotient");
    if (er.radical_dim == 0 && er.full_model != er.any_model)
        return fail(r, w, "trivial radical but flags differ");
    if (er.radical_dim > 0 && er.singular_dim == er.radical_dim) {
        bool built_min = true;
        try {
            rep::build_minimal_representation(rsp);
        } catch (const rep::InconsistentSystem&) {
            built_min = false;
        }
        if (built_min != er.any_model)
            return fail(r, w, "certificate disagrees with the minimal-quotient construction");
    }
    return r;
}

// Point images do not commute exactly at distance three, where they
// generate dihedral groups of order 8; the model has exponent 4, derived
// subgroup {1, theta}, and is faithful with no central point image.
CheckResult check_commutation_distance(Ctx& c) {
    auto r = base(c, "commutation_distance");
    if (!c.hexagon) return skip(r, kHexOnly);
    const auto& ms = c.models();
    if (ms.empty()) return skip(r, c.no_model_reason);
    for (const auto& m : ms) {
        const auto& gr = *m.gr;
        std::set<BitVector> img;
        int dihedral_budget = 50;
        for (int x = 0; x < c.n; ++x) {
            const auto& ex = gr.point_image(x);
            img.insert(ex.v);
            if (gr.element_order(ex) != 2)
                return fail(r, json{{"model", m.label}, {"x", x}},
                            "a point image is not an involution");
            if (Ctx::central_vec(m, ex.v))
                return fail(r, json{{"model", m.label}, {"x", x}}, "a point image is central");
            for (int y = x + 1; y < c.n; ++y) {
                bool nc = gr.beta(ex.v, gr.point_image(y).v);
                if (nc != (c.g.dist(x, y) == 3))
                    return fail(r, json{{"model", m.label}, {"x", x}, {"y", y},
                                        {"distance", c.g.dist(x, y)}},
                                "commutation pattern differs from the distance-3 relation");
                if (nc && dihedral_budget > 0) {
                    --dihedral_budget;
                    auto cl = rep::subgroup_closure(gr, {ex, gr.point_image(y)});
                    int order4 = 0;
                    for (const auto& e : cl)
                        if (gr.element_order(e) == 4) ++order4;
                    if (cl.size() != 8 || order4 != 2)
                        return fail(r, json{{"model", m.label}, {"x", x}, {"y", y},
                                            {"order", int(cl.size())}, {"order4", order4}},
                                    "a distance-3 pair does not generate a dihedral group of order 8");
                }
            }
        }
        if (int(img.size()) != c.n)
            return fail(r, json{{"model", m.label}}, "point images collide");
        if (!gr.nonabelian()) return fail(r, json{{"model", m.label}}, "model is abelian");
        // Exponent four: squares land in {1, theta}, and order four occurs.
        std::mt19937 rng(7u);
        bool seen4 = false;
        for (int it = 0; it < 64; ++it) {
            BitVector v(std::size_t(gr.dim()));
            for (int i = 0; i < gr.dim(); ++i) v.set(std::size_t(i), (rng() & 1u) != 0);
            GroupElement e{v, (rng() & 1u) != 0};
            GroupElement sq = gr.mul(e, e);
            if (!sq.v.is_zero())
                return fail(r, json{{"model", m.label}}, "a square is not central");
            if (!gr.mul(sq, sq).v.is_zero() || gr.mul(sq, sq).c)
                return fail(r, json{{"model", m.label}}, "an element has order above four");
            if (gr.element_order(e) == 4) seen4 = true;
        }
        if (!seen4) return fail(r, json{{"model", m.label}}, "no element of order four sampled");
    }
    return r;
}

// |R| = 2^(1 + dim V) for the canonical model and 2^(1 + npdim) for the
// minimal quotient, never more.
CheckResult check_group_order_bound(Ctx& c) {
    auto r = base(c, "group_order_bound");
    if (!c.hexagon) return skip(r, kHexOnly);
    const auto& ms = c.models();
    if (ms.empty()) return skip(r, c.no_model_reason);
    const auto& rsp = c.rs();
    for (const auto& m : ms) {
        int expect = (m.label == "full") ? 1 + rsp.dim_v : 1 + rsp.npdim;
        if (m.gr->order_log2() != expect || m.gr->order_log2() > 1 + rsp.dim_v)
            return fail(r, json{{"model", m.label}, {"order_log2", m.gr->order_log2()},
                                {"expected", expect}},
                        "group order disagrees with the module dimension");
    }
    return r;
}

// R is the central product of an extraspecial subgroup of order
// 2^(1 + npdim) and its center; the minimal quotient is extraspecial with
// a type matching its own squaring form.
CheckResult check_central_product_structure(Ctx& c) {
    auto r = base(c, "central_product_structure");
    if (!c.hexagon) return skip(r, kHexOnly);
    const auto& ms = c.models();
    if (ms.empty()) return skip(r, c.no_model_reason);
    const auto& rsp = c.rs();
    for (const auto& m : ms) {
        const auto& gr = *m.gr;
        if (m.label == "full") {
            auto cd = rep::central_decomposition(gr, rsp);
            auto ci = rep::center(gr, rsp);
            json w{{"model", m.label}, {"e_order_log2", cd.e_order_log2},
                   {"z_order_log2", cd.z_order_log2}, {"checks_ok", cd.checks_ok}};
            if (!cd.checks_ok || cd.e_order_log2 != 1 + rsp.npdim ||
                cd.z_order_log2 != ci.order_log2 ||
                cd.e_order_log2 + cd.z_order_log2 - 1 != gr.order_log2())
                return fail(r, w, "central product decomposition fails");
            auto mq = rep::minimal_quotient(gr, rsp);
            if (mq.order_log2 != 1 + rsp.npdim || mq.quotient_dim != rsp.npdim)
                return fail(r, json{{"model", m.label}, {"order_log2", mq.order_log2}},
                            "minimal quotient order disagrees with npdim");
        } else {
            // Minimal model: center must be exactly {1, theta}.
            BitMatrix beta_m(std::size_t(gr.dim()), std::size_t(gr.dim()));
            for (int i = 0; i < gr.dim(); ++i)
                for (int j = 0; j < gr.dim(); ++j)
                    beta_m.set(std::size_t(i), std::size_t(j),
                               gr.beta(BitVector::unit(std::size_t(gr.dim()), std::size_t(i)),
                                       BitVector::unit(std::size_t(gr.dim()), std::size_t(j))));
            if (!f2::radical(beta_m).empty())
                return fail(r, json{{"model", m.label}}, "minimal model has a nontrivial radical");
            auto mq = rep::minimal_quotient(*c.models()[0].gr, rsp);
            f2::QuadraticForm qf(gr.cocycle());
            auto ft = f2::arf_type(qf);
            bool plus = (ft == f2::FormType::Plus);
            if (mq.type == rep::GroupType::NotExtraspecial ||
                (mq.type == rep::GroupType::Plus) != plus)
                return fail(r, json{{"model", m.label}},
                            "minimal quotient type disagrees with the squaring form");
        }
    }
    return r;
}

// The good-subset images generate an elementary abelian subgroup meeting
// the center trivially, so |R| >= 2^(2|X| + 3); equality forces an
// extraspecial model with that subgroup maximal abelian.
CheckResult check_abelian_subgroup_bound(Ctx& c) {
    auto r = base(c, "abelian_subgroup_bound");
    if (!c.hexagon) return skip(r, kHexOnly);
    const auto& ms = c.models();
    if (ms.empty()) return skip(r, c.no_model_reason);
    const auto& gs = c.good_subset();
    for (const auto& m : ms) {
        const auto& gr = *m.gr;
        std::vector<BitVector> W;
        for (int x : gs.X) W.push_back(gr.point_image(x).v);
        W.push_back(gr.point_image(gs.b).v);
        json w{{"model", m.label}, {"a", gs.a}, {"b", gs.b}, {"X", gs.X}};
        for (std::size_t i = 0; i < W.size(); ++i)
            for (std::size_t j = i + 1; j < W.size(); ++j)
                if (gr.beta(W[i], W[j]))
                    return fail(r, w, "good-subset images do not commute");
        std::size_t k = gs.X.size() + 1;
        if (f2::rank_of(W) != k)
            return fail(r, w, "good-subset images are dependent");
        std::vector<BitVector> wr = W;
        wr.insert(wr.end(), m.radical.begin(), m.radical.end());
        if (f2::rank_of(wr) != k + m.radical.size())
            return fail(r, w, "good-subset span meets the center");
        int bound = 2 * int(k) + 1;
        if (gr.order_log2() < bound)
            return fail(r, w, "group order beats the abelian-subgroup bound");
        if (gr.order_log2() == bound) {
            if (!m.radical.empty())
                return fail(r, w, "bound attained but the model is not extraspecial");
            BitMatrix pair_m(W.size(), std::size_t(gr.dim()));
            for (std::size_t i = 0; i < W.size(); ++i)
                for (int j = 0; j < gr.dim(); ++j)
                    pair_m.set(i, std::size_t(j),
                               gr.beta(W[i], BitVector::unit(std::size_t(gr.dim()), std::size_t(j))));
            for (const auto& v : pair_m.nullspace())
                if (!f2::in_span(W, v))
                    return fail(r, w, "bound attained but the abelian subgroup is not maximal");
        }
    }
    return r;
}

// [r_x, prod_{y in Y} r_y] = 1 exactly when |Y| is even, for random
// subsets Y of the distance-3 sphere of x.
CheckResult check_subset_parity_commutation(Ctx& c) {
    auto r = base(c, "subset_parity_commutation");
    if (!c.hexagon) return skip(r, kHexOnly);
    const auto& ms = c.models();
    if (ms.empty()) return skip(r, c.no_model_reason);
    std::mt19937 rng(20260823u);
    std::vector<int> xs(std::size_t(c.n));
    for (int i = 0; i < c.n; ++i) xs[std::size_t(i)] = i;
    if (c.n > 120) {
        for (int i = c.n - 1; i > 0; --i)
            std::swap(xs[std::size_t(i)], xs[rng() % std::uint32_t(i + 1)]);
        xs.resize(120);
        std::sort(xs.begin(), xs.end());
    }
    for (const auto& m : ms) {
        const auto& gr = *m.gr;
        for (int x : xs) {
            auto far = c.g.sphere(x, 3);
            if (far.empty()) continue;
            for (int trial = 0; trial < 12; ++trial) {
                GroupElement prod = gr.identity();
                int count = 0;
                for (int y : far)
                    if (rng() & 1u) {
                        prod = gr.mul(prod, gr.point_image(y));
                        ++count;
                    }
                bool commutes = !gr.commutator(gr.point_image(x), prod).c;
                if (commutes != (count % 2 == 0))
                    return fail(r, json{{"model", m.label}, {"x", x}, {"subset_size", count}},
                                "commutator parity disagrees with the subset size");
            }
        }
    }
    return r;
}

// A quad subgroup meeting the center nontrivially forces a (2,2) quad of
// order 32 whose central part is {1, r_a r_b r_c} for every complete
// 3-arc of the quad.
CheckResult check_quad_center_intersection(Ctx& c) {
    auto r = base(c, "quad_center_intersection");
    if (!c.hexagon) return skip(r, kHexOnly);
    const auto& ms = c.models();
    if (ms.empty()) return skip(r, c.no_model_reason);
    const auto& qi = c.g.quads();
    for (std::size_t mi = 0; mi < ms.size(); ++mi) {
        const auto& gr = *ms[mi].gr;
        for (int k = 0; k < int(qi.quads.size()); ++k) {
            const auto& qs = c.quad_sub(mi, k);
            if (qs.zi.size() <= 1) continue;
            const Quad& q = qi.quads[k];
            json w{{"model", ms[mi].label}, {"quad", k}, {"t2", q.t2},
                   {"order", int(qs.elems.size())}, {"central", int(qs.zi.size())}};
            if (q.t2 != 2 || qs.elems.size() != 32 || qs.zi.size() != 2)
                return fail(r, w, "central intersection allowed only for (2,2) quads of order 32");
            GroupElement z = qs.zi[0] == gr.identity() ? qs.zi[1] : qs.zi[0];
            const auto& pts = q.points;
            for (std::size_t ia = 0; ia < pts.size(); ++ia)
                for (std::size_t ib = ia + 1; ib < pts.size(); ++ib)
                    for (std::size_t ic = ib + 1; ic < pts.size(); ++ic) {
                        int a = pts[ia], b = pts[ib], e = pts[ic];
                        if (c.g.dist(a, b) != 2 || c.g.dist(a, e) != 2 || c.g.dist(b, e) != 2)
                            continue;
                        bool complete = true;
                        for (int p : pts) {
                            if (p == a || p == b || p == e) continue;
                            if (c.g.dist(p, a) == 2 && c.g.dist(p, b) == 2 && c.g.dist(p, e) == 2) {
                                complete = false;
                                break;
                            }
                        }
                        if (!complete) continue;
                        GroupElement prod =
                            gr.mul(gr.mul(gr.point_image(a), gr.point_image(b)), gr.point_image(e));
                        if (!(prod == z)) {
                            w["arc"] = {a, b, e};
                            return fail(r, w, "complete 3-arc product is not the central element");
                        }
                    }
        }
    }
    return r;
}

// Subgroups of disjoint big quads of type other than (2,2) intersect
// trivially.
CheckResult check_disjoint_big_quad_subgroups(Ctx& c) {
    auto r = base(c, "disjoint_big_quad_subgroups");
    if (!c.hexagon) return skip(r, kHexOnly);
    const auto& ms = c.models();
    if (ms.empty()) return skip(r, c.no_model_reason);
    const auto& cfgs = c.yconfigs();
    if (cfgs.empty()) return skip(r, kNoBigPairs);
    bool any = false;
    for (std::size_t mi = 0; mi < ms.size(); ++mi) {
        for (const auto& cf : cfgs) {
            if (cf.t2 == 2) continue;
            any = true;
            const auto& s1 = c.quad_sub(mi, cf.q1).elems;
            const auto& s2 = c.quad_sub(mi, cf.q2).elems;
            std::vector<GroupElement> both;
            std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(),
                                  std::back_inserter(both));
            if (both.size() != 1 || !(both[0] == ms[mi].gr->identity()))
                return fail(r, json{{"model", ms[mi].label}, {"quads", {cf.q1, cf.q2}},
                                    {"common", int(both.size())}},
                            "disjoint big-quad subgroups share a nontrivial element");
        }
    }
    if (!any) return skip(r, "no disjoint big-quad pair of type other than (2,2)");
    return r;
}

// A (2,2) quad is ovoidal exactly when its subgroup has order 32 and meets
// the center trivially; geometrically every ovoidal quad admits a
// five-point nearest-point ovoid.
CheckResult check_ovoidal_quad_criterion(Ctx& c) {
    auto r = base(c, "ovoidal_quad_criterion");
    if (!c.hexagon) return skip(r, kHexOnly);
    const auto& qi = c.g.quads();
    bool any = false;
    for (int k = 0; k < int(qi.quads.size()); ++k) {
        const Quad& q = qi.quads[k];
        if (q.t2 != 2) continue;
        any = true;
        auto rep = geom::verify_big_quad_inequality(c.g, q);
        if (!rep.consistent)
            return fail(r, json{{"quad", k}}, "point count does not match the bigness of the quad");
        if (!q.big) {
            bool seen_ovoid = false;
            for (int x = 0; x < c.n && !seen_ovoid; ++x) {
                if (std::binary_search(q.points.begin(), q.points.end(), x)) continue;
                auto pc = geom::classify_point_quad(c.g, x, q);
                if (!pc.classical) {
                    if (pc.ovoid.size() != 5)
                        return fail(r, json{{"quad", k}, {"x", x}, {"ovoid", int(pc.ovoid.size())}},
                                    "nearest points of an ovoidal quad are not a five-point ovoid");
                    seen_ovoid = true;
                }
            }
            if (!seen_ovoid)
                return fail(r, json{{"quad", k}}, "no point sees the quad ovoidally");
        }
    }
    if (!any) return skip(r, "no quads of type (2,2)");
    const auto& ms = c.models();
    for (std::size_t mi = 0; mi < ms.size(); ++mi) {
        for (int k = 0; k < int(qi.quads.size()); ++k) {
            const Quad& q = qi.quads[k];
            if (q.t2 != 2) continue;
            const auto& qs = c.quad_sub(mi, k);
            bool criterion = qs.elems.size() == 32 && qs.zi.size() == 1;
            if (criterion != !q.big)
                return fail(r, json{{"model", ms[mi].label}, {"quad", k}, {"big", q.big},
                                    {"order", int(qs.elems.size())},
                                    {"central", int(qs.zi.size())}},
                            "ovoidal classification disagrees with the subgroup criterion");
        }
    }
    return r;
}

// The canonical good subset X yields an elementary abelian subgroup of
// order 2^(|X|+1) meeting the center trivially, so |R| >= 2^(2|X|+3).
CheckResult check_good_subset_lower_bound(Ctx& c) {
    auto r = base(c, "good_subset_lower_bound");
    if (!c.hexagon) return skip(r, kHexOnly);
    const auto& ms = c.models();
    if (ms.empty()) return skip(r, c.no_model_reason);
    const auto& gs = c.good_subset();
    json w{{"a", gs.a}, {"b", gs.b}, {"X", gs.X}};
    if (c.g.dist(gs.a, gs.b) != 3) return fail(r, w, "base pair is not at distance three");
    if (int(gs.A.size()) != int(c.g.lines_through(gs.a).size()))
        return fail(r, w, "candidate set does not pick one point per line");
    for (int x : gs.A)
        if (c.g.dist(gs.a, x) != 1 || c.g.dist(gs.b, x) != 2)
            return fail(r, w, "candidate point at the wrong distances");
    for (const auto& m : ms) {
        const auto& gr = *m.gr;
        std::vector<GroupElement> gens;
        for (int x : gs.X) gens.push_back(gr.point_image(x));
        gens.push_back(gr.point_image(gs.b));
        auto sub = rep::subgroup_closure(gr, gens);
        std::size_t expect = std::size_t(1) << (gs.X.size() + 1);
        w["model"] = m.label;
        if (sub.size() != expect)
            return fail(r, w, "good-subset subgroup has unexpected order");
        for (const auto& e : sub)
            if (Ctx::central_vec(m, e.v) && !(e == gr.identity()))
                return fail(r, w, "good-subset subgroup meets the center");
        if (gr.order_log2() < 2 * int(gs.X.size()) + 3)
            return fail(r, w, "group order beats the good-subset bound");
    }
    return r;
}

// Any candidate subset whose vector sum is central has support at least 3,
// and its support parity matches the parity of each quad trace.
CheckResult check_central_element_support(Ctx& c) {
    auto r = base(c, "central_element_support");
    if (!c.hexagon) return skip(r, kHexOnly);
    const auto& rsp = c.rs();
    const auto& gs = c.good_subset();
    const auto& qi = c.g.quads();
    int na = int(gs.A.size());
    int nr = int(rsp.radical_basis.size());
    BitMatrix cols(std::size_t(rsp.dim_v), std::size_t(na + nr));
    for (int j = 0; j < na; ++j)
        for (int i = 0; i < rsp.dim_v; ++i)
            cols.set(std::size_t(i), std::size_t(j), rsp.coords[gs.A[std::size_t(j)]].get(std::size_t(i)));
    for (int j = 0; j < nr; ++j)
        for (int i = 0; i < rsp.dim_v; ++i)
            cols.set(std::size_t(i), std::size_t(na + j), rsp.radical_basis[std::size_t(j)].get(std::size_t(i)));
    auto ns = cols.nullspace();
    if (ns.size() > 20)
        return fail(r, json{{"kernel_dim", int(ns.size())}}, "relation space unexpectedly large");
    std::set<std::vector<int>> supports;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << ns.size()); ++mask) {
        BitVector combo(std::size_t(na + nr));
        for (std::size_t i = 0; i < ns.size(); ++i)
            if (mask & (std::uint64_t(1) << i)) combo ^= ns[i];
        std::vector<int> supp;
        for (int j = 0; j < na; ++j)
            if (combo.get(std::size_t(j))) supp.push_back(gs.A[std::size_t(j)]);
        if (!supp.empty()) supports.insert(std::move(supp));
    }
    for (const auto& supp : supports) {
        json w{{"support", supp}};
        if (supp.size() < 3)
            return fail(r, w, "central combination supported on fewer than three points");
        for (std::size_t i = 0; i < supp.size(); ++i)
            for (std::size_t j = i + 1; j < supp.size(); ++j) {
                if (c.g.dist(supp[i], supp[j]) != 2)
                    return fail(r, w, "support points are not pairwise at distance two");
                int qid = qi.quad_of_pair[std::size_t(supp[i]) * c.n + supp[j]];
                if (qid < 0) return fail(r, w, "support pair lies in no quad");
                const auto& qp = qi.quads[qid].points;
                int inside = 0;
                for (int p : supp)
                    if (std::binary_search(qp.begin(), qp.end(), p)) ++inside;
                if (inside % 2 != int(supp.size()) % 2) {
                    w["pair"] = {supp[i], supp[j]};
                    w["trace"] = inside;
                    return fail(r, w, "support parity differs from the quad trace parity");
                }
            }
    }
    return r;
}

// The canonical good subset has the expected size for this geometry and
// matches half the non-abelian dimension minus one.
CheckResult check_good_subset_sizes(Ctx& c) {
    auto r = base(c, "good_subset_sizes");
    if (!c.hexagon) return skip(r, kHexOnly);
    static const std::map<std::string, int> expected{
        {"hex_i", 10}, {"hex_ii", 11}, {"hex_iii", 9}, {"hex_iv", 9}, {"hex_v", 9}};
    auto it = expected.find(c.name);
    if (it == expected.end()) return skip(r, "no expected good-subset size for this geometry");
    const auto& gs = c.good_subset();
    json w{{"a", gs.a}, {"b", gs.b}, {"size", int(gs.X.size())}, {"expected", it->second}};
    if (int(gs.X.size()) != it->second)
        return fail(r, w, "good-subset size differs from the expected value");
    if (c.rs().npdim != 2 * it->second + 2)
        return fail(r, w, "good-subset size does not match half the non-abelian dimension");
    return r;
}

// ---------------------------------------------------------------------------
// Glued-hexagon structure (two disjoint big (2,4)-quads spanning a proper
// subspace).
// ---------------------------------------------------------------------------

std::vector<const YConfig*> big24_configs(Ctx& c) {
    std::vector<const YConfig*> out;
    for (const auto& cf : c.yconfigs())
        if (cf.t2 == 4 && cf.proper && cf.ok) out.push_back(&cf);
    return out;
}

constexpr const char* kNo24Span =
    "no proper subspace spanned by two disjoint big (2,4)-quads";

// The 18 big quads split into two families of nine; each family partitions
// the points and forms an affine plane of order three under glueing, and
// quads from different families meet in a line.
CheckResult check_glued_quad_families(Ctx& c) {
    auto r = base(c, "glued_quad_families");
    if (!c.hexagon) return skip(r, kHexOnly);
    if (!c.glued_shape()) return skip(r, "the geometry does not match the glued-hexagon parameters");
    const auto& qi = c.g.quads();
    std::vector<int> bigs;
    for (int k = 0; k < int(qi.quads.size()); ++k)
        if (qi.quads[k].big && qi.quads[k].t2 == 4) bigs.push_back(k);
    if (bigs.size() != 18)
        return fail(r, json{{"big_quads", int(bigs.size())}}, "expected 18 big (2,4)-quads");
    // Components of the disjointness graph.
    std::map<int, int> comp;
    for (int k : bigs) comp[k] = -1;
    int ncomp = 0;
    for (int k : bigs) {
        if (comp[k] >= 0) continue;
        std::vector<int> stack{k};
        comp[k] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : bigs)
                if (comp[v] < 0 && disjoint_sorted(qi.quads[u].points, qi.quads[v].points)) {
                    comp[v] = ncomp;
                    stack.push_back(v);
                }
        }
        ++ncomp;
    }
    if (ncomp != 2) return fail(r, json{{"families", ncomp}}, "expected two families");
    for (int f = 0; f < 2; ++f) {
        std::vector<int> fam;
        for (int k : bigs)
            if (comp[k] == f) fam.push_back(k);
        if (fam.size() != 9)
            return fail(r, json{{"family", f}, {"size", int(fam.size())}},
                        "expected nine quads per family");
        std::vector<int> cover(std::size_t(c.n), 0);
        for (int k : fam)
            for (int p : qi.quads[k].points) ++cover[std::size_t(p)];
        for (int p = 0; p < c.n; ++p)
            if (cover[std::size_t(p)] != 1)
                return fail(r, json{{"family", f}, {"point", p}},
                            "family does not partition the point set");
        // Affine plane of order three: 12 glue-lines, each pair on one.
        std::map<std::pair<int, int>, std::vector<int>> line_of_pair;
        std::set<std::vector<int>> lines;
        for (std::size_t i = 0; i < fam.size(); ++i)
            for (std::size_t j = i + 1; j < fam.size(); ++j) {
                if (!disjoint_sorted(qi.quads[fam[i]].points, qi.quads[fam[j]].points))
                    return fail(r, json{{"family", f}, {"quads", {fam[i], fam[j]}}},
                                "family members are not pairwise disjoint");
                Quad q3 = geom::glue_quads(c.g, qi.quads[fam[i]], qi.quads[fam[j]]);
                int a = q3.points[0], b = -1;
                for (int p : q3.points)
                    if (c.g.dist(a, p) == 2) { b = p; break; }
                int id = b >= 0 ? qi.quad_of_pair[std::size_t(a) * c.n + b] : -1;
                if (id < 0 || comp.find(id) == comp.end() || comp[id] != f)
                    return fail(r, json{{"family", f}, {"quads", {fam[i], fam[j]}}},
                                "glued quad leaves the family");
                std::vector<int> tri{fam[i], fam[j], id};
                std::sort(tri.begin(), tri.end());
                lines.insert(tri);
                line_of_pair[{fam[i], fam[j]}] = tri;
            }
        if (lines.size() != 12)
            return fail(r, json{{"family", f}, {"lines", int(lines.size())}},
                        "expected twelve glue-lines per family");
        for (const auto& [pair, tri] : line_of_pair) {
            int third = tri[0] ^ tri[1] ^ tri[2] ^ pair.first ^ pair.second;
            Quad q3 = geom::glue_quads(c.g, qi.quads[pair.first], qi.quads[third]);
            if (!std::binary_search(qi.quads[pair.second].points.begin(),
                                    qi.quads[pair.second].points.end(), q3.points[0]))
                return fail(r, json{{"family", f}, {"line", tri}},
                            "glue-line is not closed under glueing");
        }
    }
    // Cross-family quads meet in a line.
    for (int k1 : bigs)
        for (int k2 : bigs) {
            if (k1 >= k2 || comp[k1] == comp[k2]) continue;
            std::vector<int> common;
            std::set_intersection(qi.quads[k1].points.begin(), qi.quads[k1].points.end(),
                                  qi.quads[k2].points.begin(), qi.quads[k2].points.end(),
                                  std::back_inserter(common));
            bool is_line = common.size() == 3 && c.g.line_between(common[0], common[1]) >= 0 &&
                           c.g.third_point(common[0], common[1]) == common[2];
            if (!is_line)
                return fail(r, json{{"quads", {k1, k2}}, {"common", int(common.size())}},
                            "cross-family quads do not meet in a line");
        }
    return r;
}

// Every point outside Y factors as r_x = m1 m2 n_x with m1, m2 the images
// of its projection partners and n_x a non-central involution commuting
// with the span of Y; r_x itself stays outside that span.
CheckResult check_glued_point_decomposition(Ctx& c) {
    auto r = base(c, "glued_point_decomposition");
    if (!c.hexagon) return skip(r, kHexOnly);
    auto cfgs = big24_configs(c);
    if (cfgs.empty()) return skip(r, kNo24Span);
    const auto& ms = c.models();
    if (ms.empty()) return skip(r, c.no_model_reason);
    for (const auto& m : ms) {
        const auto& gr = *m.gr;
        for (const auto* cf : cfgs) {
            std::vector<BitVector> ybasis;
            for (int p : cf->y) {
                const BitVector& v = gr.point_image(p).v;
                if (!f2::in_span(ybasis, v)) ybasis.push_back(v);
            }
            for (int x = 0; x < c.n; ++x) {
                if (cf->y_bits.get(x)) continue;
                GroupElement m1 = gr.point_image(cf->partner[cf->x2[x]]);
                GroupElement m2 = gr.point_image(cf->partner[cf->x1[x]]);
                GroupElement rx = gr.point_image(x);
                GroupElement nx = gr.mul(gr.inverse(gr.mul(m1, m2)), rx);
                json w{{"model", m.label}, {"quads", {cf->q1, cf->q2}}, {"x", x}};
                if (f2::in_span(ybasis, rx.v))
                    return fail(r, w, "outside point image lies in the span of Y");
                if (gr.q(nx.v))
                    return fail(r, w, "residual factor is not an involution");
                if (Ctx::central_vec(m, nx.v))
                    return fail(r, w, "residual factor is central");
                for (const auto& yb : ybasis)
                    if (gr.beta(nx.v, yb))
                        return fail(r, w, "residual factor does not centralize the span of Y");
                if (!(gr.mul(gr.mul(m1, m2), nx) == rx))
                    return fail(r, w, "decomposition does not reconstruct the point image");
            }
        }
    }
    return r;
}

// On a big quad disjoint from Y the residual factors commute exactly for
// equal or collinear points, are pairwise distinct, and each line product
// is 1 or theta; the theta-free lines form a spread.
CheckResult check_glued_delta_spread(Ctx& c) {
    auto r = base(c, "glued_delta_spread");
    if (!c.hexagon) return skip(r, kHexOnly);
    auto cfgs = big24_configs(c);
    if (cfgs.empty()) return skip(r, kNo24Span);
    const auto& ms = c.models();
    if (ms.empty()) return skip(r, c.no_model_reason);
    const auto& qi = c.g.quads();
    bool any_quad = false;
    for (const auto& m : ms) {
        const auto& gr = *m.gr;
        for (const auto* cf : cfgs) {
            for (int k = 0; k < int(qi.quads.size()); ++k) {
                const Quad& q = qi.quads[k];
                if (!q.big || q.t2 != 4) continue;
                bool outside = true;
                for (int p : q.points)
                    if (cf->y_bits.get(p)) { outside = false; break; }
                if (!outside) continue;
                any_quad = true;
                json w{{"model", m.label}, {"quads", {cf->q1, cf->q2}}, {"quad", k}};
                std::map<int, GroupElement> delta;
                std::set<GroupElement> seen;
                for (int p : q.points) {
                    GroupElement m1 = gr.point_image(cf->partner[cf->x2[p]]);
                    GroupElement m2 = gr.point_image(cf->partner[cf->x1[p]]);
                    GroupElement np = gr.mul(gr.inverse(gr.mul(m1, m2)), gr.point_image(p));
                    delta.emplace(p, np);
                    seen.insert(np);
                }
                if (seen.size() != q.points.size())
                    return fail(r, w, "residual factors are not injective on the quad");
                for (std::size_t ia = 0; ia < q.points.size(); ++ia)
                    for (std::size_t ib = ia + 1; ib < q.points.size(); ++ib) {
                        int x = q.points[ia], y = q.points[ib];
                        bool commutes = !gr.commutator(delta.at(x), delta.at(y)).c;
                        if (commutes != c.g.collinear(x, y)) {
                            w["pair"] = {x, y};
                            return fail(r, w,
                                        "residual commutation differs from collinearity on the quad");
                        }
                    }
                std::map<int, int> flagged;  // point -> number of theta-free lines
                for (int p : q.points) flagged[p] = 0;
                int nlines = 0, nflagged = 0;
                for (int li = 0; li < c.g.num_lines(); ++li) {
                    const auto& l = c.g.line(li);
                    if (!std::binary_search(q.points.begin(), q.points.end(), l[0]) ||
                        !std::binary_search(q.points.begin(), q.points.end(), l[1]) ||
                        !std::binary_search(q.points.begin(), q.points.end(), l[2]))
                        continue;
                    ++nlines;
                    GroupElement prod =
                        gr.mul(gr.mul(delta.at(l[0]), delta.at(l[1])), delta.at(l[2]));
                    if (!prod.v.is_zero()) {
                        w["line"] = li;
                        return fail(r, w, "line product of residual factors is not central");
                    }
                    if (!prod.c) {
                        ++nflagged;
                        for (int p : {l[0], l[1], l[2]}) ++flagged[p];
                    }
                }
                for (const auto& [p, cnt] : flagged)
                    if (cnt != 1) {
                        w["point"] = p;
                        w["flagged_lines"] = cnt;
                        return fail(r, w, "theta-free lines do not form a spread");
                    }
                if (nflagged * 3 != int(q.points.size())) {
                    w["flagged_total"] = nflagged;
                    return fail(r, w, "spread size disagrees with the quad size");
                }
                (void)nlines;
            }
        }
    }
    if (!any_quad) return skip(r, "no big (2,4)-quad is disjoint from the span");
    return r;
}

// The centralizer of the span of Y has a six-dimensional minus-type
// quadratic space; quadrangle centralizers inside it are quaternion of
// order eight, with the three remaining perp points hitting its order-4
// elements. The span of Y itself carries a plus-type form.
CheckResult check_glued_quaternion_subgroup(Ctx& c) {
    auto r = base(c, "glued_quaternion_subgroup");
    if (!c.hexagon) return skip(r, kHexOnly);
    if (!c.glued_shape()) return skip(r, "the geometry does not match the glued-hexagon parameters");
    auto cfgs = big24_configs(c);
    if (cfgs.empty()) return skip(r, kNo24Span);
    const auto& ms = c.models();
    if (ms.empty()) return skip(r, c.no_model_reason);
    const auto& gr = *ms[0].gr;
    const YConfig& cf = *cfgs[0];
    std::vector<BitVector> ybasis;
    for (int p : cf.y) {
        const BitVector& v = gr.point_image(p).v;
        if (!f2::in_span(ybasis, v)) ybasis.push_back(v);
    }
    if (ybasis.size() != 12)
        return fail(r, json{{"span_dim", int(ybasis.size())}}, "span of Y is not 12-dimensional");
    // Form on the span of Y: nondegenerate plus type.
    BitMatrix upper_m(ybasis.size(), ybasis.size());
    for (std::size_t i = 0; i < ybasis.size(); ++i) {
        upper_m.set(i, i, gr.q(ybasis[i]));
        for (std::size_t j = i + 1; j < ybasis.size(); ++j)
            upper_m.set(i, j, gr.beta(ybasis[i], ybasis[j]));
    }
    f2::QuadraticForm qm(upper_m);
    if (!f2::radical(qm.polar()).empty() || f2::arf_type(qm) != f2::FormType::Plus)
        return fail(r, json{}, "span of Y does not carry a nondegenerate plus-type form");
    // W = vectors commuting with the span of Y.
    BitMatrix pair_m(ybasis.size(), std::size_t(gr.dim()));
    for (std::size_t i = 0; i < ybasis.size(); ++i)
        for (int j = 0; j < gr.dim(); ++j)
            pair_m.set(i, std::size_t(j),
                       gr.beta(ybasis[i], BitVector::unit(std::size_t(gr.dim()), std::size_t(j))));
    auto wbasis = pair_m.nullspace();
    if (wbasis.size() != 6)
        return fail(r, json{{"centralizer_dim", int(wbasis.size())}},
                    "centralizer of the span is not six-dimensional");
    BitMatrix upper_w(wbasis.size(), wbasis.size());
    for (std::size_t i = 0; i < wbasis.size(); ++i) {
        upper_w.set(i, i, gr.q(wbasis[i]));
        for (std::size_t j = i + 1; j < wbasis.size(); ++j)
            upper_w.set(i, j, gr.beta(wbasis[i], wbasis[j]));
    }
    f2::QuadraticForm qw(upper_w);
    if (!f2::radical(qw.polar()).empty() || f2::arf_type(qw) != f2::FormType::Minus)
        return fail(r, json{}, "centralizer does not carry a nondegenerate minus-type form");
    const auto& qi = c.g.quads();
    bool any_quad = false;
    for (int k = 0; k < int(qi.quads.size()); ++k) {
        const Quad& q = qi.quads[k];
        if (!q.big || q.t2 != 4) continue;
        bool outside = true;
        for (int p : q.points)
            if (cf.y_bits.get(p)) { outside = false; break; }
        if (!outside) continue;
        any_quad = true;
        std::map<int, GroupElement> delta;
        for (int p : q.points) {
            GroupElement m1 = gr.point_image(cf.partner[cf.x2[p]]);
            GroupElement m2 = gr.point_image(cf.partner[cf.x1[p]]);
            delta.emplace(p, gr.mul(gr.inverse(gr.mul(m1, m2)), gr.point_image(p)));
        }
        for (std::size_t ia = 0; ia < q.points.size(); ++ia)
            for (std::size_t ib = ia + 1; ib < q.points.size(); ++ib) {
                int a1 = q.points[ia], a2 = q.points[ib];
                if (c.g.dist(a1, a2) != 2) continue;
                std::vector<int> perp;
                for (int p : q.points)
                    if (c.g.collinear(p, a1) && c.g.collinear(p, a2)) perp.push_back(p);
                json w{{"quad", k}, {"a1", a1}, {"a2", a2}};
                if (perp.size() != 5) {
                    w["perp"] = int(perp.size());
                    return fail(r, w, "common neighbours inside the quad are not five");
                }
                for (std::size_t i = 0; i < perp.size(); ++i)
                    for (std::size_t j = i + 1; j < perp.size(); ++j)
                        if (c.g.dist(perp[i], perp[j]) != 2)
                            return fail(r, w, "common neighbours are not a 5-arc");
                for (std::size_t i = 0; i < perp.size(); ++i)
                    for (std::size_t j = i + 1; j < perp.size(); ++j) {
                        int b1 = perp[i], b2 = perp[j];
                        w["b1"] = b1;
                        w["b2"] = b2;
                        std::vector<BitVector> hvecs{delta.at(a1).v, delta.at(a2).v,
                                                     delta.at(b1).v, delta.at(b2).v};
                        if (f2::rank_of(hvecs) != 4)
                            return fail(r, w, "quadrangle factors are dependent");
                        BitMatrix bm(hvecs.size(), wbasis.size());
                        for (std::size_t hi = 0; hi < hvecs.size(); ++hi)
                            for (std::size_t wj = 0; wj < wbasis.size(); ++wj)
                                bm.set(hi, wj, gr.beta(hvecs[hi], wbasis[wj]));
                        auto kc = bm.nullspace();
                        if (kc.size() != 2) {
                            w["centralizer"] = int(kc.size());
                            return fail(r, w, "quadrangle centralizer is not two-dimensional");
                        }
                        auto lift = [&](const BitVector& coords) {
                            BitVector v(std::size_t(gr.dim()));
                            for (std::size_t wj = 0; wj < wbasis.size(); ++wj)
                                if (coords.get(wj)) v ^= wbasis[wj];
                            return v;
                        };
                        BitVector k1 = lift(kc[0]), k2 = lift(kc[1]);
                        if (!gr.q(k1) || !gr.q(k2) || !gr.q(k1 ^ k2) || !gr.beta(k1, k2))
                            return fail(r, w, "quadrangle centralizer is not quaternion");
                        std::vector<BitVector> kspan{k1, k2};
                        GroupElement b12 = gr.mul(delta.at(b1), delta.at(b2));
                        std::vector<BitVector> kvecs;
                        for (int wp : perp) {
                            if (wp == b1 || wp == b2) continue;
                            GroupElement ki = gr.mul(gr.inverse(b12), delta.at(wp));
                            w["w"] = wp;
                            if (!f2::in_span(kspan, ki.v))
                                return fail(r, w, "perp factor leaves the quaternion subgroup");
                            if (!gr.q(ki.v))
                                return fail(r, w, "perp factor does not have order four");
                            kvecs.push_back(ki.v);
                        }
                        w.erase("w");
                        for (std::size_t x1 = 0; x1 < kvecs.size(); ++x1)
                            for (std::size_t x2 = x1 + 1; x2 < kvecs.size(); ++x2) {
                                if (kvecs[x1] == kvecs[x2])
                                    return fail(r, w, "perp factors coincide");
                                if (!gr.beta(kvecs[x1], kvecs[x2]))
                                    return fail(r, w, "perp factors commute");
                            }
                    }
            }
    }
    if (!any_quad) return skip(r, "no big (2,4)-quad is disjoint from the span");
    return r;
}

using CheckFn = CheckResult (*)(Ctx&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> reg{
        {"big_quad_point_count", check_big_quad_point_count},
        {"disjoint_big_quad_glue", check_disjoint_big_quad_glue},
        {"outside_point_quadrangle", check_outside_point_quadrangle},
        {"outside_line_correspondence", check_outside_line_correspondence},
        {"partner_line_distances", check_partner_line_distances},
        {"outside_quad_distance_pattern", check_outside_quad_distance_pattern},
        {"gq_abelian_representation", check_gq_abelian_representation},
        {"gq_model_orders", check_gq_model_orders},
        {"gq_noncollinear_pair_product", check_gq_noncollinear_pair_product},
        {"gq_subquad_span", check_gq_subquad_span},
        {"gq_triad_criterion", check_gq_triad_criterion},
        {"gq_zero_sum_triples", check_gq_zero_sum_triples},
        {"gq_arc_product_constraint", check_gq_arc_product_constraint},
        {"gq_pair_set_intersection", check_gq_pair_set_intersection},
        {"gq_nonpoint_element_form", check_gq_nonpoint_element_form},
        {"representation_existence", check_representation_existence},
        {"commutation_distance", check_commutation_distance},
        {"group_order_bound", check_group_order_bound},
        {"central_product_structure", check_central_product_structure},
        {"abelian_subgroup_bound", check_abelian_subgroup_bound},
        {"subset_parity_commutation", check_subset_parity_commutation},
        {"quad_center_intersection", check_quad_center_intersection},
        {"disjoint_big_quad_subgroups", check_disjoint_big_quad_subgroups},
        {"ovoidal_quad_criterion", check_ovoidal_quad_criterion},
        {"good_subset_lower_bound", check_good_subset_lower_bound},
        {"central_element_support", check_central_element_support},
        {"good_subset_sizes", check_good_subset_sizes},
        {"glued_quad_families", check_glued_quad_families},
        {"glued_point_decomposition", check_glued_point_decomposition},
        {"glued_delta_spread", check_glued_delta_spread},
        {"glued_quaternion_subgroup", check_glued_quaternion_subgroup},
    };
    return reg;
}

CheckResult run_one(Ctx& c, const std::string& id, CheckFn fn) {
    auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
        r = fn(c);
    } catch (const std::exception& e) {
        r = base(c, id.c_str());
        r.status = Status::Fail;
        r.witness = json{{"error", e.what()}};
        r.reason = "check raised an error";
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                   .count();
    return r;
}

}  // namespace

const std::vector<std::string>& check_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, fn] : registry()) v.push_back(id);
        return v;
    }();
    return ids;
}

CheckResult run_check(const geom::IncidenceGeometry& g, const std::string& geometry_name,
                      const std::string& check_id) {
    for (const auto& [id, fn] : registry())
        if (id == check_id) {
            Ctx c(g, geometry_name);
            return run_one(c, id, fn);
        }
    throw std::invalid_argument("unknown check id: " + check_id);
}

std::vector<CheckResult> run_suite(const geom::IncidenceGeometry& g,
                                   const std::string& geometry_name) {
    Ctx c(g, geometry_name);
    std::vector<CheckResult> out;
    for (const auto& [id, fn] : registry()) out.push_back(run_one(c, id, fn));
    return out;
}

std::vector<CheckResult> full_report(double budget_secs) {
    std::vector<CheckResult> out;
    for (const auto& name : cat::builtin_names()) {
        if (name == "hex_vi_glued") {
            auto og = cat::try_build_glued(budget_secs);
            if (!og) {
                for (const auto& id : check_ids()) {
                    CheckResult r;
                    r.check = id;
                    r.geometry = name;
                    r.status = Status::Skipped;
                    r.reason = "glued-hexagon search budget exhausted";
                    out.push_back(std::move(r));
                }
                continue;
            }
            auto rs = run_suite(*og, name);
            out.insert(out.end(), rs.begin(), rs.end());
            continue;
        }
        auto g = cat::build(*cat::key_from_name(name));
        auto rs = run_suite(g, name);
        out.insert(out.end(), rs.begin(), rs.end());
    }
    return out;
}

}  // namespace nearhex::verify
