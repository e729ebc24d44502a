// Tests for the incidence-geometry layer: validation, distances,
// near-polygon axioms, quads and their classification, closures,
// hyperplanes, and the exhaustive line-distance pattern on every built-in.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "nearhex/catalog.hpp"
#include "nearhex/geometry.hpp"

using namespace nearhex;
using geom::IncidenceGeometry;

namespace {

IncidenceGeometry triangle_free_grid() {
    // 3x3 grid: rows and columns as lines.
    std::vector<std::array<int, 3>> lines;
    for (int r = 0; r < 3; ++r) lines.push_back({3 * r, 3 * r + 1, 3 * r + 2});
    for (int c = 0; c < 3; ++c) lines.push_back({c, c + 3, c + 6});
    return IncidenceGeometry::build(9, lines, "grid");
}

}  // namespace

TEST_CASE("build rejects malformed line sets") {
    CHECK_THROWS_AS(IncidenceGeometry::build(3, {{0, 1, 3}}, ""), geom::BadLine);
    CHECK_THROWS_AS(IncidenceGeometry::build(3, {{0, 1, 1}}, ""), geom::BadLine);
    // Two lines through the same point pair.
    CHECK_THROWS_AS(IncidenceGeometry::build(4, {{0, 1, 2}, {0, 1, 3}}, ""),
                    geom::NotPartialLinear);
}

TEST_CASE("grid distances and collinearity") {
    auto g = triangle_free_grid();
    CHECK(g.connected());
    CHECK(g.diameter() == 2);
    CHECK(g.dist(0, 1) == 1);
    CHECK(g.dist(0, 4) == 2);
    CHECK(g.collinear(0, 2));
    CHECK_FALSE(g.collinear(0, 4));
    CHECK(g.third_point(0, 1) == 2);
    CHECK_THROWS_AS(g.third_point(0, 4), geom::NotCollinear);
    CHECK(g.line_between(0, 4) == -1);
    CHECK(g.lines_through(0).size() == 2);
    CHECK(geom::is_near_2n_gon(g, 2));
    CHECK(geom::uniform_line_count(g) == 2);
}

TEST_CASE("spheres and bitset conversions") {
    auto g = triangle_free_grid();
    auto s1 = g.sphere(0, 1);
    CHECK(s1 == std::vector<int>{1, 2, 3, 6});
    auto bits = g.sphere_bits(0, 2);
    auto pts = geom::bits_to_points(bits);
    CHECK(pts == std::vector<int>{4, 5, 7, 8});
    CHECK(geom::points_to_bits(9, pts) == bits);
}

TEST_CASE("quad discovery on a product hexagon") {
    auto g = cat::build(cat::Key::hex_xi);
    const auto& qi = g.quads();
    REQUIRE(qi.quads.size() == 9);
    for (const auto& q : qi.quads) {
        CHECK(q.t2 == 1);
        CHECK(q.big);
        CHECK(q.points.size() == 9);
        auto rep = geom::verify_big_quad_inequality(g, q);
        CHECK(rep.consistent);
        CHECK(rep.equality);
    }
    // Every distance-2 pair lies in exactly one quad.
    for (int x = 0; x < g.num_points(); ++x)
        for (int y = x + 1; y < g.num_points(); ++y) {
            int id = qi.quad_of_pair[std::size_t(x) * g.num_points() + y];
            if (g.dist(x, y) == 2) {
                REQUIRE(id >= 0);
                const auto& p = qi.quads[id].points;
                CHECK(std::binary_search(p.begin(), p.end(), x));
                CHECK(std::binary_search(p.begin(), p.end(), y));
            } else {
                CHECK(id == -1);
            }
        }
}

TEST_CASE("mixed quad types on the (2,2) product hexagon") {
    auto g = cat::build(cat::Key::hex_x);
    std::map<int, int> counts;  // t2 -> total
    for (const auto& q : g.quads().quads) {
        ++counts[q.t2];
        CHECK(q.big);
    }
    CHECK(counts[1] == 15);
    CHECK(counts[2] == 3);
    // The three (2,2) quads partition the point set.
    std::set<int> seen;
    for (const auto& q : g.quads().quads) {
        if (q.t2 != 2) continue;
        for (int p : q.points) CHECK(seen.insert(p).second);
    }
    CHECK(int(seen.size()) == g.num_points());
}

TEST_CASE("point-quad classification against a big quad") {
    auto g = cat::build(cat::Key::hex_xi);
    const auto& q = g.quads().quads[0];
    for (int x = 0; x < g.num_points(); ++x) {
        if (std::binary_search(q.points.begin(), q.points.end(), x)) continue;
        auto pc = geom::classify_point_quad(g, x, q);
        CHECK(pc.classical);
        CHECK(pc.dmin == 1);
        CHECK(g.dist(x, pc.gate) == 1);
    }
}

TEST_CASE("convex closure of a distance-2 pair is its quad") {
    auto g = cat::build(cat::Key::hex_xi);
    int x = 0, y = -1;
    for (int p = 0; p < g.num_points(); ++p)
        if (g.dist(0, p) == 2) { y = p; break; }
    REQUIRE(y >= 0);
    auto quad = geom::quad_of(g, x, y);
    auto cc = geom::convex_closure(g, {x, y});
    CHECK(quad.points == cc);
    CHECK(quad.points.size() == 9);
}

TEST_CASE("subspace closure of two disjoint big quads") {
    auto g = cat::build(cat::Key::hex_x);
    const auto& qi = g.quads();
    bool found = false;
    for (std::size_t i = 0; i < qi.quads.size() && !found; ++i)
        for (std::size_t j = i + 1; j < qi.quads.size() && !found; ++j) {
            if (qi.quads[i].t2 != 1 || qi.quads[j].t2 != 1) continue;
            std::vector<int> common;
            std::set_intersection(qi.quads[i].points.begin(), qi.quads[i].points.end(),
                                  qi.quads[j].points.begin(), qi.quads[j].points.end(),
                                  std::back_inserter(common));
            if (!common.empty()) continue;
            found = true;
            std::vector<int> seed = qi.quads[i].points;
            seed.insert(seed.end(), qi.quads[j].points.begin(), qi.quads[j].points.end());
            auto y = geom::subspace_closure(g, seed);
            // Two disjoint (2,1) grids span a 27-point product subspace.
            CHECK(y.size() == 27);
            auto ind = geom::induced_geometry(g, y, "span");
            CHECK(ind.g.connected());
            CHECK(geom::is_near_2n_gon(ind.g, 3));
            CHECK(geom::uniform_line_count(ind.g) == 3);
        }
    CHECK(found);
}

TEST_CASE("glueing two disjoint big quads yields a big quad") {
    auto g = cat::build(cat::Key::hex_viii);
    const auto& qi = g.quads();
    int done = 0;
    for (std::size_t i = 0; i < qi.quads.size() && done < 5; ++i)
        for (std::size_t j = i + 1; j < qi.quads.size() && done < 5; ++j) {
            std::vector<int> common;
            std::set_intersection(qi.quads[i].points.begin(), qi.quads[i].points.end(),
                                  qi.quads[j].points.begin(), qi.quads[j].points.end(),
                                  std::back_inserter(common));
            if (!common.empty()) continue;
            auto q3 = geom::glue_quads(g, qi.quads[i], qi.quads[j]);
            CHECK(q3.big);
            CHECK(q3.t2 == qi.quads[i].t2);
            CHECK(q3.points.size() == qi.quads[i].points.size());
            ++done;
        }
    CHECK(done == 5);
    CHECK_THROWS_AS(geom::glue_quads(g, qi.quads[0], qi.quads[0]), geom::NotDisjoint);
}

TEST_CASE("special hyperplane is geometric") {
    auto g = cat::build(cat::Key::hex_xi);
    for (int x : {0, 5, 13}) {
        auto h = geom::special_hyperplane(g, x);
        CHECK(geom::is_geometric_hyperplane(g, h));
        CHECK(int(h.size()) < g.num_points());
    }
}

TEST_CASE("line distance pattern holds exhaustively on every built-in") {
    for (const auto& name : cat::builtin_names()) {
        IncidenceGeometry g;
        if (name == "hex_vi_glued") {
            auto og = cat::try_build_glued(60.0);
            if (!og) continue;  // budget miss: covered by the certification suite
            g = *og;
        } else {
            g = cat::build(*cat::key_from_name(name));
        }
        CAPTURE(name);
        CHECK_FALSE(geom::line_distance_pattern_violation(g).has_value());
        int n = name.substr(0, 3) == "hex" ? 3 : 2;
        CHECK(geom::is_near_2n_gon(g, n));
    }
}

TEST_CASE("induced geometry maps back to parent ids") {
    auto g = triangle_free_grid();
    auto ind = geom::induced_geometry(g, {0, 1, 2, 3, 4, 5}, "rows");
    CHECK(ind.g.num_points() == 6);
    CHECK(ind.g.num_lines() == 2);
    for (int i = 0; i < 6; ++i) CHECK(ind.to_parent[std::size_t(i)] == i);
}
