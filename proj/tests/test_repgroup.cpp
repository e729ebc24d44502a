// Tests for the universal module and cocycle group construction: module
// dimensions, group laws, commutation structure, quotients, existence
// certificates, and the good-subset search.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "nearhex/catalog.hpp"
#include "nearhex/repgroup.hpp"

using namespace nearhex;
using f2::BitVector;

TEST_CASE("quadrangle module dimensions") {
    for (const auto& [key, dim] : {std::pair{cat::Key::gq21, 4}, {cat::Key::gq22, 5},
                                   {cat::Key::gq24, 6}}) {
        auto g = cat::build(key);
        auto rs = rep::universal_module(g);
        CAPTURE(cat::name_of(key));
        CHECK(rs.dim_v == dim);
        CHECK(rs.npdim == 0);
        CHECK(rep::np_dim(g) == 0);
        // Line relations hold in coordinates.
        for (int li = 0; li < g.num_lines(); ++li) {
            const auto& l = g.line(li);
            CHECK((rs.coords[l[0]] ^ rs.coords[l[1]] ^ rs.coords[l[2]]).is_zero());
        }
        std::set<BitVector> img(rs.coords.begin(), rs.coords.end());
        CHECK(int(img.size()) == g.num_points());
    }
}

TEST_CASE("module dimensions and distance-3 rank agree with the independent count") {
    for (const auto& name : {"hex_xi", "hex_x", "hex_vii"}) {
        auto g = cat::build(*cat::key_from_name(name));
        auto rs = rep::universal_module(g);
        CAPTURE(name);
        CHECK(rs.npdim == rep::np_dim(g));
        CHECK(int(rs.radical_basis.size()) == rs.dim_v - rs.npdim);
        CHECK(int(rs.basis_points.size()) == rs.dim_v);
    }
}

TEST_CASE("group law on a product hexagon") {
    auto g = cat::build(cat::Key::hex_xi);
    auto rs = rep::universal_module(g);
    auto gr = rep::build_representation(rs);
    CHECK(gr.order_log2() == 9);
    CHECK(gr.nonabelian());
    // Line products are the identity.
    for (int li = 0; li < g.num_lines(); ++li) {
        const auto& l = g.line(li);
        auto prod = gr.mul(gr.mul(gr.point_image(l[0]), gr.point_image(l[1])),
                           gr.point_image(l[2]));
        CHECK(prod == gr.identity());
    }
    // Associativity and inverses on random elements.
    std::mt19937 rng(5u);
    for (int it = 0; it < 200; ++it) {
        auto rnd = [&] {
            BitVector v(std::size_t(gr.dim()));
            for (int i = 0; i < gr.dim(); ++i) v.set(std::size_t(i), (rng() & 1u) != 0);
            return rep::GroupElement{v, (rng() & 1u) != 0};
        };
        auto a = rnd(), b = rnd(), c = rnd();
        CHECK(gr.mul(gr.mul(a, b), c) == gr.mul(a, gr.mul(b, c)));
        CHECK(gr.mul(a, gr.inverse(a)) == gr.identity());
        auto comm = gr.commutator(a, b);
        CHECK(comm.v.is_zero());  // class two: commutators central
        CHECK(gr.element_order(gr.mul(a, a)) <= 2);  // exponent four
    }
    // Commutation exactly measures distance three.
    for (int x = 0; x < g.num_points(); ++x)
        for (int y = x + 1; y < g.num_points(); ++y)
            CHECK(gr.beta(gr.point_image(x).v, gr.point_image(y).v) ==
                  (g.dist(x, y) == 3));
}

TEST_CASE("center order matches the radical") {
    auto g = cat::build(cat::Key::hex_x);
    auto rs = rep::universal_module(g);
    auto gr = rep::build_representation(rs);
    auto ci = rep::center(gr, rs);
    CHECK(ci.radical_dim == rs.dim_v - rs.npdim);
    CHECK(ci.order_log2 == 1 + ci.radical_dim);
    CHECK(rep::in_center(rs, gr.theta()));
    CHECK_FALSE(rep::in_center(rs, gr.point_image(0)));
}

TEST_CASE("minimal quotient reaches the distance-3 rank with plus type") {
    for (const auto& name : {"hex_vii", "hex_viii", "hex_x", "hex_xi"}) {
        auto g = cat::build(*cat::key_from_name(name));
        auto rs = rep::universal_module(g);
        auto gr = rep::build_representation(rs);
        auto mq = rep::minimal_quotient(gr, rs);
        CAPTURE(name);
        CHECK(mq.quotient_dim == rs.npdim);
        CHECK(mq.order_log2 == 1 + rs.npdim);
        CHECK(mq.type == rep::GroupType::Plus);
        auto mg = rep::build_minimal_representation(rs);
        CHECK(mg.order_log2() == 1 + rs.npdim);
        CHECK(mg.nonabelian());
        // The minimal model still represents the geometry faithfully.
        std::set<BitVector> img;
        for (int x = 0; x < g.num_points(); ++x) {
            img.insert(mg.point_image(x).v);
            CHECK_FALSE(mg.point_image(x).v.is_zero());
        }
        CHECK(int(img.size()) == g.num_points());
        for (int li = 0; li < g.num_lines(); ++li) {
            const auto& l = g.line(li);
            CHECK(mg.mul(mg.mul(mg.point_image(l[0]), mg.point_image(l[1])),
                         mg.point_image(l[2])) == mg.identity());
        }
    }
}

TEST_CASE("central decomposition splits off an extraspecial part") {
    auto g = cat::build(cat::Key::hex_viii);
    auto rs = rep::universal_module(g);
    auto gr = rep::build_representation(rs);
    auto cd = rep::central_decomposition(gr, rs);
    CHECK(cd.checks_ok);
    CHECK(cd.e_order_log2 == 1 + rs.npdim);
    CHECK(cd.e_order_log2 + cd.z_order_log2 - 1 == gr.order_log2());
}

TEST_CASE("existence certificate separates the obstructed geometry") {
    auto gi = cat::build(cat::Key::hex_i);
    auto rsi = rep::universal_module(gi);
    CHECK(rsi.dim_v == 23);
    CHECK(rsi.npdim == 22);
    auto er = rep::representation_existence(rsi);
    CHECK_FALSE(er.full_model);
    CHECK_FALSE(er.any_model);
    CHECK(er.radical_dim == 1);
    CHECK(er.singular_dim == 1);
    CHECK(er.full_rank_gap == 1);
    CHECK(er.quotient_rank_gap == 1);
    CHECK_THROWS_AS(rep::build_representation(rsi), rep::InconsistentSystem);
    CHECK_THROWS_AS(rep::build_minimal_representation(rsi), rep::InconsistentSystem);

    auto gx = cat::build(cat::Key::hex_x);
    auto rsx = rep::universal_module(gx);
    auto ex = rep::representation_existence(rsx);
    CHECK(ex.full_model);
    CHECK(ex.any_model);
    CHECK(ex.full_rank_gap == 0);
}

TEST_CASE("dihedral pairs at distance three") {
    auto g = cat::build(cat::Key::hex_xi);
    auto rs = rep::universal_module(g);
    auto gr = rep::build_representation(rs);
    int checked = 0;
    for (int y = 1; y < g.num_points(); ++y) {
        if (g.dist(0, y) != 3) continue;
        ++checked;
        auto cl = rep::subgroup_closure(gr, {gr.point_image(0), gr.point_image(y)});
        CHECK(cl.size() == 8);
        int invol = 0, order4 = 0;
        for (const auto& e : cl) {
            int o = gr.element_order(e);
            if (o == 2) ++invol;
            if (o == 4) ++order4;
        }
        CHECK(invol == 5);
        CHECK(order4 == 2);
    }
    // Product of the grid quadrangle with a line: 4 * 2 points opposite
    // any given point.
    CHECK(checked == 8);
}

TEST_CASE("good subsets certify the expected lower bounds") {
    auto gx = cat::build(cat::Key::hex_x);
    auto rsx = rep::universal_module(gx);
    auto wx = rep::good_subset_search(rsx);
    CHECK(gx.dist(wx.a, wx.b) == 3);
    CHECK(int(wx.A.size()) == int(gx.lines_through(wx.a).size()));
    // Images of X are independent together with the radical.
    std::vector<BitVector> vecs;
    for (int x : wx.X) vecs.push_back(rsx.coords[x]);
    std::size_t k = vecs.size();
    vecs.insert(vecs.end(), rsx.radical_basis.begin(), rsx.radical_basis.end());
    CHECK(f2::rank_of(vecs) == k + rsx.radical_basis.size());

    auto gii = cat::build(cat::Key::hex_ii);
    auto rsii = rep::universal_module(gii);
    auto wii = rep::good_subset_search(rsii);
    CHECK(wii.X.size() == 11);
    CHECK(2 * 11 + 3 == 1 + rsii.npdim);

    auto gi = cat::build(cat::Key::hex_i);
    auto rsi = rep::universal_module(gi);
    auto wi = rep::good_subset_search(rsi);
    CHECK(wi.X.size() == 10);
    CHECK(2 * 10 + 3 == 1 + rsi.npdim);
}

TEST_CASE("quad subgroup orders on the symplectic hexagon") {
    auto g = cat::build(cat::Key::hex_viii);
    auto rs = rep::universal_module(g);
    auto gr = rep::build_representation(rs);
    const auto& qi = g.quads();
    for (int k = 0; k < 5; ++k) {
        auto qs = rep::quad_subgroup(gr, rs, qi.quads[std::size_t(k)]);
        CHECK(qs.order_log2 == 5);
        CHECK(qs.center_intersection.size() == 2);
    }
}

TEST_CASE("quadrangle representations are abelian") {
    auto g = cat::build(cat::Key::gq24);
    auto rs = rep::universal_module(g);
    auto gr = rep::build_representation(rs);
    CHECK_FALSE(gr.nonabelian());
    for (int x = 0; x < g.num_points(); ++x)
        for (int y = x + 1; y < g.num_points(); ++y)
            CHECK(gr.commutator(gr.point_image(x), gr.point_image(y)) == gr.identity());
}
