// Constructions of the built-in geometries, each self-checking.

#include "nearhex/catalog.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>

#include <json.hpp>

#include "nearhex/gq.hpp"

namespace nearhex::cat {

namespace {

using geom::IncidenceGeometry;
using Line = std::array<int, 3>;

void require(bool cond, const std::string& msg) {
    if (!cond) throw InternalError(msg);
}

// ---------------------------------------------------------------- golay

// Extended binary Golay code from the length-23 quadratic-residue code
// with generator polynomial x^11+x^10+x^6+x^5+x^4+x^2+1, plus a parity
// bit. Points: the 759 weight-8 codewords (octads); lines: the 3795
// partitions of the 24 coordinates into three octads.
IncidenceGeometry octad_hexagon() {
    constexpr std::uint32_t poly = (1u << 11) | (1u << 10) | (1u << 6) | (1u << 5) | (1u << 4) | (1u << 2) | 1u;
    std::array<std::uint32_t, 12> gen;
    for (int i = 0; i < 12; ++i) {
        std::uint32_t w = poly << i;
        gen[i] = w | (std::uint32_t(std::popcount(w) & 1) << 23);
    }

    std::vector<std::uint32_t> octads;
    std::array<int, 25> weight_count{};
    for (int c = 0; c < 4096; ++c) {
        std::uint32_t w = 0;
        for (int i = 0; i < 12; ++i)
            if (c >> i & 1) w ^= gen[i];
        int wt = std::popcount(w);
        ++weight_count[wt];
        if (wt == 8) octads.push_back(w);
    }
    require(weight_count[0] == 1 && weight_count[8] == 759 && weight_count[12] == 2576 &&
                weight_count[16] == 759 && weight_count[24] == 1,
            "unexpected weight distribution for the binary code");
    std::sort(octads.begin(), octads.end());

    std::map<std::uint32_t, int> id_of;
    for (std::size_t i = 0; i < octads.size(); ++i) id_of[octads[i]] = int(i);

    std::set<Line> lines;
    for (std::size_t i = 0; i < octads.size(); ++i)
        for (std::size_t j = i + 1; j < octads.size(); ++j) {
            if (octads[i] & octads[j]) continue;
            std::uint32_t third = 0xFFFFFFu ^ octads[i] ^ octads[j];
            auto it = id_of.find(third);
            require(it != id_of.end(), "complement of two disjoint octads is not an octad");
            Line l{int(i), int(j), it->second};
            std::sort(l.begin(), l.end());
            lines.insert(l);
        }
    require(lines.size() == 3795, "unexpected number of octad partitions");
    return IncidenceGeometry::build(759, {lines.begin(), lines.end()});
}

// ------------------------------------------------------------- ternary

// Cosets of the extended ternary Golay code C (self-dual [12,6,6], so C
// is the kernel of its own generator matrix). Cosets are identified with
// syndromes in F3^6; a line joins the three cosets v, v+e_i, v+2e_i.
IncidenceGeometry ternary_coset_hexagon() {
    constexpr int B[6][6] = {
        {0, 1, 1, 1, 1, 1}, {1, 0, 1, 2, 2, 1}, {1, 1, 0, 1, 2, 2},
        {1, 2, 1, 0, 1, 2}, {1, 2, 2, 1, 0, 1}, {1, 1, 2, 2, 1, 0},
    };
    std::array<std::array<int, 12>, 6> gen{};
    for (int i = 0; i < 6; ++i) {
        gen[i][i] = 1;
        for (int j = 0; j < 6; ++j) gen[i][6 + j] = B[i][j];
    }
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            int dot = 0;
            for (int k = 0; k < 12; ++k) dot += gen[i][k] * gen[j][k];
            require(dot % 3 == 0, "ternary generator matrix is not self-orthogonal");
        }
    std::array<int, 13> weight_count{};
    std::array<int, 6> coef{};
    for (int code = 0; code < 729; ++code) {
        int c = code;
        for (int i = 0; i < 6; ++i) {
            coef[i] = c % 3;
            c /= 3;
        }
        int wt = 0;
        for (int k = 0; k < 12; ++k) {
            int v = 0;
            for (int i = 0; i < 6; ++i) v += coef[i] * gen[i][k];
            wt += v % 3 != 0;
        }
        ++weight_count[wt];
    }
    require(weight_count[0] == 1 && weight_count[6] == 264 && weight_count[9] == 440 &&
                weight_count[12] == 24,
            "unexpected weight distribution for the ternary code");

    // Syndrome of e_k = column k of the generator matrix.
    std::array<std::array<int, 6>, 12> col{};
    for (int k = 0; k < 12; ++k)
        for (int i = 0; i < 6; ++i) col[k][i] = gen[i][k] % 3;

    auto syndrome_id = [](const std::array<int, 6>& s) {
        int id = 0;
        for (int i = 5; i >= 0; --i) id = id * 3 + s[i];
        return id;
    };

    std::set<Line> lines;
    for (int id = 0; id < 729; ++id) {
        std::array<int, 6> s{};
        int v = id;
        for (int i = 0; i < 6; ++i) {
            s[i] = v % 3;
            v /= 3;
        }
        for (int k = 0; k < 12; ++k) {
            Line l{id, 0, 0};
            std::array<int, 6> s1 = s, s2 = s;
            for (int i = 0; i < 6; ++i) {
                s1[i] = (s[i] + col[k][i]) % 3;
                s2[i] = (s[i] + 2 * col[k][i]) % 3;
            }
            l[1] = syndrome_id(s1);
            l[2] = syndrome_id(s2);
            std::sort(l.begin(), l.end());
            require(l[0] != l[1] && l[1] != l[2], "degenerate coset line");
            lines.insert(l);
        }
    }
    require(lines.size() == 2916, "unexpected number of coset lines");
    return IncidenceGeometry::build(729, {lines.begin(), lines.end()});
}

// --------------------------------------------------------------- dq62

// Symplectic form on F2^6 with hyperbolic pairs (0,1), (2,3), (4,5).
bool symp(unsigned a, unsigned b) {
    unsigned swapped = ((b & 0x15u) << 1) | ((b & 0x2Au) >> 1);
    return std::popcount(a & swapped) & 1;
}

// Points: totally isotropic 3-dim subspaces of F2^6 (135). Lines: for
// each t.i. 2-dim subspace (315), the three t.i. planes above it.
IncidenceGeometry dq62_hexagon() {
    std::set<std::uint64_t> tls;  // mask over nonzero vectors 1..63
    for (unsigned a = 1; a < 64; ++a)
        for (unsigned b = a + 1; b < 64; ++b) {
            if (symp(a, b)) continue;
            std::uint64_t m = (1ull << a) | (1ull << b) | (1ull << (a ^ b));
            tls.insert(m);
        }
    require(tls.size() == 315, "unexpected number of isotropic line subspaces");

    std::set<std::uint64_t> planes;
    for (std::uint64_t lm : tls) {
        unsigned a = unsigned(std::countr_zero(lm));
        std::uint64_t rest = lm & (lm - 1);
        unsigned b = unsigned(std::countr_zero(rest));
        for (unsigned c = 1; c < 64; ++c) {
            if (lm >> c & 1) continue;
            if (symp(a, c) || symp(b, c)) continue;
            std::uint64_t pm = lm;
            for (unsigned v = 1; v < 64; ++v)
                if (lm >> v & 1) pm |= 1ull << (v ^ c);
            pm |= 1ull << c;
            planes.insert(pm);
        }
    }
    require(planes.size() == 135, "unexpected number of isotropic planes");

    std::vector<std::uint64_t> plane_list(planes.begin(), planes.end());
    std::vector<Line> lines;
    for (std::uint64_t lm : tls) {
        Line l;
        int cnt = 0;
        for (std::size_t i = 0; i < plane_list.size(); ++i)
            if ((plane_list[i] & lm) == lm) {
                require(cnt < 3, "isotropic line inside more than three planes");
                l[cnt++] = int(i);
            }
        require(cnt == 3, "isotropic line inside fewer than three planes");
        lines.push_back(l);
    }
    return IncidenceGeometry::build(135, lines);
}

// ------------------------------------------------------------ products

// Direct product with a 3-point line: three layers of g plus one
// cross-layer line per point. Point (x, layer) gets id layer*n + x.
IncidenceGeometry product_with_line(const IncidenceGeometry& g) {
    const int n = g.num_points();
    std::vector<Line> lines;
    for (int layer = 0; layer < 3; ++layer)
        for (int li = 0; li < g.num_lines(); ++li) {
            const auto& l = g.line(li);
            lines.push_back({layer * n + l[0], layer * n + l[1], layer * n + l[2]});
        }
    for (int x = 0; x < n; ++x) lines.push_back({x, n + x, 2 * n + x});
    return IncidenceGeometry::build(3 * n, lines);
}

// -------------------------------------------------------------- glued

// An order-3 symmetry rotating every line of a spread of GQ(2,4) while
// preserving the line set; found by trying both rotation directions per
// spread line.
std::optional<std::vector<int>> spread_rotation(const IncidenceGeometry& g,
                                                const std::vector<int>& spread) {
    const int n = g.num_points();
    for (int mask = 0; mask < (1 << 9); ++mask) {
        std::vector<int> perm(n, -1);
        for (int i = 0; i < 9; ++i) {
            const auto& l = g.line(spread[i]);
            if (mask >> i & 1) {
                perm[l[0]] = l[1];
                perm[l[1]] = l[2];
                perm[l[2]] = l[0];
            } else {
                perm[l[0]] = l[2];
                perm[l[2]] = l[1];
                perm[l[1]] = l[0];
            }
        }
        bool ok = true;
        for (int li = 0; li < g.num_lines() && ok; ++li) {
            const auto& t = g.line(li);
            int a = perm[t[0]], b = perm[t[1]], c = perm[t[2]];
            ok = g.collinear(a, b) && g.third_point(a, b) == c;
        }
        if (ok) return perm;
    }
    return std::nullopt;
}

std::optional<IncidenceGeometry> glued_quotient(const IncidenceGeometry& g,
                                                const std::vector<int>& sigma,
                                                const std::vector<int>& tau) {
    const int n = g.num_points();
    auto orbit_code = [&](int x, int y) {
        int best = x * n + y;
        int x2 = sigma[x], y2 = tau[y];
        best = std::min(best, x2 * n + y2);
        best = std::min(best, sigma[x2] * n + tau[y2]);
        return best;
    };

    std::map<int, int> id_of;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int code = orbit_code(x, y);
            if (!id_of.count(code)) id_of[code] = 0;
        }
    if (id_of.size() != std::size_t(n) * n / 3) return std::nullopt;
    int next = 0;
    for (auto& [code, id] : id_of) id = next++;

    std::set<Line> lines;
    auto add = [&](Line l) {
        std::sort(l.begin(), l.end());
        if (l[0] == l[1] || l[1] == l[2]) throw geom::NotPartialLinear("orbit collision");
        lines.insert(l);
    };
    try {
        for (int li = 0; li < g.num_lines(); ++li) {
            const auto& l = g.line(li);
            for (int y = 0; y < n; ++y)
                add({id_of.at(orbit_code(l[0], y)), id_of.at(orbit_code(l[1], y)),
                     id_of.at(orbit_code(l[2], y))});
            for (int x = 0; x < n; ++x)
                add({id_of.at(orbit_code(x, l[0])), id_of.at(orbit_code(x, l[1])),
                     id_of.at(orbit_code(x, l[2]))});
        }
        IncidenceGeometry q = IncidenceGeometry::build(int(id_of.size()), {lines.begin(), lines.end()});
        if (!geom::is_near_2n_gon(q, 3)) return std::nullopt;
        return q;
    } catch (const geom::GeometryError&) {
        return std::nullopt;
    }
}

}  // namespace

std::optional<IncidenceGeometry> try_build_glued(double budget_secs) {
    using clock = std::chrono::steady_clock;
    const auto deadline = clock::now() + std::chrono::duration_cast<clock::duration>(
                                             std::chrono::duration<double>(budget_secs));
    gq::GqModel model = gq::q24_gq();
    auto spreads = gq::spreads(model);
    for (const auto& spread : spreads) {
        if (clock::now() > deadline) return std::nullopt;
        auto sigma = spread_rotation(model.g, spread);
        if (!sigma) continue;
        std::vector<int> sigma2(sigma->size());
        for (std::size_t i = 0; i < sigma->size(); ++i) sigma2[i] = (*sigma)[(*sigma)[i]];
        for (const auto& tau : {*sigma, sigma2}) {
            if (clock::now() > deadline) return std::nullopt;
            auto q = glued_quotient(model.g, *sigma, tau);
            if (!q) continue;
            ParamReport rep = verify_params(*q, "hex_vi_glued");
            if (rep.matches) return q;
        }
    }
    return std::nullopt;
}

// ------------------------------------------------------------- naming

namespace {
const std::vector<std::pair<std::string, Key>> kNames = {
    {"gq21", Key::gq21},   {"gq22", Key::gq22},     {"gq24", Key::gq24},
    {"hex_i", Key::hex_i}, {"hex_ii", Key::hex_ii}, {"hex_vi_glued", Key::hex_vi_glued},
    {"hex_vii", Key::hex_vii}, {"hex_viii", Key::hex_viii}, {"hex_x", Key::hex_x},
    {"hex_xi", Key::hex_xi},
};
}  // namespace

std::optional<Key> key_from_name(std::string_view name) {
    for (const auto& [n, k] : kNames)
        if (n == name) return k;
    return std::nullopt;
}

std::string name_of(Key k) {
    for (const auto& [n, kk] : kNames)
        if (kk == k) return n;
    return "?";
}

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& entry : kNames) v.push_back(entry.first);
        return v;
    }();
    return names;
}

IncidenceGeometry build(Key k, double budget_secs) {
    switch (k) {
        case Key::gq21: return gq::grid_gq().g;
        case Key::gq22: return gq::duad_factor_gq().g;
        case Key::gq24: return gq::q24_gq().g;
        case Key::hex_i: return octad_hexagon();
        case Key::hex_ii: return ternary_coset_hexagon();
        case Key::hex_vi_glued: {
            auto g = try_build_glued(budget_secs);
            if (!g) throw InternalError("glued-hexagon search exhausted its time budget");
            return *g;
        }
        case Key::hex_vii: return product_with_line(gq::q24_gq().g);
        case Key::hex_viii: return dq62_hexagon();
        case Key::hex_x: return product_with_line(gq::duad_factor_gq().g);
        case Key::hex_xi: return product_with_line(gq::grid_gq().g);
    }
    throw InternalError("unknown geometry key");
}

// ----------------------------------------------------------- expected

const std::vector<ExpectedParams>& expected_table() {
    using rep::GroupType;
    static const std::vector<ExpectedParams> table = {
        {"gq21", true, 9, 1, 2, {}, 4, 0, GroupType::NotExtraspecial},
        {"gq22", true, 15, 2, 2, {}, 5, 0, GroupType::NotExtraspecial},
        {"gq24", true, 27, 4, 2, {}, 6, 0, GroupType::NotExtraspecial},
        {"hex_i", true, 759, 14, 3, {{2, false, 35}}, 23, 22, GroupType::Plus},
        {"hex_ii", true, 729, 11, 3, {{1, false, 66}}, 24, 24, GroupType::Plus},
        {"hex_iii", false, 891, 20, 3, {{4, true, 21}}, 22, 20, GroupType::Plus},
        {"hex_iv", false, 567, 14, 3, {{2, false, 15}, {4, true, 6}}, 21, 20, GroupType::Plus},
        {"hex_v", false, 405, 11, 3, {{1, false, 9}, {2, false, 9}, {4, true, 3}}, 20, 20, GroupType::Plus},
        {"hex_vi_glued", true, 243, 8, 3, {{1, false, 16}, {4, true, 2}}, 18, 18, GroupType::Minus},
        {"hex_vii", true, 81, 5, 3, {{1, true, 5}, {4, true, 1}}, 12, 12, GroupType::Plus},
        {"hex_viii", true, 135, 6, 3, {{2, true, 7}}, 15, 8, GroupType::Plus},
        {"hex_ix", false, 105, 5, 3, {{1, false, 3}, {2, true, 4}}, 14, 8, GroupType::Plus},
        {"hex_x", true, 45, 3, 3, {{1, true, 3}, {2, true, 1}}, 10, 8, GroupType::Plus},
        {"hex_xi", true, 27, 2, 3, {{1, true, 3}}, 8, 8, GroupType::Plus},
    };
    return table;
}

std::optional<ExpectedParams> expected_params(std::string_view name) {
    for (const auto& row : expected_table())
        if (row.name == name) return row;
    return std::nullopt;
}

// ------------------------------------------------------------ measure

ParamReport measure(const IncidenceGeometry& g, std::string_view name) {
    ParamReport r;
    r.name = std::string(name);
    r.num_points = g.num_points();
    r.num_lines = g.num_lines();
    r.diameter = g.diameter();
    auto tc = geom::uniform_line_count(g);
    r.t = tc ? *tc - 1 : -1;
    r.near_polygon = g.connected() && geom::is_near_2n_gon(g, r.diameter);

    if (r.diameter >= 3) {
        const auto& qi = g.quads();
        std::map<std::pair<int, bool>, int> totals;
        for (const auto& q : qi.quads) ++totals[{q.t2, q.big}];
        for (const auto& [key, total] : totals) {
            QuadProfileEntry e;
            e.t2 = key.first;
            e.big = key.second;
            e.total = total;
            std::vector<int> per(g.num_points(), 0);
            for (const auto& q : qi.quads)
                if (q.t2 == key.first && q.big == key.second)
                    for (int p : q.points) ++per[p];
            e.per_point = per.empty() ? 0 : per[0];
            for (int c : per)
                if (c != e.per_point) {
                    e.per_point = -1;
                    break;
                }
            r.quads.push_back(e);
        }
    }

    rep::RepSpace rs = rep::universal_module(g);
    r.dim_v = rs.dim_v;
    r.npdim = rs.npdim;
    return r;
}

ParamReport verify_params(const IncidenceGeometry& g, std::string_view name) {
    auto exp = expected_params(name);
    if (!exp) throw InternalError("no expected parameters for '" + std::string(name) + "'");
    ParamReport r = measure(g, name);

    auto check = [&](bool ok, const std::string& what) {
        if (!ok) r.mismatches.push_back(what);
    };
    check(r.num_points == exp->num_points,
          "points: " + std::to_string(r.num_points) + " != " + std::to_string(exp->num_points));
    check(r.t == exp->t, "t: " + std::to_string(r.t) + " != " + std::to_string(exp->t));
    check(r.diameter == exp->diameter,
          "diameter: " + std::to_string(r.diameter) + " != " + std::to_string(exp->diameter));
    check(r.near_polygon, "not a near polygon");
    check(r.dim_v == exp->dim_v,
          "dim V: " + std::to_string(r.dim_v) + " != " + std::to_string(exp->dim_v));
    check(r.npdim == exp->npdim,
          "np dim: " + std::to_string(r.npdim) + " != " + std::to_string(exp->npdim));
    if (exp->diameter >= 3) {
        bool quads_ok = r.quads.size() == exp->quads.size();
        if (quads_ok) {
            auto sorted = exp->quads;
            std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
                return std::pair(a.t2, a.big) < std::pair(b.t2, b.big);
            });
            for (std::size_t i = 0; i < sorted.size(); ++i)
                quads_ok = quads_ok && r.quads[i].t2 == sorted[i].t2 &&
                           r.quads[i].big == sorted[i].big &&
                           r.quads[i].per_point == sorted[i].per_point;
        }
        check(quads_ok, "quad profile differs");
    }
    r.matches = r.mismatches.empty();
    return r;
}

// --------------------------------------------------------------- json

std::string geometry_to_json_text(const IncidenceGeometry& g, std::string_view name) {
    nlohmann::json j;
    j["num_points"] = g.num_points();
    auto& lines = j["lines"] = nlohmann::json::array();
    for (int li = 0; li < g.num_lines(); ++li) {
        const auto& l = g.line(li);
        lines.push_back({l[0], l[1], l[2]});
    }
    if (!name.empty()) j["name"] = std::string(name);
    return j.dump(2) + "\n";
}

void save_geometry(const IncidenceGeometry& g, const std::string& path, std::string_view name) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << geometry_to_json_text(g, name);
}

IncidenceGeometry geometry_from_json_text(const std::string& text, std::string* name_out) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("num_points") || !j.contains("lines"))
        throw std::runtime_error("geometry JSON needs 'num_points' and 'lines'");
    int n = j.at("num_points").get<int>();
    std::vector<Line> lines;
    for (const auto& jl : j.at("lines")) {
        if (!jl.is_array() || jl.size() != 3) throw std::runtime_error("each line must have three points");
        lines.push_back({jl[0].get<int>(), jl[1].get<int>(), jl[2].get<int>()});
    }
    if (name_out) *name_out = j.value("name", std::string());
    return IncidenceGeometry::build(n, lines);
}

IncidenceGeometry load_geometry(const std::string& path, std::string* name_out) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return geometry_from_json_text(text, name_out);
}

}  // namespace nearhex::cat
