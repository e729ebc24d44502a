#include "nearhex/gq.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>

namespace nearhex::gq {

using geom::IncidenceGeometry;

GqModel grid_gq() {
    // Points (r,c) in row-major order; rows and columns are the lines.
    std::vector<std::array<int, 3>> lines;
    for (int r = 0; r < 3; ++r) lines.push_back({3 * r, 3 * r + 1, 3 * r + 2});
    for (int c = 0; c < 3; ++c) lines.push_back({c, c + 3, c + 6});
    GqModel m;
    m.g = IncidenceGeometry::build(9, std::move(lines), "gq21");
    m.t = 1;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            m.labels.push_back("(" + std::to_string(r) + "," + std::to_string(c) + ")");
    return m;
}

namespace {

// Duads {i,j} of {1..6} in lexicographic order, and the 15 factors
// (partitions of {1..6} into three duads).
struct DuadTables {
    std::vector<std::pair<int, int>> duads;          // 15, 1-based members
    std::map<std::pair<int, int>, int> duad_id;
    std::vector<std::array<int, 3>> factors;         // duad-id triples, sorted
};

DuadTables duad_tables() {
    DuadTables t;
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
            t.duad_id[{i, j}] = int(t.duads.size());
            t.duads.push_back({i, j});
        }
    // Enumerate factors: partner of 1 is p; remaining four split in 3 ways.
    for (int p = 2; p <= 6; ++p) {
        std::vector<int> rest;
        for (int v = 2; v <= 6; ++v)
            if (v != p) rest.push_back(v);
        for (int k = 1; k < 4; ++k) {
            int a = rest[0], b = rest[k];
            std::vector<int> cd;
            for (int v : rest)
                if (v != a && v != b) cd.push_back(v);
            std::array<int, 3> f = {t.duad_id[{1, p}],
                                    t.duad_id[{std::min(a, b), std::max(a, b)}],
                                    t.duad_id[{cd[0], cd[1]}]};
            std::sort(f.begin(), f.end());
            t.factors.push_back(f);
        }
    }
    std::sort(t.factors.begin(), t.factors.end());
    return t;
}

}  // namespace

GqModel duad_factor_gq() {
    DuadTables t = duad_tables();
    GqModel m;
    m.g = IncidenceGeometry::build(15, t.factors, "gq22");
    m.t = 2;
    for (auto [i, j] : t.duads)
        m.labels.push_back("{" + std::to_string(i) + "," + std::to_string(j) + "}");
    return m;
}

GqModel q24_gq() {
    DuadTables t = duad_tables();
    // Ids: duads 0..14, then 1..6 as 15..20, then 1'..6' as 21..26.
    std::vector<std::array<int, 3>> lines = t.factors;
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) {
            if (i == j) continue;
            int duad = t.duad_id[{std::min(i, j), std::max(i, j)}];
            std::array<int, 3> l = {14 + i, duad, 20 + j};
            std::sort(l.begin(), l.end());
            lines.push_back(l);
        }
    GqModel m;
    m.g = IncidenceGeometry::build(27, std::move(lines), "gq24");
    m.t = 4;
    for (auto [i, j] : t.duads)
        m.labels.push_back("{" + std::to_string(i) + "," + std::to_string(j) + "}");
    for (int i = 1; i <= 6; ++i) m.labels.push_back(std::to_string(i));
    for (int i = 1; i <= 6; ++i) m.labels.push_back(std::to_string(i) + "'");
    return m;
}

namespace {

bool arc_complete(const GqModel& m, const std::vector<int>& pts) {
    for (int x = 0; x < m.g.num_points(); ++x) {
        bool extends = true;
        for (int p : pts)
            if (x == p || m.g.collinear(x, p)) { extends = false; break; }
        if (extends) return false;
    }
    return true;
}

void arc_backtrack(const GqModel& m, int k, std::vector<int>& cur, int from,
                   std::vector<Arc>& out) {
    if (int(cur.size()) == k) {
        out.push_back({cur, arc_complete(m, cur)});
        return;
    }
    for (int x = from; x < m.g.num_points(); ++x) {
        bool ok = true;
        for (int p : cur)
            if (m.g.collinear(x, p)) { ok = false; break; }
        if (!ok) continue;
        cur.push_back(x);
        arc_backtrack(m, k, cur, x + 1, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Arc> arcs(const GqModel& m, int k) {
    std::vector<Arc> out;
    std::vector<int> cur;
    arc_backtrack(m, k, cur, 0, out);
    return out;
}

std::vector<int> centers(const GqModel& m, const std::vector<int>& arc) {
    std::vector<int> out;
    for (int x = 0; x < m.g.num_points(); ++x) {
        bool all = true;
        for (int p : arc)
            if (!m.g.collinear(x, p)) { all = false; break; }
        if (all) out.push_back(x);
    }
    return out;
}

std::vector<std::vector<int>> ovoids(const GqModel& m) {
    std::vector<std::vector<int>> out;
    for (const Arc& a : arcs(m, 1 + 2 * m.t)) {
        bool meets_all = true;
        f2::BitVector bits = geom::points_to_bits(m.g.num_points(), a.points);
        for (const auto& l : m.g.lines()) {
            if (!(bits.get(l[0]) || bits.get(l[1]) || bits.get(l[2]))) {
                meets_all = false;
                break;
            }
        }
        if (meets_all) out.push_back(a.points);
    }
    return out;
}

namespace {

void spread_backtrack(const GqModel& m, f2::BitVector& covered, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    int first = -1;
    for (int x = 0; x < m.g.num_points(); ++x)
        if (!covered.get(x)) { first = x; break; }
    if (first == -1) {
        std::vector<int> sorted = cur;
        std::sort(sorted.begin(), sorted.end());
        out.push_back(std::move(sorted));
        return;
    }
    // Branch on the line covering the first uncovered point; each spread is
    // found exactly once since that line is determined by the spread.
    for (int li : m.g.lines_through(first)) {
        const auto& l = m.g.lines()[li];
        if (covered.get(l[0]) || covered.get(l[1]) || covered.get(l[2])) continue;
        for (int p : l) covered.set(p, true);
        cur.push_back(li);
        spread_backtrack(m, covered, cur, out);
        cur.pop_back();
        for (int p : l) covered.set(p, false);
    }
}

}  // namespace

std::vector<std::vector<int>> spreads(const GqModel& m) {
    std::vector<std::vector<int>> out;
    f2::BitVector covered(m.g.num_points());
    std::vector<int> cur;
    spread_backtrack(m, covered, cur, out);
    return out;
}

SubGqResult subgq_generated(const GqModel& m, const std::vector<int>& seed) {
    SubGqResult r;
    r.points = geom::subspace_closure(m.g, seed);
    if (int(r.points.size()) == m.g.num_points()) {
        r.kind = SubGqKind::Whole;
        return r;
    }
    auto sub = geom::induced_geometry(m.g, r.points);
    if (r.points.size() == 9 && geom::is_near_2n_gon(sub.g, 2))
        r.kind = SubGqKind::Gq21;
    else if (r.points.size() == 15 && geom::is_near_2n_gon(sub.g, 2))
        r.kind = SubGqKind::Gq22;
    else
        r.kind = SubGqKind::Other;
    return r;
}

}  // namespace nearhex::gq
