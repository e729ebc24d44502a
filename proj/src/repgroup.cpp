// Universal F2 module of a slim geometry and its cocycle-twisted groups.

#include "nearhex/repgroup.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <string>

namespace nearhex::rep {

namespace {

using f2::BitMatrix;
using f2::BitVector;
using geom::IncidenceGeometry;

// Every line must meet the distance-3 sphere of every point in an even
// number of points, otherwise the distance-3 matrix does not descend to V.
void check_line_parity(const IncidenceGeometry& g) {
    const int n = g.num_points();
    for (int li = 0; li < g.num_lines(); ++li) {
        const auto& l = g.line(li);
        for (int w = 0; w < n; ++w) {
            int cnt = 0;
            for (int p : l) cnt += g.dist(w, p) == 3;
            if (cnt % 2 != 0)
                throw ParityViolation("line " + std::to_string(li) + " meets the distance-3 sphere of point " +
                                      std::to_string(w) + " in " + std::to_string(cnt) + " points");
        }
    }
}

BitMatrix distance3_matrix(const IncidenceGeometry& g) {
    const int n = g.num_points();
    BitMatrix a(n, n);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (g.dist(x, y) == 3) {
                a.set(x, y, true);
                a.set(y, x, true);
            }
    return a;
}

}  // namespace

int np_dim(const IncidenceGeometry& g) { return distance3_matrix(g).rank(); }

RepSpace universal_module(const IncidenceGeometry& g) {
    const int n = g.num_points();
    const int m = g.num_lines();

    // Relation rows, eliminated preferring the *largest* column as pivot.
    // The free (non-pivot) columns are then exactly the greedy ascending
    // point set whose images are independent, and they become the basis.
    std::vector<BitVector> rows;
    rows.reserve(m);
    for (int li = 0; li < m; ++li) {
        BitVector r(n);
        for (int p : g.line(li)) r.set(p, true);
        rows.push_back(std::move(r));
    }

    std::vector<bool> is_pivot(n, false);
    std::size_t rank = 0;
    for (int c = n - 1; c >= 0 && rank < rows.size(); --c) {
        std::size_t sel = rank;
        while (sel < rows.size() && !rows[sel].get(c)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r].get(c)) rows[r] ^= rows[rank];
        is_pivot[c] = true;
        ++rank;
    }

    RepSpace rs;
    rs.g = &g;
    rs.dim_v = n - int(rank);
    for (int p = 0; p < n; ++p)
        if (!is_pivot[p]) rs.basis_points.push_back(p);

    std::vector<int> coord_of(n, -1);
    for (int i = 0; i < rs.dim_v; ++i) coord_of[rs.basis_points[i]] = i;

    rs.coords.assign(n, BitVector(rs.dim_v));
    for (int p : rs.basis_points) rs.coords[p] = BitVector::unit(rs.dim_v, coord_of[p]);
    for (std::size_t r = 0; r < rank; ++r) {
        int piv = -1;
        BitVector v(rs.dim_v);
        for (int c = n - 1; c >= 0; --c) {
            if (!rows[r].get(c)) continue;
            if (is_pivot[c] && piv < 0) {
                piv = c;
            } else {
                assert(coord_of[c] >= 0);
                v.set(coord_of[c], true);
            }
        }
        assert(piv >= 0);
        rs.coords[piv] = v;
    }

    // Distance-3 form: defined on the basis images and checked against
    // every pair of point images.
    check_line_parity(g);
    rs.beta = BitMatrix(rs.dim_v, rs.dim_v);
    for (int i = 0; i < rs.dim_v; ++i)
        for (int j = i + 1; j < rs.dim_v; ++j)
            if (g.dist(rs.basis_points[i], rs.basis_points[j]) == 3) {
                rs.beta.set(i, j, true);
                rs.beta.set(j, i, true);
            }
    std::vector<BitVector> beta_v(n);
    for (int y = 0; y < n; ++y) beta_v[y] = rs.beta.mul(rs.coords[y]);
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y)
            if (rs.coords[x].dot(beta_v[y]) != (g.dist(x, y) == 3))
                throw ParityViolation("distance-3 matrix does not descend to the relation quotient");

    rs.npdim = rs.beta.rank();
    rs.radical_basis = rs.beta.nullspace();
    assert(rs.npdim + int(rs.radical_basis.size()) == rs.dim_v);
    return rs;
}

int CocycleGroup::element_order(const GroupElement& a) const {
    if (a.v.is_zero()) return a.c ? 2 : 1;
    return q(a.v) ? 4 : 2;
}

CocycleGroup build_representation(const RepSpace& rs) {
    const IncidenceGeometry& g = *rs.g;
    const int n = g.num_points();
    const int d = rs.dim_v;

    CocycleGroup gr;
    gr.dim_ = d;
    gr.cocycle_ = BitMatrix(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (rs.beta.get(i, j)) gr.cocycle_.set(i, j, true);

    // Point images must be involutions: the square of (v, c) is (0, q(v)).
    for (int x = 0; x < n; ++x)
        if (gr.q(rs.coords[x]))
            throw InconsistentSystem("point " + std::to_string(x) + " would have order 4");

    // Central bits: one linear equation per line.
    const int m = g.num_lines();
    BitMatrix sys(m, n);
    BitVector rhs(m);
    for (int li = 0; li < m; ++li) {
        const auto& l = g.line(li);
        for (int p : l) sys.set(li, p, true);
        rhs.set(li, gr.phi(rs.coords[l[0]], rs.coords[l[1]]));
    }
    auto sol = sys.solve(rhs);
    if (!sol) throw InconsistentSystem("no central-bit assignment satisfies the line relations");

    // Shift by the linear functional matching sol on basis points, so the
    // chosen representation has c = 0 there.
    BitVector shift(d);
    for (int i = 0; i < d; ++i) shift.set(i, sol->get(rs.basis_points[i]));
    gr.images_.resize(n);
    for (int x = 0; x < n; ++x) gr.images_[x] = {rs.coords[x], bool(sol->get(x) ^ rs.coords[x].dot(shift))};
    for (int i = 0; i < d; ++i) assert(!gr.images_[rs.basis_points[i]].c);

    // The images generate all of V x F2 when beta is nonzero (some
    // commutator hits theta); otherwise theta is missing and R = V.
    bool beta_zero = true;
    for (int i = 0; i < d && beta_zero; ++i) beta_zero = rs.beta.row(i).is_zero();
    gr.nonabelian_ = !beta_zero;
    gr.order_log2_ = beta_zero ? d : d + 1;

    // Line relation r_x r_y = r_z, checked in full.
    for (int li = 0; li < m; ++li) {
        const auto& l = g.line(li);
        if (!(gr.mul(gr.images_[l[0]], gr.images_[l[1]]) == gr.images_[l[2]]))
            throw InconsistentSystem("line relation fails after solving");
    }
    return gr;
}

namespace {

// rank(augmented) - rank(system) for the central-bit system with the
// given point coordinates and cocycle; 0 iff solvable.
int system_rank_gap(const IncidenceGeometry& g, const std::vector<BitVector>& coords,
                    const BitMatrix& cocycle) {
    const int n = g.num_points();
    const int m = g.num_lines();
    BitMatrix sys(m, n), aug(m, n + 1);
    for (int li = 0; li < m; ++li) {
        const auto& l = g.line(li);
        for (int p : l) {
            sys.set(li, p, true);
            aug.set(li, p, true);
        }
        aug.set(li, n, coords[l[0]].dot(cocycle.mul(coords[l[1]])));
    }
    return int(aug.rank()) - int(sys.rank());
}

BitMatrix strict_upper(const BitMatrix& beta, int d) {
    BitMatrix u(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (beta.get(i, j)) u.set(i, j, true);
    return u;
}

// Basis of ker(q | radical); q is linear there since beta vanishes.
std::vector<BitVector> singular_radical_basis(const RepSpace& rs, const BitMatrix& cocycle) {
    const int r = int(rs.radical_basis.size());
    std::vector<bool> qv(r);
    int j0 = -1;
    for (int i = 0; i < r; ++i) {
        qv[i] = rs.radical_basis[i].dot(cocycle.mul(rs.radical_basis[i]));
        if (qv[i] && j0 < 0) j0 = i;
    }
    std::vector<BitVector> basis;
    for (int i = 0; i < r; ++i) {
        if (i == j0) continue;
        BitVector u = rs.radical_basis[i];
        if (qv[i]) u ^= rs.radical_basis[j0];
        basis.push_back(u);
    }
    return basis;
}

// Coordinates and cocycle on V/U for a kernel U inside the radical:
// express each v_x in the basis (U | greedy unit complement), keep the
// complement part, and correct the strict-upper cocycle's diagonal so
// every projected point image is singular. ok = false when no diagonal
// achieves that.
struct QuotientSetup {
    int k = 0;
    std::vector<BitVector> proj;  // per point, dim k
    BitMatrix cocycle;            // strict upper of quotient beta + diagonal
    bool ok = false;
};

QuotientSetup radical_quotient_setup(const RepSpace& rs, const std::vector<BitVector>& kernel) {
    const IncidenceGeometry& g = *rs.g;
    const int n = g.num_points();
    const int d = rs.dim_v;
    const int kd = int(kernel.size());
    QuotientSetup qs;
    qs.k = d - kd;

    std::vector<BitVector> span = kernel;
    std::vector<int> unit_cols;
    for (int i = 0; i < d && int(unit_cols.size()) < qs.k; ++i) {
        BitVector u = BitVector::unit(d, i);
        if (!f2::in_span(span, u)) {
            span.push_back(u);
            unit_cols.push_back(i);
        }
    }
    BitMatrix basis_mat(d, d);
    for (int j = 0; j < kd; ++j)
        for (int i = 0; i < d; ++i) basis_mat.set(i, j, kernel[j].get(i));
    for (int j = 0; j < qs.k; ++j) basis_mat.set(unit_cols[j], kd + j, true);
    auto inv = basis_mat.inverse();
    if (!inv) throw std::logic_error("complement construction failed");

    qs.proj.assign(n, BitVector(qs.k));
    for (int x = 0; x < n; ++x) {
        BitVector co = inv->mul(rs.coords[x]);
        for (int j = 0; j < qs.k; ++j) qs.proj[x].set(j, co.get(kd + j));
    }
    BitMatrix beta_q(qs.k, qs.k);
    for (int i = 0; i < qs.k; ++i)
        for (int j = 0; j < qs.k; ++j) beta_q.set(i, j, rs.beta.get(unit_cols[i], unit_cols[j]));
    qs.cocycle = strict_upper(beta_q, qs.k);

    BitMatrix pts(n, qs.k);
    BitVector want(n);
    for (int x = 0; x < n; ++x) {
        for (int j = 0; j < qs.k; ++j) pts.set(x, j, qs.proj[x].get(j));
        want.set(x, qs.proj[x].dot(qs.cocycle.mul(qs.proj[x])));
    }
    auto diag = pts.solve(want);
    if (diag) {
        for (int j = 0; j < qs.k; ++j)
            if (diag->get(j)) qs.cocycle.set(j, j, true);
        qs.ok = true;
    }
    return qs;
}

}  // namespace

ExistenceReport representation_existence(const RepSpace& rs) {
    const IncidenceGeometry& g = *rs.g;
    const int n = g.num_points();
    const int d = rs.dim_v;
    ExistenceReport er;
    er.radical_dim = int(rs.radical_basis.size());

    BitMatrix u_full = strict_upper(rs.beta, d);
    bool squares_ok = true;
    for (int x = 0; x < n && squares_ok; ++x)
        squares_ok = !rs.coords[x].dot(u_full.mul(rs.coords[x]));
    er.full_rank_gap = squares_ok ? system_rank_gap(g, rs.coords, u_full) : -1;
    er.full_model = squares_ok && er.full_rank_gap == 0;

    std::vector<BitVector> u_basis = singular_radical_basis(rs, u_full);
    er.singular_dim = int(u_basis.size());
    if (er.singular_dim == 0) {
        er.quotient_rank_gap = er.full_rank_gap;
        er.any_model = er.full_model;
        return er;
    }

    QuotientSetup qs = radical_quotient_setup(rs, u_basis);
    if (!qs.ok) {
        er.quotient_rank_gap = -1;
        er.any_model = false;
        return er;
    }
    er.quotient_rank_gap = system_rank_gap(g, qs.proj, qs.cocycle);
    er.any_model = er.quotient_rank_gap == 0;
    return er;
}

CocycleGroup build_minimal_representation(const RepSpace& rs) {
    if (rs.radical_basis.empty()) return build_representation(rs);

    const IncidenceGeometry& g = *rs.g;
    const int n = g.num_points();
    BitMatrix u_full = strict_upper(rs.beta, rs.dim_v);
    if (singular_radical_basis(rs, u_full).size() != rs.radical_basis.size())
        throw std::invalid_argument("squaring form is nonzero on the radical; no extraspecial quotient");

    QuotientSetup qs = radical_quotient_setup(rs, rs.radical_basis);
    if (!qs.ok) throw InconsistentSystem("no singular squaring form on the quotient");

    CocycleGroup gr;
    gr.dim_ = qs.k;
    gr.cocycle_ = qs.cocycle;
    for (int x = 0; x < n; ++x)
        if (gr.q(qs.proj[x]))
            throw InconsistentSystem("point " + std::to_string(x) + " would have order 4");

    const int m = g.num_lines();
    BitMatrix sys(m, n);
    BitVector rhs(m);
    for (int li = 0; li < m; ++li) {
        const auto& l = g.line(li);
        for (int p : l) sys.set(li, p, true);
        rhs.set(li, gr.phi(qs.proj[l[0]], qs.proj[l[1]]));
    }
    auto sol = sys.solve(rhs);
    if (!sol) throw InconsistentSystem("no central-bit assignment satisfies the line relations");
    gr.images_.resize(n);
    for (int x = 0; x < n; ++x) gr.images_[x] = {qs.proj[x], sol->get(x)};

    bool beta_zero = true;
    for (int i = 0; i < qs.k && beta_zero; ++i)
        for (int j = i + 1; j < qs.k && beta_zero; ++j) beta_zero = !qs.cocycle.get(i, j);
    gr.nonabelian_ = !beta_zero;
    gr.order_log2_ = beta_zero ? qs.k : qs.k + 1;

    for (int li = 0; li < m; ++li) {
        const auto& l = g.line(li);
        if (!(gr.mul(gr.images_[l[0]], gr.images_[l[1]]) == gr.images_[l[2]]))
            throw InconsistentSystem("line relation fails after solving");
    }
    return gr;
}

CenterInfo center(const CocycleGroup& gr, const RepSpace& rs) {
    CenterInfo ci;
    ci.radical_dim = int(rs.radical_basis.size());
    // (v, c) is central iff beta(v, .) = 0, i.e. v in rad(beta); the c bit
    // is free, and when beta = 0 the whole group is abelian without theta.
    ci.order_log2 = gr.nonabelian() ? ci.radical_dim + 1 : gr.order_log2();
    return ci;
}

bool in_center(const RepSpace& rs, const GroupElement& e) {
    return rs.beta.mul(e.v).is_zero();
}

CentralDecomposition central_decomposition(const CocycleGroup& gr, const RepSpace& rs) {
    CentralDecomposition cd;
    const int d = rs.dim_v;
    const int r = int(rs.radical_basis.size());
    const int k = d - r;
    cd.z_order_log2 = center(gr, rs).order_log2;
    cd.e_order_log2 = k + 1;
    if (k == 0 || k % 2 != 0) {
        cd.checks_ok = (k == 0);
        return cd;
    }

    // Deterministic complement of the radical: greedily extend the
    // radical basis by unit vectors, the new vectors spanning W.
    std::vector<BitVector> span = rs.radical_basis;
    std::vector<BitVector> w_basis;
    for (int i = 0; i < d && int(w_basis.size()) < k; ++i) {
        BitVector u = BitVector::unit(d, i);
        if (!f2::in_span(span, u)) {
            span.push_back(u);
            w_basis.push_back(u);
        }
    }
    assert(int(w_basis.size()) == k);

    // beta restricted to W is nondegenerate; split it into hyperbolic pairs.
    BitMatrix bw(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) bw.set(i, j, w_basis[i].dot(rs.beta.mul(w_basis[j])));
    auto pairs = f2::hyperbolic_basis(bw);

    auto lift = [&](const BitVector& c) {
        BitVector v(d);
        for (int i = 0; i < k; ++i)
            if (c.get(i)) v ^= w_basis[i];
        return v;
    };
    for (auto& [a, b] : pairs) cd.pairs.emplace_back(lift(a), lift(b));

    // Certify: pairs beta-orthonormal in the hyperbolic sense, their span
    // meets the radical trivially, and span + radical = V.
    bool ok = int(cd.pairs.size()) * 2 == k;
    std::vector<BitVector> wspan;
    for (auto& [a, b] : cd.pairs) {
        wspan.push_back(a);
        wspan.push_back(b);
    }
    for (std::size_t i = 0; i < cd.pairs.size() && ok; ++i) {
        auto& [a, b] = cd.pairs[i];
        ok = gr.beta(a, b);
        for (std::size_t j = i + 1; j < cd.pairs.size() && ok; ++j) {
            auto& [c2, d2] = cd.pairs[j];
            ok = !gr.beta(a, c2) && !gr.beta(a, d2) && !gr.beta(b, c2) && !gr.beta(b, d2);
        }
    }
    if (ok) {
        std::vector<BitVector> all = wspan;
        for (auto& u : rs.radical_basis) all.push_back(u);
        ok = int(f2::rank_of(all)) == d && int(f2::rank_of(wspan)) == k;
    }
    cd.checks_ok = ok;
    return cd;
}

MinimalQuotient minimal_quotient(const CocycleGroup& gr, const RepSpace& rs) {
    if (!gr.nonabelian()) throw std::invalid_argument("minimal quotient needs a nonzero commutator form");
    const int d = rs.dim_v;
    const int r = int(rs.radical_basis.size());

    // q is linear on the radical (beta vanishes there); U = ker(q|rad).
    std::vector<bool> qv(r);
    for (int i = 0; i < r; ++i) qv[i] = gr.q(rs.radical_basis[i]);
    int j0 = -1;
    for (int i = 0; i < r; ++i)
        if (qv[i]) {
            j0 = i;
            break;
        }
    std::vector<BitVector> u_basis;
    for (int i = 0; i < r; ++i) {
        if (i == j0) continue;
        BitVector u = rs.radical_basis[i];
        if (qv[i]) u ^= rs.radical_basis[j0];
        u_basis.push_back(u);
    }
    for (const auto& u : u_basis)
        if (gr.q(u)) throw InconsistentSystem("kernel basis vector fails to be singular");

    MinimalQuotient mq;
    const int ud = int(u_basis.size());
    mq.quotient_dim = d - ud;
    mq.order_log2 = 1 + mq.quotient_dim;
    if (j0 >= 0) {
        // q is nonzero on the radical: the quotient keeps a central
        // vector-part element and is not extraspecial.
        mq.type = GroupType::NotExtraspecial;
        return mq;
    }

    // Quotient coordinates: a deterministic complement of U.
    std::vector<BitVector> span = u_basis;
    std::vector<BitVector> w_basis;
    for (int i = 0; i < d && int(w_basis.size()) < mq.quotient_dim; ++i) {
        BitVector u = BitVector::unit(d, i);
        if (!f2::in_span(span, u)) {
            span.push_back(u);
            w_basis.push_back(u);
        }
    }
    const int k = mq.quotient_dim;
    BitMatrix upper(k, k);
    for (int i = 0; i < k; ++i) {
        upper.set(i, i, gr.q(w_basis[i]));
        for (int j = i + 1; j < k; ++j) upper.set(i, j, gr.beta(w_basis[i], w_basis[j]));
    }
    f2::QuadraticForm form{upper};
    if (!f2::radical(form.polar()).empty()) {
        mq.type = GroupType::NotExtraspecial;
        return mq;
    }
    mq.type = f2::arf_type(form) == f2::FormType::Plus ? GroupType::Plus : GroupType::Minus;
    return mq;
}

GoodSubsetWitness good_subset_search(const RepSpace& rs, int a, int b) {
    const IncidenceGeometry& g = *rs.g;
    if (g.dist(a, b) != 3)
        throw NotDistanceThree("points " + std::to_string(a) + " and " + std::to_string(b) +
                               " are at distance " + std::to_string(int(g.dist(a, b))));
    GoodSubsetWitness w;
    w.a = a;
    w.b = b;
    for (int li : g.lines_through(a)) {
        int pick = -1;
        for (int p : g.line(li))
            if (g.dist(b, p) == 2) {
                if (pick >= 0) throw geom::AxiomViolation("two nearest points on a line");
                pick = p;
            }
        if (pick < 0) throw geom::AxiomViolation("no nearest point on a line");
        w.A.push_back(pick);
    }

    // Independence of images modulo the radical is a matroid, so the
    // greedy ascending scan returns the lexicographically first maximum
    // independent subset.
    std::vector<int> cand = w.A;
    std::sort(cand.begin(), cand.end());
    std::vector<BitVector> span = rs.radical_basis;
    for (int x : cand) {
        if (!f2::in_span(span, rs.coords[x])) {
            span.push_back(rs.coords[x]);
            w.X.push_back(x);
        }
    }
    return w;
}

GoodSubsetWitness good_subset_search(const RepSpace& rs) {
    const IncidenceGeometry& g = *rs.g;
    for (int b = 0; b < g.num_points(); ++b)
        if (g.dist(0, b) == 3) return good_subset_search(rs, 0, b);
    throw NotDistanceThree("no point at distance 3 from point 0");
}

std::vector<GroupElement> subgroup_closure(const CocycleGroup& gr,
                                           const std::vector<GroupElement>& gens) {
    std::set<GroupElement> seen;
    std::vector<GroupElement> queue;
    seen.insert(gr.identity());
    queue.push_back(gr.identity());
    while (!queue.empty()) {
        GroupElement e = queue.back();
        queue.pop_back();
        for (const auto& gen : gens) {
            GroupElement f = gr.mul(e, gen);
            if (seen.insert(f).second) queue.push_back(f);
        }
    }
    return {seen.begin(), seen.end()};
}

QuadSubgroup quad_subgroup(const CocycleGroup& gr, const RepSpace& rs, const geom::Quad& q) {
    std::vector<GroupElement> gens;
    gens.reserve(q.points.size());
    for (int p : q.points) gens.push_back(gr.point_image(p));
    QuadSubgroup qs;
    qs.elements = subgroup_closure(gr, gens);
    int ord = 0;
    while ((std::size_t(1) << ord) < qs.elements.size()) ++ord;
    assert((std::size_t(1) << ord) == qs.elements.size());
    qs.order_log2 = ord;
    for (const auto& e : qs.elements)
        if (in_center(rs, e)) qs.center_intersection.push_back(e);
    return qs;
}

}  // namespace nearhex::rep
