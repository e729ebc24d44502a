// Representation machinery over GF(2).
//
// V: the F2 vector space presented by one generator per point and the
// relation v_x + v_y + v_z = 0 per line {x,y,z}. A near hexagon's
// distance-3 indicator matrix descends to a symmetric bilinear form beta
// on V; its rank is the second dimension invariant alongside dim V.
//
// Groups are modelled concretely: elements are pairs (v, c) in V x F2
// multiplied as (v,c)(w,e) = (v+w, c+e+phi(v,w)) for a fixed bilinear
// cocycle phi with phi + phi^T = beta. Commutators land in the central
// F2, squares are (0, q(v)), the exponent divides 4, and the subgroup
// generated by the point images (v_x, c_x) is the representation group.

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "nearhex/f2linalg.hpp"
#include "nearhex/geometry.hpp"

namespace nearhex::rep {

struct ParityViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InconsistentSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotDistanceThree : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RepSpace {
    const geom::IncidenceGeometry* g = nullptr;
    int dim_v = 0;
    int npdim = 0;
    std::vector<f2::BitVector> coords;        // v_x per point, length dim_v
    std::vector<int> basis_points;            // ascending; their v_x are unit vectors
    f2::BitMatrix beta;                       // symmetric, zero diagonal
    std::vector<f2::BitVector> radical_basis; // echelon basis of rad(beta)
};

// Echelonizes the line-relation matrix. basis_points is the greedy
// ascending-id set whose images are a basis of V; beta lifts the
// distance-3 matrix (zero for diameter-2 geometries) after checking the
// line-parity condition; npdim = rank(beta) = rank of the distance-3
// matrix.
RepSpace universal_module(const geom::IncidenceGeometry& g);

// Rank of the raw distance-3 indicator matrix, computed independently of
// any coordinate choice.
int np_dim(const geom::IncidenceGeometry& g);

inline const f2::BitMatrix& beta_form(const RepSpace& rs) { return rs.beta; }

struct GroupElement {
    f2::BitVector v;
    bool c = false;

    bool operator==(const GroupElement& o) const { return c == o.c && v == o.v; }
    bool operator<(const GroupElement& o) const {
        if (v == o.v) return c < o.c;
        return v < o.v;
    }
};

class CocycleGroup {
public:
    int dim() const { return dim_; }
    int order_log2() const { return order_log2_; }
    bool nonabelian() const { return nonabelian_; }

    GroupElement identity() const { return {f2::BitVector(dim_), false}; }
    GroupElement theta() const { return {f2::BitVector(dim_), true}; }
    bool phi(const f2::BitVector& v, const f2::BitVector& w) const {
        return v.dot(cocycle_.mul(w));
    }
    bool beta(const f2::BitVector& v, const f2::BitVector& w) const {
        return phi(v, w) ^ phi(w, v);
    }
    bool q(const f2::BitVector& v) const { return phi(v, v); }

    GroupElement mul(const GroupElement& a, const GroupElement& b) const {
        return {a.v ^ b.v, bool(a.c ^ b.c ^ phi(a.v, b.v))};
    }
    GroupElement inverse(const GroupElement& a) const { return {a.v, bool(a.c ^ q(a.v))}; }
    // [a,b] = a^-1 b^-1 a b; always central, so returned as (0, bit).
    GroupElement commutator(const GroupElement& a, const GroupElement& b) const {
        return {f2::BitVector(dim_), beta(a.v, b.v)};
    }
    int element_order(const GroupElement& a) const;

    const GroupElement& point_image(int x) const { return images_[x]; }
    std::size_t num_points() const { return images_.size(); }
    const f2::BitMatrix& cocycle() const { return cocycle_; }

private:
    friend CocycleGroup build_representation(const RepSpace& rs);
    friend CocycleGroup build_minimal_representation(const RepSpace& rs);

    int dim_ = 0;
    int order_log2_ = 0;
    bool nonabelian_ = false;
    f2::BitMatrix cocycle_;  // upper-triangular, zero diagonal
    std::vector<GroupElement> images_;
};

// Cocycle = strict upper half of beta; central bits solved from the
// per-line system c_x + c_y + c_z = phi(v_x, v_y), normalised to vanish
// on basis_points. InconsistentSystem if no solution exists or some point
// image would fail to be an involution.
CocycleGroup build_representation(const RepSpace& rs);

// Same construction on V/rad(beta): point images carry the quotient
// coordinates and the group has order 2^(1+npdim), the smallest possible
// for a non-abelian model. Requires the squaring form to vanish on the
// radical (std::invalid_argument otherwise); InconsistentSystem when the
// quotient line system is unsolvable.
CocycleGroup build_minimal_representation(const RepSpace& rs);

// Existence certificate for non-abelian cocycle models. The squaring
// form of any such model is unique (it must polarise beta and vanish on
// every point image), so the model over a given quotient exists iff the
// corresponding central-bit system is consistent. Consistency is
// upward-monotone in the quotient and every admissible kernel lies in
// U = ker(q restricted to the radical); hence any_model = false proves
// that no non-abelian representation of the geometry exists at all.
struct ExistenceReport {
    bool full_model = false;  // over all of V
    bool any_model = false;   // over V/U
    int radical_dim = 0;
    int singular_dim = 0;               // dim U
    int full_rank_gap = 0;              // rank(augmented) - rank(system) over V
    int quotient_rank_gap = 0;          // same over V/U
};
ExistenceReport representation_existence(const RepSpace& rs);

struct CenterInfo {
    int order_log2 = 0;  // |Z(R)|
    int radical_dim = 0;
};
CenterInfo center(const CocycleGroup& gr, const RepSpace& rs);
bool in_center(const RepSpace& rs, const GroupElement& e);

struct CentralDecomposition {
    // Hyperbolic basis of a complement W of the radical; E is the
    // preimage of W, an extraspecial subgroup with R = E Z(R) and
    // E meet Z(R) = {1, theta}.
    std::vector<std::pair<f2::BitVector, f2::BitVector>> pairs;
    int e_order_log2 = 0;
    int z_order_log2 = 0;
    bool checks_ok = false;
};
CentralDecomposition central_decomposition(const CocycleGroup& gr, const RepSpace& rs);

enum class GroupType { Plus, Minus, NotExtraspecial };

struct MinimalQuotient {
    int order_log2 = 0;    // of the quotient group
    int quotient_dim = 0;  // vector-part dimension
    GroupType type = GroupType::NotExtraspecial;
};
// Quotient by {(u,0) : u in U} for the largest subspace U of the radical
// with q|U = 0. Extraspecial iff U is the whole radical.
MinimalQuotient minimal_quotient(const CocycleGroup& gr, const RepSpace& rs);

struct GoodSubsetWitness {
    int a = -1, b = -1;
    std::vector<int> A;  // one point per line through a, the one at distance 2 from b
    std::vector<int> X;  // maximum subset with independent images mod radical
};
// d(a,b) must be 3. X is the greedy ascending-id maximum independent
// subset of A modulo the radical, which is also the lexicographically
// first maximum one (independence is a matroid).
GoodSubsetWitness good_subset_search(const RepSpace& rs, int a, int b);
// Convenience: a = 0, b = first point at distance 3.
GoodSubsetWitness good_subset_search(const RepSpace& rs);

// Subgroup generated by given elements, as a sorted element list.
std::vector<GroupElement> subgroup_closure(const CocycleGroup& gr,
                                           const std::vector<GroupElement>& gens);

struct QuadSubgroup {
    int order_log2 = 0;
    std::vector<GroupElement> elements;             // sorted
    std::vector<GroupElement> center_intersection;  // sorted
};
QuadSubgroup quad_subgroup(const CocycleGroup& gr, const RepSpace& rs, const geom::Quad& q);

}  // namespace nearhex::rep
