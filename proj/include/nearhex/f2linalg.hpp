// Dense linear algebra over GF(2), bit-packed into 64-bit words.
//
// Everything downstream (incidence geometries, representation modules,
// quadratic forms) reduces to rank / nullspace / solve over F2, so this
// module keeps the primitives small and deterministic: row reduction
// always picks the leftmost pivot column and the first nonzero row, which
// makes every derived basis reproducible across runs and platforms.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nearhex::f2 {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), w_((len + 63) / 64, 0) {}

    static BitVector unit(std::size_t len, std::size_t i);
    // "1011" -> bits 0,2,3 set (index 0 first).
    static BitVector from_string(const std::string& bits);

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool b) {
        std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (b) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    BitVector& operator^=(const BitVector& o);
    BitVector& operator&=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) { a ^= b; return a; }
    friend BitVector operator&(BitVector a, const BitVector& b) { a &= b; return a; }

    bool is_zero() const;
    std::size_t count() const;            // popcount
    int first_set() const;                // -1 if zero
    bool dot(const BitVector& o) const;   // parity of <a,b>

    // Lexicographic by bit index 0,1,2,... -- used for canonical choices.
    bool operator==(const BitVector& o) const { return len_ == o.len_ && w_ == o.w_; }
    bool operator<(const BitVector& o) const;

    std::string to_string() const;
    // Low bits packed into one word; requires size() <= 64.
    std::uint64_t to_word() const;
    static BitVector from_word(std::size_t len, std::uint64_t word);

    // Raw 64-bit words, for fast set-bit iteration.
    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> w_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : cols_(cols), rows_(rows, BitVector(cols)) {}

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const BitVector& row(std::size_t i) const { return rows_[i]; }
    BitVector& row(std::size_t i) { return rows_[i]; }
    bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool b) { rows_[i].set(j, b); }
    void append_row(BitVector v);

    BitMatrix transposed() const;
    BitVector mul(const BitVector& v) const;        // M v, v indexed by columns
    BitMatrix mul(const BitMatrix& o) const;
    friend BitMatrix operator^(const BitMatrix& a, const BitMatrix& b);
    bool operator==(const BitMatrix& o) const { return cols_ == o.cols_ && rows_ == o.rows_; }

    // Reduced row echelon form; pivot columns ascend, pivot rows are packed
    // at the top in column order. Deterministic: leftmost pivot column,
    // first nonzero row below the current one.
    BitMatrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const;
    std::size_t rank() const;
    // Basis of {v : Mv = 0}, one vector per free column, ascending.
    std::vector<BitVector> nullspace() const;
    // One solution of Mx = b, or nullopt if inconsistent. The returned x is
    // supported on pivot columns only (free coordinates zero).
    std::optional<BitVector> solve(const BitVector& b) const;
    // Inverse of a square invertible matrix, or nullopt.
    std::optional<BitMatrix> inverse() const;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

// Span helpers, all deterministic.
std::size_t rank_of(const std::vector<BitVector>& vecs);
bool in_span(const std::vector<BitVector>& basis, const BitVector& v);
// Echelonised basis of the span (rref rows of the stacked vectors).
std::vector<BitVector> span_basis(const std::vector<BitVector>& vecs);

// A quadratic form q on F2^n stored as an upper-triangular matrix U
// (diagonal included): q(v) = v . (Uv). The polarisation
// beta(u,v) = q(u+v)+q(u)+q(v) is the symmetric matrix U + U^T, which has
// zero diagonal (alternating), i.e. a symplectic form when nondegenerate.
struct QuadraticForm {
    BitMatrix upper;

    explicit QuadraticForm(std::size_t n) : upper(n, n) {}
    explicit QuadraticForm(BitMatrix u);

    std::size_t dim() const { return upper.rows(); }
    bool eval(const BitVector& v) const { return v.dot(upper.mul(v)); }
    BitMatrix polar() const;
    bool polar_eval(const BitVector& u, const BitVector& v) const;
};

enum class FormType { Plus, Minus };

struct DegenerateForm : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Basis of the radical {v : beta(v, .) = 0} of an alternating form.
std::vector<BitVector> radical(const BitMatrix& polar);

// Hyperbolic basis (a1,b1),...,(am,bm) of a nondegenerate alternating form:
// beta(ai,bi)=1, all other pairings 0. Deterministic. Dimension must be even
// and the form nondegenerate, else DegenerateForm.
std::vector<std::pair<BitVector, BitVector>> hyperbolic_basis(const BitMatrix& polar);

// Arf: Plus iff q vanishes on 2^(2m-1)+2^(m-1) vectors, computed via a
// hyperbolic basis as sum of q(ai)q(bi). Requires nondegenerate polarisation.
FormType arf_type(const QuadraticForm& q);

// Number of v with q(v) = 0, by exhaustive enumeration; dim <= 24 intended.
// Used as the independent cross-check for arf_type.
std::uint64_t singular_count(const QuadraticForm& q);

}  // namespace nearhex::f2
