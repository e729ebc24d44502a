#include "nearhex/f2linalg.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace nearhex::f2 {

BitVector BitVector::unit(std::size_t len, std::size_t i) {
    BitVector v(len);
    v.set(i, true);
    return v;
}

BitVector BitVector::from_string(const std::string& bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i] == '1') v.set(i, true);
    return v;
}

BitVector& BitVector::operator^=(const BitVector& o) {
    assert(len_ == o.len_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& o) {
    assert(len_ == o.len_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

bool BitVector::is_zero() const {
    for (auto w : w_) if (w) return false;
    return true;
}

std::size_t BitVector::count() const {
    std::size_t n = 0;
    for (auto w : w_) n += std::popcount(w);
    return n;
}

int BitVector::first_set() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]));
    return -1;
}

bool BitVector::dot(const BitVector& o) const {
    assert(len_ == o.len_);
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) & 1;
}

bool BitVector::operator<(const BitVector& o) const {
    assert(len_ == o.len_);
    // Compare by lowest differing bit index: the vector with a 0 there is
    // smaller, matching lexicographic order on bit strings b0 b1 b2 ...
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (w_[i] == o.w_[i]) continue;
        std::uint64_t d = w_[i] ^ o.w_[i];
        std::uint64_t low = d & ~(d - 1);
        return (w_[i] & low) == 0;
    }
    return false;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::uint64_t BitVector::to_word() const {
    assert(len_ <= 64);
    return w_.empty() ? 0 : w_[0];
}

BitVector BitVector::from_word(std::size_t len, std::uint64_t word) {
    assert(len <= 64);
    BitVector v(len);
    if (!v.w_.empty()) {
        if (len < 64) word &= (std::uint64_t(1) << len) - 1;
        v.w_[0] = word;
    }
    return v;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void BitMatrix::append_row(BitVector v) {
    assert(v.size() == cols_ || rows_.empty());
    if (rows_.empty()) cols_ = v.size();
    rows_.push_back(std::move(v));
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (get(i, j)) t.set(j, i, true);
    return t;
}

BitVector BitMatrix::mul(const BitVector& v) const {
    assert(v.size() == cols_);
    BitVector out(rows());
    for (std::size_t i = 0; i < rows(); ++i)
        if (rows_[i].dot(v)) out.set(i, true);
    return out;
}

BitMatrix BitMatrix::mul(const BitMatrix& o) const {
    assert(cols_ == o.rows());
    BitMatrix out(rows(), o.cols());
    for (std::size_t i = 0; i < rows(); ++i) {
        // Row i of the product is the sum of rows of o selected by row i.
        for (std::size_t k = 0; k < cols_; ++k)
            if (get(i, k)) out.row(i) ^= o.row(k);
    }
    return out;
}

BitMatrix operator^(const BitMatrix& a, const BitMatrix& b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    BitMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i) out.row(i) ^= b.row(i);
    return out;
}

BitMatrix BitMatrix::rref(std::vector<std::size_t>* pivot_cols) const {
    BitMatrix m = *this;
    if (pivot_cols) pivot_cols->clear();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && !m.get(pr, c)) ++pr;
        if (pr == m.rows()) continue;
        std::swap(m.row(r), m.row(pr));
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && m.get(i, c)) m.row(i) ^= m.row(r);
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return m;
}

std::size_t BitMatrix::rank() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
}

std::vector<BitVector> BitMatrix::nullspace() const {
    std::vector<std::size_t> piv;
    BitMatrix r = rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        BitVector v(cols_);
        v.set(f, true);
        for (std::size_t k = 0; k < piv.size(); ++k)
            if (r.get(k, f)) v.set(piv[k], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<BitVector> BitMatrix::solve(const BitVector& b) const {
    assert(b.size() == rows());
    // Eliminate the augmented system [M | b].
    BitMatrix aug(rows(), cols_ + 1);
    for (std::size_t i = 0; i < rows(); ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            if (get(i, j)) aug.set(i, j, true);
        if (b.get(i)) aug.set(i, cols_, true);
    }
    std::vector<std::size_t> piv;
    BitMatrix r = aug.rref(&piv);
    if (!piv.empty() && piv.back() == cols_) return std::nullopt;
    BitVector x(cols_);
    for (std::size_t k = 0; k < piv.size(); ++k)
        if (r.get(k, cols_)) x.set(piv[k], true);
    return x;
}

std::optional<BitMatrix> BitMatrix::inverse() const {
    if (rows() != cols_) return std::nullopt;
    std::size_t n = rows();
    BitMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (get(i, j)) aug.set(i, j, true);
        aug.set(i, n + i, true);
    }
    std::vector<std::size_t> piv;
    BitMatrix r = aug.rref(&piv);
    if (piv.size() != n || (n > 0 && piv.back() != n - 1)) return std::nullopt;
    BitMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (r.get(i, n + j)) inv.set(i, j, true);
    return inv;
}

std::size_t rank_of(const std::vector<BitVector>& vecs) {
    if (vecs.empty()) return 0;
    BitMatrix m;
    for (const auto& v : vecs) m.append_row(v);
    return m.rank();
}

bool in_span(const std::vector<BitVector>& basis, const BitVector& v) {
    if (v.is_zero()) return true;
    if (basis.empty()) return false;
    BitMatrix m;
    for (const auto& b : basis) m.append_row(b);
    std::size_t r = m.rank();
    m.append_row(v);
    return m.rank() == r;
}

std::vector<BitVector> span_basis(const std::vector<BitVector>& vecs) {
    if (vecs.empty()) return {};
    BitMatrix m;
    for (const auto& v : vecs) m.append_row(v);
    std::vector<std::size_t> piv;
    BitMatrix r = m.rref(&piv);
    std::vector<BitVector> out;
    for (std::size_t k = 0; k < piv.size(); ++k) out.push_back(r.row(k));
    return out;
}

QuadraticForm::QuadraticForm(BitMatrix u) : upper(std::move(u)) {
    assert(upper.rows() == upper.cols());
    for (std::size_t i = 0; i < upper.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            assert(!upper.get(i, j));
}

BitMatrix QuadraticForm::polar() const {
    BitMatrix p = upper ^ upper.transposed();
    // The diagonal of U cancels in U + U^T only off-diagonal; clear it so the
    // polarisation is alternating regardless of the stored diagonal.
    for (std::size_t i = 0; i < p.rows(); ++i) p.set(i, i, false);
    return p;
}

bool QuadraticForm::polar_eval(const BitVector& u, const BitVector& v) const {
    // beta(u,v) = q(u+v) + q(u) + q(v) = u^T U v + v^T U u.
    return u.dot(upper.mul(v)) ^ v.dot(upper.mul(u));
}

std::vector<BitVector> radical(const BitMatrix& polar) {
    return polar.nullspace();
}

std::vector<std::pair<BitVector, BitVector>> hyperbolic_basis(const BitMatrix& polar) {
    std::size_t n = polar.rows();
    if (!radical(polar).empty() || n % 2 != 0)
        throw DegenerateForm("alternating form is degenerate");
    auto beta = [&](const BitVector& u, const BitVector& v) { return u.dot(polar.mul(v)); };
    // Working set starts as the unit vectors; each round extracts one
    // hyperbolic pair and replaces the rest by their orthogonal corrections.
    std::vector<BitVector> work;
    for (std::size_t i = 0; i < n; ++i) work.push_back(BitVector::unit(n, i));
    std::vector<std::pair<BitVector, BitVector>> pairs;
    while (!work.empty()) {
        BitVector a = work.front();
        std::size_t j = 1;
        while (j < work.size() && !beta(a, work[j])) ++j;
        assert(j < work.size());  // else a were radical
        BitVector b = work[j];
        std::vector<BitVector> next;
        for (std::size_t k = 1; k < work.size(); ++k) {
            if (k == j) continue;
            BitVector w = work[k];
            if (beta(w, b)) w ^= a;
            if (beta(w, a)) w ^= b;
            if (!w.is_zero()) next.push_back(std::move(w));
        }
        pairs.emplace_back(std::move(a), std::move(b));
        work = std::move(next);
    }
    return pairs;
}

FormType arf_type(const QuadraticForm& q) {
    auto pairs = hyperbolic_basis(q.polar());
    bool arf = false;
    for (const auto& [a, b] : pairs) arf ^= q.eval(a) && q.eval(b);
    return arf ? FormType::Minus : FormType::Plus;
}

std::uint64_t singular_count(const QuadraticForm& q) {
    std::size_t n = q.dim();
    assert(n <= 24);
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t(1) << n); ++x)
        if (!q.eval(BitVector::from_word(n, x))) ++count;
    return count;
}

}  // namespace nearhex::f2
