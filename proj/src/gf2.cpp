#include "motso/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace motso::gf2 {

int BitVec::lowest_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w]) return int(w * 64 + std::countr_zero(words_[w]));
    }
    return -1;
}

std::size_t BitVec::popcount() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool BitVec::dot(const BitVec& o) const {
    if (n_ != o.n_) throw std::invalid_argument("BitVec size mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & o.words_[i];
    return std::popcount(acc) & 1;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (n_ != o.n_) throw std::invalid_argument("BitVec size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

BitVec concat(const BitVec& a, const BitVec& b) {
    BitVec r(a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.get(i)) r.set(i);
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b.get(i)) r.set(a.size() + i);
    return r;
}

BitVec slice(const BitVec& v, std::size_t begin, std::size_t end) {
    BitVec r(end - begin);
    for (std::size_t i = begin; i < end; ++i)
        if (v.get(i)) r.set(i - begin);
    return r;
}

F2Matrix F2Matrix::identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

F2Matrix F2Matrix::transposed() const {
    F2Matrix t(cols, rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (get(r, c)) t.set(c, r);
    return t;
}

BitVec F2Matrix::apply(const BitVec& x) const {
    if (x.size() != cols) throw std::invalid_argument("F2Matrix::apply dimension mismatch");
    BitVec y(rows);
    for (std::size_t r = 0; r < rows; ++r) y.set(r, row_data[r].dot(x));
    return y;
}

F2Matrix from_columns(const std::vector<BitVec>& cols_vecs, std::size_t height) {
    F2Matrix m(height, cols_vecs.size());
    for (std::size_t c = 0; c < cols_vecs.size(); ++c) {
        if (cols_vecs[c].size() != height)
            throw std::invalid_argument("from_columns: column height mismatch");
        for (std::size_t r = 0; r < height; ++r)
            if (cols_vecs[c].get(r)) m.set(r, c);
    }
    return m;
}

bool RowSpace::insert(BitVec v) {
    if (v.size() != width_) throw std::invalid_argument("RowSpace width mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(std::size_t(pivots_[i]))) v ^= rows_[i];
    int p = v.lowest_set();
    if (p < 0) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].get(std::size_t(p))) rows_[i] ^= v;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

BitVec RowSpace::reduce(BitVec v) const {
    if (v.size() != width_) throw std::invalid_argument("RowSpace width mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(std::size_t(pivots_[i]))) v ^= rows_[i];
    return v;
}

bool TaggedRowSpace::insert(BitVec v, BitVec tag) {
    if (v.size() != width_ || tag.size() != tag_width_)
        throw std::invalid_argument("TaggedRowSpace size mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (v.get(std::size_t(pivots_[i]))) {
            v ^= rows_[i];
            tag ^= tags_[i];
        }
    }
    int p = v.lowest_set();
    if (p < 0) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].get(std::size_t(p))) {
            rows_[i] ^= v;
            tags_[i] ^= tag;
        }
    }
    rows_.push_back(std::move(v));
    tags_.push_back(std::move(tag));
    pivots_.push_back(p);
    return true;
}

BitVec TaggedRowSpace::reduce(BitVec v, BitVec* tag_out) const {
    if (v.size() != width_) throw std::invalid_argument("TaggedRowSpace size mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (v.get(std::size_t(pivots_[i]))) {
            v ^= rows_[i];
            if (tag_out) *tag_out ^= tags_[i];
        }
    }
    return v;
}

std::size_t rank(const F2Matrix& m) {
    RowSpace s(m.cols);
    for (const auto& r : m.row_data) s.insert(r);
    return s.rank();
}

std::vector<BitVec> kernel_basis(const F2Matrix& m) {
    // Row-reduce, remembering which column owns each pivot.
    RowSpace s(m.cols);
    for (const auto& r : m.row_data) s.insert(r);

    std::vector<int> pivot_row(m.cols, -1);
    for (std::size_t i = 0; i < s.rows().size(); ++i)
        pivot_row[std::size_t(s.rows()[i].lowest_set())] = int(i);

    std::vector<BitVec> basis;
    for (std::size_t c = 0; c < m.cols; ++c) {
        if (pivot_row[c] >= 0) continue;  // pivot column
        BitVec v(m.cols);
        v.set(c);
        for (std::size_t p = 0; p < m.cols; ++p) {
            if (pivot_row[p] >= 0 && s.rows()[std::size_t(pivot_row[p])].get(c)) v.set(p);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<BitVec> solve(const F2Matrix& m, const BitVec& b) {
    if (b.size() != m.rows) throw std::invalid_argument("solve: rhs length != rows");
    // Eliminate on rows augmented with the rhs bit.
    RowSpace s(m.cols + 1);
    for (std::size_t r = 0; r < m.rows; ++r) {
        BitVec aug = m.row_data[r];
        BitVec row = concat(aug, BitVec(1));
        if (b.get(r)) row.set(m.cols);
        s.insert(row);
    }
    BitVec x(m.cols);
    for (const auto& row : s.rows()) {
        int p = row.lowest_set();
        if (p == int(m.cols)) return std::nullopt;  // 0 = 1
        x.set(std::size_t(p), row.get(m.cols));
    }
    // The elimination above solves the system read row-wise; verify.
    BitVec check = m.apply(x);
    if (!(check == b)) return std::nullopt;
    return x;
}

}  // namespace motso::gf2
