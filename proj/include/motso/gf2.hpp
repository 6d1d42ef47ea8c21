#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace motso::gf2 {

// Dense bit vector over GF(2), packed into 64-bit words.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
        std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    bool is_zero() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    // Index of the lowest set bit, or -1 for the zero vector.
    int lowest_set() const;

    std::size_t popcount() const;

    // Parity of the bitwise AND with o (GF(2) inner product).
    bool dot(const BitVec& o) const;

    BitVec& operator^=(const BitVec& o);
    friend BitVec operator^(BitVec a, const BitVec& b) {
        a ^= b;
        return a;
    }
    bool operator==(const BitVec&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

// Concatenate two bit vectors (used for augmented eliminations).
BitVec concat(const BitVec& a, const BitVec& b);
BitVec slice(const BitVec& v, std::size_t begin, std::size_t end);

struct F2Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<BitVec> row_data;  // rows BitVecs of width cols

    F2Matrix() = default;
    F2Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), row_data(r, BitVec(c)) {}

    static F2Matrix identity(std::size_t n);

    bool get(std::size_t r, std::size_t c) const { return row_data[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { row_data[r].set(c, v); }

    F2Matrix transposed() const;
    BitVec apply(const BitVec& x) const;  // matrix * column vector
};

// Build a matrix whose columns are the given vectors (all of equal size).
F2Matrix from_columns(const std::vector<BitVec>& cols_vecs, std::size_t height);

std::size_t rank(const F2Matrix& m);

// Basis of {v : Mv = 0}; vectors are independent and their count is
// cols - rank(M). Column order is the caller's basis order.
std::vector<BitVec> kernel_basis(const F2Matrix& m);

// Some x with Mx = b, or nullopt. Throws std::invalid_argument when
// b.size() != rows.
std::optional<BitVec> solve(const F2Matrix& m, const BitVec& b);

// Incrementally maintained row space in reduced echelon form.
// Pivot choice is deterministic (lowest set bit), so reductions and
// membership tests are reproducible run to run.
class RowSpace {
public:
    explicit RowSpace(std::size_t width) : width_(width) {}

    std::size_t width() const { return width_; }
    std::size_t rank() const { return rows_.size(); }

    // Returns true when v was independent of the current span.
    bool insert(BitVec v);

    // Canonical residual of v modulo the span.
    BitVec reduce(BitVec v) const;

    bool contains(const BitVec& v) const { return reduce(v).is_zero(); }

    const std::vector<BitVec>& rows() const { return rows_; }

private:
    std::size_t width_;
    std::vector<BitVec> rows_;
    std::vector<int> pivots_;
};

// Row space over (vector, tag) pairs with pivots restricted to the vector
// block; reductions accumulate the tag combination used. This is the
// workhorse for expressing classes in a chosen basis.
class TaggedRowSpace {
public:
    TaggedRowSpace(std::size_t width, std::size_t tag_width)
        : width_(width), tag_width_(tag_width) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return width_; }

    // Returns false (and discards the pair) when v is already in the span.
    bool insert(BitVec v, BitVec tag);

    // Residual of v modulo the span; *tag_out ^= combination of row tags used.
    BitVec reduce(BitVec v, BitVec* tag_out = nullptr) const;

private:
    std::size_t width_;
    std::size_t tag_width_;
    std::vector<BitVec> rows_;
    std::vector<BitVec> tags_;
    std::vector<int> pivots_;
};

}  // namespace motso::gf2
