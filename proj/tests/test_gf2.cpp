#include <doctest.h>

#include <random>
#include <stdexcept>

#include "motso/gf2.hpp"

using namespace motso::gf2;

namespace {

F2Matrix make(std::size_t r, std::size_t c, std::initializer_list<int> bits) {
    F2Matrix m(r, c);
    auto it = bits.begin();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, *it++ != 0);
    return m;
}

F2Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
    F2Matrix m(r, c);
    std::bernoulli_distribution bit(0.5);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, bit(rng));
    return m;
}

// Brute-force oracle: rank of a small matrix by enumerating row-space size.
std::size_t rank_by_enumeration(const F2Matrix& m) {
    REQUIRE(m.rows <= 12);
    std::vector<BitVec> seen;
    std::size_t count = 0;
    for (unsigned mask = 0; mask < (1u << m.rows); ++mask) {
        BitVec v(m.cols);
        for (std::size_t r = 0; r < m.rows; ++r)
            if (mask & (1u << r)) v ^= m.row_data[r];
        bool fresh = true;
        for (const auto& s : seen)
            if (s == v) fresh = false;
        if (fresh) {
            seen.push_back(v);
            ++count;
        }
    }
    // |row space| = 2^rank
    std::size_t rk = 0;
    while ((std::size_t(1) << rk) < count) ++rk;
    return rk;
}

}  // namespace

TEST_CASE("rank: identity and zero") {
    CHECK(rank(F2Matrix::identity(4)) == 4);
    CHECK(rank(F2Matrix(3, 5)) == 0);
}

TEST_CASE("rank: all-ones 2x2 has rank 1") {
    // enumerating 2-dimensional subspaces by hand: rows are equal and nonzero
    CHECK(rank(make(2, 2, {1, 1, 1, 1})) == 1);
}

TEST_CASE("kernel_basis: identity, zero and a 2x3 example") {
    CHECK(kernel_basis(F2Matrix::identity(5)).empty());
    CHECK(kernel_basis(F2Matrix(2, 3)).size() == 3);

    // brute force over all 8 vectors gives kernel {(1,1,1)}
    F2Matrix m = make(2, 3, {1, 1, 0, 0, 1, 1});
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0].get(0));
    CHECK(k[0].get(1));
    CHECK(k[0].get(2));
}

TEST_CASE("solve: identity, zero, and a forced solution") {
    BitVec b(2);
    b.set(1);
    auto x = solve(F2Matrix::identity(2), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    CHECK(!solve(F2Matrix(2, 2), b).has_value());

    // M = [[1,1],[0,1]], b = (0,1): checking Mx over all 4 candidates gives x = (1,1)
    F2Matrix m = make(2, 2, {1, 1, 0, 1});
    auto y = solve(m, b);
    REQUIRE(y.has_value());
    CHECK(y->get(0));
    CHECK(y->get(1));

    BitVec wrong(3);
    CHECK_THROWS_AS((void)solve(m, wrong), std::invalid_argument);
}

TEST_CASE("rank-nullity and kernel membership on random matrices") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<std::size_t> dim(1, 40);
    for (int iter = 0; iter < 500; ++iter) {
        F2Matrix m = random_matrix(rng, dim(rng), dim(rng));
        auto k = kernel_basis(m);
        CHECK(rank(m) + k.size() == m.cols);
        for (const auto& v : k) CHECK(m.apply(v).is_zero());
        CHECK(rank(m) == rank(m.transposed()));
    }
}

TEST_CASE("solve reproduces the right-hand side when it succeeds") {
    std::mt19937 rng(7);
    std::bernoulli_distribution bit(0.5);
    for (int iter = 0; iter < 200; ++iter) {
        F2Matrix m = random_matrix(rng, 6, 8);
        BitVec b(6);
        for (std::size_t i = 0; i < 6; ++i) b.set(i, bit(rng));
        auto x = solve(m, b);
        if (x) CHECK(m.apply(*x) == b);
    }
}

TEST_CASE("rank against the enumeration oracle on small matrices") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 50; ++iter) {
        F2Matrix m = random_matrix(rng, 5, 7);
        CHECK(rank(m) == rank_by_enumeration(m));
    }
}

TEST_CASE("RowSpace reductions are canonical") {
    std::mt19937 rng(3);
    RowSpace s(10);
    std::bernoulli_distribution bit(0.5);
    std::vector<BitVec> inserted;
    for (int i = 0; i < 6; ++i) {
        BitVec v(10);
        for (std::size_t j = 0; j < 10; ++j) v.set(j, bit(rng));
        s.insert(v);
        inserted.push_back(v);
    }
    for (const auto& v : inserted) CHECK(s.contains(v));
    BitVec sum(10);
    for (const auto& v : inserted) sum ^= v;
    CHECK(s.contains(sum));
}

TEST_CASE("TaggedRowSpace expresses members in terms of tagged generators") {
    TaggedRowSpace s(4, 2);
    BitVec a(4), b(4);
    a.set(0);
    a.set(1);
    b.set(1);
    b.set(2);
    BitVec ta(2), tb(2);
    ta.set(0);
    tb.set(1);
    CHECK(s.insert(a, ta));
    CHECK(s.insert(b, tb));
    BitVec tag(2);
    BitVec res = s.reduce(a ^ b, &tag);
    CHECK(res.is_zero());
    CHECK(tag.get(0));
    CHECK(tag.get(1));
}
