#pragma once

#include <optional>
#include <span>
#include <utility>

#include "motso/poly.hpp"

namespace motso::milnor {

// The operation Q_k: a derivation of bidegree (2^{k+1}-1, 2^k-1).
struct MilnorOp {
    int k = 0;

    int degree_shift() const { return (1 << (k + 1)) - 1; }
    std::pair<int, int> motivic_bidegree_shift() const {
        return {(1 << (k + 1)) - 1, (1 << k) - 1};
    }
};

// Q_k on F2[x_1..x_n]: on a monomial x^a, sum over variables with odd
// exponent of the monomial with that exponent raised by 2^{k+1}-1.
poly::F2Polynomial apply_Q(int k, const poly::F2Polynomial& p);

// Left-to-right composite Q_{k_1}...Q_{k_s}; ks must be strictly increasing.
poly::F2Polynomial apply_Q_sequence(std::span<const int> ks, const poly::F2Polynomial& p);

// Q_k on H*(BSO_n) = Z/2[w_2..w_n]: expand to x-variables, apply Q_k,
// re-express in w_1..w_n and reduce modulo the ideal (e_1) by dropping
// w_1-divisible terms. P is over slots w_1..w_n with zero w_1 exponents.
poly::WPoly apply_Q_so(int k, const poly::WPoly& p, std::size_t n);

// Exact quotient p / e_1 in n variables, or nullopt when the division
// leaves a remainder. Used to certify Q_k-stability of the ideal (e_1).
std::optional<poly::F2Polynomial> divide_by_e1(const poly::F2Polynomial& p);

}  // namespace motso::milnor
