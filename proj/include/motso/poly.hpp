#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace motso::poly {

using Exponent = std::uint16_t;
// One monomial: exponent per variable, fixed ambient length.
using ExponentVector = std::vector<Exponent>;

// Weakly decreasing nonnegative parts; trailing zeros normalized away.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // sorts descending, strips zeros

    std::size_t length() const { return parts_.size(); }
    int degree() const;
    std::span<const int> parts() const { return parts_; }
    int part(std::size_t i) const { return parts_[i]; }

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const;  // "[3,1]"

private:
    std::vector<int> parts_;
};

// All partitions of d with at most max_parts parts and every part <= max_part.
// Deterministic order: descending lexicographic.
std::vector<Partition> partitions(int d, int max_parts, int max_part);

namespace detail {
// Shared sorted-monomial-set plumbing (descending lex, GF(2) coefficients).
using MonomialList = std::vector<ExponentVector>;
void normalize(MonomialList& ms);                       // sort + cancel duplicate pairs
MonomialList sym_diff(const MonomialList& a, const MonomialList& b);
MonomialList product(const MonomialList& a, const MonomialList& b);
}  // namespace detail

// Polynomial over GF(2) in variables x_1..x_n: a finite monomial set.
// Addition is symmetric difference; the zero polynomial is the empty set.
class F2Polynomial {
public:
    F2Polynomial() = default;
    explicit F2Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static F2Polynomial zero(std::size_t nvars) { return F2Polynomial(nvars); }
    static F2Polynomial one(std::size_t nvars);
    static F2Polynomial variable(std::size_t nvars, std::size_t i);  // x_{i+1}
    static F2Polynomial monomial(ExponentVector e);
    // Reduces the list mod 2 (duplicate pairs cancel).
    static F2Polynomial from_monomials(std::size_t nvars, detail::MonomialList ms);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return monomials_.empty(); }
    std::size_t term_count() const { return monomials_.size(); }
    const detail::MonomialList& monomials() const { return monomials_; }

    int degree() const;  // max total degree; -1 for the zero polynomial

    F2Polynomial& operator+=(const F2Polynomial& o);
    friend F2Polynomial operator+(F2Polynomial a, const F2Polynomial& b) {
        a += b;
        return a;
    }
    friend F2Polynomial operator*(const F2Polynomial& a, const F2Polynomial& b);
    F2Polynomial square() const;  // Frobenius: exponents doubled
    F2Polynomial pow(unsigned e) const;

    bool operator==(const F2Polynomial&) const = default;

private:
    std::size_t nvars_ = 0;
    detail::MonomialList monomials_;
};

// Polynomial in generators of a presented ring (w_1..w_n, possibly an
// exterior x slot). Bare monomial set; grading comes from the presentation.
class WPoly {
public:
    WPoly() = default;
    explicit WPoly(std::size_t ngens) : ngens_(ngens) {}

    static WPoly zero(std::size_t ngens) { return WPoly(ngens); }
    static WPoly one(std::size_t ngens);
    static WPoly generator(std::size_t ngens, std::size_t slot, unsigned e = 1);
    static WPoly monomial(ExponentVector e);
    static WPoly from_monomials(std::size_t ngens, detail::MonomialList ms);

    std::size_t ngens() const { return ngens_; }
    bool is_zero() const { return monomials_.empty(); }
    std::size_t term_count() const { return monomials_.size(); }
    const detail::MonomialList& monomials() const { return monomials_; }

    int degree(std::span<const int> gen_degrees) const;  // -1 for zero
    bool homogeneous(std::span<const int> gen_degrees, int* deg_out = nullptr) const;

    WPoly& operator+=(const WPoly& o);
    friend WPoly operator+(WPoly a, const WPoly& b) {
        a += b;
        return a;
    }
    friend WPoly operator*(const WPoly& a, const WPoly& b);
    WPoly pow(unsigned e) const;

    bool operator==(const WPoly&) const = default;

private:
    std::size_t ngens_ = 0;
    detail::MonomialList monomials_;
};

// m[lambda] in n variables: orbit sum of the exponent pattern.
F2Polynomial monomial_symmetric(const Partition& lambda, std::size_t n);

// Elementary symmetric e_l = m[1^l].
F2Polynomial elementary_symmetric(int l, std::size_t n);

bool is_symmetric(const F2Polynomial& p);

// Substitute w_l -> e_l; P is over slots w_1..w_n (slot i has degree i+1).
F2Polynomial expand_w(const WPoly& p, std::size_t n);

// Unique partitions with p = sum m[lambda]. Requires is_symmetric(p).
std::vector<Partition> to_monomial_basis(const F2Polynomial& p);

// Unique Q in Z/2[w_1..w_n] with expand_w(Q) = p. Requires is_symmetric(p).
WPoly to_w_basis(const F2Polynomial& p);

enum class BasisKind { Monomial, WMonomial };

// Degree-d basis labels of the symmetric subring: partitions of d into at
// most n parts (monomial basis) or with all parts <= n (w-monomial
// exponent patterns). The counts agree by conjugation.
std::vector<Partition> basis_of_degree(std::size_t n, int d, BasisKind kind);

// Degrees (1, 2, ..., n) of w_1..w_n, for WPoly grading in the BO presentation.
std::vector<int> bo_gen_degrees(std::size_t n);

}  // namespace motso::poly
