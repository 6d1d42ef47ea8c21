#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "motso/error.hpp"
#include "motso/gf2.hpp"
#include "motso/poly.hpp"

namespace motso::rings {

enum class RingKind { BO, BSO, QuotBO, QuotBSO, ExtSO };

// A presented cohomology ring: a free GF(2) polynomial ring on graded
// generators, with at most one quotienting class (c_k realized as w_k^2,
// or x^2 for the exterior extension of the odd splitting).
class RingPresentation {
public:
    static RingPresentation bo(int n);                // Z/2[w_1..w_n]
    static RingPresentation bso(int n);               // Z/2[w_2..w_n]; n = 1 -> Z/2
    static RingPresentation quot_bo(int n, int k);    // bo(n) / (c_k)
    static RingPresentation quot_bso(int n, int k);   // bso(n) / (c_k)
    static RingPresentation exterior_so(int n);       // Z/2[x, w_2..w_n] / (x^2)

    RingKind kind() const { return kind_; }
    int n() const { return n_; }
    std::size_t ngens() const { return gen_degrees_.size(); }
    int gen_degree(std::size_t i) const { return gen_degrees_[i]; }
    const std::vector<int>& gen_degrees() const { return gen_degrees_; }
    const std::vector<std::string>& gen_names() const { return gen_names_; }
    const std::optional<poly::WPoly>& relation() const { return relation_; }

    // Slot of generator w_l (or "x"); throws when absent.
    std::size_t slot_of(const std::string& name) const;
    poly::WPoly gen(const std::string& name, unsigned e = 1) const;

    int degree(const poly::WPoly& p) const { return p.degree(gen_degrees_); }

    // Monomials of total degree d in the free polynomial ring on the
    // generators, in descending lexicographic slot order.
    std::vector<poly::ExponentVector> monomial_basis(int d) const;
    std::size_t poly_dim(int d) const { return monomial_basis(d).size(); }

    std::string label() const;  // "bo:4", "bso:6/c6", ...

    bool operator==(const RingPresentation&) const = default;

private:
    RingKind kind_ = RingKind::BO;
    int n_ = 0;
    std::vector<int> gen_degrees_;
    std::vector<std::string> gen_names_;
    std::optional<poly::WPoly> relation_;
};

// Indexed degree-d monomial coordinates of a presentation's free ring.
class DegreeBasis {
public:
    DegreeBasis(const RingPresentation& R, int d);

    int degree() const { return d_; }
    std::size_t dim() const { return monos_.size(); }
    const std::vector<poly::ExponentVector>& monomials() const { return monos_; }

    gf2::BitVec coords(const poly::WPoly& p) const;  // p must be homogeneous of degree d
    poly::WPoly poly_of(const gf2::BitVec& v) const;

private:
    int d_;
    std::size_t ngens_;
    std::vector<poly::ExponentVector> monos_;
    std::map<poly::ExponentVector, std::size_t> index_;
};

// Degree-d coset structure of R modulo its quotienting class. Coset
// representatives are the non-pivot monomials (deterministic pivoting),
// so reports are reproducible. Also usable for relation-free R (trivial
// ideal). Construction verifies the quotienting class is a
// nonzerodivisor in this degree (multiplication has full column rank).
class QuotientBasis {
public:
    QuotientBasis(const RingPresentation& R, int d);

    const RingPresentation& ring() const { return *ring_; }
    int degree() const { return basis_.degree(); }
    const DegreeBasis& ambient() const { return basis_; }
    std::size_t dim() const { return free_cols_.size(); }

    // Representative monomial of the i-th coset basis element.
    const poly::ExponentVector& rep_monomial(std::size_t i) const {
        return basis_.monomials()[free_cols_[i]];
    }
    poly::WPoly rep(std::size_t i) const;

    // Ambient coordinates -> quotient coordinates.
    gf2::BitVec reduce(const gf2::BitVec& ambient_coords) const;
    gf2::BitVec coords(const poly::WPoly& p) const { return reduce(basis_.coords(p)); }
    // Canonical ambient representative of a quotient vector.
    gf2::BitVec lift(const gf2::BitVec& quotient_coords) const;
    poly::WPoly lift_poly(const gf2::BitVec& quotient_coords) const;

private:
    std::shared_ptr<const RingPresentation> ring_;
    DegreeBasis basis_;
    gf2::RowSpace ideal_;
    std::vector<std::size_t> free_cols_;        // quotient coord -> ambient index
    std::vector<int> col_to_free_;              // ambient index -> quotient coord or -1
};

// A generator-image map between presentations; images are checked for
// degree compatibility and, for quotient sources, for sending the
// quotienting class into the target's quotienting ideal.
class RingMap {
public:
    RingMap(RingPresentation source, RingPresentation target, std::vector<poly::WPoly> images);

    const RingPresentation& source() const { return *source_; }
    const RingPresentation& target() const { return *target_; }
    const poly::WPoly& image(std::size_t slot) const { return images_[slot]; }

    poly::WPoly apply(const poly::WPoly& p) const;

private:
    std::shared_ptr<const RingPresentation> source_;
    std::shared_ptr<const RingPresentation> target_;
    std::vector<poly::WPoly> images_;
};

enum class Flavor { O, SO };

// kappa*: H*_{SO_n}/c_n -> H*_{O_{n-1}}/c_1, w_i -> w_i + w_1 w_{i-1}
// (2 <= i <= n-1), w_n -> w_1 w_{n-1}. Requires n >= 3.
RingMap kappa_star(int n);

// iota*: restriction to the subgroup fixing the last coordinate;
// w_i -> w_i for i < n and w_n -> 0.
RingMap iota_star(int n, Flavor flavor);

// iota* between c-quotients (diagram rows): SO_{n}/c_{n} -> SO_{n-1}/c_{n-1}.
RingMap iota_star_quot(int n, Flavor flavor);

// epsilon*: H*(BO_n) -> H*(BSO_n), w_1 -> 0.
RingMap epsilon_star(int n);

// Section of epsilon* from the odd splitting O_n = SO_n x mu_2
// (g -> det(g) g): H*(BSO_n) -> H*(BO_n)/c_1 with
// w_i -> sum_k C(n-k, i-k) w_k w_1^{i-k} (Stiefel-Whitney classes of
// gamma tensor det). Requires odd n >= 3.
RingMap pi_star(int n);

// Matrix of f in degree d over the (quotient) bases of source and target.
gf2::F2Matrix map_matrix(const RingMap& f, int d);

// The boundary t(delta) of the topological localization sequence at level
// n in degree d: vanishes on im(kappa*), sends z*w_1 to z for z a
// monomial in w_2..w_{n-2}. The decomposition
// H^d(BO_{n-1}/c_1) = im(kappa*) (+) span{z w_1} is verified to be a
// genuine direct sum; failure aborts with VerificationError.
class DeltaTop {
public:
    DeltaTop(int n, int d);  // n >= 3

    const RingPresentation& mid() const { return mid_; }     // quot_bo(n-1, 1)
    const RingPresentation& tail() const { return tail_; }   // bso(n-2)
    const QuotientBasis& mid_basis() const { return midq_; }

    // v in mid-quotient coordinates -> coordinates over tail monomials (degree d-1).
    gf2::BitVec apply_coords(const gf2::BitVec& v) const;
    poly::WPoly apply(const poly::WPoly& v) const;  // v in bo(n-1) generators

    // Full matrix: (dim tail at d-1) x (dim mid quotient at d).
    gf2::F2Matrix matrix() const;

private:
    int n_;
    int d_;
    RingPresentation mid_;
    RingPresentation tail_;
    QuotientBasis midq_;
    DegreeBasis tail_basis_;
    gf2::TaggedRowSpace space_;
    std::size_t kappa_rank_ = 0;
};

// Convenience: t(delta)(v) for v of degree d in bo(n-1) generators.
poly::WPoly delta_top(int n, const poly::WPoly& v, int d);

}  // namespace motso::rings
