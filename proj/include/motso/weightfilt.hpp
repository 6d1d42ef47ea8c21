#pragma once

#include <vector>

#include "motso/gf2.hpp"
#include "motso/milnor.hpp"
#include "motso/poly.hpp"
#include "motso/rings.hpp"

namespace motso::wfilt {

// One element of Wilson's basis: Q_{i_1}..Q_{i_j} m[lambda] with the indices
// drawn from {0..k-1}, k = number of odd parts of lambda.
struct WilsonElement {
    poly::Partition lambda;
    std::vector<int> applied_qs;
    int odd_count = 0;

    int weight() const { return odd_count - int(applied_qs.size()); }
    int degree() const;
    poly::F2Polynomial expand(std::size_t n) const;
};

// All admissible (lambda, applied_qs) of total degree d in n variables,
// including the pure m[lambda] elements. Passing admissibility = false
// disables Wilson's combinatorial condition (negative-control mode).
std::vector<WilsonElement> wilson_basis(std::size_t n, int d, bool admissibility = true);

struct WilsonReport {
    std::size_t n = 0;
    int d = 0;
    std::size_t count = 0;      // number of enumerated elements
    std::size_t dim = 0;        // dim H^d(BO_n)
    std::size_t rank = 0;       // rank of the stacked expansions
    bool pass() const { return count == dim && rank == count; }
};

WilsonReport verify_wilson_decomposition(std::size_t n, int d, bool admissibility = true);

// Maximal s with Q_{i_1}..Q_{i_s} p != 0 over strictly increasing tuples.
// The search allows an index k only while its degree shift fits under
// degree_cap (default: deg p + 2^{n+1}, enough room for every chain with
// indices below n). Throws std::invalid_argument for p = 0 or asymmetric p.
int weight_bo(std::size_t n, const poly::F2Polynomial& p, int degree_cap = -1);

struct WeightedEntry {
    gf2::BitVec coords;
    int weight = 0;
};

// Graded piece with a filtration-adapted basis: F^{<=w} is the span of the
// entries of weight <= w. Coordinates refer to the owning model's basis.
struct WeightedBasis {
    int degree = 0;
    std::vector<WeightedEntry> entries;  // ascending weight

    std::size_t dim() const { return entries.size(); }
    std::size_t dim_leq(int w) const;
    int max_weight() const;
};

// H^d(BO_n) with Wilson weights, in w-monomial coordinates of bo(n). Cached.
const WeightedBasis& bo_weighted_basis(std::size_t n, int d);

// Image filtration of a quotient: ambient entries reduced mod the ideal in
// weight order; survivors keep their weight.
WeightedBasis quotient_weighted_basis(const WeightedBasis& ambient, const rings::QuotientBasis& q);

// H^d(BO_n)/c_1 in quotient coordinates of quot_bo(n, 1). Cached.
const WeightedBasis& bo_quot_weighted_basis(std::size_t n, int d);

// Adapted basis of f^{-1}(filtration of tgt) for an injective map f given
// as a matrix from source coordinates to the coordinates tgt lives in.
WeightedBasis preimage_weighted_basis(const gf2::F2Matrix& f, const WeightedBasis& tgt);

// H^d(BSO_n)/c_n with the weight filtration pulled back through the strict
// embedding kappa* (n >= 3; n = 2 is the GL_1 case, every weight 0). Cached.
const WeightedBasis& so_quot_weighted_basis(int n, int d);

// H^d(BSO_n): odd n via the O_n = SO_n x mu_2 splitting (pi*-preimage),
// even n >= 4 by stacking c_n-multiples of the quotient basis, n <= 2
// special. Cached.
const WeightedBasis& so_weighted_basis(int n, int d);

// min w such that p lies in F^{<=w} H^d + (ideal)_d for a quotient of BO_n.
int weight_in_quotient(const rings::RingPresentation& R, const poly::WPoly& p, int d);

// Weight of a nonzero class of H*(BSO_n)/c_n, computed downstairs through
// kappa* (Prop 2.1 strictness makes this the weight upstairs).
int weight_bso(int n, const poly::WPoly& p);

struct StrictnessRow {
    int d = 0;
    int omega = 0;
    std::size_t dim_source = 0;
    std::size_t dim_preimage = 0;
    bool contained = false;
    bool pass() const { return contained && dim_source == dim_preimage; }
};

struct StrictnessReport {
    int n = 0;
    bool injective = true;
    std::vector<StrictnessRow> rows;
    bool all_pass() const;
    // first failing row index or -1
    int first_failure() const;
};

// Prop 2.1 checks for kappa*: injectivity per degree plus the subspace
// equality F^w(source) = (kappa*)^{-1}(F^w(target)) for all w, d <= maxdeg.
StrictnessReport verify_strictness(int n, int maxdeg);

// The analogous check for iota*: BSO_{2m+1} -> BSO_{2m}; must fail at
// (d, w) = (2m, 2m-2) where w_{2m} drops weight.
StrictnessReport iota_strictness_control(int m, int maxdeg);

}  // namespace motso::wfilt
