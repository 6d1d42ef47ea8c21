#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "motso/gf2.hpp"
#include "motso/poly.hpp"
#include "motso/weightfilt.hpp"

namespace motso::motivic {

// A bigraded class: degree d, twist j, weight 2j - d >= 0. The twist
// decomposes as j = (d + weight)/2 + tau_exponent; both pieces are stored.
struct BigradedClass {
    int degree = 0;
    int twist = 0;
    int tau_exponent = 0;
    std::string repr;

    int weight() const { return 2 * (twist - tau_exponent) - degree; }
    static BigradedClass make(int degree, int twist, int tau_exponent, std::string repr);
};

// Sparse (degree, twist) -> dimension table with deterministic iteration.
class DimTable {
public:
    int at(int d, int j) const;
    void add(int d, int j, int v);
    const std::map<std::pair<int, int>, int>& entries() const { return entries_; }
    bool operator==(const DimTable&) const = default;

private:
    std::map<std::pair<int, int>, int> entries_;
};

// The closed-form torsion module Z/2[c_2,...,c_{2m}]{y_{0,m},...,y_{m-2,m}}
// with y_{i,m} in bidegree (2m, i+m) and c_{2r} in bidegree (4r, 2r).
// tau annihilates it and only even Chern monomials multiply into it.
class TorsionModule {
public:
    explicit TorsionModule(int m);

    int m() const { return m_; }
    const std::vector<BigradedClass>& generators() const { return generators_; }

    // Number of monomials c^a y_{i,m} in bidegree (d, j).
    int hilbert(int d, int j) const;

    // Structural guards: tau kills everything, and only polynomials in the
    // even Chern classes act. Violations throw std::domain_error.
    static int multiply_by_tau_dim() { return 0; }
    void require_even_chern_multiplier(const poly::Partition& chern_indices) const;

private:
    int m_;
    std::vector<BigradedClass> generators_;
};

// A tau-free weighted model (BO_n, BO_n/c_1, BSO_n, BSO_n/c_n), optionally
// carrying a torsion table (BSO_{2m}).
class Model {
public:
    enum class Kind { BO, BOQuot, SO, SOQuot };

    static Model bo(int n) { return Model(Kind::BO, n); }
    static Model bo_quot(int n) { return Model(Kind::BOQuot, n); }
    static Model so(int n) { return Model(Kind::SO, n); }
    static Model so_quot(int n) { return Model(Kind::SOQuot, n); }

    Kind kind() const { return kind_; }
    int n() const { return n_; }
    std::string label() const;

    Model with_torsion(DimTable t) const;

    const wfilt::WeightedBasis& basis(int d) const;
    std::size_t coord_dim(int d) const;
    int torsion_dim(int d, int j) const;

    // dim H^{d,j}: weighted-basis elements of weight <= 2j - d, plus torsion.
    int motivic_dim(int d, int j) const;

    // Matrix of t: H^{d,j} -> H^d: the inclusion of F^{<= 2j-d} followed by
    // zero columns for the torsion part.
    gf2::F2Matrix realization_matrix(int d, int j) const;

private:
    Model(Kind k, int n) : kind_(k), n_(n) {}
    Kind kind_;
    int n_;
    DimTable torsion_;
};

// Parse "bo:N", "bso:N", with optional "/cK" suffix (K = 1 for bo, K = N for
// bso are the supported quotients).
Model parse_model(const std::string& group);

struct SesRow {
    int d = 0, j = 0;
    int dim_left = 0, dim_mid = 0, dim_right = 0;
    int rank_kappa = 0, rank_delta = 0;
    bool kappa_injective = false, delta_surjective = false;
    bool delta_lands_in_filtration = false, composite_zero = false;
    bool pass() const {
        return kappa_injective && delta_surjective && delta_lands_in_filtration &&
               composite_zero && dim_left + dim_right == dim_mid &&
               rank_kappa + rank_delta == dim_mid;
    }
};

struct SesReport {
    int m = 0;
    std::vector<SesRow> rows;
    bool all_pass() const;
};

// Exactness of the short exact sequence
// 0 -> H^{*,*}_{SO_{2m+1}}/c_{2m+1} -> H^{*,*}_{O_{2m}}/c_1 -> H^{*-1,*-1}_{SO_{2m-1}} -> 0
// at every bidegree with d <= maxdeg.
SesReport ses_odd(int m, int maxdeg);

// Cokernel of iota*_{2m+1}: H^{*,*}_{SO_{2m+1}} -> H^{*,*}_{SO_{2m}}/Y_m at
// one bidegree: a weighted basis of coset representatives, with the
// even-Chern multiples of the coset of w_{2m} marked.
struct CokerBasis {
    int d = 0, j = 0;
    int dim = 0;
    std::vector<poly::WPoly> reps;       // in bso(2m) generators
    std::vector<int> weights;            // weight tag per representative
    std::vector<bool> divisible_by_top;  // rep is z * w_{2m}, z even Chern
    bool spanned_by_top = false;
};

CokerBasis coker_iota_odd(int m, int d, int j);

struct WeightCompRow {
    poly::Partition z;
    enum class Case { AllEven, SingleOdd, TwoOdd, AllOdd, Mixed } kind = Case::Mixed;
    int weight_top = 0;    // weight(z * w_{2m})
    int weight_mixed = 0;  // weight(z * w_1 * w_{2m-1})
    bool pass = false;
};

struct WeightCompReport {
    int m = 0;
    std::vector<WeightCompRow> rows;
    // monomials where weight(z w_{2m}) > weight(z w_1 w_{2m-1}); informational
    // (cancellation can drop the right side below the left for mixed-parity z)
    std::vector<poly::Partition> inequality_exceptions;
    bool all_pass() const;
};

// The weight comparisons behind the generator identification, checked per
// monomial z up to degree maxdeg - 2m:
//   all parts even (z a polynomial of squares): weights exactly (2m, 2m-2);
//   z = m[2i+1], i > 0: both weights 2m-1;
//   z = m[2i+1, 2j+1]: weights (2m-2, > 2m-2);
//   all parts odd, length j >= 2: weight(z w_{2m}) = 2m-j and
//     weight(z w_1 w_{2m-1}) >= weight(z w_{2m}).
// Mixed-parity z carries no assertion; rows violating the blanket <= are
// collected in inequality_exceptions.
WeightCompReport verify_weight_comparison(int m, int maxdeg);

struct YResult {
    int m = 0;
    int maxdeg = 0;
    bool perturbed = false;
    DimTable table;                                    // computed dims of Ker t
    std::vector<std::pair<int, int>> generator_bidegrees;
    std::vector<DimTable> coker_tables;                // one per induction step
};

// Run the induction from Y_1 = 0 up to Y_m (m >= 2). The perturbed mode
// drops the weight cap on the cokernel target (negative control); honest
// mode verifies the generator span and the torsion twist pattern, throwing
// VerificationError on bookkeeping inconsistencies.
YResult compute_Y(int m, int maxdeg, bool perturbed = false);

struct TheoremRow {
    int d = 0, j = 0;
    int computed = 0;
    int closed_form = 0;
    bool pass() const { return computed == closed_form; }
};

struct TheoremReport {
    int m = 0;
    std::vector<TheoremRow> rows;
    bool all_pass() const;
};

// Compare compute_Y against the closed-form Hilbert function of
// TorsionModule at every bidegree with d <= maxdeg.
TheoremReport verify_main_theorem(int m, int maxdeg, bool perturbed = false);

// JSON/CSV dimension tables, schema:
// {"group":"BSO_6","entries":[{"degree":6,"twist":3,"dim":K,"torsion_dim":T}]}
// Entries ordered by (degree, twist).
std::string dims_json(const Model& model, int maxdeg);
std::string dims_csv(const Model& model, int maxdeg);

}  // namespace motso::motivic
