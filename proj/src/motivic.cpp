#include "motso/motivic.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "motso/error.hpp"
#include "motso/rings.hpp"

namespace motso::motivic {

using gf2::BitVec;
using gf2::F2Matrix;
using gf2::RowSpace;
using poly::Partition;
using poly::WPoly;
using rings::QuotientBasis;
using rings::RingPresentation;
using wfilt::WeightedBasis;

BigradedClass BigradedClass::make(int degree, int twist, int tau_exponent, std::string repr) {
    BigradedClass c{degree, twist, tau_exponent, std::move(repr)};
    if (c.weight() < 0) throw std::invalid_argument("BigradedClass: negative weight");
    if ((degree + c.weight()) % 2 != 0)
        throw std::invalid_argument("BigradedClass: degree + weight must be even");
    return c;
}

int DimTable::at(int d, int j) const {
    auto it = entries_.find({d, j});
    return it == entries_.end() ? 0 : it->second;
}

void DimTable::add(int d, int j, int v) {
    if (v == 0) return;
    entries_[{d, j}] += v;
    if (entries_[{d, j}] == 0) entries_.erase({d, j});
}

TorsionModule::TorsionModule(int m) : m_(m) {
    if (m < 2) throw std::invalid_argument("TorsionModule: m >= 2 required");
    for (int i = 0; i <= m - 2; ++i) {
        // y_{i,m} in H^{2m, i+m}, weight 2i, so tau_exponent = 0
        generators_.push_back(
            BigradedClass::make(2 * m, i + m, 0, "y_{" + std::to_string(i) + "," + std::to_string(m) + "}"));
    }
}

int TorsionModule::hilbert(int d, int j) const {
    if (d < 2 * m_ || (d - 2 * m_) % 2 != 0) return 0;
    int S = (d - 2 * m_) / 2;  // c-monomial twist: sum 2r a_r
    int i = j - m_ - S;
    if (i < 0 || i > m_ - 2) return 0;
    if (S % 2 != 0) return 0;  // even parts only
    // partitions of S into parts {2, 4, ..., 2m} = partitions of S/2 with parts <= m
    return int(poly::partitions(S / 2, S / 2, m_).size());
}

void TorsionModule::require_even_chern_multiplier(const Partition& chern_indices) const {
    for (int c : chern_indices.parts()) {
        if (c % 2 != 0 || c > 2 * m_)
            throw std::domain_error("torsion classes multiply only by even Chern classes c_2..c_" +
                                    std::to_string(2 * m_));
    }
}

std::string Model::label() const {
    switch (kind_) {
        case Kind::BO: return "BO_" + std::to_string(n_);
        case Kind::BOQuot: return "BO_" + std::to_string(n_) + "/c1";
        case Kind::SO: return "BSO_" + std::to_string(n_);
        case Kind::SOQuot: return "BSO_" + std::to_string(n_) + "/c" + std::to_string(n_);
    }
    return {};
}

Model Model::with_torsion(DimTable t) const {
    Model m = *this;
    m.torsion_ = std::move(t);
    return m;
}

const WeightedBasis& Model::basis(int d) const {
    switch (kind_) {
        case Kind::BO: return wfilt::bo_weighted_basis(std::size_t(n_), d);
        case Kind::BOQuot: return wfilt::bo_quot_weighted_basis(std::size_t(n_), d);
        case Kind::SO: return wfilt::so_weighted_basis(n_, d);
        case Kind::SOQuot: return wfilt::so_quot_weighted_basis(n_, d);
    }
    throw InternalError("unreachable");
}

std::size_t Model::coord_dim(int d) const {
    switch (kind_) {
        case Kind::BO: return RingPresentation::bo(n_).poly_dim(d);
        case Kind::BOQuot: return QuotientBasis(RingPresentation::quot_bo(n_, 1), d).dim();
        case Kind::SO: return RingPresentation::bso(n_).poly_dim(d);
        case Kind::SOQuot:
            return n_ == 1 ? (d == 0 ? 1 : 0)
                           : QuotientBasis(RingPresentation::quot_bso(std::max(n_, 2), std::max(n_, 2)), d).dim();
    }
    throw InternalError("unreachable");
}

int Model::torsion_dim(int d, int j) const { return torsion_.at(d, j); }

int Model::motivic_dim(int d, int j) const {
    int omega = 2 * j - d;
    int free_part = omega < 0 ? 0 : int(basis(d).dim_leq(omega));
    return free_part + torsion_dim(d, j);
}

F2Matrix Model::realization_matrix(int d, int j) const {
    int omega = 2 * j - d;
    const WeightedBasis& wb = basis(d);
    std::size_t height = coord_dim(d);
    std::vector<BitVec> cols;
    for (const auto& e : wb.entries)
        if (omega >= 0 && e.weight <= omega) cols.push_back(e.coords);
    for (int t = 0; t < torsion_dim(d, j); ++t) cols.push_back(BitVec(height));
    return gf2::from_columns(cols, height);
}

Model parse_model(const std::string& group) {
    std::string s = group;
    bool so = false;
    if (s.rfind("bso:", 0) == 0) {
        so = true;
        s = s.substr(4);
    } else if (s.rfind("bo:", 0) == 0) {
        s = s.substr(3);
    } else {
        throw std::invalid_argument("group must look like bo:N or bso:N (got '" + group + "')");
    }
    std::string quot;
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        quot = s.substr(slash + 1);
        s = s.substr(0, slash);
    }
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument("");
    } catch (...) {
        throw std::invalid_argument("bad group parameter in '" + group + "'");
    }
    if (n < 1) throw std::invalid_argument("group parameter must be >= 1");
    if (quot.empty()) return so ? Model::so(n) : Model::bo(n);
    if (!so && quot == "c1") return Model::bo_quot(n);
    if (so && quot == "c" + std::to_string(n)) return Model::so_quot(n);
    throw std::invalid_argument("unsupported quotient '" + quot + "' in '" + group + "'");
}

bool SesReport::all_pass() const {
    for (const auto& r : rows)
        if (!r.pass()) return false;
    return true;
}

SesReport ses_odd(int m, int maxdeg) {
    if (m < 1) throw std::invalid_argument("ses_odd: m >= 1 required");
    SesReport rep;
    rep.m = m;
    const int nso = 2 * m + 1;
    for (int d = 1; d <= maxdeg; ++d) {
        const WeightedBasis& left = wfilt::so_quot_weighted_basis(nso, d);
        const WeightedBasis& mid = wfilt::bo_quot_weighted_basis(std::size_t(2 * m), d);
        const WeightedBasis& right = wfilt::so_weighted_basis(2 * m - 1, d - 1);
        F2Matrix kmat = map_matrix(rings::kappa_star(nso), d);
        rings::DeltaTop delta(nso, d);
        const std::size_t right_width = RingPresentation::bso(2 * m - 1).poly_dim(d - 1);

        for (int j = (d + 1) / 2; j <= d; ++j) {
            const int omega = 2 * j - d;
            SesRow row;
            row.d = d;
            row.j = j;
            row.dim_left = int(left.dim_leq(omega));
            row.dim_mid = int(mid.dim_leq(omega));
            row.dim_right = omega - 1 < 0 ? 0 : int(right.dim_leq(omega - 1));

            RowSpace right_span(right_width);
            for (const auto& e : right.entries)
                if (e.weight <= omega - 1) right_span.insert(e.coords);

            row.delta_lands_in_filtration = true;
            RowSpace delta_img(right_width);
            for (const auto& e : mid.entries) {
                if (e.weight > omega) break;
                BitVec dv = delta.apply_coords(e.coords);
                if (!right_span.reduce(dv).is_zero()) row.delta_lands_in_filtration = false;
                delta_img.insert(dv);
            }
            row.rank_delta = int(delta_img.rank());

            row.composite_zero = true;
            RowSpace kappa_img(kmat.rows);
            for (const auto& e : left.entries) {
                if (e.weight > omega) break;
                BitVec kv = kmat.apply(e.coords);
                kappa_img.insert(kv);
                if (!delta.apply_coords(kv).is_zero()) row.composite_zero = false;
            }
            row.rank_kappa = int(kappa_img.rank());
            row.kappa_injective = row.rank_kappa == row.dim_left;
            row.delta_surjective = row.rank_delta == row.dim_right;
            rep.rows.push_back(row);
        }
    }
    return rep;
}

namespace {

// Even-Chern monomial candidates z * w_{2k} of total degree D, as
// polynomials in bso(2k) generators. z = prod w_{2r}^{2a_r}.
std::vector<WPoly> top_class_candidates(int k, int D) {
    std::vector<WPoly> out;
    RingPresentation bso = RingPresentation::bso(2 * k);
    int rest = D - 2 * k;
    if (rest < 0) return out;
    // exponent vectors a_1..a_k with sum 4 r a_r = rest
    std::vector<int> a(std::size_t(k), 0);
    auto rec = [&](auto&& self, int r, int remaining) -> void {
        if (r == k) {
            if (remaining == 0) {
                WPoly z = bso.gen("w" + std::to_string(2 * k));
                for (int i = 1; i <= k; ++i)
                    if (a[std::size_t(i - 1)])
                        z = z * bso.gen("w" + std::to_string(2 * i), unsigned(2 * a[std::size_t(i - 1)]));
                out.push_back(z);
            }
            return;
        }
        for (int e = 0; 4 * (r + 1) * e <= remaining; ++e) {
            a[std::size_t(r)] = e;
            self(self, r + 1, remaining - 4 * (r + 1) * e);
        }
        a[std::size_t(r)] = 0;
    };
    rec(rec, 0, rest);
    return out;
}

struct CokerDegreeData {
    // per omega (indexed by j), the coker dimension and candidate accounting
    std::map<int, int> dim_by_j;
    bool span_ok = true;     // candidates span the cokernel on the birth line
    bool pattern_ok = true;  // coker vanishes off the birth line
};

// Cokernel of iota*_{2k+1}: H^{*,*}_{SO_{2k+1}} -> H^{*,*}_{SO_{2k}}/Y_k in
// degree D, all twists. With weight_capped_target = false the target
// filtration cap is dropped (negative-control mode).
CokerDegreeData coker_iota_degree(int k, int D, bool weight_capped_target) {
    CokerDegreeData data;
    const WeightedBasis& src = wfilt::so_weighted_basis(2 * k + 1, D);
    const WeightedBasis& tgt = wfilt::so_weighted_basis(2 * k, D);
    F2Matrix iota = map_matrix(rings::iota_star(2 * k + 1, rings::Flavor::SO), D);
    rings::DegreeBasis tgt_basis(RingPresentation::bso(2 * k), D);

    const int birth = 2 * k - 2;
    RowSpace img(iota.rows);
    std::size_t si = 0;
    for (int j = (D + 1) / 2; j <= D; ++j) {
        int omega = 2 * j - D;
        while (si < src.entries.size() && src.entries[si].weight <= omega)
            img.insert(iota.apply(src.entries[si++].coords));
        int tgt_dim = weight_capped_target ? int(tgt.dim_leq(omega)) : int(tgt_basis.dim());
        int dim = tgt_dim - int(img.rank());
        data.dim_by_j[j] = dim;
        if (weight_capped_target) {
            if (omega == birth && dim > 0) {
                // do the even-Chern candidates span the cokernel?
                RowSpace with_cands = img;
                int fresh = 0;
                for (const auto& cand : top_class_candidates(k, D))
                    if (with_cands.insert(tgt_basis.coords(cand))) ++fresh;
                if (fresh != dim) data.span_ok = false;
            } else if (omega != birth && dim != 0) {
                data.pattern_ok = false;
            }
        }
    }
    return data;
}

}  // namespace

CokerBasis coker_iota_odd(int m, int d, int j) {
    CokerBasis out;
    out.d = d;
    out.j = j;
    const int omega = 2 * j - d;
    const WeightedBasis& src = wfilt::so_weighted_basis(2 * m + 1, d);
    const WeightedBasis& tgt = wfilt::so_weighted_basis(2 * m, d);
    F2Matrix iota = map_matrix(rings::iota_star(2 * m + 1, rings::Flavor::SO), d);
    rings::DegreeBasis tgt_basis(RingPresentation::bso(2 * m), d);

    RowSpace img(iota.rows);
    for (const auto& e : src.entries) {
        if (e.weight > omega) break;
        img.insert(iota.apply(e.coords));
    }
    out.dim = (omega < 0 ? 0 : int(tgt.dim_leq(omega))) - int(img.rank());
    if (out.dim < 0) throw InternalError("coker_iota_odd: negative dimension");

    // candidates first: even-Chern multiples of the coset of w_{2m}
    RowSpace seen = img;
    int from_candidates = 0;
    if (omega >= 2 * m - 2) {
        for (const auto& cand : top_class_candidates(m, d)) {
            if (seen.insert(tgt_basis.coords(cand))) {
                out.reps.push_back(cand);
                out.weights.push_back(2 * m - 2);
                out.divisible_by_top.push_back(true);
                ++from_candidates;
            }
        }
    }
    out.spanned_by_top = from_candidates == out.dim;
    // fill out the rest of the cokernel from the target filtration basis
    for (const auto& e : tgt.entries) {
        if (int(out.reps.size()) >= out.dim) break;
        if (e.weight > omega) break;
        if (seen.insert(e.coords)) {
            out.reps.push_back(tgt_basis.poly_of(e.coords));
            out.weights.push_back(e.weight);
            out.divisible_by_top.push_back(false);
        }
    }
    return out;
}

bool WeightCompReport::all_pass() const {
    for (const auto& r : rows)
        if (!r.pass) return false;
    return true;
}

WeightCompReport verify_weight_comparison(int m, int maxdeg) {
    WeightCompReport rep;
    rep.m = m;
    const std::size_t n = std::size_t(2 * m);
    auto w_top = poly::elementary_symmetric(2 * m, n);
    auto w_mixed = poly::elementary_symmetric(1, n) * poly::elementary_symmetric(2 * m - 1, n);
    for (int zdeg = 0; zdeg <= maxdeg - 2 * m; ++zdeg) {
        for (const auto& z : poly::partitions(zdeg, int(n), zdeg)) {
            auto zp = poly::monomial_symmetric(z, n);
            WeightCompRow row;
            row.z = z;
            int odd = 0, even = 0;
            for (int p : z.parts()) (p % 2 ? odd : even)++;
            if (odd == 0)
                row.kind = WeightCompRow::Case::AllEven;
            else if (even > 0)
                row.kind = WeightCompRow::Case::Mixed;
            else if (odd == 1)
                row.kind = WeightCompRow::Case::SingleOdd;
            else if (odd == 2)
                row.kind = WeightCompRow::Case::TwoOdd;
            else
                row.kind = WeightCompRow::Case::AllOdd;
            row.weight_top = wfilt::weight_bo(n, zp * w_top);
            row.weight_mixed = wfilt::weight_bo(n, zp * w_mixed);
            switch (row.kind) {
                case WeightCompRow::Case::AllEven:
                    row.pass = row.weight_top == 2 * m && row.weight_mixed == 2 * m - 2;
                    break;
                case WeightCompRow::Case::SingleOdd:
                    // the paper states the value for parts 2i+1 with i > 0
                    row.pass = z.part(0) == 1 ||
                               (row.weight_top == 2 * m - 1 && row.weight_mixed == 2 * m - 1);
                    break;
                case WeightCompRow::Case::TwoOdd:
                    row.pass = row.weight_top == 2 * m - 2 && row.weight_mixed > 2 * m - 2;
                    break;
                case WeightCompRow::Case::AllOdd:
                    row.pass = row.weight_top == 2 * m - int(odd) &&
                               row.weight_mixed >= row.weight_top;
                    break;
                case WeightCompRow::Case::Mixed: row.pass = true; break;
            }
            if (row.weight_top > row.weight_mixed &&
                row.kind != WeightCompRow::Case::AllEven)
                rep.inequality_exceptions.push_back(z);
            rep.rows.push_back(std::move(row));
        }
    }
    return rep;
}

YResult compute_Y(int m, int maxdeg, bool perturbed) {
    if (m < 2) throw std::invalid_argument("compute_Y: m >= 2 required");
    YResult res;
    res.m = m;
    res.maxdeg = maxdeg;
    res.perturbed = perturbed;

    DimTable Y;  // Y_1 = 0
    std::vector<std::pair<int, int>> gens;
    for (int k = 1; k < m; ++k) {
        // cokernel table for the step SO_{2k+1} -> SO_{2k}/Y_k
        DimTable C;
        for (int D = 0; D <= maxdeg - 2; ++D) {
            CokerDegreeData data = coker_iota_degree(k, D, /*weight_capped_target=*/!perturbed);
            if (!perturbed) {
                if (!data.span_ok)
                    throw VerificationError(
                        "compute_Y: cokernel not spanned by even-Chern multiples of w_" +
                        std::to_string(2 * k) + " at degree " + std::to_string(D));
                if (!data.pattern_ok)
                    throw VerificationError(
                        "compute_Y: cokernel appears off the weight-" + std::to_string(2 * k - 2) +
                        " line at degree " + std::to_string(D));
            }
            for (auto [j, dim] : data.dim_by_j) C.add(D, j, dim);
        }
        res.coker_tables.push_back(C);

        // Ybar_{k+1}(d, j) = Y_k(d-2, j-1) + C(d-2, j-1)  (the i_* shift)
        DimTable Ybar;
        for (int d = 0; d <= maxdeg; ++d)
            for (int j = 0; j <= d; ++j) {
                int v = Y.at(d - 2, j - 1) + C.at(d - 2, j - 1);
                Ybar.add(d, j, v);
            }

        // Y_{k+1}(d, j) = sum_r Ybar(d - (4k+4) r, j - (2k+2) r)
        DimTable Ynext;
        for (int d = 0; d <= maxdeg; ++d)
            for (int j = 0; j <= d; ++j) {
                int v = 0;
                for (int r = 0; d - (4 * k + 4) * r >= 0; ++r)
                    v += Ybar.at(d - (4 * k + 4) * r, j - (2 * k + 2) * r);
                Ynext.add(d, j, v);
            }
        Y = std::move(Ynext);

        // generator bookkeeping: lift the old generators, add the new one
        for (auto& g : gens) {
            g.first += 2;
            g.second += 1;
        }
        gens.emplace_back(2 * k + 2, 2 * k);
        if (!perturbed) {
            for (int d = 0; d <= maxdeg; ++d)
                if (Y.at(d, d - 1) != 0)
                    throw VerificationError("compute_Y: torsion at twist = degree - 1 (degree " +
                                            std::to_string(d) + ")");
        }
    }
    std::sort(gens.begin(), gens.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    res.generator_bidegrees = std::move(gens);
    res.table = std::move(Y);
    return res;
}

bool TheoremReport::all_pass() const {
    for (const auto& r : rows)
        if (!r.pass()) return false;
    return true;
}

TheoremReport verify_main_theorem(int m, int maxdeg, bool perturbed) {
    TheoremReport rep;
    rep.m = m;
    YResult y = compute_Y(m, maxdeg, perturbed);
    TorsionModule closed(m);
    for (int d = 0; d <= maxdeg; ++d) {
        for (int j = (d + 1) / 2; j <= d; ++j) {
            TheoremRow row;
            row.d = d;
            row.j = j;
            row.computed = y.table.at(d, j);
            row.closed_form = closed.hilbert(d, j);
            rep.rows.push_back(row);
        }
    }
    return rep;
}

static nlohmann::json dims_entries(const Model& model, int maxdeg) {
    nlohmann::json entries = nlohmann::json::array();
    for (int d = 0; d <= maxdeg; ++d) {
        for (int j = (d + 1) / 2; j <= d; ++j) {
            entries.push_back({{"degree", d},
                               {"twist", j},
                               {"dim", model.motivic_dim(d, j)},
                               {"torsion_dim", model.torsion_dim(d, j)}});
        }
    }
    return entries;
}

std::string dims_json(const Model& model, int maxdeg) {
    nlohmann::json out{{"group", model.label()}, {"entries", dims_entries(model, maxdeg)}};
    return out.dump(2);
}

std::string dims_csv(const Model& model, int maxdeg) {
    std::ostringstream os;
    os << "group,degree,twist,dim,torsion_dim\n";
    for (int d = 0; d <= maxdeg; ++d)
        for (int j = (d + 1) / 2; j <= d; ++j)
            os << model.label() << "," << d << "," << j << "," << model.motivic_dim(d, j) << ","
               << model.torsion_dim(d, j) << "\n";
    return os.str();
}

}  // namespace motso::motivic
