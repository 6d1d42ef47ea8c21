#include "motso/weightfilt.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "motso/error.hpp"

namespace motso::wfilt {

using gf2::BitVec;
using gf2::F2Matrix;
using gf2::RowSpace;
using poly::F2Polynomial;
using poly::Partition;
using poly::WPoly;
using rings::QuotientBasis;
using rings::RingPresentation;

int WilsonElement::degree() const {
    int d = lambda.degree();
    for (int k : applied_qs) d += (1 << (k + 1)) - 1;
    return d;
}

F2Polynomial WilsonElement::expand(std::size_t n) const {
    return milnor::apply_Q_sequence(applied_qs, poly::monomial_symmetric(lambda, n));
}

namespace {

// Wilson's condition on lambda: write the odd parts ascending as
// 2s_1+1 <= ... <= 2s_k+1; every even value 2t occurring with odd
// multiplicity needs some v <= k with 2s_v + 2^v < 2t < 2s_v + 2^{v+1}.
bool admissible(const Partition& lambda) {
    std::vector<int> s_asc;
    std::map<int, int> even_mult;
    for (int p : lambda.parts()) {
        if (p % 2 == 1)
            s_asc.push_back((p - 1) / 2);
        else
            ++even_mult[p];
    }
    std::sort(s_asc.begin(), s_asc.end());
    for (auto [t2, mult] : even_mult) {
        if (mult % 2 == 0) continue;
        bool ok = false;
        for (std::size_t v = 1; v <= s_asc.size(); ++v) {
            long lo = 2L * s_asc[v - 1] + (1L << v);
            long hi = 2L * s_asc[v - 1] + (1L << (v + 1));
            if (lo < t2 && t2 < hi) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

int odd_part_count(const Partition& lambda) {
    int k = 0;
    for (int p : lambda.parts())
        if (p % 2 == 1) ++k;
    return k;
}

}  // namespace

std::vector<WilsonElement> wilson_basis(std::size_t n, int d, bool admissibility) {
    std::vector<WilsonElement> out;
    for (int base = d; base >= 0; --base) {
        for (const auto& lambda : poly::partitions(base, int(n), base)) {
            if (admissibility && !admissible(lambda)) continue;
            int k = odd_part_count(lambda);
            // subsets of {0..k-1} whose degree shifts fill d - base
            for (unsigned mask = 0; mask < (1u << k); ++mask) {
                int shift = 0;
                std::vector<int> qs;
                for (int i = 0; i < k; ++i)
                    if (mask & (1u << i)) {
                        shift += (1 << (i + 1)) - 1;
                        qs.push_back(i);
                    }
                if (shift == d - base) out.push_back(WilsonElement{lambda, std::move(qs), k});
            }
        }
    }
    return out;
}

WilsonReport verify_wilson_decomposition(std::size_t n, int d, bool admissibility) {
    WilsonReport rep;
    rep.n = n;
    rep.d = d;
    auto elems = wilson_basis(n, d, admissibility);
    rep.count = elems.size();
    auto labels = poly::basis_of_degree(n, d, poly::BasisKind::Monomial);
    rep.dim = labels.size();
    std::map<Partition, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = i;

    RowSpace space(labels.size());
    for (const auto& e : elems) {
        BitVec v(labels.size());
        for (const auto& lam : poly::to_monomial_basis(e.expand(n))) {
            auto it = index.find(lam);
            if (it == index.end()) throw InternalError("wilson expansion left the degree");
            v.set(it->second);
        }
        space.insert(v);
    }
    rep.rank = space.rank();
    return rep;
}

int weight_bo(std::size_t n, const F2Polynomial& p, int degree_cap) {
    if (p.nvars() != n) throw std::invalid_argument("weight_bo: ambient n mismatch");
    if (p.is_zero()) throw std::invalid_argument("weight_bo: weight of 0 is undefined");
    if (!poly::is_symmetric(p)) throw std::invalid_argument("weight_bo: p must be symmetric");
    if (degree_cap < 0) degree_cap = p.degree() + (1 << (n + 1));

    // Odd-exponent count bounds any chain: each Q_k turns one odd exponent even.
    auto max_odd = [](const F2Polynomial& q) {
        int best = 0;
        for (const auto& m : q.monomials()) {
            int c = 0;
            for (auto e : m) c += e & 1;
            best = std::max(best, c);
        }
        return best;
    };
    // Longest index chain starting at k that fits the remaining headroom.
    auto tail_bound = [](int k, long room) {
        int cnt = 0;
        for (int i = k;; ++i) {
            long s = (1L << (i + 1)) - 1;
            if (s > room) break;
            room -= s;
            ++cnt;
        }
        return cnt;
    };

    int best = 0;
    auto dfs = [&](auto&& self, const F2Polynomial& q, int min_idx, int depth) -> void {
        best = std::max(best, depth);
        long headroom = degree_cap - q.degree();
        int odd_cap = max_odd(q);
        for (int k = min_idx;; ++k) {
            if ((1L << (k + 1)) - 1 > headroom) break;
            int possible = depth + std::min(tail_bound(k, headroom), odd_cap);
            if (possible <= best) break;  // tails only shrink as k grows
            F2Polynomial qq = milnor::apply_Q(k, q);
            if (!qq.is_zero()) self(self, qq, k + 1, depth + 1);
        }
    };
    dfs(dfs, p, 0, 0);
    return best;
}

std::size_t WeightedBasis::dim_leq(int w) const {
    std::size_t c = 0;
    for (const auto& e : entries)
        if (e.weight <= w) ++c;
    return c;
}

int WeightedBasis::max_weight() const {
    int w = 0;
    for (const auto& e : entries) w = std::max(w, e.weight);
    return w;
}

namespace {

void sort_entries(WeightedBasis& b) {
    std::stable_sort(b.entries.begin(), b.entries.end(),
                     [](const WeightedEntry& a, const WeightedEntry& c) { return a.weight < c.weight; });
}

std::mutex cache_mutex;

}  // namespace

const WeightedBasis& bo_weighted_basis(std::size_t n, int d) {
    static std::map<std::pair<std::size_t, int>, WeightedBasis> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_pair(n, d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    rings::DegreeBasis basis(RingPresentation::bo(int(n)), d);
    WeightedBasis wb;
    wb.degree = d;
    RowSpace check(basis.dim());
    for (const auto& e : wilson_basis(n, d)) {
        WeightedEntry entry;
        entry.weight = e.weight();
        entry.coords = basis.coords(poly::to_w_basis(e.expand(n)));
        if (!check.insert(entry.coords))
            throw VerificationError("Wilson basis dependent at n=" + std::to_string(n) +
                                    ", d=" + std::to_string(d));
        wb.entries.push_back(std::move(entry));
    }
    if (wb.entries.size() != basis.dim())
        throw VerificationError("Wilson basis does not span at n=" + std::to_string(n) +
                                ", d=" + std::to_string(d));
    sort_entries(wb);
    return cache.emplace(key, std::move(wb)).first->second;
}

WeightedBasis quotient_weighted_basis(const WeightedBasis& ambient, const QuotientBasis& q) {
    WeightedBasis out;
    out.degree = ambient.degree;
    RowSpace seen(q.dim());
    for (const auto& e : ambient.entries) {  // already ascending in weight
        BitVec img = q.reduce(e.coords);
        if (seen.insert(img)) out.entries.push_back(WeightedEntry{std::move(img), e.weight});
    }
    return out;
}

const WeightedBasis& bo_quot_weighted_basis(std::size_t n, int d) {
    static std::map<std::pair<std::size_t, int>, WeightedBasis> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({n, d});
        if (it != cache.end()) return it->second;
    }
    const WeightedBasis& ambient = bo_weighted_basis(n, d);
    QuotientBasis q(RingPresentation::quot_bo(int(n), 1), d);
    WeightedBasis wb = quotient_weighted_basis(ambient, q);
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({n, d});
    if (it != cache.end()) return it->second;
    return cache.emplace(std::make_pair(n, d), std::move(wb)).first->second;
}

WeightedBasis preimage_weighted_basis(const F2Matrix& f, const WeightedBasis& tgt) {
    const std::size_t src_dim = f.cols;
    WeightedBasis out;
    out.degree = tgt.degree;

    std::set<int> weights;
    for (const auto& e : tgt.entries) weights.insert(e.weight);

    RowSpace acc(src_dim);
    RowSpace tgt_span(f.rows);
    std::size_t consumed = 0;
    for (int w : weights) {
        while (consumed < tgt.entries.size() && tgt.entries[consumed].weight <= w)
            tgt_span.insert(tgt.entries[consumed++].coords);
        // kernel of (reduce mod F^{<=w}) o f
        F2Matrix residual(f.rows, src_dim);
        for (std::size_t j = 0; j < src_dim; ++j) {
            BitVec col(f.rows);
            for (std::size_t r = 0; r < f.rows; ++r)
                if (f.get(r, j)) col.set(r);
            col = tgt_span.reduce(col);
            for (std::size_t r = 0; r < f.rows; ++r)
                if (col.get(r)) residual.set(r, j);
        }
        for (auto& v : gf2::kernel_basis(residual))
            if (acc.insert(v)) out.entries.push_back(WeightedEntry{std::move(v), w});
        if (acc.rank() == src_dim) break;
    }
    if (acc.rank() != src_dim && src_dim > 0)
        throw InternalError("preimage_weighted_basis: image not contained in the target span");
    sort_entries(out);
    return out;
}

const WeightedBasis& so_quot_weighted_basis(int n, int d) {
    static std::map<std::pair<int, int>, WeightedBasis> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({n, d});
        if (it != cache.end()) return it->second;
    }
    WeightedBasis wb;
    wb.degree = d;
    if (n == 1) {
        if (d == 0) {
            BitVec v(1);
            v.set(0);
            wb.entries.push_back(WeightedEntry{std::move(v), 0});
        }
    } else if (n == 2) {
        // SO_2 = GL_1: tau-free with everything realized from the Chow side.
        QuotientBasis q(RingPresentation::quot_bso(2, 2), d);
        for (std::size_t i = 0; i < q.dim(); ++i) {
            BitVec v(q.dim());
            v.set(i);
            wb.entries.push_back(WeightedEntry{std::move(v), 0});
        }
    } else {
        F2Matrix f = map_matrix(rings::kappa_star(n), d);
        if (gf2::rank(f) != f.cols)
            throw VerificationError("kappa* not injective at n=" + std::to_string(n) +
                                    ", d=" + std::to_string(d));
        wb = preimage_weighted_basis(f, bo_quot_weighted_basis(std::size_t(n - 1), d));
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({n, d});
    if (it != cache.end()) return it->second;
    return cache.emplace(std::make_pair(n, d), std::move(wb)).first->second;
}

const WeightedBasis& so_weighted_basis(int n, int d) {
    static std::map<std::pair<int, int>, WeightedBasis> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({n, d});
        if (it != cache.end()) return it->second;
    }
    WeightedBasis wb;
    wb.degree = d;
    RingPresentation bso = RingPresentation::bso(std::max(n, 1));
    rings::DegreeBasis basis(bso, d);
    if (n <= 2) {
        // Z/2 (n = 1) or Z/2[w_2] = H^*(BGL_1) (n = 2): everything weight 0.
        for (std::size_t i = 0; i < basis.dim(); ++i) {
            BitVec v(basis.dim());
            v.set(i);
            wb.entries.push_back(WeightedEntry{std::move(v), 0});
        }
    } else if (n % 2 == 1) {
        F2Matrix f = map_matrix(rings::pi_star(n), d);
        if (gf2::rank(f) != f.cols)
            throw VerificationError("pi* not injective at n=" + std::to_string(n) +
                                    ", d=" + std::to_string(d));
        wb = preimage_weighted_basis(f, bo_quot_weighted_basis(std::size_t(n), d));
    } else {
        // stack c_n^r-multiples of the quotient basis; c_n has weight 0
        WPoly cn = bso.gen("w" + std::to_string(n), 2);
        RowSpace check(basis.dim());
        for (int r = 0; d - 2 * n * r >= 0; ++r) {
            const WeightedBasis& sq = so_quot_weighted_basis(n, d - 2 * n * r);
            QuotientBasis q(RingPresentation::quot_bso(n, n), d - 2 * n * r);
            for (const auto& e : sq.entries) {
                WPoly rep = q.lift_poly(e.coords);
                WPoly lifted = rep * cn.pow(unsigned(r));
                WeightedEntry entry{basis.coords(lifted), e.weight};
                if (!check.insert(entry.coords))
                    throw VerificationError("c_n-tower lift dependent at n=" + std::to_string(n) +
                                            ", d=" + std::to_string(d));
                wb.entries.push_back(std::move(entry));
            }
        }
        if (wb.entries.size() != basis.dim())
            throw VerificationError("c_n-tower lift does not span at n=" + std::to_string(n) +
                                    ", d=" + std::to_string(d));
        sort_entries(wb);
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({n, d});
    if (it != cache.end()) return it->second;
    return cache.emplace(std::make_pair(n, d), std::move(wb)).first->second;
}

int weight_in_quotient(const RingPresentation& R, const WPoly& p, int d) {
    if (R.kind() != rings::RingKind::QuotBO)
        throw std::invalid_argument("weight_in_quotient: expected a quotient of BO_n");
    const std::size_t n = std::size_t(R.n());
    const WeightedBasis& ambient = bo_weighted_basis(n, d);
    QuotientBasis q(R, d);
    BitVec target = q.coords(p);
    if (target.is_zero())
        throw std::invalid_argument("weight_in_quotient: class is 0 in the quotient");
    RowSpace span(q.dim());
    std::size_t consumed = 0;
    for (int w = 0; w <= ambient.max_weight(); ++w) {
        while (consumed < ambient.entries.size() && ambient.entries[consumed].weight <= w)
            span.insert(q.reduce(ambient.entries[consumed++].coords));
        if (span.reduce(target).is_zero()) return w;
    }
    throw InternalError("weight_in_quotient: class not reached by the full filtration");
}

int weight_bso(int n, const WPoly& p) {
    if (n == 2) {
        int d = RingPresentation::bso(2).degree(p);
        if (d < 0) throw std::invalid_argument("weight_bso: zero class");
        QuotientBasis q(RingPresentation::quot_bso(2, 2), d);
        if (q.coords(p).is_zero())
            throw std::invalid_argument("weight_bso: class is 0 in the quotient");
        return 0;  // GL_1: everything realizes from the Chow side
    }
    rings::RingMap kappa = rings::kappa_star(n);
    int d = kappa.source().degree(p);
    if (d < 0) throw std::invalid_argument("weight_bso: zero class");
    QuotientBasis src_q(kappa.source(), d);
    if (src_q.coords(p).is_zero())
        throw std::invalid_argument("weight_bso: class is 0 in the quotient");
    WPoly img = kappa.apply(p);
    QuotientBasis tgt_q(kappa.target(), d);
    if (tgt_q.coords(img).is_zero())
        throw InternalError("weight_bso: kappa* killed a nonzero class (contradicts Prop 2.1)");
    return weight_in_quotient(kappa.target(), img, d);
}

bool StrictnessReport::all_pass() const {
    if (!injective) return false;
    for (const auto& r : rows)
        if (!r.pass()) return false;
    return true;
}

int StrictnessReport::first_failure() const {
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!rows[i].pass()) return int(i);
    return -1;
}

namespace {

// Shared core: compare a source filtration against the preimage of the
// target filtration under the matrix of f.
void strictness_rows(const F2Matrix& f, const WeightedBasis& src, const WeightedBasis& tgt, int d,
                     std::vector<StrictnessRow>& rows) {
    int wmax = std::max(src.max_weight(), tgt.max_weight());
    RowSpace tgt_span(f.rows);
    std::size_t consumed = 0;
    for (int w = 0; w <= wmax; ++w) {
        while (consumed < tgt.entries.size() && tgt.entries[consumed].weight <= w)
            tgt_span.insert(tgt.entries[consumed++].coords);
        F2Matrix residual(f.rows, f.cols);
        for (std::size_t j = 0; j < f.cols; ++j) {
            BitVec col(f.rows);
            for (std::size_t r = 0; r < f.rows; ++r)
                if (f.get(r, j)) col.set(r);
            col = tgt_span.reduce(col);
            for (std::size_t r = 0; r < f.rows; ++r)
                if (col.get(r)) residual.set(r, j);
        }
        StrictnessRow row;
        row.d = d;
        row.omega = w;
        row.dim_preimage = f.cols - gf2::rank(residual);
        row.dim_source = src.dim_leq(w);
        row.contained = true;
        for (const auto& e : src.entries) {
            if (e.weight > w) break;
            if (!tgt_span.reduce(f.apply(e.coords)).is_zero()) row.contained = false;
        }
        rows.push_back(row);
    }
}

}  // namespace

StrictnessReport verify_strictness(int n, int maxdeg) {
    StrictnessReport rep;
    rep.n = n;
    for (int d = 1; d <= maxdeg; ++d) {
        F2Matrix f = map_matrix(rings::kappa_star(n), d);
        if (gf2::rank(f) != f.cols) rep.injective = false;
        // Source filtration built independently where a second route exists:
        // odd n from the pi*-route pushed to the quotient; even n is the
        // kappa-preimage construction itself (coherence check).
        WeightedBasis src;
        if (n % 2 == 1) {
            QuotientBasis q(RingPresentation::quot_bso(n, n), d);
            src = quotient_weighted_basis(so_weighted_basis(n, d), q);
        } else {
            src = so_quot_weighted_basis(n, d);
        }
        strictness_rows(f, src, bo_quot_weighted_basis(std::size_t(n - 1), d), d, rep.rows);
    }
    return rep;
}

StrictnessReport iota_strictness_control(int m, int maxdeg) {
    StrictnessReport rep;
    rep.n = 2 * m + 1;
    for (int d = 1; d <= maxdeg; ++d) {
        F2Matrix f = map_matrix(rings::iota_star(2 * m + 1, rings::Flavor::SO), d);
        strictness_rows(f, so_weighted_basis(2 * m + 1, d), so_weighted_basis(2 * m, d), d,
                        rep.rows);
    }
    return rep;
}

}  // namespace motso::wfilt
