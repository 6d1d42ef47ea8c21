#include "motso/rings.hpp"

#include <algorithm>

namespace motso::rings {

using gf2::BitVec;
using gf2::F2Matrix;
using poly::ExponentVector;
using poly::WPoly;

// C(a, b) mod 2 by Lucas.
static bool binom_odd(int a, int b) {
    if (b < 0 || b > a) return false;
    return (a & b) == b;
}

RingPresentation RingPresentation::bo(int n) {
    if (n < 1) throw std::invalid_argument("bo: n >= 1 required");
    RingPresentation r;
    r.kind_ = RingKind::BO;
    r.n_ = n;
    for (int l = 1; l <= n; ++l) {
        r.gen_degrees_.push_back(l);
        r.gen_names_.push_back("w" + std::to_string(l));
    }
    return r;
}

RingPresentation RingPresentation::bso(int n) {
    if (n < 1) throw std::invalid_argument("bso: n >= 1 required");
    RingPresentation r;
    r.kind_ = RingKind::BSO;
    r.n_ = n;
    for (int l = 2; l <= n; ++l) {
        r.gen_degrees_.push_back(l);
        r.gen_names_.push_back("w" + std::to_string(l));
    }
    return r;
}

RingPresentation RingPresentation::quot_bo(int n, int k) {
    RingPresentation r = bo(n);
    r.kind_ = RingKind::QuotBO;
    r.relation_ = r.gen("w" + std::to_string(k), 2);  // c_k = w_k^2
    return r;
}

RingPresentation RingPresentation::quot_bso(int n, int k) {
    RingPresentation r = bso(n);
    r.kind_ = RingKind::QuotBSO;
    r.relation_ = r.gen("w" + std::to_string(k), 2);
    return r;
}

RingPresentation RingPresentation::exterior_so(int n) {
    if (n < 2) throw std::invalid_argument("exterior_so: n >= 2 required");
    RingPresentation r;
    r.kind_ = RingKind::ExtSO;
    r.n_ = n;
    r.gen_degrees_.push_back(1);
    r.gen_names_.push_back("x");
    for (int l = 2; l <= n; ++l) {
        r.gen_degrees_.push_back(l);
        r.gen_names_.push_back("w" + std::to_string(l));
    }
    r.relation_ = r.gen("x", 2);
    return r;
}

std::size_t RingPresentation::slot_of(const std::string& name) const {
    auto it = std::find(gen_names_.begin(), gen_names_.end(), name);
    if (it == gen_names_.end())
        throw std::invalid_argument("no generator '" + name + "' in " + label());
    return std::size_t(it - gen_names_.begin());
}

WPoly RingPresentation::gen(const std::string& name, unsigned e) const {
    return WPoly::generator(ngens(), slot_of(name), e);
}

static void monos_rec(const std::vector<int>& gd, std::size_t slot, int d, ExponentVector& cur,
                      std::vector<ExponentVector>& out) {
    if (slot == gd.size()) {
        if (d == 0) out.push_back(cur);
        return;
    }
    int hi = d / gd[slot];
    for (int e = hi; e >= 0; --e) {
        cur[slot] = poly::Exponent(e);
        monos_rec(gd, slot + 1, d - e * gd[slot], cur, out);
    }
    cur[slot] = 0;
}

std::vector<ExponentVector> RingPresentation::monomial_basis(int d) const {
    std::vector<ExponentVector> out;
    if (d < 0) return out;
    ExponentVector cur(ngens(), 0);
    monos_rec(gen_degrees_, 0, d, cur, out);
    return out;
}

std::string RingPresentation::label() const {
    std::string base;
    switch (kind_) {
        case RingKind::BO: return "bo:" + std::to_string(n_);
        case RingKind::BSO: return "bso:" + std::to_string(n_);
        case RingKind::QuotBO: base = "bo:"; break;
        case RingKind::QuotBSO: base = "bso:"; break;
        case RingKind::ExtSO: return "bso:" + std::to_string(n_) + "{1,x}";
    }
    // quotient label carries the c-index, read off the relation's squared generator
    const auto& m = relation_->monomials().front();
    std::size_t slot = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) slot = i;
    return base + std::to_string(n_) + "/c" + gen_names_[slot].substr(1);
}

DegreeBasis::DegreeBasis(const RingPresentation& R, int d)
    : d_(d), ngens_(R.ngens()), monos_(R.monomial_basis(d)) {
    for (std::size_t i = 0; i < monos_.size(); ++i) index_[monos_[i]] = i;
}

BitVec DegreeBasis::coords(const WPoly& p) const {
    BitVec v(monos_.size());
    for (const auto& m : p.monomials()) {
        auto it = index_.find(m);
        if (it == index_.end())
            throw std::invalid_argument("DegreeBasis::coords: monomial not of this degree");
        v.set(it->second);
    }
    return v;
}

WPoly DegreeBasis::poly_of(const BitVec& v) const {
    poly::detail::MonomialList ms;
    for (std::size_t i = 0; i < monos_.size(); ++i)
        if (v.get(i)) ms.push_back(monos_[i]);
    return WPoly::from_monomials(ngens_, std::move(ms));
}

QuotientBasis::QuotientBasis(const RingPresentation& R, int d)
    : ring_(std::make_shared<RingPresentation>(R)), basis_(R, d), ideal_(basis_.dim()) {
    if (R.relation()) {
        const WPoly& rel = *R.relation();
        int rel_deg = R.degree(rel);
        for (const auto& m : R.monomial_basis(d - rel_deg)) {
            WPoly prod = rel * WPoly::monomial(m);
            if (!ideal_.insert(basis_.coords(prod)))
                throw VerificationError("quotienting class is a zero-divisor in " + R.label() +
                                        " at degree " + std::to_string(d));
        }
    }
    std::vector<bool> is_pivot(basis_.dim(), false);
    for (const auto& row : ideal_.rows()) is_pivot[std::size_t(row.lowest_set())] = true;
    col_to_free_.assign(basis_.dim(), -1);
    for (std::size_t c = 0; c < basis_.dim(); ++c) {
        if (is_pivot[c]) continue;
        col_to_free_[c] = int(free_cols_.size());
        free_cols_.push_back(c);
    }
}

WPoly QuotientBasis::rep(std::size_t i) const {
    return WPoly::monomial(rep_monomial(i));
}

BitVec QuotientBasis::reduce(const BitVec& ambient_coords) const {
    BitVec r = ideal_.reduce(ambient_coords);
    BitVec q(free_cols_.size());
    for (std::size_t i = 0; i < free_cols_.size(); ++i)
        if (r.get(free_cols_[i])) q.set(i);
    return q;
}

BitVec QuotientBasis::lift(const BitVec& quotient_coords) const {
    BitVec a(basis_.dim());
    for (std::size_t i = 0; i < free_cols_.size(); ++i)
        if (quotient_coords.get(i)) a.set(free_cols_[i]);
    return a;
}

poly::WPoly QuotientBasis::lift_poly(const BitVec& quotient_coords) const {
    return basis_.poly_of(lift(quotient_coords));
}

RingMap::RingMap(RingPresentation source, RingPresentation target, std::vector<WPoly> images)
    : source_(std::make_shared<RingPresentation>(std::move(source))),
      target_(std::make_shared<RingPresentation>(std::move(target))),
      images_(std::move(images)) {
    if (images_.size() != source_->ngens())
        throw std::invalid_argument("RingMap: one image per source generator required");
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i].is_zero()) continue;
        int deg = 0;
        if (!images_[i].homogeneous(target_->gen_degrees(), &deg) || deg != source_->gen_degree(i))
            throw std::invalid_argument("RingMap: image of " + source_->gen_names()[i] +
                                        " does not respect degree");
    }
    if (source_->relation()) {
        WPoly r = apply(*source_->relation());
        if (!r.is_zero()) {
            if (!target_->relation())
                throw std::invalid_argument(
                    "RingMap: quotienting class must map into the target ideal");
            int deg = target_->degree(r);
            QuotientBasis q(*target_, deg);
            if (!q.coords(r).is_zero())
                throw std::invalid_argument(
                    "RingMap: quotienting class does not land in the target ideal");
        }
    }
}

WPoly RingMap::apply(const WPoly& p) const {
    WPoly out(target_->ngens());
    for (const auto& m : p.monomials()) {
        WPoly term = WPoly::one(target_->ngens());
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) term = term * images_[i].pow(m[i]);
        out += term;
    }
    return out;
}

RingMap kappa_star(int n) {
    if (n < 3) throw std::invalid_argument("kappa_star: n >= 3 required");
    RingPresentation src = RingPresentation::quot_bso(n, n);
    RingPresentation tgt = RingPresentation::quot_bo(n - 1, 1);
    std::vector<WPoly> images;
    WPoly w1 = tgt.gen("w1");
    for (int i = 2; i <= n; ++i) {
        if (i < n) {
            WPoly img = tgt.gen("w" + std::to_string(i)) +
                        w1 * (i - 1 == 1 ? w1 : tgt.gen("w" + std::to_string(i - 1)));
            images.push_back(img);
        } else {
            images.push_back(w1 * tgt.gen("w" + std::to_string(n - 1)));
        }
    }
    return RingMap(std::move(src), std::move(tgt), std::move(images));
}

RingMap iota_star(int n, Flavor flavor) {
    if ((flavor == Flavor::O && n < 2) || (flavor == Flavor::SO && n < 3))
        throw std::invalid_argument("iota_star: n out of range");
    RingPresentation src =
        flavor == Flavor::O ? RingPresentation::bo(n) : RingPresentation::bso(n);
    RingPresentation tgt =
        flavor == Flavor::O ? RingPresentation::bo(n - 1) : RingPresentation::bso(n - 1);
    std::vector<WPoly> images;
    int lo = flavor == Flavor::O ? 1 : 2;
    for (int i = lo; i <= n; ++i) {
        if (i < n)
            images.push_back(tgt.gen("w" + std::to_string(i)));
        else
            images.push_back(WPoly::zero(tgt.ngens()));
    }
    return RingMap(std::move(src), std::move(tgt), std::move(images));
}

RingMap iota_star_quot(int n, Flavor flavor) {
    if ((flavor == Flavor::O && n < 2) || (flavor == Flavor::SO && n < 3))
        throw std::invalid_argument("iota_star_quot: n out of range");
    RingPresentation src, tgt;
    if (flavor == Flavor::O) {
        src = RingPresentation::quot_bo(n, 1);
        tgt = RingPresentation::quot_bo(n - 1, 1);
    } else {
        src = RingPresentation::quot_bso(n, n);
        tgt = RingPresentation::quot_bso(n - 1, n - 1);
    }
    std::vector<WPoly> images;
    int lo = flavor == Flavor::O ? 1 : 2;
    for (int i = lo; i <= n; ++i) {
        if (i < n)
            images.push_back(tgt.gen("w" + std::to_string(i)));
        else
            images.push_back(WPoly::zero(tgt.ngens()));
    }
    return RingMap(std::move(src), std::move(tgt), std::move(images));
}

RingMap epsilon_star(int n) {
    if (n < 2) throw std::invalid_argument("epsilon_star: n >= 2 required");
    RingPresentation src = RingPresentation::bo(n);
    RingPresentation tgt = RingPresentation::bso(n);
    std::vector<WPoly> images;
    images.push_back(WPoly::zero(tgt.ngens()));  // w_1 -> 0
    for (int i = 2; i <= n; ++i) images.push_back(tgt.gen("w" + std::to_string(i)));
    return RingMap(std::move(src), std::move(tgt), std::move(images));
}

RingMap pi_star(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("pi_star: odd n >= 3 required");
    RingPresentation src = RingPresentation::bso(n);
    RingPresentation tgt = RingPresentation::quot_bo(n, 1);
    WPoly w1 = tgt.gen("w1");
    std::vector<WPoly> images;
    for (int i = 2; i <= n; ++i) {
        WPoly img(tgt.ngens());
        for (int k = 0; k <= i; ++k) {
            if (!binom_odd(n - k, i - k)) continue;
            WPoly base = k == 0 ? WPoly::one(tgt.ngens()) : tgt.gen("w" + std::to_string(k));
            img += base * w1.pow(unsigned(i - k));
        }
        images.push_back(img);
    }
    return RingMap(std::move(src), std::move(tgt), std::move(images));
}

F2Matrix map_matrix(const RingMap& f, int d) {
    const RingPresentation& S = f.source();
    const RingPresentation& T = f.target();

    std::vector<WPoly> src_basis;
    if (S.relation()) {
        QuotientBasis q(S, d);
        for (std::size_t i = 0; i < q.dim(); ++i) src_basis.push_back(q.rep(i));
    } else {
        for (const auto& m : S.monomial_basis(d)) src_basis.push_back(WPoly::monomial(m));
    }

    if (T.relation()) {
        QuotientBasis q(T, d);
        F2Matrix mat(q.dim(), src_basis.size());
        for (std::size_t j = 0; j < src_basis.size(); ++j) {
            BitVec col = q.coords(f.apply(src_basis[j]));
            for (std::size_t r = 0; r < q.dim(); ++r)
                if (col.get(r)) mat.set(r, j);
        }
        return mat;
    }
    DegreeBasis b(T, d);
    F2Matrix mat(b.dim(), src_basis.size());
    for (std::size_t j = 0; j < src_basis.size(); ++j) {
        WPoly img = f.apply(src_basis[j]);
        BitVec col = img.is_zero() ? BitVec(b.dim()) : b.coords(img);
        for (std::size_t r = 0; r < b.dim(); ++r)
            if (col.get(r)) mat.set(r, j);
    }
    return mat;
}

static int require_delta_level(int n) {
    if (n < 3) throw std::invalid_argument("DeltaTop: n >= 3 required");
    return n;
}

DeltaTop::DeltaTop(int n, int d)
    : n_(require_delta_level(n)),
      d_(d),
      mid_(RingPresentation::quot_bo(n - 1, 1)),
      tail_(RingPresentation::bso(n - 2)),
      midq_(mid_, d),
      tail_basis_(tail_, d - 1),
      space_(midq_.dim(), tail_basis_.dim()) {
    // im(kappa*) rows carry zero tags.
    RingMap kappa = kappa_star(n);
    F2Matrix km = map_matrix(kappa, d);
    for (std::size_t j = 0; j < km.cols; ++j) {
        BitVec col(km.rows);
        for (std::size_t r = 0; r < km.rows; ++r)
            if (km.get(r, j)) col.set(r);
        if (space_.insert(std::move(col), BitVec(tail_basis_.dim()))) ++kappa_rank_;
    }

    // z*w_1 rows, tagged by z; z runs over monomials in w_2..w_{n-2}.
    WPoly w1 = mid_.gen("w1");
    const auto& tails = tail_basis_.monomials();
    for (std::size_t t = 0; t < tails.size(); ++t) {
        // translate z from bso(n-2) slots into bo(n-1) slots
        WPoly z = WPoly::one(mid_.ngens());
        for (std::size_t s = 0; s < tails[t].size(); ++s)
            if (tails[t][s]) z = z * mid_.gen(tail_.gen_names()[s], tails[t][s]);
        BitVec tag(tail_basis_.dim());
        tag.set(t);
        if (!space_.insert(midq_.coords(z * w1), std::move(tag)))
            throw VerificationError("delta_top: im(kappa*) + span{z w_1} is not direct at n=" +
                                    std::to_string(n) + ", d=" + std::to_string(d));
    }
    if (space_.rank() != midq_.dim())
        throw VerificationError("delta_top: im(kappa*) + span{z w_1} does not span at n=" +
                                std::to_string(n) + ", d=" + std::to_string(d));
}

BitVec DeltaTop::apply_coords(const BitVec& v) const {
    BitVec tag(tail_basis_.dim());
    BitVec res = space_.reduce(v, &tag);
    if (!res.is_zero())
        throw InternalError("delta_top: class outside im(kappa*) + span{z w_1}");
    return tag;
}

WPoly DeltaTop::apply(const WPoly& v) const {
    return tail_basis_.poly_of(apply_coords(midq_.coords(v)));
}

F2Matrix DeltaTop::matrix() const {
    F2Matrix mat(tail_basis_.dim(), midq_.dim());
    for (std::size_t j = 0; j < midq_.dim(); ++j) {
        BitVec unit(midq_.dim());
        unit.set(j);
        BitVec img = apply_coords(unit);
        for (std::size_t r = 0; r < mat.rows; ++r)
            if (img.get(r)) mat.set(r, j);
    }
    return mat;
}

WPoly delta_top(int n, const WPoly& v, int d) {
    DeltaTop dt(n, d);
    return dt.apply(v);
}

}  // namespace motso::rings
