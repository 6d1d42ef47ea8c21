#include "motso/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace motso::poly {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 0) throw std::invalid_argument("Partition: negative part");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    s += "]";
    return s;
}

static void partitions_rec(int d, int max_parts, int max_part, std::vector<int>& cur,
                           std::vector<Partition>& out) {
    if (d == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_parts == 0) return;
    int hi = std::min(d, max_part);
    for (int p = hi; p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(d - p, max_parts - 1, p, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions(int d, int max_parts, int max_part) {
    std::vector<Partition> out;
    if (d < 0) return out;
    std::vector<int> cur;
    partitions_rec(d, max_parts, max_part, cur, out);
    return out;
}

namespace detail {

// Descending lexicographic order on exponent vectors.
static bool lex_greater(const ExponentVector& a, const ExponentVector& b) { return a > b; }

void normalize(MonomialList& ms) {
    std::sort(ms.begin(), ms.end(), lex_greater);
    MonomialList out;
    out.reserve(ms.size());
    for (std::size_t i = 0; i < ms.size();) {
        std::size_t j = i;
        while (j < ms.size() && ms[j] == ms[i]) ++j;
        if ((j - i) & 1) out.push_back(ms[i]);
        i = j;
    }
    ms = std::move(out);
}

MonomialList sym_diff(const MonomialList& a, const MonomialList& b) {
    MonomialList out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                                  lex_greater);
    return out;
}

MonomialList product(const MonomialList& a, const MonomialList& b) {
    MonomialList out;
    out.reserve(a.size() * b.size());
    for (const auto& ma : a)
        for (const auto& mb : b) {
            ExponentVector m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) {
                unsigned s = unsigned(ma[i]) + unsigned(mb[i]);
                if (s > 0xFFFF) throw std::overflow_error("exponent overflow");
                m[i] = Exponent(s);
            }
            out.push_back(std::move(m));
        }
    normalize(out);
    return out;
}

}  // namespace detail

// ---- F2Polynomial ----

F2Polynomial F2Polynomial::one(std::size_t nvars) {
    F2Polynomial p(nvars);
    p.monomials_.push_back(ExponentVector(nvars, 0));
    return p;
}

F2Polynomial F2Polynomial::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw std::invalid_argument("variable index out of range");
    F2Polynomial p(nvars);
    ExponentVector e(nvars, 0);
    e[i] = 1;
    p.monomials_.push_back(std::move(e));
    return p;
}

F2Polynomial F2Polynomial::monomial(ExponentVector e) {
    F2Polynomial p(e.size());
    p.monomials_.push_back(std::move(e));
    return p;
}

F2Polynomial F2Polynomial::from_monomials(std::size_t nvars, detail::MonomialList ms) {
    F2Polynomial p(nvars);
    for (const auto& m : ms)
        if (m.size() != nvars) throw std::invalid_argument("from_monomials: ambient n mismatch");
    detail::normalize(ms);
    p.monomials_ = std::move(ms);
    return p;
}

int F2Polynomial::degree() const {
    int d = -1;
    for (const auto& m : monomials_) d = std::max(d, int(std::accumulate(m.begin(), m.end(), 0u)));
    return d;
}

F2Polynomial& F2Polynomial::operator+=(const F2Polynomial& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("F2Polynomial: ambient n mismatch");
    monomials_ = detail::sym_diff(monomials_, o.monomials_);
    return *this;
}

F2Polynomial operator*(const F2Polynomial& a, const F2Polynomial& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("F2Polynomial: ambient n mismatch");
    F2Polynomial r(a.nvars_);
    r.monomials_ = detail::product(a.monomials_, b.monomials_);
    return r;
}

F2Polynomial F2Polynomial::square() const {
    F2Polynomial r(nvars_);
    r.monomials_ = monomials_;
    for (auto& m : r.monomials_)
        for (auto& e : m) {
            if (unsigned(e) * 2 > 0xFFFF) throw std::overflow_error("exponent overflow");
            e = Exponent(e * 2);
        }
    // doubling preserves the descending-lex order
    return r;
}

F2Polynomial F2Polynomial::pow(unsigned e) const {
    F2Polynomial acc = F2Polynomial::one(nvars_);
    F2Polynomial base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base.square();
    }
    return acc;
}

// ---- WPoly ----

WPoly WPoly::one(std::size_t ngens) {
    WPoly p(ngens);
    p.monomials_.push_back(ExponentVector(ngens, 0));
    return p;
}

WPoly WPoly::generator(std::size_t ngens, std::size_t slot, unsigned e) {
    if (slot >= ngens) throw std::invalid_argument("generator slot out of range");
    WPoly p(ngens);
    ExponentVector m(ngens, 0);
    m[slot] = Exponent(e);
    p.monomials_.push_back(std::move(m));
    return p;
}

WPoly WPoly::monomial(ExponentVector e) {
    WPoly p(e.size());
    p.monomials_.push_back(std::move(e));
    return p;
}

WPoly WPoly::from_monomials(std::size_t ngens, detail::MonomialList ms) {
    WPoly p(ngens);
    for (const auto& m : ms)
        if (m.size() != ngens) throw std::invalid_argument("from_monomials: slot count mismatch");
    detail::normalize(ms);
    p.monomials_ = std::move(ms);
    return p;
}

int WPoly::degree(std::span<const int> gd) const {
    int d = -1;
    for (const auto& m : monomials_) {
        int t = 0;
        for (std::size_t i = 0; i < m.size(); ++i) t += int(m[i]) * gd[i];
        d = std::max(d, t);
    }
    return d;
}

bool WPoly::homogeneous(std::span<const int> gd, int* deg_out) const {
    int d = -1;
    for (const auto& m : monomials_) {
        int t = 0;
        for (std::size_t i = 0; i < m.size(); ++i) t += int(m[i]) * gd[i];
        if (d >= 0 && t != d) return false;
        d = t;
    }
    if (deg_out) *deg_out = d;
    return true;
}

WPoly& WPoly::operator+=(const WPoly& o) {
    if (ngens_ != o.ngens_) throw std::invalid_argument("WPoly: generator count mismatch");
    monomials_ = detail::sym_diff(monomials_, o.monomials_);
    return *this;
}

WPoly operator*(const WPoly& a, const WPoly& b) {
    if (a.ngens_ != b.ngens_) throw std::invalid_argument("WPoly: generator count mismatch");
    WPoly r(a.ngens_);
    r.monomials_ = detail::product(a.monomials_, b.monomials_);
    return r;
}

WPoly WPoly::pow(unsigned e) const {
    WPoly acc = WPoly::one(ngens_);
    WPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

// ---- symmetric function operations ----

F2Polynomial monomial_symmetric(const Partition& lambda, std::size_t n) {
    if (lambda.length() > n)
        throw std::invalid_argument("monomial_symmetric: partition longer than variable count");
    ExponentVector pat(n, 0);
    for (std::size_t i = 0; i < lambda.length(); ++i) pat[i] = Exponent(lambda.part(i));
    std::sort(pat.begin(), pat.end());  // ascending start for next_permutation
    detail::MonomialList ms;
    do {
        ms.push_back(pat);
    } while (std::next_permutation(pat.begin(), pat.end()));
    // distinct permutations: nothing cancels, each monomial appears exactly once
    return F2Polynomial::from_monomials(n, std::move(ms));
}

F2Polynomial elementary_symmetric(int l, std::size_t n) {
    if (l == 0) return F2Polynomial::one(n);
    std::vector<int> parts(std::size_t(l), 1);
    return monomial_symmetric(Partition(parts), n);
}

bool is_symmetric(const F2Polynomial& p) {
    const std::size_t n = p.nvars();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        detail::MonomialList ms = p.monomials();
        for (auto& m : ms) std::swap(m[i], m[i + 1]);
        if (!(F2Polynomial::from_monomials(n, std::move(ms)) == p)) return false;
    }
    return true;
}

F2Polynomial expand_w(const WPoly& p, std::size_t n) {
    if (p.ngens() != n) throw std::invalid_argument("expand_w: generator count != n");
    F2Polynomial out(n);
    for (const auto& m : p.monomials()) {
        F2Polynomial term = F2Polynomial::one(n);
        for (std::size_t l = 0; l < n; ++l)
            if (m[l]) term = term * elementary_symmetric(int(l) + 1, n).pow(m[l]);
        out += term;
    }
    return out;
}

std::vector<Partition> to_monomial_basis(const F2Polynomial& p) {
    if (!is_symmetric(p)) throw std::invalid_argument("to_monomial_basis: polynomial not symmetric");
    F2Polynomial rest = p;
    std::vector<Partition> out;
    while (!rest.is_zero()) {
        const ExponentVector& lead = rest.monomials().front();
        std::vector<int> parts(lead.begin(), lead.end());
        Partition lambda(parts);
        out.push_back(lambda);
        rest += monomial_symmetric(lambda, p.nvars());
    }
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return b < a; });
    return out;
}

WPoly to_w_basis(const F2Polynomial& p) {
    if (!is_symmetric(p)) throw std::invalid_argument("to_w_basis: polynomial not symmetric");
    const std::size_t n = p.nvars();
    F2Polynomial rest = p;
    WPoly out(n);
    while (!rest.is_zero()) {
        ExponentVector lead = rest.monomials().front();  // sorted descending for symmetric p
        ExponentVector wexp(n, 0);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (lead[i] < lead[i + 1]) throw std::logic_error("to_w_basis: leading term not a partition");
            wexp[i] = Exponent(lead[i] - lead[i + 1]);
        }
        if (n > 0) wexp[n - 1] = lead[n - 1];
        WPoly term = WPoly::monomial(std::move(wexp));
        out += term;
        rest += expand_w(term, n);
    }
    return out;
}

std::vector<Partition> basis_of_degree(std::size_t n, int d, BasisKind kind) {
    if (kind == BasisKind::Monomial) return partitions(d, int(n), d);
    return partitions(d, d, int(n));
}

std::vector<int> bo_gen_degrees(std::size_t n) {
    std::vector<int> gd(n);
    for (std::size_t i = 0; i < n; ++i) gd[i] = int(i) + 1;
    return gd;
}

}  // namespace motso::poly
