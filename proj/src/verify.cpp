#include "motso/verify.hpp"

#include <random>

#include "motso/milnor.hpp"
#include "motso/rings.hpp"

namespace motso::verify {

using poly::F2Polynomial;
using poly::WPoly;

namespace {

F2Polynomial random_poly(std::mt19937& rng, std::size_t n, int degmax, int maxterms) {
    std::uniform_int_distribution<int> terms(1, maxterms);
    poly::detail::MonomialList ms;
    int t = terms(rng);
    for (int i = 0; i < t; ++i) {
        poly::ExponentVector e(n, 0);
        int room = degmax;
        for (std::size_t j = 0; j < n; ++j) {
            std::uniform_int_distribution<int> expo(0, room / int(n - j) + 1);
            int v = std::min(expo(rng), room);
            e[j] = poly::Exponent(v);
            room -= v;
        }
        ms.push_back(std::move(e));
    }
    return F2Polynomial::from_monomials(n, std::move(ms));
}

}  // namespace

LawReport milnor_laws(int samples, unsigned seed, std::size_t nmax, int degmax, int kmax) {
    LawReport rep;
    rep.samples = samples;
    rep.seed = seed;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_n(1, nmax);
    std::uniform_int_distribution<int> pick_k(0, kmax);
    for (int i = 0; i < samples; ++i) {
        std::size_t n = pick_n(rng);
        auto p = random_poly(rng, n, degmax, 5);
        auto q = random_poly(rng, n, degmax, 5);
        int k = pick_k(rng);
        int j = pick_k(rng);
        bool ok = milnor::apply_Q(k, p * q) ==
                  milnor::apply_Q(k, p) * q + p * milnor::apply_Q(k, q);
        ok = ok && milnor::apply_Q(k, milnor::apply_Q(k, p)).is_zero();
        ok = ok && milnor::apply_Q(j, milnor::apply_Q(k, p)) ==
                       milnor::apply_Q(k, milnor::apply_Q(j, p));
        if (!ok) ++rep.failures;
    }
    return rep;
}

bool WeightTableReport::all_pass() const {
    for (const auto& r : rows)
        if (!r.pass()) return false;
    return true;
}

WeightTableReport weight_tables(int nmax) {
    WeightTableReport rep;
    for (int n = 1; n <= nmax; ++n) {
        for (int l = 1; l <= n; ++l) {
            WeightRow row;
            row.group = "bo:" + std::to_string(n);
            row.l = l;
            row.want = l;
            row.got = wfilt::weight_bo(std::size_t(n), poly::elementary_symmetric(l, std::size_t(n)));
            rep.rows.push_back(row);
        }
    }
    for (int n = 2; n <= nmax; ++n) {
        auto bso = rings::RingPresentation::bso(n);
        for (int l = 2; l <= n; ++l) {
            WeightRow row;
            row.group = "bso:" + std::to_string(n);
            row.l = l;
            if (n % 2 == 0 && l == n)
                row.want = n - 2;
            else
                row.want = l % 2 == 0 ? l : l - 2;
            row.got = wfilt::weight_bso(n, bso.gen("w" + std::to_string(l)));
            rep.rows.push_back(row);
        }
    }
    return rep;
}

bool QsoReport::all_pass() const {
    for (const auto& r : rows)
        if (!r.pass) return false;
    return true;
}

QsoReport qso_table(int nmax) {
    QsoReport rep;
    for (int n = 2; n <= nmax; ++n) {
        for (int l = 1; 2 * l <= n; ++l) {
            QsoRow row;
            row.n = n;
            row.l = l;
            WPoly w2l = WPoly::generator(std::size_t(n), std::size_t(2 * l - 1));
            WPoly got = milnor::apply_Q_so(0, w2l, std::size_t(n));
            if (2 * l + 1 <= n)
                row.pass = got == WPoly::generator(std::size_t(n), std::size_t(2 * l));
            else
                row.pass = got.is_zero();
            rep.rows.push_back(row);
        }
    }
    return rep;
}

TorsionSanityReport torsion_sanity(int m, int maxdeg) {
    TorsionSanityReport rep;
    rep.m = m;
    auto y = motivic::compute_Y(m, maxdeg);
    rep.twist_gap = true;
    for (int d = 0; d <= maxdeg; ++d)
        if (y.table.at(d, d - 1) != 0) rep.twist_gap = false;
    rep.tau_annihilates = motivic::TorsionModule::multiply_by_tau_dim() == 0;
    motivic::TorsionModule tm(m);
    rep.chern_only = false;
    try {
        tm.require_even_chern_multiplier(poly::Partition({3}));
    } catch (const std::domain_error&) {
        rep.chern_only = true;
    }
    if (rep.chern_only) {
        // even multipliers in range must be accepted
        try {
            tm.require_even_chern_multiplier(poly::Partition({2, 2 * m}));
        } catch (const std::domain_error&) {
            rep.chern_only = false;
        }
    }
    return rep;
}

bool WilsonRangeReport::all_pass() const {
    for (const auto& r : rows)
        if (!r.pass()) return false;
    return true;
}

WilsonRangeReport wilson_range(std::size_t n, int maxdeg, bool admissibility) {
    WilsonRangeReport rep;
    rep.n = n;
    rep.maxdeg = maxdeg;
    for (int d = 0; d <= maxdeg; ++d)
        rep.rows.push_back(wfilt::verify_wilson_decomposition(n, d, admissibility));
    return rep;
}

}  // namespace motso::verify
