#pragma once

#include <string>
#include <vector>

#include "motso/motivic.hpp"
#include "motso/weightfilt.hpp"

namespace motso::verify {

// Randomized Milnor-algebra law suite: derivation, Q_k Q_k = 0, commuting.
struct LawReport {
    int samples = 0;
    int failures = 0;
    unsigned seed = 0;
    bool pass() const { return samples > 0 && failures == 0; }
};

LawReport milnor_laws(int samples, unsigned seed, std::size_t nmax = 5, int degmax = 20,
                      int kmax = 3);

// Weight tables: w_l has weight l in BO_n (l <= n); in BSO_n even l gives l,
// odd l gives l - 2, and the top class of BSO_{2m} gives 2m - 2.
struct WeightRow {
    std::string group;
    int l = 0;
    int got = 0;
    int want = 0;
    bool pass() const { return got == want; }
};

struct WeightTableReport {
    std::vector<WeightRow> rows;
    bool all_pass() const;
};

WeightTableReport weight_tables(int nmax);

// Q_0 w_{2l} = w_{2l+1} in BSO_n with w_{n+1} = 0, exact polynomial equality.
struct QsoRow {
    int n = 0;
    int l = 0;
    bool pass = false;
};

struct QsoReport {
    std::vector<QsoRow> rows;
    bool all_pass() const;
};

QsoReport qso_table(int nmax);

// Torsion sanity for the computed kernel: nothing at twist = degree - 1,
// tau annihilation and the even-Chern-only module structure.
struct TorsionSanityReport {
    int m = 0;
    bool twist_gap = false;        // Y(d, d-1) = 0 for all d
    bool tau_annihilates = false;  // structural: tau multiplies to 0
    bool chern_only = false;       // non-even-Chern multipliers rejected
    bool pass() const { return twist_gap && tau_annihilates && chern_only; }
};

TorsionSanityReport torsion_sanity(int m, int maxdeg);

// Wilson decomposition over a degree range, with optional negative control.
struct WilsonRangeReport {
    std::size_t n = 0;
    int maxdeg = 0;
    std::vector<wfilt::WilsonReport> rows;
    bool all_pass() const;
};

WilsonRangeReport wilson_range(std::size_t n, int maxdeg, bool admissibility = true);

}  // namespace motso::verify
