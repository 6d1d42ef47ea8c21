#include "motso/milnor.hpp"

#include <stdexcept>

namespace motso::milnor {

using poly::ExponentVector;
using poly::F2Polynomial;
using poly::WPoly;

F2Polynomial apply_Q(int k, const F2Polynomial& p) {
    if (k < 0) throw std::invalid_argument("apply_Q: k must be nonnegative");
    const unsigned shift = (1u << (k + 1)) - 1;
    poly::detail::MonomialList out;
    for (const auto& m : p.monomials()) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] & 1) {
                ExponentVector b = m;
                unsigned e = unsigned(b[i]) + shift;
                if (e > 0xFFFF) throw std::overflow_error("apply_Q: exponent overflow");
                b[i] = poly::Exponent(e);
                out.push_back(std::move(b));
            }
        }
    }
    return F2Polynomial::from_monomials(p.nvars(), std::move(out));
}

F2Polynomial apply_Q_sequence(std::span<const int> ks, const F2Polynomial& p) {
    for (std::size_t i = 0; i + 1 < ks.size(); ++i)
        if (ks[i] >= ks[i + 1])
            throw std::invalid_argument("apply_Q_sequence: indices must be strictly increasing");
    F2Polynomial q = p;
    for (int k : ks) q = apply_Q(k, q);
    return q;
}

WPoly apply_Q_so(int k, const WPoly& p, std::size_t n) {
    if (p.ngens() != n) throw std::invalid_argument("apply_Q_so: slot count != n");
    for (const auto& m : p.monomials())
        if (n > 0 && m[0] != 0)
            throw std::invalid_argument("apply_Q_so: class not in the BSO presentation (has w_1)");
    F2Polynomial q = apply_Q(k, poly::expand_w(p, n));
    WPoly wq = poly::to_w_basis(q);
    poly::detail::MonomialList kept;
    for (const auto& m : wq.monomials())
        if (m[0] == 0) kept.push_back(m);
    return WPoly::from_monomials(n, std::move(kept));
}

std::optional<F2Polynomial> divide_by_e1(const F2Polynomial& p) {
    const std::size_t n = p.nvars();
    if (n == 0) return std::nullopt;
    const F2Polynomial e1 = poly::elementary_symmetric(1, n);
    F2Polynomial rest = p;
    poly::detail::MonomialList quot;
    while (!rest.is_zero()) {
        ExponentVector lead = rest.monomials().front();
        // lex-leading term of e_1 is x_1, so the lead must be divisible by x_1
        if (lead[0] == 0) return std::nullopt;
        lead[0] -= 1;
        quot.push_back(lead);
        rest += F2Polynomial::monomial(std::move(lead)) * e1;
    }
    return F2Polynomial::from_monomials(n, std::move(quot));
}

}  // namespace motso::milnor
