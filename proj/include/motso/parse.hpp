#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "motso/poly.hpp"

namespace motso::parse {

// Grammar shared by the CLI and reports:
//   class  := '0' | term ('+' term)*
//   term   := factor ('*' factor)*
//   factor := symbol ('^' uint)?
//   symbol := 'x'uint | 'w'uint | 'm' '[' uint (',' uint)* ']' | '1'
// Whitespace-insensitive. Errors carry the offending position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// Parse into F2[x_1..x_n]; w_l expands to e_l and m[...] to the orbit sum.
poly::F2Polynomial parse_x_class(const std::string& text, std::size_t n);

// Parse a polynomial in named generators (e.g. {"w2","w3","w4"}); x_i and
// m[...] symbols are rejected. Returns slot exponents per the name list.
poly::WPoly parse_generator_class(const std::string& text, const std::vector<std::string>& gen_names);

// Printers; every emitted string re-parses to the same polynomial.
std::string print_x(const poly::F2Polynomial& p);
std::string print_monomial_basis(const poly::F2Polynomial& p);  // requires symmetric
std::string print_w(const poly::WPoly& p, const std::vector<std::string>& gen_names);

}  // namespace motso::parse
