#include "motso/parse.hpp"

#include <algorithm>
#include <cctype>

namespace motso::parse {

using poly::ExponentVector;
using poly::F2Polynomial;
using poly::Partition;
using poly::WPoly;

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", i);
    }
    unsigned read_uint() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("expected a number", i);
        unsigned v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + unsigned(s[i] - '0');
            if (v > 100000) throw ParseError("number too large", i);
            ++i;
        }
        return v;
    }
};

// Factor kinds shared by both parse targets.
struct Factor {
    enum Kind { One, X, W, M } kind = One;
    unsigned index = 0;          // for X/W
    std::vector<int> partition;  // for M
    unsigned exponent = 1;
};

Factor read_factor(Cursor& cur) {
    Factor f;
    std::size_t start = cur.i;
    char c = cur.peek();
    if (c == '1') {
        cur.accept('1');
        f.kind = Factor::One;
    } else if (c == 'x' || c == 'w') {
        ++cur.i;
        f.kind = (c == 'x') ? Factor::X : Factor::W;
        bool has_digit = cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]));
        if (c == 'x' && !has_digit) {
            f.index = 0;  // bare exterior generator "x"
        } else {
            f.index = cur.read_uint();
            if (f.index == 0) throw ParseError("index must be >= 1", start);
        }
    } else if (c == 'm') {
        ++cur.i;
        f.kind = Factor::M;
        cur.expect('[');
        f.partition.push_back(int(cur.read_uint()));
        while (cur.accept(',')) f.partition.push_back(int(cur.read_uint()));
        cur.expect(']');
    } else {
        throw ParseError("expected a factor (x<i>, w<i>, m[..] or 1)", cur.i);
    }
    if (cur.accept('^')) f.exponent = cur.read_uint();
    return f;
}

std::vector<std::vector<Factor>> read_terms(Cursor& cur) {
    std::vector<std::vector<Factor>> terms;
    if (cur.peek() == '0') {
        cur.accept('0');
        if (!cur.eof()) throw ParseError("unexpected input after '0'", cur.i);
        return terms;
    }
    do {
        std::vector<Factor> fs;
        fs.push_back(read_factor(cur));
        while (cur.accept('*')) fs.push_back(read_factor(cur));
        terms.push_back(std::move(fs));
    } while (cur.accept('+'));
    if (!cur.eof()) throw ParseError("unexpected trailing input", cur.i);
    return terms;
}

}  // namespace

F2Polynomial parse_x_class(const std::string& text, std::size_t n) {
    Cursor cur{text};
    auto terms = read_terms(cur);
    F2Polynomial out(n);
    for (const auto& fs : terms) {
        F2Polynomial term = F2Polynomial::one(n);
        for (const auto& f : fs) {
            F2Polynomial base(n);
            switch (f.kind) {
                case Factor::One: base = F2Polynomial::one(n); break;
                case Factor::X:
                    if (f.index == 0) throw ParseError("bare 'x' needs an index here", 0);
                    if (f.index > n) throw ParseError("variable index exceeds ambient n", 0);
                    base = F2Polynomial::variable(n, f.index - 1);
                    break;
                case Factor::W:
                    if (f.index > n) throw ParseError("w index exceeds ambient n", 0);
                    base = poly::elementary_symmetric(int(f.index), n);
                    break;
                case Factor::M: {
                    Partition lambda(f.partition);
                    if (lambda.length() > n)
                        throw ParseError("partition longer than ambient n", 0);
                    base = poly::monomial_symmetric(lambda, n);
                    break;
                }
            }
            term = term * base.pow(f.exponent);
        }
        out += term;
    }
    return out;
}

WPoly parse_generator_class(const std::string& text, const std::vector<std::string>& gen_names) {
    Cursor cur{text};
    auto terms = read_terms(cur);
    const std::size_t g = gen_names.size();
    WPoly out(g);
    for (const auto& fs : terms) {
        WPoly term = WPoly::one(g);
        for (const auto& f : fs) {
            std::string name;
            switch (f.kind) {
                case Factor::One: break;
                case Factor::X:  // exterior slot when bare, otherwise unknown here
                    name = f.index == 0 ? "x" : "x" + std::to_string(f.index);
                    break;
                case Factor::W: name = "w" + std::to_string(f.index); break;
                case Factor::M: throw ParseError("m[..] not valid in this presentation", 0);
            }
            if (f.kind == Factor::One) continue;
            auto it = std::find(gen_names.begin(), gen_names.end(), name);
            if (it == gen_names.end())
                throw ParseError("generator '" + name + "' not in this presentation", 0);
            term = term * WPoly::generator(g, std::size_t(it - gen_names.begin()), f.exponent);
        }
        out += term;
    }
    return out;
}

std::string print_x(const F2Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& m : p.monomials()) {
        if (!s.empty()) s += " + ";
        bool unit = true;
        std::string t;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (!t.empty()) t += "*";
            t += "x" + std::to_string(i + 1);
            if (m[i] > 1) t += "^" + std::to_string(m[i]);
            unit = false;
        }
        s += unit ? "1" : t;
    }
    return s;
}

std::string print_monomial_basis(const F2Polynomial& p) {
    if (p.is_zero()) return "0";
    auto lambdas = poly::to_monomial_basis(p);
    std::string s;
    for (const auto& l : lambdas) {
        if (!s.empty()) s += " + ";
        if (l.length() == 0) {
            s += "1";
            continue;
        }
        s += "m[";
        for (std::size_t i = 0; i < l.length(); ++i) {
            if (i) s += ",";
            s += std::to_string(l.part(i));
        }
        s += "]";
    }
    return s;
}

std::string print_w(const WPoly& p, const std::vector<std::string>& gen_names) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& m : p.monomials()) {
        if (!s.empty()) s += " + ";
        bool unit = true;
        std::string t;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (!t.empty()) t += "*";
            t += gen_names[i];
            if (m[i] > 1) t += "^" + std::to_string(m[i]);
            unit = false;
        }
        s += unit ? "1" : t;
    }
    return s;
}

}  // namespace motso::parse
