#include "hecke/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace hecke {

namespace {

class Parser {
public:
    Parser(const std::string& text, int nvars) : text_(text), n_(nvars) {}

    LaurentPoly parse() {
        LaurentPoly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    long parse_int() {
        skip_ws();
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected integer");
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return neg ? -value : value;
    }

    LaurentPoly parse_expr() {
        bool neg = false;
        if (peek() == '-') {
            eat('-');
            neg = true;
        } else if (peek() == '+') {
            eat('+');
        }
        LaurentPoly acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            const char c = peek();
            if (c == '+') {
                eat('+');
                acc += parse_term();
            } else if (c == '-') {
                eat('-');
                acc -= parse_term();
            } else {
                return acc;
            }
        }
    }

    LaurentPoly parse_term() {
        LaurentPoly acc = parse_factor();
        while (peek() == '*') {
            eat('*');
            acc = acc * parse_factor();
        }
        return acc;
    }

    LaurentPoly parse_factor() {
        LaurentPoly base = parse_atom();
        if (peek() == '^') {
            eat('^');
            const long k = parse_int();
            return poly_pow(base, k);
        }
        return base;
    }

    LaurentPoly poly_pow(const LaurentPoly& base, long k) {
        if (k == 0) return LaurentPoly(n_, Coefficient(1));
        if (k < 0) {
            // Only units (single-term polynomials with unit coefficient)
            // have negative powers in the Laurent ring.
            if (base.terms().size() != 1) fail("negative power of a non-monomial");
            const auto& [e, c] = *base.terms().begin();
            if (!c.is_monomial()) fail("negative power of a non-unit coefficient");
            std::vector<int> e2(e.size());
            LaurentPoly inv(n_);
            for (size_t i = 0; i < e.size(); ++i) e2[i] = -e[i];
            inv.add_term(e2, c.unit_inverse());
            return poly_pow(inv, -k);
        }
        LaurentPoly acc(n_, Coefficient(1));
        for (long i = 0; i < k; ++i) acc = acc * base;
        return acc;
    }

    LaurentPoly parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            LaurentPoly inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'v') {
            ++pos_;
            return LaurentPoly(n_, Coefficient::v_pow(1));
        }
        if (c == 'X') {
            ++pos_;
            int idx = 1;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                idx = 0;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    idx = idx * 10 + (text_[pos_] - '0');
                    ++pos_;
                }
            } else if (n_ != 1) {
                fail("bare X is only allowed with one variable");
            }
            if (idx < 1 || idx > n_) fail("variable index out of range");
            return LaurentPoly::x_pow(n_, idx, 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const long num = parse_int();
            Rational value(num);
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                const long den = parse_int();
                if (den == 0) fail("zero denominator");
                value = Rational(num, den);
                value.canonicalize();
            }
            return LaurentPoly(n_, Coefficient(value));
        }
        fail("unexpected character");
    }

    const std::string& text_;
    int n_;
    size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(const std::string& text, int nvars) { return Parser(text, nvars).parse(); }

Coefficient parse_coeff(const std::string& text) {
    LaurentPoly p = Parser(text, 0).parse();
    return p.constant_term();
}

}  // namespace hecke
