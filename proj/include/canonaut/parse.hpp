#pragma once

#include <cctype>
#include <string_view>

#include "canonaut/errors.hpp"
#include "canonaut/wpoly.hpp"

namespace canonaut {

// Recursive-descent parser for the equation grammar:
//   poly   := [sign] term (('+'|'-') term)*
//   term   := coeff ['*'] vars | coeff | vars
//   coeff  := int | int '/' int | '(' complex ')'
//   vars   := var ['^' int] (['*'] var ['^' int])*
// Whitespace is insignificant; variables are x, y, z, w.
class EquationParser {
public:
    explicit EquationParser(std::string_view src) : src_(src) {}

    WPolynomial parse() {
        WPolynomial poly;
        skip_ws();
        if (done()) throw parse_error("empty input", pos_);
        int sign = 1;
        if (peek() == '+' || peek() == '-') sign = consume() == '-' ? -1 : 1;

        for (;;) {
            auto [coef, mono] = parse_term();
            poly.add_term(mono, sign < 0 ? -coef : coef);
            skip_ws();
            if (done()) break;
            char op = peek();
            if (op != '+' && op != '-')
                throw parse_error("expected '+' or '-' between terms", pos_);
            consume();
            sign = op == '-' ? -1 : 1;
            skip_ws();
            if (done()) throw parse_error("dangling operator", pos_);
        }
        return poly;
    }

private:
    std::pair<GaussianRational, Monomial> parse_term() {
        skip_ws();
        GaussianRational coef(1);
        bool have_coef = false;

        if (!done() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '(')) {
            coef = parse_coefficient();
            have_coef = true;
            skip_ws();
            if (!done() && peek() == '*') {
                consume();
                skip_ws();
                if (done() || !is_variable(peek()))
                    throw parse_error("expected variable after '*'", pos_);
            }
        }

        Monomial mono;
        bool have_vars = false;
        for (;;) {
            skip_ws();
            if (done()) break;
            char c = peek();
            if (std::isalpha(static_cast<unsigned char>(c))) {
                if (!is_variable(c))
                    throw parse_error(std::string("unknown variable '") + c + "'", pos_);
                consume();
                int e = 1;
                skip_ws();
                if (!done() && peek() == '^') {
                    consume();
                    skip_ws();
                    if (!done() && peek() == '-')
                        throw parse_error("negative exponent", pos_);
                    e = static_cast<int>(parse_integer("exponent"));
                }
                switch (c) {
                    case 'x': mono.ex += e; break;
                    case 'y': mono.ey += e; break;
                    case 'z': mono.ez += e; break;
                    case 'w': mono.ew += e; break;
                }
                have_vars = true;
            } else if (c == '*') {
                consume();
                skip_ws();
                if (done() || !std::isalpha(static_cast<unsigned char>(peek())))
                    throw parse_error("expected variable after '*'", pos_);
            } else {
                break;
            }
        }

        if (!have_coef && !have_vars)
            throw parse_error("expected a term", pos_);
        return {coef, mono};
    }

    GaussianRational parse_coefficient() {
        if (peek() == '(') return parse_complex();
        return GaussianRational(parse_rational());
    }

    // "(a+bi)", "(a-bi)", "(bi)", "(i)", "(-i)", "(a)" with rational a, b.
    GaussianRational parse_complex() {
        consume(); // '('
        skip_ws();
        Rational re(0), im(0);

        int s1 = 1;
        if (!done() && (peek() == '+' || peek() == '-')) s1 = consume() == '-' ? -1 : 1;
        skip_ws();

        bool first_imag = false;
        Rational r1(1);
        if (!done() && peek() == 'i') {
            consume();
            first_imag = true;
        } else {
            r1 = parse_rational();
            skip_ws();
            if (!done() && peek() == 'i') {
                consume();
                first_imag = true;
            }
        }
        if (first_imag)
            im = s1 < 0 ? -r1 : r1;
        else
            re = s1 < 0 ? -r1 : r1;

        skip_ws();
        if (!done() && (peek() == '+' || peek() == '-')) {
            if (first_imag)
                throw parse_error("real part must precede imaginary part", pos_);
            int s2 = consume() == '-' ? -1 : 1;
            skip_ws();
            Rational r2(1);
            if (!done() && peek() != 'i') r2 = parse_rational();
            skip_ws();
            if (done() || peek() != 'i')
                throw parse_error("expected 'i' in complex literal", pos_);
            consume();
            im = s2 < 0 ? -r2 : r2;
            skip_ws();
        }
        if (done() || peek() != ')')
            throw parse_error("expected ')' closing complex literal", pos_);
        consume();
        return {re, im};
    }

    Rational parse_rational() {
        std::int64_t num = parse_integer("number");
        skip_ws();
        if (!done() && peek() == '/') {
            consume();
            skip_ws();
            std::int64_t den = parse_integer("denominator");
            if (den == 0) throw parse_error("zero denominator", pos_);
            return {num, den};
        }
        return {num};
    }

    std::int64_t parse_integer(const char* what) {
        skip_ws();
        if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw parse_error(std::string("expected ") + what, pos_);
        std::int64_t v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            int d = consume() - '0';
            if (v > (INT64_MAX - d) / 10)
                throw parse_error("integer literal too large", pos_);
            v = v * 10 + d;
        }
        return v;
    }

    static bool is_variable(char c) { return c == 'x' || c == 'y' || c == 'z' || c == 'w'; }

    bool done() const { return pos_ >= src_.size(); }
    char peek() const { return src_[pos_]; }
    char consume() { return src_[pos_++]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

inline WPolynomial parse_polynomial(std::string_view text) {
    return EquationParser(text).parse();
}

} // namespace canonaut
