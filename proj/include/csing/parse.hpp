/*
   Copyright 2026 The csing authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CSING_PARSE_HPP
#define CSING_PARSE_HPP

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "csing/parametrization.hpp"

namespace csing {

namespace detail {

/// Recursive-descent parser for polynomial expressions in one
/// variable. Division is allowed anywhere, so values are carried as
/// rational functions.
///
/// expr   := term (('+' | '-') term)*
/// term   := unary (('*' | '/') unary)*
/// unary  := '-' unary | power
/// power  := atom ('^' integer)*
/// atom   := integer | variable | '(' expr ')'
class ExprParser {
public:
    explicit ExprParser(const std::string& text) : text_(text) {}

    RatFun parse() {
        RatFun v = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return v;
    }

private:
    RatFun expr() {
        RatFun v = term();
        while (true) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                v = add(v, term());
            } else if (peek() == '-') {
                ++pos_;
                v = add(v, neg(term()));
            } else {
                return v;
            }
        }
    }

    RatFun term() {
        RatFun v = unary();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                v = mul(v, unary());
            } else if (peek() == '/') {
                std::size_t at = pos_++;
                RatFun d = unary();
                if (is_zero(d.num)) throw ParseError("division by zero", at);
                v = mul(v, RatFun{d.den, d.num});
            } else {
                return v;
            }
        }
    }

    RatFun unary() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return neg(unary());
        }
        return power();
    }

    RatFun power() {
        RatFun base = atom();
        skip_ws();
        while (peek() == '^') {
            std::size_t at = ++pos_;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("exponent must be a nonnegative integer", at);
            unsigned long e = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                e = e * 10 + static_cast<unsigned long>(peek() - '0');
                if (e > 1000) throw ParseError("exponent too large", at);
                ++pos_;
            }
            base = RatFun{base.num.pow(static_cast<unsigned>(e)),
                          base.den.pow(static_cast<unsigned>(e))};
            skip_ws();
        }
        return base;
    }

    RatFun atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            std::size_t at = pos_++;
            RatFun v = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("unbalanced parenthesis", at);
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
            return {UniPoly(Rational(Integer(digits))), UniPoly(Rational(1))};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = pos_;
            std::string name;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
                name += text_[pos_++];
            if (variable_.empty()) variable_ = name;
            if (name != variable_)
                throw ParseError("unexpected second variable '" + name + "'", at);
            return {UniPoly::variable(), UniPoly(Rational(1))};
        }
        throw ParseError(c == '\0' ? "unexpected end of input"
                                   : std::string("unexpected character '") + c + "'",
                         pos_);
    }

    static RatFun add(const RatFun& a, const RatFun& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    static RatFun mul(const RatFun& a, const RatFun& b) { return {a.num * b.num, a.den * b.den}; }
    static RatFun neg(const RatFun& a) { return {a.num * Rational(-1), a.den}; }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    std::string variable_;
};

} // namespace detail

/// Parse a rational-function expression in one variable.
inline RatFun parse_ratfun(const std::string& text) { return detail::ExprParser(text).parse(); }

/// Parse a polynomial expression; constant denominators are folded in.
inline UniPoly parse_poly(const std::string& text) {
    RatFun v = parse_ratfun(text);
    if (v.den.degree() > 0) {
        UniPoly g = poly_gcd(v.num, v.den);
        UniPoly num = exact_div(v.num, g), den = exact_div(v.den, g);
        if (den.degree() > 0) throw ParseError("expression is not a polynomial", 0);
        return num * (Rational(1) / den.coeff(0));
    }
    return v.num * (Rational(1) / v.den.coeff(0));
}

/// Parse a parenthesized comma-separated tuple of components.
inline std::vector<RatFun> parse_tuple(const std::string& text) {
    std::size_t i = 0, n = text.size();
    auto skip = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i >= n || text[i] != '(') throw ParseError("expected '(' opening the tuple", i);
    std::size_t open = i++;
    std::vector<RatFun> out;
    std::string piece;
    int depth = 0;
    for (; i < n; ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        if (c == ')') {
            if (depth == 0) {
                out.push_back(parse_ratfun(piece));
                ++i;
                skip();
                if (i != n) throw ParseError("unexpected trailing input", i);
                return out;
            }
            --depth;
        }
        if (c == ',' && depth == 0) {
            out.push_back(parse_ratfun(piece));
            piece.clear();
        } else {
            piece += c;
        }
    }
    throw ParseError("unbalanced parenthesis", open);
}

} // namespace csing

#endif
