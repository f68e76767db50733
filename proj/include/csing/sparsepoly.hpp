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

#ifndef CSING_SPARSEPOLY_HPP
#define CSING_SPARSEPOLY_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "csing/unipoly.hpp"

namespace csing {

/// Exponent vector, trailing zeros trimmed.
using ExpVec = std::vector<unsigned>;

/// Graded lexicographic order on trimmed exponent vectors.
struct GrLex {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        unsigned long ta = 0, tb = 0;
        for (unsigned e : a) ta += e;
        for (unsigned e : b) tb += e;
        if (ta != tb) return ta < tb;
        const std::size_t n = std::max(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            unsigned ea = i < a.size() ? a[i] : 0;
            unsigned eb = i < b.size() ? b[i] : 0;
            if (ea != eb) return ea < eb;
        }
        return false;
    }
};

/// Sparse multivariate polynomial over Q. Variables are identified by
/// index; the map key is the exponent vector of a term.
class SparsePoly {
public:
    using TermMap = std::map<ExpVec, Rational, GrLex>;

    SparsePoly() = default;
    explicit SparsePoly(const Rational& c) {
        if (!is_zero(c)) terms_.emplace(ExpVec{}, c);
    }
    explicit SparsePoly(long n) : SparsePoly(Rational(n)) {}

    static SparsePoly variable(std::size_t i) {
        return term(Rational(1), ExpVec(i + 1, 0u), i);
    }

    static SparsePoly term(const Rational& c, ExpVec e, std::size_t set_var = SIZE_MAX) {
        SparsePoly p;
        if (set_var != SIZE_MAX) e[set_var] = 1;
        while (!e.empty() && e.back() == 0) e.pop_back();
        if (!is_zero(c)) p.terms_.emplace(std::move(e), c);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Leading term in graded-lex order; polynomial must be nonzero.
    const std::pair<const ExpVec, Rational>& leading() const { return *terms_.rbegin(); }

    unsigned long total_degree() const {
        if (terms_.empty()) return 0;
        unsigned long t = 0;
        for (unsigned e : leading().first) t += e;
        return t;
    }

    unsigned degree_in(std::size_t var) const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_)
            if (var < e.size()) d = std::max(d, e[var]);
        return d;
    }

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, Rational(-c));
        return r;
    }

    SparsePoly operator-() const {
        SparsePoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, Rational(-c));
        return r;
    }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(exp_mul(ea, eb), ca * cb);
        return r;
    }

    friend SparsePoly operator*(const SparsePoly& a, const Rational& s) {
        SparsePoly r;
        if (is_zero(s)) return r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, c * s);
        return r;
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

    SparsePoly& operator+=(const SparsePoly& o) { return *this = *this + o; }
    SparsePoly& operator-=(const SparsePoly& o) { return *this = *this - o; }
    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

    static ExpVec exp_mul(const ExpVec& a, const ExpVec& b) {
        ExpVec r(std::max(a.size(), b.size()), 0u);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
        return r;
    }

    /// a / b componentwise; false when not divisible.
    static bool exp_div(const ExpVec& a, const ExpVec& b, ExpVec& out) {
        if (b.size() > a.size()) return false;
        out.assign(a.begin(), a.end());
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (a[i] < b[i]) return false;
            out[i] = a[i] - b[i];
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return true;
    }

    void add_term(const ExpVec& e, const Rational& c) {
        if (is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

private:
    TermMap terms_;
};

inline bool is_zero(const SparsePoly& p) { return p.empty(); }

/// Exact division; the single-divisor division algorithm leaves a zero
/// remainder exactly when b divides a, so a nonzero remainder throws.
inline SparsePoly exact_div(const SparsePoly& a, const SparsePoly& b) {
    if (is_zero(b)) throw DivisionByZero("sparse polynomial division by zero");
    SparsePoly q, r = a;
    const auto& [eb, cb] = b.leading();
    while (!is_zero(r)) {
        const auto& [er, cr] = r.leading();
        ExpVec eq;
        if (!SparsePoly::exp_div(er, eb, eq)) throw NonZeroRemainder("inexact sparse division");
        SparsePoly t = SparsePoly::term(exact_div(cr, cb), std::move(eq));
        q += t;
        r -= t * b;
    }
    return q;
}

/// Embed a univariate polynomial as a sparse polynomial in variable var.
inline SparsePoly embed(const UniPoly& p, std::size_t var) {
    SparsePoly r;
    for (int i = 0; i <= p.degree(); ++i) {
        if (is_zero(p.coeff(static_cast<std::size_t>(i)))) continue;
        ExpVec e;
        if (i > 0) {
            e.assign(var + 1, 0u);
            e[var] = static_cast<unsigned>(i);
        }
        r.add_term(e, p.coeff(static_cast<std::size_t>(i)));
    }
    return r;
}

/// View p as a polynomial in the variables of index >= 1 whose
/// coefficients live in Q[x0]: map from the exponent part in those
/// variables (trimmed, first entry is variable 1) to the coefficient.
inline std::map<ExpVec, UniPoly, GrLex> group_by_upper(const SparsePoly& p) {
    std::map<ExpVec, UniPoly, GrLex> out;
    for (const auto& [e, c] : p.terms()) {
        ExpVec upper(e.begin() + (e.empty() ? 0 : 1), e.end());
        unsigned d0 = e.empty() ? 0 : e[0];
        auto [it, inserted] = out.emplace(std::move(upper), UniPoly());
        it->second += UniPoly::monomial(c, d0);
    }
    return out;
}

/// Monic gcd of the Q[x0]-coefficients of p with respect to the
/// variables of index >= 1.
inline UniPoly content_in_x0(const SparsePoly& p) {
    UniPoly g;
    for (const auto& [e, coeff] : group_by_upper(p)) {
        g = poly_gcd(g, coeff);
        if (g.degree() == 0) break;
    }
    return g;
}

/// Dense bivariate view of a two-variable sparse polynomial:
/// outer variable 1, inner variable 0.
inline BiPoly to_bipoly(const SparsePoly& p) {
    std::vector<UniPoly> v(p.degree_in(1) + 1);
    for (const auto& [e, c] : p.terms()) {
        unsigned d0 = e.empty() ? 0 : e[0];
        unsigned d1 = e.size() > 1 ? e[1] : 0;
        v[d1] += UniPoly::monomial(c, d0);
    }
    return BiPoly(std::move(v));
}

inline SparsePoly from_bipoly(const BiPoly& p) {
    SparsePoly r;
    for (int j = 0; j <= p.degree(); ++j) {
        const UniPoly& cj = p.coeff(static_cast<std::size_t>(j));
        for (int i = 0; i <= cj.degree(); ++i) {
            ExpVec e{static_cast<unsigned>(i), static_cast<unsigned>(j)};
            while (!e.empty() && e.back() == 0) e.pop_back();
            r.add_term(e, cj.coeff(static_cast<std::size_t>(i)));
        }
    }
    return r;
}

inline std::string to_string(const SparsePoly& p, const std::vector<std::string>& vars) {
    if (is_zero(p)) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        bool neg = c < 0;
        Rational ac = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        bool has_var = false;
        for (unsigned x : e) has_var = has_var || x > 0;
        if (ac != 1 || !has_var) out += to_string(ac);
        bool printed = ac != 1 || !has_var;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) out += "*";
            out += i < vars.size() ? vars[i] : "x" + std::to_string(i);
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
            printed = true;
        }
    }
    return out;
}

} // namespace csing

#endif
