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

#ifndef CSING_UNIPOLY_HPP
#define CSING_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "csing/poly.hpp"

namespace csing {

/// Univariate polynomial over the rationals.
using UniPoly = Poly<Rational>;

/// Bivariate polynomial: outer variable t, coefficients in Q[s].
using BiPoly = Poly<UniPoly>;

inline UniPoly monic(const UniPoly& p) {
    if (is_zero(p)) return p;
    return p * (Rational(1) / p.lc());
}

/// Integer form of a rational polynomial: primitive integer coefficients
/// with positive leading coefficient; `scale` satisfies p = scale * z.
struct IntPoly {
    std::vector<Integer> coeffs; // lowest first, trimmed, primitive, lc > 0
    Rational scale;
};

inline IntPoly to_integer(const UniPoly& p) {
    IntPoly out;
    out.scale = Rational(1);
    if (is_zero(p)) return out;
    Integer den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        Integer d = c.get_den();
        Integer g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    std::vector<Integer> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(c.get_num() * (den_lcm / c.get_den()));
    Integer content = 0;
    for (const auto& c : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (v.back() < 0) content = -content;
    for (auto& c : v) c /= content;
    out.coeffs = std::move(v);
    out.scale = make_rational(content, den_lcm);
    return out;
}

inline UniPoly from_integer(const std::vector<Integer>& z) {
    std::vector<Rational> v;
    v.reserve(z.size());
    for (const auto& c : z) v.emplace_back(c);
    return UniPoly(std::move(v));
}

namespace detail {

inline int zdeg(const std::vector<Integer>& a) { return static_cast<int>(a.size()) - 1; }

inline void ztrim(std::vector<Integer>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<Integer> zmul_scalar(std::vector<Integer> a, const Integer& c) {
    for (auto& x : a) x *= c;
    return a;
}

/// Integer pseudo-remainder, multiplier lc(b)^(deg a - deg b + 1).
inline std::vector<Integer> zprem(std::vector<Integer> a, const std::vector<Integer>& b) {
    int e = zdeg(a) - zdeg(b) + 1;
    const Integer& lb = b.back();
    while (!a.empty() && zdeg(a) >= zdeg(b)) {
        Integer la = a.back();
        std::size_t k = static_cast<std::size_t>(zdeg(a) - zdeg(b));
        for (auto& x : a) x *= lb;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + k] -= la * b[i];
        ztrim(a);
        --e;
    }
    if (e > 0) {
        Integer m;
        mpz_pow_ui(m.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
        a = zmul_scalar(std::move(a), m);
    }
    return a;
}

inline std::vector<Integer> zprimitive(std::vector<Integer> a) {
    if (a.empty()) return a;
    Integer g = 0;
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (a.back() < 0) g = -g;
    for (auto& c : a) c /= g;
    return a;
}

} // namespace detail

/// Monic gcd over Q via the subresultant PRS on primitive integer forms.
inline UniPoly poly_gcd(const UniPoly& pa, const UniPoly& pb) {
    if (is_zero(pa) && is_zero(pb)) return UniPoly();
    if (is_zero(pa)) return monic(pb);
    if (is_zero(pb)) return monic(pa);
    std::vector<Integer> a = to_integer(pa).coeffs;
    std::vector<Integer> b = to_integer(pb).coeffs;
    if (detail::zdeg(a) < detail::zdeg(b)) std::swap(a, b);
    Integer g = 1, h = 1;
    while (true) {
        if (detail::zdeg(b) == 0) return UniPoly(Rational(1));
        int delta = detail::zdeg(a) - detail::zdeg(b);
        std::vector<Integer> r = detail::zprem(a, b);
        if (r.empty()) return monic(from_integer(detail::zprimitive(std::move(b))));
        a = std::move(b);
        Integer hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        Integer div = g * hd;
        for (auto& c : r) {
            Integer q, rem;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), div.get_mpz_t());
            c = q;
        }
        detail::ztrim(r);
        b = std::move(r);
        g = a.back();
        if (delta > 0) {
            Integer gd, hd1;
            mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            h = gd / hd1;
        }
    }
}

/// Quotient and remainder over Q.
inline std::pair<UniPoly, UniPoly> poly_divmod(const UniPoly& a, const UniPoly& b) {
    if (is_zero(b)) throw DivisionByZero("polynomial division by zero");
    UniPoly q, r = a;
    Rational linv = Rational(1) / b.lc();
    while (!is_zero(r) && r.degree() >= b.degree()) {
        std::size_t k = static_cast<std::size_t>(r.degree() - b.degree());
        Rational c = r.lc() * linv;
        q += UniPoly::monomial(c, k);
        r = r - b.shifted_scaled(c, k);
    }
    return {q, r};
}

inline UniPoly poly_rem(const UniPoly& a, const UniPoly& b) { return poly_divmod(a, b).second; }

inline UniPoly poly_lcm(const UniPoly& a, const UniPoly& b) {
    if (is_zero(a) || is_zero(b)) return UniPoly();
    return exact_div(a * b, poly_gcd(a, b));
}

/// Square-free decomposition (Yun): parts[i] = (factor, multiplicity),
/// factors monic, pairwise coprime; input = lc * prod factor^mult.
inline std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
    std::vector<std::pair<UniPoly, int>> parts;
    if (is_zero(p) || p.degree() == 0) return parts;
    UniPoly f = monic(p);
    UniPoly fp = f.derivative();
    UniPoly a = poly_gcd(f, fp);
    UniPoly b = exact_div(f, a);
    UniPoly c = exact_div(fp, a);
    UniPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UniPoly ai = poly_gcd(b, d);
        if (ai.degree() > 0) parts.emplace_back(ai, i);
        b = exact_div(b, ai);
        c = exact_div(d, ai);
        d = c - b.derivative();
        ++i;
    }
    return parts;
}

/// Deterministic total order used wherever polynomial output is sorted.
inline bool poly_less(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    }
    return false;
}

inline std::string to_string(const UniPoly& p, const std::string& var = "t") {
    if (is_zero(p)) return "0";
    std::string out;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(i);
        if (is_zero(c)) continue;
        bool neg = c < 0;
        Rational ac = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        bool unit_coeff = (ac == 1) && i > 0;
        if (!unit_coeff) out += to_string(ac);
        if (i > 0) {
            if (!unit_coeff) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace csing

#endif
