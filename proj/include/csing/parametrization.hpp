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

#ifndef CSING_PARAMETRIZATION_HPP
#define CSING_PARAMETRIZATION_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "csing/projpoint.hpp"
#include "csing/subresultant.hpp"
#include "csing/unipoly.hpp"

namespace csing {

/// Rational parametrization in coprime projective form:
/// t -> (p_1(t) : ... : p_n(t) : p(t)), components[n] = p.
struct Parametrization {
    std::vector<UniPoly> components; // n+1 entries, gcd 1
    int ambient = 0;                 // n
    int d = 0;                       // max component degree

    const UniPoly& p() const { return components.back(); }
    const UniPoly& numerator(std::size_t i) const { return components[i]; }
};

/// One affine component given as a rational function num/den.
struct RatFun {
    UniPoly num;
    UniPoly den{Rational(1)};
};

struct PropernessResult {
    int tracing_index = 0;
    BiPoly G; // gcd of the difference polynomials; t - s for proper inputs
};

namespace detail {

/// Rank of the coefficient matrix of the components (rows = components).
inline int coefficient_rank(const std::vector<UniPoly>& comps) {
    int maxdeg = -1;
    for (const auto& c : comps) maxdeg = std::max(maxdeg, c.degree());
    if (maxdeg < 0) return 0;
    std::vector<std::vector<Rational>> m;
    for (const auto& c : comps) {
        std::vector<Rational> row(static_cast<std::size_t>(maxdeg) + 1, Rational(0));
        for (int i = 0; i <= c.degree(); ++i) row[static_cast<std::size_t>(i)] = c.coeff(static_cast<std::size_t>(i));
        m.push_back(std::move(row));
    }
    int rank = 0;
    std::size_t col = 0;
    const std::size_t rows = m.size(), cols = static_cast<std::size_t>(maxdeg) + 1;
    for (; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows; ++r) {
            if (!is_zero(m[r][col])) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows) continue;
        std::swap(m[static_cast<std::size_t>(rank)], m[pivot]);
        const auto& prow = m[static_cast<std::size_t>(rank)];
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows; ++r) {
            if (is_zero(m[r][col])) continue;
            Rational f = m[r][col] / prow[col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * prow[c];
        }
        ++rank;
    }
    return rank;
}

inline Parametrization finish_normalization(std::vector<UniPoly> comps) {
    bool all_zero = true;
    for (const auto& c : comps) all_zero = all_zero && is_zero(c);
    if (all_zero) throw ZeroParametrization();
    UniPoly g;
    for (const auto& c : comps) {
        g = poly_gcd(g, c);
        if (g.degree() == 0) break;
    }
    if (g.degree() > 0)
        for (auto& c : comps) c = exact_div(c, g);
    // a curve spans at least three independent coordinate functions;
    // rank <= 2 means the image is a line (or a single point)
    if (coefficient_rank(comps) <= 2) throw IsALine();
    Parametrization out;
    out.ambient = static_cast<int>(comps.size()) - 1;
    for (const auto& c : comps) out.d = std::max(out.d, c.degree());
    out.components = std::move(comps);
    return out;
}

} // namespace detail

/// Build a parametrization from affine components by clearing
/// denominators with their lcm and removing the common gcd.
inline Parametrization normalize_input(const std::vector<RatFun>& affine) {
    if (affine.size() < 2) throw ZeroParametrization();
    bool any = false;
    for (const auto& rf : affine) any = any || !is_zero(rf.num);
    if (!any) throw ZeroParametrization();
    std::vector<RatFun> red;
    for (const auto& rf : affine) {
        if (is_zero(rf.den)) throw DivisionByZero("zero denominator in input component");
        UniPoly g = poly_gcd(rf.num, rf.den);
        if (g.degree() > 0)
            red.push_back({exact_div(rf.num, g), exact_div(rf.den, g)});
        else
            red.push_back(rf);
    }
    UniPoly l(Rational(1));
    for (const auto& rf : red) l = poly_lcm(l, rf.den);
    std::vector<UniPoly> comps;
    for (const auto& rf : red) comps.push_back(rf.num * exact_div(l, rf.den));
    comps.push_back(l);
    return detail::finish_normalization(std::move(comps));
}

/// Build a parametrization from homogeneous components (last = p).
inline Parametrization normalize_input(std::vector<UniPoly> homogeneous) {
    if (homogeneous.size() < 3) throw ZeroParametrization();
    return detail::finish_normalization(std::move(homogeneous));
}

/// a(s)b(t) - b(s)a(t), as a polynomial in t over Q[s].
inline BiPoly cross_g(const UniPoly& a, const UniPoly& b) {
    std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    std::vector<UniPoly> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = a * b.coeff(k) - b * a.coeff(k);
    return BiPoly(std::move(v));
}

/// P_L = lim_{t->inf} P(t)/t^d: the vector of t^d coefficients.
inline ProjPoint limit_point(const Parametrization& P) {
    std::vector<Rational> v;
    for (const auto& c : P.components) v.push_back(c.coeff(static_cast<std::size_t>(P.d)));
    return ProjPoint(std::move(v));
}

/// Tracing index = t-degree of gcd of the difference polynomials; the
/// parametrization is proper exactly when this is 1 (then G = t - s).
inline PropernessResult tracing_index(const Parametrization& P) {
    BiPoly g;
    const UniPoly& p = P.p();
    for (int i = 0; i < P.ambient; ++i) {
        g = gcd_poly(g, cross_g(P.components[static_cast<std::size_t>(i)], p));
        if (g.degree() == 1) break;
    }
    return {g.degree(), std::move(g)};
}

inline bool is_proper(const Parametrization& P) { return tracing_index(P).tracing_index == 1; }

} // namespace csing

#endif
