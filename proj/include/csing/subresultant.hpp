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

#ifndef CSING_SUBRESULTANT_HPP
#define CSING_SUBRESULTANT_HPP

#include <utility>

#include "csing/poly.hpp"
#include "csing/unipoly.hpp"

namespace csing {

/// Resultant of a and b with respect to the outer variable, computed
/// fraction-free by the subresultant PRS. R only needs ring operations
/// and exact division; equals the Sylvester-matrix determinant.
template <class R>
R resultant(Poly<R> a, Poly<R> b) {
    if (is_zero(a) || is_zero(b)) return R(0);
    int sign = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() % 2) == 1 && (b.degree() % 2) == 1) sign = -sign;
    }
    if (b.degree() == 0) {
        R res = ring_pow(b.lc(), static_cast<unsigned>(a.degree()));
        return sign > 0 ? res : R(0) - res;
    }
    R g(1), h(1);
    while (true) {
        int da = a.degree(), db = b.degree();
        int delta = da - db;
        if ((da % 2) == 1 && (db % 2) == 1) sign = -sign;
        Poly<R> rem = prem(a, b);
        a = std::move(b);
        R divisor = g * ring_pow(h, static_cast<unsigned>(delta));
        if (is_zero(rem)) return R(0);
        std::vector<R> rc = rem.coeffs();
        for (auto& c : rc) c = exact_div(c, divisor);
        b = Poly<R>(std::move(rc));
        if (is_zero(b)) return R(0);
        g = a.lc();
        if (delta > 0)
            h = exact_div(ring_pow(g, static_cast<unsigned>(delta)),
                          ring_pow(h, static_cast<unsigned>(delta - 1)));
        if (b.degree() == 0) {
            unsigned dA = static_cast<unsigned>(a.degree());
            R num = ring_pow(b.lc(), dA);
            R res = exact_div(num, ring_pow(h, dA - 1));
            return sign > 0 ? res : R(0) - res;
        }
    }
}

/// Scalar division of every coefficient.
template <class R>
Poly<R> coeff_div(const Poly<R>& p, const R& c) {
    std::vector<R> v = p.coeffs();
    for (auto& x : v) x = exact_div(x, c);
    return Poly<R>(std::move(v));
}

inline UniPoly gcd_r(const UniPoly& a, const UniPoly& b) { return poly_gcd(a, b); }

template <class R>
R content(const Poly<R>& p) {
    R c(0);
    for (const auto& x : p.coeffs()) c = gcd_r(c, x);
    return c;
}

/// Leading rational constant, through however many polynomial layers.
inline Rational leading_unit(const Rational& q) { return q; }

template <class R>
Rational leading_unit(const Poly<R>& p) {
    if (is_zero(p)) return Rational(1);
    return leading_unit(p.lc());
}

/// Gcd in R[x] for coefficient rings that themselves have gcds (used with
/// R = Q[s] for bivariate gcds). Result is primitive and normalized so its
/// innermost leading coefficient is 1.
template <class R>
Poly<R> gcd_poly(Poly<R> a, Poly<R> b) {
    if (is_zero(a) && is_zero(b)) return Poly<R>();
    auto finish = [](Poly<R> p) {
        if (is_zero(p)) return p;
        Rational inv = Rational(1) / leading_unit(p);
        std::vector<R> v = p.coeffs();
        for (auto& c : v) c = c * inv;
        return Poly<R>(std::move(v));
    };
    if (is_zero(a)) return finish(std::move(b));
    if (is_zero(b)) return finish(std::move(a));
    R ca = content(a), cb = content(b);
    R cg = gcd_r(ca, cb);
    a = coeff_div(a, ca);
    b = coeff_div(b, cb);
    if (a.degree() < b.degree()) std::swap(a, b);
    R g(1), h(1);
    Poly<R> last = b;
    while (true) {
        if (b.degree() == 0) {
            return finish(Poly<R>(cg));
        }
        int delta = a.degree() - b.degree();
        Poly<R> rem = prem(a, b);
        if (is_zero(rem)) {
            last = b;
            break;
        }
        a = std::move(b);
        R divisor = g * ring_pow(h, static_cast<unsigned>(delta));
        std::vector<R> rc = rem.coeffs();
        for (auto& c : rc) c = exact_div(c, divisor);
        b = Poly<R>(std::move(rc));
        g = a.lc();
        if (delta > 0)
            h = exact_div(ring_pow(g, static_cast<unsigned>(delta)),
                          ring_pow(h, static_cast<unsigned>(delta - 1)));
    }
    last = coeff_div(last, content(last));
    std::vector<R> v = last.coeffs();
    for (auto& c : v) c = c * cg;
    return finish(Poly<R>(std::move(v)));
}

} // namespace csing

#endif
