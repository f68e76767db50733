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

#ifndef CSING_IMPLICIT_HPP
#define CSING_IMPLICIT_HPP

#include <utility>
#include <vector>

#include "csing/parametrization.hpp"
#include "csing/sparsepoly.hpp"

namespace csing {

/// Implicit equation of a plane curve, affine variables x (index 0)
/// and y (index 1). Intended as an independent cross-check; it is slow
/// and only used on small inputs.
struct ImplicitCurve {
    SparsePoly F; // primitive integer coefficients, positive leading term
    int degree = 0;
};

/// Multiplicity data read off the implicit equation at a point: the
/// lowest non-vanishing Taylor form in local affine coordinates.
struct TangentCone {
    int multiplicity = 0;
    SparsePoly form; // the tangent cone, normalized like ImplicitCurve::F
};

namespace detail {

/// Scale to primitive integer coefficients with a positive leading
/// (graded-lex) coefficient.
inline SparsePoly normalize_sparse(const SparsePoly& p) {
    if (is_zero(p)) return p;
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& [e, c] : p.terms()) {
        Integer d = c.get_den(), g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    for (const auto& [e, c] : p.terms()) {
        Integer n = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rational scale = make_rational(den_lcm, num_gcd);
    if (p.leading().second < 0) scale = -scale;
    return p * scale;
}

} // namespace detail

/// Resultant implicitization: F is the factor of
/// Res_t(x p - p1, y p - p2) left after stripping the extraneous
/// leading-coefficient factors, verified to vanish on the curve.
inline ImplicitCurve implicitize(const Parametrization& P) {
    if (P.ambient != 2) throw InternalInconsistency("implicitization needs a plane curve");
    const UniPoly &p1 = P.components[0], &p2 = P.components[1], &p = P.p();
    const std::size_t d = static_cast<std::size_t>(P.d);
    SparsePoly x = SparsePoly::variable(0), y = SparsePoly::variable(1);

    std::vector<SparsePoly> av(d + 1), bv(d + 1);
    for (std::size_t k = 0; k <= d; ++k) {
        av[k] = x * p.coeff(k) - SparsePoly(p1.coeff(k));
        bv[k] = y * p.coeff(k) - SparsePoly(p2.coeff(k));
    }
    SparsePoly r = resultant(Poly<SparsePoly>(std::move(av)), Poly<SparsePoly>(std::move(bv)));

    // extraneous factors come from the t-leading coefficients dropping
    // for special (x, y); strip them while the resultant stays divisible
    for (const SparsePoly& lead : {x * p.coeff(d) - SparsePoly(p1.coeff(d)),
                                   y * p.coeff(d) - SparsePoly(p2.coeff(d))}) {
        if (lead.total_degree() == 0) continue;
        while (r.total_degree() > static_cast<unsigned long>(P.d)) {
            try {
                r = exact_div(r, lead);
            } catch (const NonZeroRemainder&) {
                break;
            }
        }
    }

    ImplicitCurve out;
    out.F = detail::normalize_sparse(r);
    out.degree = static_cast<int>(out.F.total_degree());
    if (out.degree != P.d)
        throw InternalInconsistency("implicit degree differs from the parametric degree");
    // F(p1/p, p2/p) = 0, cleared with the homogenizing power of p
    UniPoly sum;
    for (const auto& [e, c] : out.F.terms()) {
        unsigned i = e.empty() ? 0 : e[0];
        unsigned j = e.size() > 1 ? e[1] : 0;
        sum += p1.pow(i) * p2.pow(j) * p.pow(static_cast<unsigned>(P.d) - i - j) * c;
    }
    if (!is_zero(sum)) throw InternalInconsistency("implicit equation does not vanish on the curve");
    return out;
}

/// Multiplicity of Q on the implicit curve: order of the first
/// non-vanishing Taylor form of F at Q, in the affine chart of the last
/// nonzero coordinate.
inline TangentCone multiplicity_implicit(const ImplicitCurve& C, const ProjPoint& Q) {
    const auto& q = Q.coords();
    std::size_t chart = 2;
    while (is_zero(q[chart])) --chart;
    std::size_t i0 = chart == 0 ? 1 : 0;
    std::size_t i1 = chart == 2 ? 1 : 2;

    // dehomogenize W^d F(X/W, Y/W) into the chart, local vars (0, 1)
    SparsePoly g;
    for (const auto& [e, c] : C.F.terms()) {
        unsigned h[3];
        h[0] = e.empty() ? 0 : e[0];
        h[1] = e.size() > 1 ? e[1] : 0;
        h[2] = static_cast<unsigned>(C.degree) - h[0] - h[1];
        ExpVec le{h[i0], h[i1]};
        while (!le.empty() && le.back() == 0) le.pop_back();
        g.add_term(le, c);
    }

    // Taylor shift to the point in both local variables
    Rational a = q[i0] / q[chart], b = q[i1] / q[chart];
    BiPoly bp = to_bipoly(g).taylor_shift(UniPoly(b));
    std::vector<UniPoly> shifted;
    for (int j = 0; j <= bp.degree(); ++j)
        shifted.push_back(bp.coeff(static_cast<std::size_t>(j)).taylor_shift(a));
    SparsePoly local = from_bipoly(BiPoly(std::move(shifted)));

    if (is_zero(local)) throw InternalInconsistency("implicit equation vanished identically");
    unsigned long l = 0;
    for (unsigned e : local.terms().begin()->first) l += e; // lowest graded term
    SparsePoly form;
    for (const auto& [e, c] : local.terms()) {
        unsigned long t = 0;
        for (unsigned x : e) t += x;
        if (t == l) form.add_term(e, c);
    }
    return {static_cast<int>(l), detail::normalize_sparse(form)};
}

} // namespace csing

#endif
