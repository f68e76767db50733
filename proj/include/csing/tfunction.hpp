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

#ifndef CSING_TFUNCTION_HPP
#define CSING_TFUNCTION_HPP

#include <array>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "csing/parametrization.hpp"
#include "csing/sparsepoly.hpp"

namespace csing {

struct GPolys {
    BiPoly G1, G2, G3;
    BiPoly Gstar1, Gstar2, Gstar3;
};

/// T-function of a plane parametrization together with all the
/// intermediate data the construction produces.
struct TFunctionResult {
    UniPoly T;              // monic
    Rational unit{1};       // T * unit reproduces the raw quotient
    GPolys g;
    std::array<int, 3> delta{};                       // deg_t(G_i)
    int lambda12 = 0, lambda13 = 0, lambda23 = 0;     // min of the deltas
    UniPoly R12, R13, R23;
};

/// Symbolic-Z projection of a space curve to the plane, with the
/// extracted T-function.
struct SpaceProjection {
    Parametrization original;
    std::optional<std::vector<Rational>> applied_transform; // lambda_1..lambda_n
    std::vector<UniPoly> working; // components after any transform
    SparsePoly That;              // T-hat in (s, Z_1, ..., Z_{n-2})
    UniPoly TE;                   // monic Z-content of That
    SparsePoly L;                 // discarded Z-cofactor, That = unit * TE * L
    std::array<int, 3> delta{};
    int lambda12 = 0, lambda13 = 0, lambda23 = 0;
};

inline GPolys g_polys(const Parametrization& P) {
    GPolys g;
    const UniPoly &p1 = P.components[0], &p2 = P.components[1], &p = P.p();
    g.G1 = cross_g(p1, p);
    g.G2 = cross_g(p2, p);
    g.G3 = cross_g(p1, p2);
    UniPoly s = UniPoly::variable();
    BiPoly tminuss(std::vector<UniPoly>{-s, UniPoly(1l)});
    g.Gstar1 = exact_div(g.G1, tminuss);
    g.Gstar2 = exact_div(g.G2, tminuss);
    g.Gstar3 = exact_div(g.G3, tminuss);
    return g;
}

namespace detail {

inline UniPoly quotient_form(const UniPoly& r, const UniPoly& den, int lambda) {
    if (lambda <= 1) return r;
    return exact_div(r, den.pow(static_cast<unsigned>(lambda - 1)));
}

} // namespace detail

/// T(s) = Res_t(G1*, G2*) / p(s)^(lambda12 - 1), cross-checked against
/// the two equivalent quotient forms.
inline TFunctionResult t_function(const Parametrization& P) {
    TFunctionResult out;
    out.g = g_polys(P);
    out.delta = {out.g.G1.degree(), out.g.G2.degree(), out.g.G3.degree()};
    out.lambda12 = std::min(out.delta[0], out.delta[1]);
    out.lambda13 = std::min(out.delta[0], out.delta[2]);
    out.lambda23 = std::min(out.delta[1], out.delta[2]);
    out.R12 = resultant(out.g.Gstar1, out.g.Gstar2);
    out.R13 = resultant(out.g.Gstar1, out.g.Gstar3);
    out.R23 = resultant(out.g.Gstar2, out.g.Gstar3);

    UniPoly t12 = detail::quotient_form(out.R12, P.p(), out.lambda12);
    UniPoly t13 = detail::quotient_form(out.R13, P.components[0], out.lambda13);
    UniPoly t23 = detail::quotient_form(out.R23, P.components[1], out.lambda23);
    if (is_zero(t12) || is_zero(t13) || is_zero(t23))
        throw InternalInconsistency("T-function vanished identically");
    if (monic(t12) != monic(t13) || monic(t12) != monic(t23))
        throw InternalInconsistency("the three T-function forms disagree");
    out.T = monic(t12);
    out.unit = t12.lc();
    return out;
}

namespace detail {

using ZPoly = Poly<SparsePoly>; // outer t, coefficients in Q[s, Z]

/// a(s)b(t) - b(s)a(t) over the sparse ring; the s-side of a component
/// is its embedding into variable 0.
inline ZPoly cross_gz(const ZPoly& at, const SparsePoly& as, const ZPoly& bt,
                      const SparsePoly& bs) {
    std::size_t n = std::max(at.coeffs().size(), bt.coeffs().size());
    std::vector<SparsePoly> v(n, SparsePoly());
    for (std::size_t k = 0; k < n; ++k) v[k] = as * bt.coeff(k) - bs * at.coeff(k);
    return ZPoly(std::move(v));
}

inline ZPoly embed_t(const UniPoly& p) {
    std::vector<SparsePoly> v;
    for (int i = 0; i <= p.degree(); ++i)
        v.emplace_back(SparsePoly(p.coeff(static_cast<std::size_t>(i))));
    return ZPoly(std::move(v));
}

inline SparsePoly quotient_form_z(const SparsePoly& r, const SparsePoly& den, int lambda) {
    if (lambda <= 1) return r;
    SparsePoly d(Rational(1));
    for (int i = 0; i < lambda - 1; ++i) d *= den;
    return exact_div(r, d);
}

/// Coefficient (in Q[Z]) of the highest power of s.
inline SparsePoly s_lead(const SparsePoly& p) {
    unsigned d = p.degree_in(0);
    SparsePoly out;
    for (const auto& [e, c] : p.terms()) {
        unsigned e0 = e.empty() ? 0 : e[0];
        if (e0 != d) continue;
        ExpVec rest = e;
        if (!rest.empty()) rest[0] = 0;
        while (!rest.empty() && rest.back() == 0) rest.pop_back();
        out.add_term(rest, c);
    }
    return out;
}

/// The quotient forms may differ by a unit of Q(Z): test
/// proportionality by cross-multiplying with the s-leading parts.
inline bool proportional_over_z(const SparsePoly& a, const SparsePoly& b) {
    return a * s_lead(b) == b * s_lead(a);
}

} // namespace detail

/// Build the symbolic-Z plane projection of a space parametrization.
/// When both bad-point signals are present (an affine bad-point cluster
/// cut out by gcd(p1, p) and a limit point with first and last
/// coordinates zero) the first component is replaced by a random
/// combination of the numerators, drawn deterministically from seed.
inline SpaceProjection project_space(const Parametrization& P, unsigned seed = 0) {
    SpaceProjection proj;
    proj.original = P;
    proj.working = P.components;
    const std::size_t n = static_cast<std::size_t>(P.ambient);

    int signals = 0;
    if (poly_gcd(P.components[0], P.p()).degree() >= 1) ++signals;
    ProjPoint pl = limit_point(P);
    if (is_zero(pl.coords().front()) && is_zero(pl.coords().back())) ++signals;
    if (signals >= 2) {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> dist(-5, 5);
        bool found = false;
        for (int attempt = 0; attempt < 32 && !found; ++attempt) {
            std::vector<Rational> lam(n);
            for (auto& l : lam) l = Rational(dist(rng));
            if (is_zero(lam[0])) continue;
            UniPoly p1star;
            for (std::size_t i = 0; i < n; ++i) p1star += P.components[i] * lam[i];
            if (poly_gcd(p1star, P.p()).degree() >= 1) continue;
            std::vector<Rational> newlead;
            for (std::size_t i = 0; i < n + 1; ++i) {
                const UniPoly& c = i == 0 ? p1star : P.components[i];
                newlead.push_back(c.coeff(static_cast<std::size_t>(P.d)));
            }
            if (is_zero(newlead.front()) && is_zero(newlead.back()))
                continue; // limit point would stay bad
            proj.working[0] = p1star;
            proj.applied_transform = lam;
            found = true;
        }
        if (!found) throw TransformFailure();
    }
    return proj;
}

/// T-hat over (Q[Z])[s] through the same resultant pipeline, then
/// T_E = monic Z-content; the Z-cofactor L is kept for diagnostics.
inline SpaceProjection t_function_space(SpaceProjection proj) {
    const std::vector<UniPoly>& c = proj.working;
    const std::size_t n = c.size() - 1;

    // p-hat components: (p1 : p2 + Z_1 p_3 + ... + Z_{n-2} p_n : p)
    detail::ZPoly p1t = detail::embed_t(c[0]);
    SparsePoly p1s = embed(c[0], 0);
    detail::ZPoly p2t = detail::embed_t(c[1]);
    SparsePoly p2s = embed(c[1], 0);
    for (std::size_t j = 2; j < n; ++j) {
        SparsePoly zj = SparsePoly::variable(j - 1);
        p2t = p2t + detail::ZPoly(zj) * detail::embed_t(c[j]);
        p2s += zj * embed(c[j], 0);
    }
    detail::ZPoly pt = detail::embed_t(c[n]);
    SparsePoly ps = embed(c[n], 0);

    detail::ZPoly g1 = detail::cross_gz(p1t, p1s, pt, ps);
    detail::ZPoly g2 = detail::cross_gz(p2t, p2s, pt, ps);
    detail::ZPoly g3 = detail::cross_gz(p1t, p1s, p2t, p2s);
    detail::ZPoly tminuss(std::vector<SparsePoly>{-SparsePoly::variable(0), SparsePoly(1l)});
    detail::ZPoly gs1 = exact_div(g1, tminuss);
    detail::ZPoly gs2 = exact_div(g2, tminuss);
    detail::ZPoly gs3 = exact_div(g3, tminuss);

    proj.delta = {g1.degree(), g2.degree(), g3.degree()};
    proj.lambda12 = std::min(proj.delta[0], proj.delta[1]);
    proj.lambda13 = std::min(proj.delta[0], proj.delta[2]);
    proj.lambda23 = std::min(proj.delta[1], proj.delta[2]);

    SparsePoly r12 = resultant(gs1, gs2);
    SparsePoly r13 = resultant(gs1, gs3);
    SparsePoly r23 = resultant(gs2, gs3);

    SparsePoly t12 = detail::quotient_form_z(r12, ps, proj.lambda12);
    SparsePoly t13 = detail::quotient_form_z(r13, p1s, proj.lambda13);
    SparsePoly t23 = detail::quotient_form_z(r23, p2s, proj.lambda23);
    if (is_zero(t12) || is_zero(t13) || is_zero(t23))
        throw InternalInconsistency("space T-function vanished identically");
    if (!detail::proportional_over_z(t12, t13) || !detail::proportional_over_z(t12, t23))
        throw InternalInconsistency("the three space T-function forms disagree");

    proj.That = t12;
    proj.TE = monic(content_in_x0(t12));
    proj.L = exact_div(t12, embed(proj.TE, 0));
    return proj;
}

} // namespace csing

#endif
