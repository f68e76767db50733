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

#ifndef CSING_FIBRE_HPP
#define CSING_FIBRE_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "csing/factor.hpp"
#include "csing/parametrization.hpp"

namespace csing {

/// Fibre of a projective point under the parametrization: H's roots are
/// exactly the parameter values mapping to the point.
struct FibreData {
    ProjPoint point;
    UniPoly H;                  // monic fibre function in t
    std::vector<UniPoly> phis;  // fibre equations (plane: phi1, phi2, phi3)
    bool is_limit_point = false;
};

/// One tangent line at a singular (or regular) point.
struct Tangent {
    std::vector<Rational> base_parameters; // rational fibre roots on this line
    int order = 0;                         // first non-vanishing derivative order
    std::vector<Rational> line;            // aX+bY+cW = 0, primitive integer coeffs
    int multiplicity = 0;
    UniPoly residue_factor; // nonzero: irrational fibre factor, line uncomputed
};

enum class Character { ordinary, non_ordinary, undetermined };

inline FibreData fibre_function(const Parametrization& P, const ProjPoint& Q) {
    const std::size_t m = P.components.size();
    const auto& q = Q.coords();
    FibreData fd{Q, UniPoly(), {}, Q == limit_point(P)};
    if (m == 3) {
        // plane case split: phi3 is redundant for affine points, and at
        // infinity the fibre is cut out by p together with phi3
        const Rational &a = q[0], &b = q[1], &c = q[2];
        UniPoly phi1 = P.components[0] * Rational(-c) + P.p() * a;
        UniPoly phi2 = P.components[1] * Rational(-c) + P.p() * b;
        UniPoly phi3 = P.components[1] * a - P.components[0] * b;
        fd.phis = {phi1, phi2, phi3};
        fd.H = is_zero(c) ? poly_gcd(P.p(), phi3) : poly_gcd(phi1, phi2);
        return fd;
    }
    // space case: gcd over all pairwise cross equations
    UniPoly h;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            UniPoly phi = P.components[j] * q[i] - P.components[i] * q[j];
            fd.phis.push_back(phi);
            h = poly_gcd(h, phi);
        }
    }
    fd.H = h;
    return fd;
}

/// Multiplicity of the point on the curve: deg H. Not valid at the
/// limit point, where the fibre undercounts.
inline int multiplicity(const FibreData& fd) {
    if (fd.is_limit_point) throw LimitPointUnsupported();
    return std::max(fd.H.degree(), 0);
}

struct NormalityResult {
    bool normal = true;
    std::optional<ProjPoint> critical; // the unreachable limit point
};

/// A parametrization is normal when it reaches every point of the
/// curve: the limit point is at infinity or has a nonempty fibre.
inline NormalityResult is_normal(const Parametrization& P) {
    ProjPoint pl = limit_point(P);
    if (!pl.is_affine()) return {true, std::nullopt};
    FibreData fd = fibre_function(P, pl);
    if (fd.H.degree() >= 1) return {true, std::nullopt};
    return {false, pl};
}

namespace detail {

/// Inverse of q as a power series mod t^m; q(0) must be nonzero.
inline UniPoly series_inverse(const UniPoly& q, int m) {
    std::vector<Rational> b(static_cast<std::size_t>(m), Rational(0));
    Rational inv0 = Rational(1) / q.coeff(0);
    b[0] = inv0;
    for (int n = 1; n < m; ++n) {
        Rational acc(0);
        for (int i = 1; i <= n; ++i)
            acc += q.coeff(static_cast<std::size_t>(i)) * b[static_cast<std::size_t>(n - i)];
        b[static_cast<std::size_t>(n)] = -acc * inv0;
    }
    return UniPoly(std::move(b));
}

inline UniPoly truncate(const UniPoly& p, int m) {
    std::vector<Rational> v;
    for (int i = 0; i < m; ++i) v.push_back(p.coeff(static_cast<std::size_t>(i)));
    return UniPoly(std::move(v));
}

/// Scale a rational line form to primitive integer coefficients with
/// the first nonzero coefficient positive.
inline std::vector<Rational> normalize_line(std::vector<Rational> v) {
    UniPoly as_poly{std::vector<Rational>(v)};
    IntPoly ip = to_integer(as_poly);
    std::vector<Rational> out(v.size(), Rational(0));
    for (std::size_t i = 0; i < ip.coeffs.size(); ++i) out[i] = Rational(ip.coeffs[i]);
    for (auto& c : out) {
        if (is_zero(c)) continue;
        if (c < 0)
            for (auto& x : out) x = -x;
        break;
    }
    return out;
}

} // namespace detail

/// Tangent lines at an explicit plane point from the Taylor expansion
/// of the parametrization at each rational fibre root. Roots of H that
/// are irrational are reported as uncomputed residue-class entries.
inline std::vector<Tangent> tangents(const Parametrization& P, const FibreData& fd) {
    std::vector<Tangent> out;
    if (fd.H.degree() < 1 || P.ambient != 2) return out;

    // move the point into an affine chart: permute coordinates so the
    // last one is nonzero at the point
    const auto& q = fd.point.coords();
    std::size_t chart = 2;
    while (is_zero(q[chart])) --chart;
    std::vector<std::size_t> perm{0, 1, 2};
    std::swap(perm[chart], perm[2]);
    const UniPoly& den = P.components[perm[2]];
    const UniPoly& nx = P.components[perm[0]];
    const UniPoly& ny = P.components[perm[1]];
    Rational x0 = q[perm[0]] / q[perm[2]];
    Rational y0 = q[perm[1]] / q[perm[2]];

    Factorization hf = factor_over_rationals(fd.H);
    for (const auto& [f, k] : hf.factors) {
        if (f.degree() > 1) {
            Tangent tg;
            tg.residue_factor = f;
            tg.multiplicity = f.degree() * k;
            tg.order = k;
            out.push_back(std::move(tg));
            continue;
        }
        Rational s0 = -f.coeff(0);
        // Taylor coefficients of the affine map at s0, orders 1..k
        int m = k + 1;
        UniPoly dq = den.taylor_shift(s0);
        UniPoly inv = detail::series_inverse(dq, m);
        UniPoly fx = detail::truncate(detail::truncate(nx.taylor_shift(s0), m) * inv, m);
        UniPoly fy = detail::truncate(detail::truncate(ny.taylor_shift(s0), m) * inv, m);
        Rational vx(0), vy(0);
        int order = 0;
        for (int j = 1; j <= k; ++j) {
            vx = fx.coeff(static_cast<std::size_t>(j));
            vy = fy.coeff(static_cast<std::size_t>(j));
            if (!is_zero(vx) || !is_zero(vy)) {
                order = j;
                break;
            }
        }
        if (order == 0) throw InternalInconsistency("vanishing tangent direction");

        // line through (x0, y0) with direction (vx, vy), in chart
        // coordinates, then undo the permutation
        std::vector<Rational> chart_line{vy, -vx, vx * y0 - vy * x0};
        std::vector<Rational> line(3);
        for (std::size_t i = 0; i < 3; ++i) line[perm[i]] = chart_line[i];
        line = detail::normalize_line(std::move(line));

        Tangent tg;
        tg.base_parameters = {s0};
        tg.order = order;
        tg.line = line;
        tg.multiplicity = k;
        bool merged = false;
        for (auto& prev : out) {
            if (!prev.line.empty() && prev.line == line) {
                prev.multiplicity += k;
                prev.base_parameters.push_back(s0);
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back(std::move(tg));
    }
    return out;
}

/// Ordinary iff the deg-H branches give deg-H pairwise distinct simple
/// tangents; any merge or higher-order branch is non-ordinary; any
/// irrational fibre root leaves the character undetermined.
inline Character character(const FibreData& fd, const std::vector<Tangent>& tg) {
    int rational_lines = 0;
    for (const auto& t : tg) {
        if (!is_zero(t.residue_factor)) return Character::undetermined;
        if (t.multiplicity > 1 || t.order > 1) return Character::non_ordinary;
        ++rational_lines;
    }
    if (rational_lines == fd.H.degree()) return Character::ordinary;
    return Character::undetermined;
}

} // namespace csing

#endif
