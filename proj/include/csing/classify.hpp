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

#ifndef CSING_CLASSIFY_HPP
#define CSING_CLASSIFY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csing/factor.hpp"
#include "csing/fibre.hpp"
#include "csing/tfunction.hpp"

namespace csing {

/// A set of conjugate singular points cut out by one irreducible
/// polynomial; the points themselves are never written down with
/// algebraic numbers.
struct ConjugateFamily {
    UniPoly m;                     // monic irreducible
    std::vector<UniPoly> residues; // coordinates reduced mod m, normalized
    int count = 0;                 // number of points, deg(m) / k
    int point_multiplicity = 0;    // k
};

struct Singularity {
    enum class Kind { rational_point, conjugate_family };
    Kind kind = Kind::rational_point;
    std::optional<ProjPoint> point;
    std::optional<ConjugateFamily> family;
    UniPoly H;                      // combined fibre function
    int multiplicity = 0;
    std::vector<UniPoly> t_factors; // constituent monic factors of T
    std::vector<Tangent> tangents;
    bool tangents_computed = false;
    Character character = Character::undetermined;
};

struct SingularityReport {
    std::vector<Singularity> singularities;
    UniPoly T;                // the monic polynomial that was factored
    int curve_degree = 0;     // d of the input
    bool space = false;
    std::vector<std::string> warnings;
};

struct DegreeCheck {
    int expected = -1; // (d-1)(d-2); -1 when not applicable (space)
    int actual = 0;    // deg T
    int mult_sum = 0;  // sum of m(m-1) over entries
    bool ok = true;
};

namespace detail {

/// Inverse of r modulo the irreducible f, by the extended Euclidean
/// algorithm over Q[s].
inline UniPoly inverse_mod(const UniPoly& r, const UniPoly& f) {
    UniPoly r0 = f, r1 = poly_rem(r, f);
    UniPoly u0, u1(Rational(1));
    while (!is_zero(r1) && r1.degree() > 0) {
        auto [q, rem] = poly_divmod(r0, r1);
        r0 = r1;
        r1 = rem;
        UniPoly u2 = u0 - q * u1;
        u0 = u1;
        u1 = u2;
    }
    if (is_zero(r1)) throw InternalInconsistency("residue not invertible modulo factor");
    return poly_rem(u1 * (Rational(1) / r1.coeff(0)), f);
}

/// Components reduced mod f and scaled so the last nonzero residue is 1.
inline std::vector<UniPoly> decode_residues(const std::vector<UniPoly>& comps, const UniPoly& f) {
    std::vector<UniPoly> r;
    r.reserve(comps.size());
    for (const auto& c : comps) r.push_back(poly_rem(c, f));
    std::size_t last = r.size();
    for (std::size_t i = r.size(); i-- > 0;) {
        if (!is_zero(r[i])) {
            last = i;
            break;
        }
    }
    if (last == r.size())
        throw InternalInconsistency("all components vanish modulo a T factor");
    UniPoly inv = inverse_mod(r[last], f);
    for (auto& c : r) c = poly_rem(c * inv, f);
    return r;
}

inline bool all_constant(const std::vector<UniPoly>& r) {
    for (const auto& c : r)
        if (c.degree() > 0) return false;
    return true;
}

inline ProjPoint constant_point(const std::vector<UniPoly>& r) {
    std::vector<Rational> v;
    v.reserve(r.size());
    for (const auto& c : r) v.push_back(c.coeff(0));
    return ProjPoint(std::move(v));
}

struct FactorInfo {
    UniPoly f;
    int e = 0;
    std::vector<UniPoly> residues;
    bool constant = false;
    bool cluster = false;
};

inline SingularityReport classify_core(const Parametrization& P, const UniPoly& Tmonic,
                                       const UniPoly* cluster_first) {
    SingularityReport rep;
    rep.T = Tmonic;
    rep.curve_degree = P.d;
    rep.space = P.ambient > 2;

    std::vector<FactorInfo> infos;
    if (Tmonic.degree() > 0) {
        Factorization fac = factor_over_rationals(Tmonic);
        for (const auto& [f, e] : fac.factors) {
            FactorInfo fi;
            fi.f = f;
            fi.e = e;
            fi.residues = decode_residues(P.components, f);
            fi.constant = all_constant(fi.residues);
            // a bad-point cluster factor cuts out parameters where both
            // the working first coordinate and the denominator vanish
            fi.cluster = cluster_first != nullptr && is_zero(poly_rem(*cluster_first, f)) &&
                         is_zero(poly_rem(P.p(), f));
            infos.push_back(std::move(fi));
        }
    }

    std::map<ProjPoint, std::vector<const FactorInfo*>> points;
    std::vector<const FactorInfo*> cluster;
    std::vector<const FactorInfo*> families;
    for (const auto& fi : infos) {
        if (fi.cluster)
            cluster.push_back(&fi);
        else if (fi.constant)
            points[constant_point(fi.residues)].push_back(&fi);
        else
            families.push_back(&fi);
    }

    ProjPoint pl = limit_point(P);
    auto check_exponents = [&](const Singularity& sg, const std::vector<const FactorInfo*>& members) {
        for (const auto* fi : members) {
            if (fi->e != sg.multiplicity - 1)
                rep.warnings.push_back(
                    "INCONSISTENT_EXPONENTS: factor " + to_string(fi->f, "s") + " at " +
                    (sg.point ? to_string(*sg.point) : std::string("family")) + " has exponent " +
                    std::to_string(fi->e) + ", expected m-1 = " +
                    std::to_string(sg.multiplicity - 1) +
                    " (non-ordinary singularity or limit-point pathology)");
        }
    };

    for (const auto& [Q, members] : points) {
        Singularity sg;
        sg.kind = Singularity::Kind::rational_point;
        sg.point = Q;
        FibreData fd = fibre_function(P, Q);
        sg.H = fd.H;
        sg.multiplicity = std::max(fd.H.degree(), 0);
        for (const auto* fi : members) {
            if (!is_zero(poly_rem(sg.H, fi->f)))
                throw InternalInconsistency("decoded factor does not divide the fibre function");
            sg.t_factors.push_back(fi->f);
        }
        if (Q == pl)
            rep.warnings.push_back("LIMIT_POINT_UNSUPPORTED: T factors decode to the limit point " +
                                   to_string(Q) + "; its multiplicity is not certified");
        if (sg.multiplicity < 2)
            rep.warnings.push_back("SMOOTH_DECODE: T factors decode to " + to_string(Q) +
                                   " whose fibre has degree " + std::to_string(sg.multiplicity));
        check_exponents(sg, members);
        if (P.ambient == 2) {
            sg.tangents = tangents(P, fd);
            sg.tangents_computed = true;
            sg.character = character(fd, sg.tangents);
            if (sg.character == Character::undetermined)
                rep.warnings.push_back("UNDETERMINED_CHARACTER: irrational fibre parameters at " +
                                       to_string(Q));
        }
        rep.singularities.push_back(std::move(sg));
    }

    if (!cluster.empty()) {
        // factors that collide under the plane projection: report the
        // projected multiplicity data on one representative space point
        Singularity sg;
        sg.kind = Singularity::Kind::rational_point;
        sg.H = poly_gcd(*cluster_first, P.p());
        sg.multiplicity = sg.H.degree();
        std::vector<ProjPoint> decoded;
        for (const auto* fi : cluster) {
            sg.t_factors.push_back(fi->f);
            if (all_constant(fi->residues)) {
                ProjPoint Q = constant_point(fi->residues);
                if (std::find(decoded.begin(), decoded.end(), Q) == decoded.end())
                    decoded.push_back(Q);
            } else {
                rep.warnings.push_back("BAD_POINT_CLUSTER: factor " + to_string(fi->f, "s") +
                                       " decodes to a non-rational bad point");
            }
        }
        if (decoded.empty())
            throw InternalInconsistency("bad-point cluster with no decodable point");
        std::sort(decoded.begin(), decoded.end());
        sg.point = decoded.front();
        if (decoded.size() > 1) {
            std::string list;
            for (const auto& Q : decoded) list += (list.empty() ? "" : ", ") + to_string(Q);
            rep.warnings.push_back(
                "BAD_POINT_CLUSTER: " + std::to_string(decoded.size()) +
                " distinct space points share the projected singularity (" + list +
                "); reporting the first");
        }
        check_exponents(sg, cluster);
        rep.singularities.push_back(std::move(sg));
    }

    for (const auto* fi : families) {
        Singularity sg;
        sg.kind = Singularity::Kind::conjugate_family;
        ConjugateFamily fam;
        fam.m = fi->f;
        fam.residues = fi->residues;
        fam.point_multiplicity = fi->e + 1;
        if (fi->f.degree() % fam.point_multiplicity != 0) throw NonIntegerFamilySize();
        fam.count = fi->f.degree() / fam.point_multiplicity;
        sg.H = fi->f;
        sg.multiplicity = fam.point_multiplicity;
        sg.t_factors.push_back(fi->f);
        sg.family = std::move(fam);
        rep.singularities.push_back(std::move(sg));
    }

    std::sort(rep.singularities.begin(), rep.singularities.end(),
              [](const Singularity& a, const Singularity& b) {
                  if (a.point && b.point) return *a.point < *b.point;
                  if (a.point != b.point) return static_cast<bool>(a.point);
                  return poly_less(a.family->m, b.family->m);
              });

    // Reconstruction: the product of H^(m-1) over all entries must give
    // back the monic T exactly
    UniPoly recon(Rational(1));
    for (const auto& sg : rep.singularities) {
        for (int i = 1; i < sg.multiplicity; ++i) recon = recon * sg.H;
    }
    if (monic(recon) != Tmonic) {
        if (rep.warnings.empty())
            throw InternalInconsistency("fibre functions do not reconstruct the T-function");
        rep.warnings.push_back("RECONSTRUCTION_MISMATCH: prod H^(m-1) differs from T");
    }
    return rep;
}

} // namespace detail

/// Full singularity classification of a plane parametrization.
inline SingularityReport classify(const Parametrization& P, const TFunctionResult& tf) {
    return detail::classify_core(P, tf.T, nullptr);
}

/// Classification of a space parametrization from its projected
/// T-function; points are decoded in the original coordinates.
inline SingularityReport classify_space(const SpaceProjection& proj) {
    return detail::classify_core(proj.original, proj.TE, &proj.working[0]);
}

/// Degree bookkeeping: deg T versus (d-1)(d-2) (plane case) and versus
/// the multiplicity sum of the classified entries.
inline DegreeCheck degree_consistency(const SingularityReport& rep) {
    DegreeCheck dc;
    dc.actual = std::max(rep.T.degree(), 0);
    for (const auto& sg : rep.singularities) {
        int n = sg.family ? sg.family->count : 1;
        dc.mult_sum += n * sg.multiplicity * (sg.multiplicity - 1);
    }
    if (!rep.space) dc.expected = (rep.curve_degree - 1) * (rep.curve_degree - 2);
    dc.ok = dc.mult_sum == dc.actual && (rep.space || dc.expected == dc.actual);
    return dc;
}

} // namespace csing

#endif
