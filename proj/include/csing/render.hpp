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

#ifndef CSING_RENDER_HPP
#define CSING_RENDER_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "csing/classify.hpp"
#include "csing/implicit.hpp"

namespace csing {

/// Everything one pipeline run produces, gathered for rendering.
struct PipelineResult {
    std::vector<std::string> input_strings;
    Parametrization P;
    int tracing_index = 0;
    NormalityResult normality;
    std::optional<TFunctionResult> plane;  // plane pipeline
    std::optional<SpaceProjection> space;  // space pipeline
    SingularityReport report;
    DegreeCheck degree;
    bool show_tangents = false;
    std::optional<bool> oracle_agrees; // set by --check-oracle
};

namespace detail {

using ordered_json = nlohmann::ordered_json;

inline ordered_json rational_json(const Rational& q) { return to_string(q); }

inline ordered_json poly_json(const UniPoly& p, const std::string& var) {
    ordered_json j;
    ordered_json coeffs = ordered_json::array();
    for (int i = 0; i <= p.degree(); ++i)
        coeffs.push_back(to_string(p.coeff(static_cast<std::size_t>(i))));
    j["coefficients"] = std::move(coeffs);
    j["string"] = to_string(p, var);
    return j;
}

inline ordered_json point_json(const ProjPoint& q) {
    ordered_json coords = ordered_json::array();
    for (const auto& c : q.coords()) coords.push_back(to_string(c));
    ordered_json j;
    j["coords"] = std::move(coords);
    j["display"] = to_string(q);
    return j;
}

inline std::string line_string(const std::vector<Rational>& line) {
    static const char* names[] = {"x", "y", "w"};
    std::string out;
    for (std::size_t i = 0; i < line.size() && i < 3; ++i) {
        if (is_zero(line[i])) continue;
        Rational c = line[i];
        if (out.empty()) {
            if (c == -1)
                out += "-";
            else if (c != 1)
                out += to_string(c) + "*";
        } else {
            out += c < 0 ? " - " : " + ";
            Rational a = c < 0 ? Rational(-c) : c;
            if (a != 1) out += to_string(a) + "*";
        }
        out += names[i];
    }
    return out.empty() ? "0 = 0" : out + " = 0";
}

inline const char* character_name(Character c) {
    switch (c) {
        case Character::ordinary: return "ordinary";
        case Character::non_ordinary: return "non_ordinary";
        default: return "undetermined";
    }
}

inline ordered_json tangent_json(const Tangent& t) {
    ordered_json j;
    if (!is_zero(t.residue_factor)) {
        j["residue_factor"] = poly_json(t.residue_factor, "t");
    } else {
        ordered_json line = ordered_json::array();
        for (const auto& c : t.line) line.push_back(to_string(c));
        j["line"] = std::move(line);
        j["display"] = line_string(t.line);
        ordered_json base = ordered_json::array();
        for (const auto& s0 : t.base_parameters) base.push_back(to_string(s0));
        j["base_parameters"] = std::move(base);
        j["order"] = t.order;
    }
    j["multiplicity"] = t.multiplicity;
    return j;
}

inline ordered_json singularity_json(const Singularity& sg, bool with_tangents) {
    ordered_json j;
    if (sg.kind == Singularity::Kind::rational_point) {
        j["kind"] = "rational_point";
        j["point"] = point_json(*sg.point);
    } else {
        j["kind"] = "conjugate_family";
        ordered_json fam;
        fam["m"] = poly_json(sg.family->m, "s");
        ordered_json res = ordered_json::array();
        for (const auto& r : sg.family->residues) res.push_back(poly_json(r, "s"));
        fam["residues"] = std::move(res);
        fam["count"] = sg.family->count;
        fam["point_multiplicity"] = sg.family->point_multiplicity;
        j["family"] = std::move(fam);
    }
    j["multiplicity"] = sg.multiplicity;
    j["fibre_function"] = poly_json(sg.H, "t");
    if (with_tangents && sg.tangents_computed) {
        ordered_json tg = ordered_json::array();
        for (const auto& t : sg.tangents) tg.push_back(tangent_json(t));
        j["tangents"] = std::move(tg);
    }
    j["character"] = character_name(sg.character);
    return j;
}

} // namespace detail

inline nlohmann::ordered_json render_json(const PipelineResult& r) {
    using detail::ordered_json;
    ordered_json j;

    ordered_json input;
    input["components"] = r.input_strings;
    input["ambient"] = r.P.ambient;
    input["degree"] = r.P.d;
    input["mode"] = r.space ? "space" : "plane";
    j["input"] = std::move(input);

    j["proper"] = ordered_json{{"index", r.tracing_index}};
    j["limit_point"] = detail::point_json(limit_point(r.P));
    j["normal"] = r.normality.normal;
    if (r.normality.critical) j["critical_point"] = detail::point_json(*r.normality.critical);

    ordered_json tf;
    if (r.space) {
        tf["monic_string"] = to_string(r.space->TE, "s");
        tf["coefficients"] = detail::poly_json(r.space->TE, "s")["coefficients"];
        tf["degree"] = std::max(r.space->TE.degree(), 0);
        tf["expected_degree"] = nullptr;
        ordered_json proj;
        if (r.space->applied_transform) {
            ordered_json lam = ordered_json::array();
            for (const auto& l : *r.space->applied_transform) lam.push_back(to_string(l));
            proj["transform"] = std::move(lam);
        } else {
            proj["transform"] = nullptr;
        }
        std::vector<std::string> zvars{"s"};
        for (int i = 1; i < r.P.ambient - 1; ++i) zvars.push_back("Z" + std::to_string(i));
        proj["cofactor"] = to_string(r.space->L, zvars);
        j["projection"] = std::move(proj);
    } else {
        tf["monic_string"] = to_string(r.plane->T, "s");
        tf["coefficients"] = detail::poly_json(r.plane->T, "s")["coefficients"];
        tf["unit"] = to_string(r.plane->unit);
        tf["degree"] = std::max(r.plane->T.degree(), 0);
        tf["expected_degree"] = r.degree.expected;
    }
    j["t_function"] = std::move(tf);

    ordered_json sing = ordered_json::array();
    for (const auto& sg : r.report.singularities)
        sing.push_back(detail::singularity_json(sg, r.show_tangents));
    j["singularities"] = std::move(sing);
    j["degree_check"] = ordered_json{{"expected", r.degree.expected},
                                     {"actual", r.degree.actual},
                                     {"multiplicity_sum", r.degree.mult_sum},
                                     {"ok", r.degree.ok}};
    if (r.oracle_agrees) j["oracle_check"] = *r.oracle_agrees;
    j["warnings"] = r.report.warnings;
    return j;
}

inline std::string render_text(const PipelineResult& r) {
    std::ostringstream os;
    os << "Input: degree " << r.P.d << (r.space ? " space" : " plane") << " curve (";
    for (int i = 0; i <= r.P.ambient; ++i)
        os << (i ? " : " : "") << to_string(r.P.components[static_cast<std::size_t>(i)]);
    os << ")\n";
    os << "Proper: yes (tracing index " << r.tracing_index << ")\n";
    ProjPoint pl = limit_point(r.P);
    os << "Limit point: " << to_string(pl) << (pl.is_affine() ? "" : " (at infinity)") << "\n";
    os << "Normal: " << (r.normality.normal ? "yes" : "no");
    if (r.normality.critical) os << " (critical point " << to_string(*r.normality.critical) << ")";
    os << "\n";

    if (r.space) {
        os << "T_E(s) = " << to_string(r.space->TE, "s") << "\n";
        if (r.space->applied_transform) {
            os << "Projection transform: (";
            const auto& lam = *r.space->applied_transform;
            for (std::size_t i = 0; i < lam.size(); ++i) os << (i ? ", " : "") << to_string(lam[i]);
            os << ")\n";
        }
        std::vector<std::string> zvars{"s"};
        for (int i = 1; i < r.P.ambient - 1; ++i) zvars.push_back("Z" + std::to_string(i));
        os << "Discarded cofactor L(s,Z) = " << to_string(r.space->L, zvars) << "\n";
    } else {
        os << "T(s) = " << to_string(r.plane->T, "s") << " (degree " << r.degree.actual
           << ", expected " << r.degree.expected << "), unit " << to_string(r.plane->unit) << "\n";
    }

    os << "Singularities (" << r.report.singularities.size() << "):\n";
    std::size_t idx = 0;
    for (const auto& sg : r.report.singularities) {
        os << "  " << ++idx << ". ";
        if (sg.kind == Singularity::Kind::rational_point) {
            os << "rational point " << to_string(*sg.point) << ", multiplicity "
               << sg.multiplicity << "\n";
        } else {
            os << "conjugate family of " << sg.family->count << " point(s) of multiplicity "
               << sg.family->point_multiplicity << ", m(s) = " << to_string(sg.family->m, "s")
               << "\n";
        }
        os << "     H(t) = " << to_string(sg.H, "t") << "\n";
        if (r.show_tangents && sg.tangents_computed) {
            for (const auto& t : sg.tangents) {
                if (!is_zero(t.residue_factor)) {
                    os << "     tangents of parameters with " << to_string(t.residue_factor, "t")
                       << " = 0: not computed (multiplicity " << t.multiplicity << ")\n";
                } else {
                    os << "     tangent " << detail::line_string(t.line) << " (multiplicity "
                       << t.multiplicity << ", order " << t.order << ")\n";
                }
            }
        }
        os << "     character: " << detail::character_name(sg.character) << "\n";
    }

    if (r.oracle_agrees)
        os << "Oracle check: " << (*r.oracle_agrees ? "agrees" : "DISAGREES") << "\n";
    if (!r.report.warnings.empty()) {
        os << "Warnings:\n";
        for (const auto& w : r.report.warnings) os << "  - " << w << "\n";
    }
    return os.str();
}

} // namespace csing

#endif
