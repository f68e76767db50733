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

// csing: singularity classification of rational parametric curves.
//
// Input is either a parenthesized tuple of affine components
//   (t^2 - 1, t^3 - t)
// one homogeneous component per line (three or more lines, the last
// line is the common denominator), or a JSON object
//   {"components": ["...", ...], "mode": "plane"}
// where each component is an expression string or a coefficient array
// (lowest degree first).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "csing/parse.hpp"
#include "csing/render.hpp"

namespace {

using namespace csing;

UniPoly poly_from_json(const nlohmann::json& j) {
    if (j.is_string()) return parse_poly(j.get<std::string>());
    if (!j.is_array()) throw ParseError("component must be a string or coefficient array", 0);
    std::vector<Rational> coeffs;
    for (const auto& c : j) {
        if (c.is_number_integer())
            coeffs.emplace_back(c.get<long>());
        else if (c.is_string()) {
            std::string s = c.get<std::string>();
            Rational q;
            if (q.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'", 0);
            q.canonicalize();
            coeffs.push_back(q);
        } else {
            throw ParseError("coefficients must be integers or \"num/den\" strings", 0);
        }
    }
    return UniPoly(std::move(coeffs));
}

struct ParsedInput {
    Parametrization P;
    std::vector<std::string> display;
};

ParsedInput build_from_lines(const std::vector<std::string>& lines) {
    ParsedInput in;
    in.display = lines;
    if (lines.size() == 1) {
        auto tup = parse_tuple(lines[0]);
        in.P = normalize_input(tup);
    } else if (lines.size() == 2) {
        in.P = normalize_input(std::vector<RatFun>{parse_ratfun(lines[0]), parse_ratfun(lines[1])});
    } else {
        std::vector<UniPoly> comps;
        for (const auto& l : lines) comps.push_back(parse_poly(l));
        in.P = normalize_input(std::move(comps));
    }
    return in;
}

ParsedInput parse_input(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json j = nlohmann::json::parse(text);
        std::vector<UniPoly> comps;
        std::vector<std::string> display;
        for (const auto& c : j.at("components")) {
            comps.push_back(poly_from_json(c));
            display.push_back(c.is_string() ? c.get<std::string>() : c.dump());
        }
        ParsedInput in;
        in.display = std::move(display);
        if (comps.size() == 2) {
            in.P = normalize_input(
                std::vector<RatFun>{RatFun{comps[0]}, RatFun{comps[1]}});
        } else {
            in.P = normalize_input(std::move(comps));
        }
        return in;
    }
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(a, b - a + 1));
    }
    if (lines.empty()) throw ParseError("empty input", 0);
    return build_from_lines(lines);
}

bool run_oracle_check(const Parametrization& P, const SingularityReport& rep) {
    ImplicitCurve C = implicitize(P);
    for (const auto& sg : rep.singularities) {
        if (!sg.point) continue;
        if (multiplicity_implicit(C, *sg.point).multiplicity != sg.multiplicity) return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact singularity classification of rational parametric curves"};
    std::string input_path = "-";
    std::string json_path;
    bool space_flag = false, tangents_flag = false, oracle_flag = false, quiet = false;
    unsigned seed = 0;
    app.add_option("input", input_path, "Input file ('-' for stdin)");
    app.add_flag("--space", space_flag, "Expect a space curve");
    app.add_option("--json", json_path, "Write the JSON report to this path ('-' for stdout)");
    app.add_flag("--tangents", tangents_flag, "Include tangent data in the report");
    app.add_option("--seed", seed, "Seed for the bad-point coordinate change");
    app.add_flag("--check-oracle", oracle_flag,
                 "Cross-check multiplicities against the implicit equation (plane only)");
    app.add_flag("--quiet", quiet, "Suppress the text report");
    CLI11_PARSE(app, argc, argv);

    try {
        std::string text;
        if (input_path == "-") {
            std::ostringstream buf;
            buf << std::cin.rdbuf();
            text = buf.str();
        } else {
            std::ifstream f(input_path);
            if (!f) {
                std::cerr << "error: cannot open " << input_path << "\n";
                return 2;
            }
            std::ostringstream buf;
            buf << f.rdbuf();
            text = buf.str();
        }

        ParsedInput in = parse_input(text);
        PipelineResult res;
        res.P = in.P;
        res.input_strings = in.display;
        res.show_tangents = tangents_flag;

        bool is_space = res.P.ambient > 2;
        if (space_flag && !is_space) {
            std::cerr << "error: --space given but the input is a plane curve\n";
            return 2;
        }

        PropernessResult prop = tracing_index(res.P);
        if (prop.tracing_index != 1) throw NotProper(prop.tracing_index);
        res.tracing_index = prop.tracing_index;
        res.normality = is_normal(res.P);

        if (is_space) {
            res.space = t_function_space(project_space(res.P, seed));
            res.report = classify_space(*res.space);
        } else {
            res.plane = t_function(res.P);
            res.report = classify(res.P, *res.plane);
        }
        res.degree = degree_consistency(res.report);

        if (oracle_flag) {
            if (is_space) {
                std::cerr << "error: --check-oracle supports plane curves only\n";
                return 2;
            }
            res.oracle_agrees = run_oracle_check(res.P, res.report);
        }

        if (!quiet) std::cout << render_text(res);
        if (!json_path.empty()) {
            std::string dumped = render_json(res).dump(2) + "\n";
            if (json_path == "-") {
                std::cout << dumped;
            } else {
                std::ofstream out(json_path);
                out << dumped;
            }
        }
        if (res.oracle_agrees && !*res.oracle_agrees) return 1;
        return 0;
    } catch (const Error& e) {
        std::cerr << e.code() << ": " << e.what() << "\n";
        const std::string& c = e.code();
        bool rejected = c == "NOT_PROPER" || c == "IS_A_LINE" || c == "PARSE_ERROR" ||
                        c == "ZERO_PARAMETRIZATION";
        return rejected ? 2 : 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "PARSE_ERROR: " << e.what() << "\n";
        return 2;
    }
}
