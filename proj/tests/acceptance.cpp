// Acceptance gate: one pass/fail line per criterion. Usage:
//   acceptance [path-to-cli] [path-to-samples]
// The CLI path and samples directory are only needed by the
// determinism criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "csing/classify.hpp"
#include "csing/implicit.hpp"
#include "csing/parse.hpp"
#include "support/bareiss.hpp"
#include "support/examples.hpp"
#include "support/generators.hpp"

using namespace csing;
using testing::pt;
using testing::up;

namespace {

struct Failure {
    std::string msg;
};

void require(bool ok, const std::string& msg) {
    if (!ok) throw Failure{msg};
}

Parametrization compose_power(const Parametrization& P, unsigned k) {
    std::vector<UniPoly> comps;
    for (const auto& c : P.components) {
        UniPoly r;
        for (int i = 0; i <= c.degree(); ++i)
            r += UniPoly::monomial(c.coeff(static_cast<std::size_t>(i)),
                                   static_cast<std::size_t>(i) * k);
        comps.push_back(r);
    }
    return normalize_input(std::move(comps));
}

UniPoly reconstruction(const SingularityReport& rep) {
    UniPoly r(Rational(1));
    for (const auto& sg : rep.singularities)
        for (int i = 1; i < sg.multiplicity; ++i) r = r * sg.H;
    return monic(r);
}

std::string cli_path, samples_dir;

// ---- criteria --------------------------------------------------------

void criterion1() {
    Parametrization P = testing::triple_point_quartic();
    FibreData fd = fibre_function(P, pt({0, 0, 1}));
    require(fd.H == up({3, 7, 5, 1}), "fibre function is not (t+3)(t+1)^2");
    require(multiplicity(fd) == 3, "multiplicity is not 3");
    auto tg = tangents(P, fd);
    require(tg.size() == 2, "expected two tangent lines");
    bool seen_sum = false, seen_diff = false;
    for (const auto& t : tg) {
        if (t.line == std::vector<Rational>{Rational(1), Rational(1), Rational(0)}) {
            require(t.multiplicity == 2, "y + x = 0 should have multiplicity 2");
            seen_sum = true;
        }
        if (t.line == std::vector<Rational>{Rational(1), Rational(-1), Rational(0)}) {
            require(t.multiplicity == 1, "y - x = 0 should have multiplicity 1");
            seen_diff = true;
        }
    }
    require(seen_sum && seen_diff, "tangent lines are not {y-x, y+x}");
    require(character(fd, tg) == Character::non_ordinary, "character is not non-ordinary");
}

void criterion2() {
    Parametrization P = testing::quintic_four_singular();
    TFunctionResult tf = t_function(P);
    UniPoly expected = up({0, 1}).pow(2) * up({-1, 1}).pow(2) * up({1, 1}).pow(2) * up({-2, 1}) *
                       up({-3, 1}) * up({2, 1}) * up({3, 1}) * up({6, 0, 1});
    require(tf.T == expected, "T differs from the expected monic product");
    require(tf.T.degree() == 12 && 12 == (P.d - 1) * (P.d - 2), "deg T is not 12");
    SingularityReport rep = classify(P, tf);
    require(rep.singularities.size() == 4, "expected exactly four singularities");
    struct Want {
        ProjPoint q;
        int m;
        UniPoly h;
    };
    std::vector<Want> wants{{pt({0, 0, 1}), 3, up({0, -1, 0, 1})},
                            {pt({0, 1, 0}), 2, up({6, -5, 1})},
                            {pt({1, 0, 0}), 2, up({6, 5, 1})},
                            {pt({-7, 7, 5}), 2, up({6, 0, 1})}};
    for (const auto& w : wants) {
        bool found = false;
        for (const auto& sg : rep.singularities)
            found = found || (sg.point && *sg.point == w.q && sg.multiplicity == w.m && sg.H == w.h);
        require(found, "missing singularity " + to_string(w.q));
    }
}

void criterion3() {
    Parametrization P = testing::quintic_family();
    TFunctionResult tf = t_function(P);
    UniPoly m(std::vector<Rational>{Rational(968585964l), Rational(-2319881360l),
                                    Rational(2070988203l), Rational(-904722886l),
                                    Rational(208513387l), Rational(-24407436l),
                                    Rational(1145528l)});
    UniPoly expected = monic(m) * up({-1, 1}).pow(2) * up({-2, 1}).pow(2) * up({-3, 1}).pow(2);
    require(tf.T == expected, "T does not match the printed factorization");
    SingularityReport rep = classify(P, tf);
    require(rep.singularities.size() == 2, "expected a triple point and one family");
    bool point_ok = false, family_ok = false;
    for (const auto& sg : rep.singularities) {
        if (sg.point)
            point_ok = *sg.point == pt({0, 0, 1}) && sg.multiplicity == 3 &&
                       sg.H == up({-6, 11, -6, 1});
        if (sg.family)
            family_ok = sg.family->m == monic(m) && sg.family->m.degree() == 6 &&
                        sg.family->point_multiplicity == 2 && sg.family->count == 3;
    }
    require(point_ok, "triple point (0:0:1) with H=(s-1)(s-2)(s-3) not found");
    require(family_ok, "conjugate family (deg 6, k=2, count 3) not found");
}

void criterion4() {
    SpaceProjection proj = t_function_space(project_space(testing::space_quintic(), 0));
    UniPoly expected =
        monic(up({0, 1}) * up({1, 1}) * up({-2, 1}) * up({-3, 1}) * up({2, 1}) * up({3, 1}));
    require(proj.TE == expected, "T_E differs from the expected monic product");
    SparsePoly z = SparsePoly::variable(1);
    try {
        exact_div(proj.L, (z * Rational(3) + SparsePoly(1l)) * (z * Rational(2) + SparsePoly(1l)));
    } catch (const NonZeroRemainder&) {
        throw Failure{"Z-cofactor lacks the factors (3Z+1)(2Z+1)"};
    }
    SingularityReport rep = classify_space(proj);
    require(rep.singularities.size() == 3, "expected three double points");
    struct Want {
        ProjPoint q;
        UniPoly h;
    };
    std::vector<Want> wants{{pt({0, 1, 3, 0}), up({6, -5, 1})},
                            {pt({1, 0, 0, 0}), up({6, 5, 1})},
                            {pt({0, 0, 0, 1}), up({0, 1, 1})}};
    for (const auto& w : wants) {
        bool found = false;
        for (const auto& sg : rep.singularities)
            found = found || (sg.point && *sg.point == w.q && sg.multiplicity == 2 && sg.H == w.h);
        require(found, "missing double point " + to_string(w.q));
    }
}

void criterion5() {
    testing::Rng rng(9001);
    int done = 0;
    while (done < 200) {
        std::uniform_int_distribution<int> dd(2, 6);
        int d = dd(rng);
        std::vector<UniPoly> comps{testing::random_poly(rng, d, 10), testing::random_poly(rng, d, 10),
                                   testing::random_poly_up_to(rng, d, 10)};
        Parametrization P;
        try {
            P = normalize_input(std::move(comps));
        } catch (const Error&) {
            continue;
        }
        if (tracing_index(P).tracing_index != 1) continue;
        ++done;
        // t_function cross-checks the three quotient forms internally
        // and throws on any disagreement or inexact division
        TFunctionResult tf = t_function(P);
        require(!is_zero(tf.unit), "vanishing unit");
    }
}

void criterion6() {
    testing::Rng rng(424242);
    std::uniform_int_distribution<int> dd(1, 3), ds(0, 2);
    for (int i = 0; i < 500; ++i) {
        auto rand_bi = [&](int dt) {
            std::vector<UniPoly> v;
            for (int k = 0; k <= dt; ++k) v.push_back(testing::random_poly_up_to(rng, ds(rng), 4));
            BiPoly b{std::move(v)};
            return is_zero(b) ? BiPoly(UniPoly(Rational(1))) : b;
        };
        BiPoly a = rand_bi(dd(rng)), b = rand_bi(dd(rng)), c = rand_bi(dd(rng));
        // oracle agreement
        require(resultant(a, b) == testing::sylvester_resultant(a, b), "PRS vs Sylvester mismatch");
        // multiplicativity: Res(a, b c) = Res(a, b) Res(a, c)
        require(resultant(a, b * c) == resultant(a, b) * resultant(a, c),
                "multiplicativity failed");
        // quotient: with a b | a b, Res((a b)/b, c) = Res(a b, c)/Res(b, c)
        UniPoly rab = resultant(a * b, c), rb = resultant(b, c);
        if (!is_zero(rb))
            require(resultant(a, c) == exact_div(rab, rb), "quotient identity failed");
        // shift: Res(a, b + c a) = lc(a)^k Res(a, b), k = deg(b + c a) - deg(b)
        BiPoly shifted = b + c * a;
        if (!is_zero(shifted) && !is_zero(b) && shifted.degree() >= b.degree()) {
            UniPoly lck = a.lc().pow(static_cast<unsigned>(shifted.degree() - b.degree()));
            require(resultant(a, shifted) == lck * resultant(a, b), "shift identity failed");
        }
    }
}

void criterion7() {
    std::vector<Parametrization> inputs{
        testing::nodal_cubic(),
        normalize_input(std::vector<UniPoly>{up({0, 0, 1}), up({0, 0, 0, 1}), up({1})}),
        testing::triple_point_quartic(), testing::quintic_four_singular()};
    testing::Rng rng(77007);
    int done = 0;
    while (done < 50) {
        std::uniform_int_distribution<int> dd(3, 5);
        int d = dd(rng);
        std::vector<UniPoly> comps{testing::random_poly(rng, d, 10), testing::random_poly(rng, d, 10),
                                   testing::random_poly_up_to(rng, d, 10)};
        Parametrization P;
        try {
            P = normalize_input(std::move(comps));
        } catch (const Error&) {
            continue;
        }
        if (tracing_index(P).tracing_index != 1) continue;
        ++done;
        inputs.push_back(std::move(P));
    }
    for (const auto& P : inputs) {
        ImplicitCurve C = implicitize(P);
        SingularityReport rep = classify(P, t_function(P));
        for (const auto& sg : rep.singularities) {
            if (!sg.point) continue;
            require(multiplicity_implicit(C, *sg.point).multiplicity == sg.multiplicity,
                    "oracle multiplicity disagrees at " + to_string(*sg.point));
        }
        DegreeCheck dc = degree_consistency(rep);
        require(dc.mult_sum == dc.actual, "multiplicity sum differs from deg T");
    }
}

void criterion8() {
    for (const Parametrization& P :
         {testing::triple_point_quartic(), testing::quintic_four_singular(),
          testing::quintic_family(), testing::space_quintic(), testing::nodal_cubic(),
          testing::circle()}) {
        PropernessResult pr = tracing_index(P);
        require(pr.tracing_index == 1, "golden input not proper");
        BiPoly tminuss(std::vector<UniPoly>{-UniPoly::variable(), UniPoly(Rational(1))});
        require(pr.G == tminuss, "G is not t - s");
    }
    for (unsigned k : {2u, 3u}) {
        require(tracing_index(compose_power(testing::nodal_cubic(), k)).tracing_index ==
                    static_cast<int>(k),
                "recomposed tracing index mismatch");
        require(tracing_index(compose_power(testing::circle(), k)).tracing_index ==
                    static_cast<int>(k),
                "recomposed tracing index mismatch");
    }
}

void criterion9() {
    for (const Parametrization& P :
         {testing::triple_point_quartic(), testing::quintic_four_singular(),
          testing::quintic_family(), testing::nodal_cubic(), testing::circle()}) {
        SingularityReport rep = classify(P, t_function(P));
        require(reconstruction(rep) == rep.T, "plane reconstruction failed");
    }
    SpaceProjection proj = t_function_space(project_space(testing::space_quintic(), 0));
    SingularityReport rep = classify_space(proj);
    require(reconstruction(rep) == rep.T, "space reconstruction failed");
}

void criterion10() {
    require(!cli_path.empty() && !samples_dir.empty(),
            "CLI path and samples directory not supplied");
    std::string in = samples_dir + "/space_quintic.txt";
    std::string out1 = "/tmp/csing_accept_1.json", out2 = "/tmp/csing_accept_2.json";
    for (const std::string& out : {out1, out2}) {
        std::string cmd =
            cli_path + " " + in + " --space --seed 7 --quiet --tangents --json " + out;
        require(std::system(cmd.c_str()) == 0, "CLI run failed: " + cmd);
    }
    auto slurp = [](const std::string& path) {
        std::ifstream f(path, std::ios::binary);
        std::ostringstream buf;
        buf << f.rdbuf();
        return buf.str();
    };
    std::string a = slurp(out1), b = slurp(out2);
    require(!a.empty() && a == b, "JSON outputs are not byte-identical");
    std::remove(out1.c_str());
    std::remove(out2.c_str());
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) cli_path = argv[1];
    if (argc > 2) samples_dir = argv[2];

    struct Criterion {
        int id;
        const char* desc;
        double budget_s;
        std::function<void()> fn;
    };
    std::vector<Criterion> criteria{
        {1, "golden quartic: fibre, multiplicity, tangents, character", 1.0, criterion1},
        {2, "golden quintic: T-function and four singularities", 5.0, criterion2},
        {3, "golden quintic: conjugate family classification", 10.0, criterion3},
        {4, "golden space quintic: T_E, cofactor, double points", 30.0, criterion4},
        {5, "three T-forms agree on 200 random proper inputs", 300.0, criterion5},
        {6, "resultant identities on 500 random triples vs Sylvester", 300.0, criterion6},
        {7, "implicit oracle equivalence on 50 random + constructed", 300.0, criterion7},
        {8, "properness: G = t - s on goldens; index k under t -> t^k", 10.0, criterion8},
        {9, "reconstruction invariant on all classified inputs", 60.0, criterion9},
        {10, "determinism: byte-identical JSON for repeated seeded runs", 60.0, criterion10},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string verdict = "PASS", detail;
        try {
            c.fn();
        } catch (const Failure& f) {
            verdict = "FAIL";
            detail = f.msg;
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (verdict == "PASS" && secs > c.budget_s) {
            verdict = "FAIL";
            detail = "exceeded time budget";
        }
        if (verdict == "FAIL") ++failures;
        std::printf("criterion %2d: %s (%6.2fs) %s%s%s\n", c.id, verdict.c_str(), secs, c.desc,
                    detail.empty() ? "" : " -- ", detail.c_str());
    }
    return failures == 0 ? 0 : 1;
}
