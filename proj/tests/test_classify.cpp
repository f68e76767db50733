#include <catch2/catch_amalgamated.hpp>

#include "csing/classify.hpp"
#include "support/examples.hpp"

using namespace csing;
using testing::pt;
using testing::up;

namespace {

bool has_warning(const SingularityReport& rep, const std::string& code) {
    for (const auto& w : rep.warnings)
        if (w.rfind(code, 0) == 0) return true;
    return false;
}

UniPoly reconstruction(const SingularityReport& rep) {
    UniPoly r(Rational(1));
    for (const auto& sg : rep.singularities)
        for (int i = 1; i < sg.multiplicity; ++i) r = r * sg.H;
    return monic(r);
}

} // namespace

TEST_CASE("classify: quintic with four singularities") {
    Parametrization P = testing::quintic_four_singular();
    SingularityReport rep = classify(P, t_function(P));
    REQUIRE(rep.singularities.size() == 4);

    const Singularity& s0 = rep.singularities[0];
    CHECK(s0.point == pt({-7, 7, 5})); // (-7/5 : 7/5 : 1)
    CHECK(s0.multiplicity == 2);
    CHECK(s0.H == up({6, 0, 1}));
    CHECK(s0.character == Character::undetermined);

    const Singularity& s1 = rep.singularities[1];
    CHECK(s1.point == pt({0, 0, 1}));
    CHECK(s1.multiplicity == 3);
    CHECK(s1.H == up({0, -1, 0, 1})); // s(s-1)(s+1)
    CHECK(s1.t_factors.size() == 3);
    CHECK(s1.character == Character::ordinary);

    const Singularity& s2 = rep.singularities[2];
    CHECK(s2.point == pt({0, 1, 0}));
    CHECK(s2.multiplicity == 2);
    CHECK(s2.H == up({6, -5, 1})); // (s-2)(s-3)
    CHECK(s2.character == Character::ordinary);

    const Singularity& s3 = rep.singularities[3];
    CHECK(s3.point == pt({1, 0, 0}));
    CHECK(s3.multiplicity == 2);
    CHECK(s3.H == up({6, 5, 1})); // (s+2)(s+3)

    CHECK(reconstruction(rep) == rep.T);
    CHECK(has_warning(rep, "UNDETERMINED_CHARACTER"));
    CHECK_FALSE(has_warning(rep, "INCONSISTENT_EXPONENTS"));

    DegreeCheck dc = degree_consistency(rep);
    CHECK(dc.expected == 12);
    CHECK(dc.actual == 12);
    CHECK(dc.mult_sum == 12);
    CHECK(dc.ok);
}

TEST_CASE("classify: quintic with a conjugate family") {
    Parametrization P = testing::quintic_family();
    SingularityReport rep = classify(P, t_function(P));
    REQUIRE(rep.singularities.size() == 2);

    const Singularity& tri = rep.singularities[0];
    CHECK(tri.kind == Singularity::Kind::rational_point);
    REQUIRE(tri.point.has_value());
    CHECK(tri.multiplicity == 3);
    CHECK(tri.H == up({-6, 11, -6, 1})); // (s-1)(s-2)(s-3)

    const Singularity& fam = rep.singularities[1];
    CHECK(fam.kind == Singularity::Kind::conjugate_family);
    REQUIRE(fam.family.has_value());
    CHECK(fam.family->m.degree() == 6);
    CHECK(fam.family->point_multiplicity == 2);
    CHECK(fam.family->count == 3);
    CHECK(fam.multiplicity == 2);
    CHECK(fam.family->residues.size() == 3);
    for (const auto& r : fam.family->residues) CHECK(r.degree() < 6);

    CHECK(reconstruction(rep) == rep.T);
    DegreeCheck dc = degree_consistency(rep);
    CHECK(dc.actual == 12);
    CHECK(dc.mult_sum == 3 * 2 + 3 * (2 * 1));
    CHECK(dc.ok);
}

TEST_CASE("classify: non-ordinary triple point flags exponents") {
    Parametrization P = testing::triple_point_quartic();
    SingularityReport rep = classify(P, t_function(P));
    REQUIRE(rep.singularities.size() == 1);
    const Singularity& sg = rep.singularities[0];
    CHECK(sg.point == pt({0, 0, 1}));
    CHECK(sg.multiplicity == 3);
    CHECK(sg.H == up({3, 7, 5, 1})); // (s+3)(s+1)^2
    CHECK(sg.character == Character::non_ordinary);
    // T = (s+1)^4 (s+3)^2: the (s+1) exponent is not m-1
    CHECK(has_warning(rep, "INCONSISTENT_EXPONENTS"));
    // the reconstruction identity still holds: H^2 = T
    CHECK(reconstruction(rep) == rep.T);
    DegreeCheck dc = degree_consistency(rep);
    CHECK(dc.expected == 6);
    CHECK(dc.actual == 6);
    CHECK(dc.ok);
}

TEST_CASE("classify: node and smooth conic") {
    Parametrization N = testing::nodal_cubic();
    SingularityReport rn = classify(N, t_function(N));
    REQUIRE(rn.singularities.size() == 1);
    CHECK(rn.singularities[0].point == pt({0, 0, 1}));
    CHECK(rn.singularities[0].multiplicity == 2);
    CHECK(rn.singularities[0].character == Character::ordinary);
    CHECK(rn.warnings.empty());
    CHECK(degree_consistency(rn).ok);

    Parametrization C = testing::circle();
    SingularityReport rc = classify(C, t_function(C));
    CHECK(rc.singularities.empty());
    CHECK(rc.warnings.empty());
    DegreeCheck dc = degree_consistency(rc);
    CHECK(dc.expected == 0);
    CHECK(dc.actual == 0);
    CHECK(dc.ok);
}

TEST_CASE("classify: residue decoding of the irrational double point") {
    Parametrization P = testing::quintic_four_singular();
    UniPoly f = up({6, 0, 1}); // s^2 + 6
    auto r = detail::decode_residues(P.components, f);
    REQUIRE(r.size() == 3);
    CHECK(r[0] == UniPoly(Rational(-7, 5)));
    CHECK(r[1] == UniPoly(Rational(7, 5)));
    CHECK(r[2] == UniPoly(Rational(1)));
}

TEST_CASE("classify: space quintic merges the projected bad points") {
    SpaceProjection proj = t_function_space(project_space(testing::space_quintic(), 0));
    SingularityReport rep = classify_space(proj);
    REQUIRE(rep.singularities.size() == 3);

    const Singularity& s0 = rep.singularities[0];
    CHECK(s0.point == pt({0, 0, 0, 1}));
    CHECK(s0.multiplicity == 2);
    CHECK(s0.H == up({0, 1, 1})); // s(s+1)
    CHECK_FALSE(s0.tangents_computed);

    // the bad-point cluster: (0:1:3:0) at s = 2 and (0:1:2:0) at s = 3
    // collide under projection; one representative is reported
    const Singularity& s1 = rep.singularities[1];
    CHECK(s1.point == pt({0, 1, 3, 0}));
    CHECK(s1.multiplicity == 2);
    CHECK(s1.H == up({6, -5, 1})); // (s-2)(s-3)
    CHECK(s1.t_factors.size() == 2);
    CHECK(has_warning(rep, "BAD_POINT_CLUSTER"));

    const Singularity& s2 = rep.singularities[2];
    CHECK(s2.point == pt({1, 0, 0, 0}));
    CHECK(s2.multiplicity == 2);
    CHECK(s2.H == up({6, 5, 1})); // (s+2)(s+3)

    CHECK(reconstruction(rep) == rep.T);
    DegreeCheck dc = degree_consistency(rep);
    CHECK(dc.expected == -1);
    CHECK(dc.actual == 6);
    CHECK(dc.mult_sum == 6);
    CHECK(dc.ok);
}

TEST_CASE("classify: smooth space cubic has nothing to report") {
    SpaceProjection proj = t_function_space(project_space(testing::twisted_cubic(), 0));
    SingularityReport rep = classify_space(proj);
    CHECK(rep.singularities.empty());
    CHECK(rep.warnings.empty());
    CHECK(degree_consistency(rep).ok);
}

TEST_CASE("classify: distinct entries have coprime fibre functions") {
    for (const Parametrization& P : {testing::quintic_four_singular(), testing::quintic_family()}) {
        SingularityReport rep = classify(P, t_function(P));
        for (std::size_t i = 0; i < rep.singularities.size(); ++i)
            for (std::size_t j = i + 1; j < rep.singularities.size(); ++j)
                CHECK(poly_gcd(rep.singularities[i].H, rep.singularities[j].H).degree() == 0);
    }
}
