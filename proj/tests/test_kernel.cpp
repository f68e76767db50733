#include <catch2/catch_amalgamated.hpp>

#include "csing/subresultant.hpp"
#include "csing/unipoly.hpp"
#include "support/bareiss.hpp"
#include "support/generators.hpp"

using namespace csing;

namespace {

UniPoly up(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return UniPoly(std::move(v));
}

} // namespace

TEST_CASE("polynomial arithmetic basics") {
    UniPoly t = UniPoly::variable();
    UniPoly a = up({-1, 0, 1}); // t^2 - 1
    CHECK(a == (t - UniPoly(1l)) * (t + UniPoly(1l)));
    CHECK(a.degree() == 2);
    CHECK(a.eval(Rational(3)) == Rational(8));
    CHECK(a.derivative() == up({0, 2}));
    CHECK(is_zero(a - a));
    CHECK(a.taylor_shift(Rational(1)) == up({0, 2, 1}));
}

TEST_CASE("exact division") {
    // (t^2 - s^2) / (t - s) = t + s, in (Q[s])[t]
    UniPoly s = UniPoly::variable();
    BiPoly num(std::vector<UniPoly>{-(s * s), UniPoly(), UniPoly(1l)});
    BiPoly den(std::vector<UniPoly>{-s, UniPoly(1l)});
    BiPoly q = exact_div(num, den);
    CHECK(q == BiPoly(std::vector<UniPoly>{s, UniPoly(1l)}));

    // (t^2 + 1) / (t - 1) is inexact
    CHECK_THROWS_AS(exact_div(up({1, 0, 1}), up({-1, 1})), NonZeroRemainder);
}

TEST_CASE("exact_div(a*b, b) == a on random inputs") {
    testing::Rng rng(12345);
    for (int i = 0; i < 100; ++i) {
        UniPoly a = testing::random_poly_up_to(rng, 6);
        UniPoly b = testing::random_poly_up_to(rng, 5);
        CHECK(exact_div(a * b, b) == a);
    }
}

TEST_CASE("gcd: worked fibre example") {
    // gcd(-2t^3-10t^2-14t-6, 2t^4+14t^3+34t^2+34t+12) = (t+3)(t+1)^2 monic
    UniPoly a = up({-6, -14, -10, -2});
    UniPoly b = up({12, 34, 34, 14, 2});
    UniPoly g = poly_gcd(a, b);
    CHECK(g == up({3, 7, 5, 1}));
    // divides both inputs exactly
    CHECK_NOTHROW(exact_div(a, g));
    CHECK_NOTHROW(exact_div(b, g));
}

TEST_CASE("gcd: edge cases and properties") {
    UniPoly p = up({2, 0, 4});
    CHECK(poly_gcd(p, UniPoly()) == monic(p));
    CHECK(poly_gcd(UniPoly(), p) == monic(p));
    CHECK(is_zero(poly_gcd(UniPoly(), UniPoly())));
    // shared linear factor by construction
    UniPoly g = poly_gcd(up({-1, 1}) * up({2, 0, 1}), up({-1, 1}) * up({5, 1}));
    CHECK(g == up({-1, 1}));

    testing::Rng rng(777);
    for (int i = 0; i < 60; ++i) {
        UniPoly a = testing::random_poly_up_to(rng, 5, 6);
        UniPoly b = testing::random_poly_up_to(rng, 5, 6);
        UniPoly gab = poly_gcd(a, b);
        CHECK(gab == poly_gcd(b, a));
        CHECK(gab.lc() == Rational(1));
        CHECK_NOTHROW(exact_div(a, gab));
        CHECK_NOTHROW(exact_div(b, gab));
        // common factor is always found
        UniPoly f = testing::random_poly(rng, 2, 4);
        UniPoly gf = poly_gcd(a * f, b * f);
        CHECK_NOTHROW(exact_div(gf, monic(f)));
    }
}

TEST_CASE("resultant agrees with the Sylvester/Bareiss oracle") {
    testing::Rng rng(99);
    for (int i = 0; i < 80; ++i) {
        UniPoly a = testing::random_poly_up_to(rng, 5, 8);
        UniPoly b = testing::random_poly_up_to(rng, 5, 8);
        CHECK(resultant(a, b) == testing::sylvester_resultant(a, b));
    }
    // and in (Q[s])[t]
    UniPoly s = UniPoly::variable();
    for (int i = 0; i < 25; ++i) {
        std::vector<UniPoly> ac, bc;
        std::uniform_int_distribution<int> dd(1, 3);
        int da = dd(rng), db = dd(rng);
        for (int k = 0; k <= da; ++k) ac.push_back(testing::random_poly_up_to(rng, 2, 5));
        for (int k = 0; k <= db; ++k) bc.push_back(testing::random_poly_up_to(rng, 2, 5));
        BiPoly A{ac}, B{bc};
        if (is_zero(A) || is_zero(B)) continue;
        CHECK(resultant(A, B) == testing::sylvester_resultant(A, B));
    }
}

TEST_CASE("resultant special values") {
    // Res_t(t - s, H(t)) = H(s)
    UniPoly s = UniPoly::variable();
    BiPoly tminuss(std::vector<UniPoly>{-s, UniPoly(1l)});
    UniPoly h = up({3, 7, 5, 1});
    std::vector<UniPoly> hc;
    for (int i = 0; i <= h.degree(); ++i) hc.push_back(UniPoly(h.coeff(i)));
    BiPoly H{hc};
    CHECK(resultant(tminuss, H) == h);

    // Res_t(A, K) = K^deg_t(A) for K free of t
    BiPoly A(std::vector<UniPoly>{s, s * s, UniPoly(1l), UniPoly(2l)});
    UniPoly k = up({1, 4});
    CHECK(resultant(A, BiPoly(k)) == k * k * k);
}

TEST_CASE("bivariate gcd normalization") {
    // gcd(c*(t-s)*u, c'*(t-s)*v) with coprime u,v comes out as exactly t-s
    UniPoly s = UniPoly::variable();
    BiPoly tminuss(std::vector<UniPoly>{-s, UniPoly(1l)});
    BiPoly u(std::vector<UniPoly>{s * s + UniPoly(1l), UniPoly(2l)});
    BiPoly v(std::vector<UniPoly>{UniPoly(5l), s});
    BiPoly g = gcd_poly(tminuss * u * BiPoly(UniPoly(-3l)), tminuss * v * BiPoly(UniPoly(7l)));
    CHECK(g == tminuss);
}

TEST_CASE("squarefree decomposition (Yun)") {
    UniPoly f = up({-1, 1}).pow(3) * up({2, 1}).pow(2) * up({1, 0, 1});
    auto parts = squarefree_decomposition(f * Rational(6));
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].first == up({1, 0, 1}));
    CHECK(parts[0].second == 1);
    CHECK(parts[1].first == up({2, 1}));
    CHECK(parts[1].second == 2);
    CHECK(parts[2].first == up({-1, 1}));
    CHECK(parts[2].second == 3);
}
