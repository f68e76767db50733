// Deterministic random generators shared by the property-style tests.
#ifndef CSING_TESTS_GENERATORS_HPP
#define CSING_TESTS_GENERATORS_HPP

#include <random>
#include <vector>

#include "csing/unipoly.hpp"

namespace csing::testing {

using Rng = std::mt19937;

inline Rational random_rational_int(Rng& rng, int height) {
    std::uniform_int_distribution<int> dist(-height, height);
    return Rational(dist(rng));
}

/// Random integer-coefficient polynomial of exactly the given degree.
inline UniPoly random_poly(Rng& rng, int degree, int height = 10) {
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = random_rational_int(rng, height);
    std::uniform_int_distribution<int> lead(1, height);
    std::uniform_int_distribution<int> sign(0, 1);
    c.back() = Rational(sign(rng) ? lead(rng) : -lead(rng));
    return UniPoly(std::move(c));
}

/// Random nonzero polynomial of degree <= max_degree (can be constant).
inline UniPoly random_poly_up_to(Rng& rng, int max_degree, int height = 10) {
    std::uniform_int_distribution<int> dd(0, max_degree);
    return random_poly(rng, dd(rng), height);
}

} // namespace csing::testing

#endif
