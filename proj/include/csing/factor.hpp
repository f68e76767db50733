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

#ifndef CSING_FACTOR_HPP
#define CSING_FACTOR_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "csing/unipoly.hpp"

namespace csing {

/// Complete irreducible factorization over Q:
/// input = unit * prod factors[i].first ^ factors[i].second,
/// with monic pairwise-coprime irreducible factors in deterministic order.
struct Factorization {
    Rational unit{0};
    std::vector<std::pair<UniPoly, int>> factors;

    UniPoly reconstruct() const {
        UniPoly r(unit);
        for (const auto& [f, e] : factors) r *= f.pow(static_cast<unsigned>(e));
        return r;
    }
};

namespace factor_detail {

using ZV = std::vector<Integer>;

inline ZV reduce_mod(ZV a, const Integer& p) {
    for (auto& c : a) {
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    }
    detail::ztrim(a);
    return a;
}

inline ZV add_mod(const ZV& a, const ZV& b, const Integer& p) {
    ZV r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    return reduce_mod(std::move(r), p);
}

inline ZV sub_mod(const ZV& a, const ZV& b, const Integer& p) {
    ZV r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    return reduce_mod(std::move(r), p);
}

inline ZV mul_mod(const ZV& a, const ZV& b, const Integer& p) {
    if (a.empty() || b.empty()) return {};
    ZV r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return reduce_mod(std::move(r), p);
}

inline Integer inv_mod(const Integer& a, const Integer& p) {
    Integer r;
    mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
}

/// Remainder of a by monic-izable f, mod p.
inline ZV rem_mod(ZV a, const ZV& f, const Integer& p) {
    const Integer linv = inv_mod(f.back(), p);
    while (detail::zdeg(a) >= detail::zdeg(f)) {
        Integer c = a.back() * linv % p;
        std::size_t k = static_cast<std::size_t>(detail::zdeg(a) - detail::zdeg(f));
        for (std::size_t i = 0; i < f.size(); ++i) a[i + k] -= c * f[i];
        a = reduce_mod(std::move(a), p);
        if (detail::zdeg(a) >= detail::zdeg(f) + static_cast<int>(k)) a.pop_back();
        detail::ztrim(a);
    }
    return a;
}

inline ZV quot_mod(ZV a, const ZV& f, const Integer& p) {
    const Integer linv = inv_mod(f.back(), p);
    if (detail::zdeg(a) < detail::zdeg(f)) return {};
    ZV q(static_cast<std::size_t>(detail::zdeg(a) - detail::zdeg(f)) + 1, 0);
    while (detail::zdeg(a) >= detail::zdeg(f)) {
        Integer c = a.back() * linv % p;
        std::size_t k = static_cast<std::size_t>(detail::zdeg(a) - detail::zdeg(f));
        q[k] = c;
        for (std::size_t i = 0; i < f.size(); ++i) a[i + k] -= c * f[i];
        a = reduce_mod(std::move(a), p);
    }
    return q;
}

inline ZV monic_mod(ZV a, const Integer& p) {
    if (a.empty()) return a;
    const Integer linv = inv_mod(a.back(), p);
    for (auto& c : a) c = c * linv % p;
    return a;
}

inline ZV gcd_mod(ZV a, ZV b, const Integer& p) {
    while (!b.empty()) {
        ZV r = rem_mod(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic_mod(std::move(a), p);
}

inline ZV deriv_mod(const ZV& a, const Integer& p) {
    if (a.size() <= 1) return {};
    ZV r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
    return reduce_mod(std::move(r), p);
}

inline ZV pow_mod(ZV base, Integer e, const ZV& f, const Integer& p) {
    ZV r{1};
    base = rem_mod(std::move(base), f, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = rem_mod(mul_mod(r, base, p), f, p);
        e >>= 1;
        if (e > 0) base = rem_mod(mul_mod(base, base, p), f, p);
    }
    return r;
}

inline bool zv_less(const ZV& a, const ZV& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

/// Equal-degree splitting (Cantor-Zassenhaus) of a monic product of
/// degree-d irreducibles mod odd prime p.
inline void edf(const ZV& f, int d, const Integer& p, gmp_randclass& rng, std::vector<ZV>& out) {
    if (detail::zdeg(f) == d) {
        out.push_back(f);
        return;
    }
    Integer e;
    mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    while (true) {
        ZV a(static_cast<std::size_t>(detail::zdeg(f)), 0);
        for (auto& c : a) c = rng.get_z_range(p);
        detail::ztrim(a);
        if (a.empty()) continue;
        ZV b = pow_mod(a, e, f, p);
        b = sub_mod(b, ZV{1}, p);
        ZV g = gcd_mod(b, f, p);
        if (detail::zdeg(g) > 0 && detail::zdeg(g) < detail::zdeg(f)) {
            edf(g, d, p, rng, out);
            edf(quot_mod(f, g, p), d, p, rng, out);
            return;
        }
    }
}

/// Distinct-degree then equal-degree factorization of monic squarefree f
/// mod p; result sorted deterministically.
inline std::vector<ZV> factor_mod_p(ZV f, const Integer& p) {
    std::vector<ZV> out;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(42ul);
    ZV h{0, 1}; // x
    int d = 0;
    while (detail::zdeg(f) > 0) {
        ++d;
        if (2 * d > detail::zdeg(f)) {
            out.push_back(f);
            break;
        }
        h = pow_mod(std::move(h), p, f, p);
        ZV g = gcd_mod(sub_mod(h, ZV{0, 1}, p), f, p);
        if (detail::zdeg(g) > 0) {
            edf(g, d, p, rng, out);
            f = quot_mod(f, g, p);
            h = rem_mod(std::move(h), f, p);
        }
    }
    std::sort(out.begin(), out.end(), zv_less);
    return out;
}

inline ZV symmetric_lift(ZV a, const Integer& p) {
    const Integer half = p / 2;
    for (auto& c : a)
        if (c > half) c -= p;
    detail::ztrim(a);
    return a;
}

/// Advance `idx` (strictly increasing combination of values < n) to the
/// next combination; false when exhausted.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    std::size_t i = k;
    while (i-- > 0) {
        if (idx[i] + (k - i) < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

/// Irreducible integer factors of a primitive squarefree integer
/// polynomial with positive leading coefficient (big-prime Zassenhaus).
inline std::vector<ZV> factor_squarefree_int(ZV f) {
    std::vector<ZV> result;
    const int n = detail::zdeg(f);
    if (n <= 1) {
        result.push_back(std::move(f));
        return result;
    }
    if (n == 2) {
        const Integer &a = f[2], &b = f[1], &c = f[0];
        Integer disc = b * b - 4 * a * c;
        if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) {
            Integer s;
            mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
            for (const Integer& num : {Integer(-b + s), Integer(-b - s)}) {
                Rational root = make_rational(num, 2 * a);
                result.push_back(detail::zprimitive(ZV{-root.get_num(), root.get_den()}));
            }
            std::sort(result.begin(), result.end(), zv_less);
        } else {
            result.push_back(std::move(f));
        }
        return result;
    }

    // prime from a deterministic chain: first prime past twice the
    // factor-coefficient bound with lc a unit and f squarefree mod p
    Integer norm2 = 1;
    for (const auto& c : f) norm2 += c * c;
    Integer b2;
    mpz_sqrt(b2.get_mpz_t(), norm2.get_mpz_t());
    Integer bound = ((b2 + 1) * abs(f.back())) << static_cast<unsigned>(n + 1);
    Integer p = bound < 100 ? Integer(100) : bound;
    while (true) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (f.back() % p == 0) continue;
        ZV fm = monic_mod(reduce_mod(f, p), p);
        if (detail::zdeg(gcd_mod(fm, deriv_mod(fm, p), p)) == 0) break;
    }
    ZV fm = monic_mod(reduce_mod(f, p), p);
    std::vector<ZV> mods = factor_mod_p(fm, p);

    // Zassenhaus recombination
    std::vector<ZV> pool = std::move(mods);
    while (true) {
        const std::size_t r = pool.size();
        if (r == 0) break;
        if (r == 1) {
            result.push_back(detail::zprimitive(std::move(f)));
            break;
        }
        bool found = false;
        for (std::size_t sz = 1; sz <= r / 2 && !found; ++sz) {
            std::vector<std::size_t> idx(sz);
            for (std::size_t i = 0; i < sz; ++i) idx[i] = i;
            do {
                ZV cand{f.back() % p};
                for (std::size_t i : idx) cand = mul_mod(cand, pool[i], p);
                ZV h = detail::zprimitive(symmetric_lift(std::move(cand), p));
                if (h.empty() || detail::zdeg(h) == 0) continue;
                UniPoly q;
                try {
                    q = exact_div(from_integer(f), from_integer(h));
                } catch (const NonZeroRemainder&) {
                    continue;
                }
                result.push_back(h);
                f = to_integer(q).coeffs;
                for (std::size_t i = idx.size(); i-- > 0;) pool.erase(pool.begin() + static_cast<long>(idx[i]));
                found = true;
                break;
            } while (next_combination(idx, r));
        }
        if (!found) {
            result.push_back(detail::zprimitive(std::move(f)));
            break;
        }
        if (detail::zdeg(f) == 0) break;
    }
    std::sort(result.begin(), result.end(), zv_less);
    return result;
}

} // namespace factor_detail

/// Factor p completely into monic irreducibles over Q. Output order:
/// degree, then lexicographic on coefficient vectors.
inline Factorization factor_over_rationals(const UniPoly& p) {
    Factorization out;
    if (is_zero(p)) return out;
    out.unit = p.lc();
    if (p.degree() == 0) return out;
    for (const auto& [part, mult] : squarefree_decomposition(p)) {
        factor_detail::ZV f = to_integer(part).coeffs;
        for (auto& zf : factor_detail::factor_squarefree_int(std::move(f)))
            out.factors.emplace_back(monic(from_integer(zf)), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

/// True when p is irreducible over Q (degree >= 1).
inline bool is_irreducible(const UniPoly& p) {
    if (p.degree() < 1) return false;
    Factorization f = factor_over_rationals(p);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

} // namespace csing

#endif
