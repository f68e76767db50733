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

#ifndef CSING_POLY_HPP
#define CSING_POLY_HPP

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

#include "csing/errors.hpp"
#include "csing/rational.hpp"

namespace csing {

/// Dense univariate polynomial over a commutative ring R, lowest degree
/// first. R must be constructible from long, support +,-,*,==, and provide
/// free functions is_zero(R) and exact_div(R,R). Instantiated with
/// Rational, Poly<Rational> (bivariate) and SparsePoly (the Z-ring).
template <class R>
class Poly {
public:
    Poly() = default;
    explicit Poly(const R& c) { coeffs_.push_back(c); trim(); }
    explicit Poly(long n) : Poly(R(n)) {}
    explicit Poly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    /// The monomial x.
    static Poly variable() { return monomial(R(1), 1); }

    static Poly monomial(const R& c, std::size_t deg) {
        std::vector<R> v(deg + 1, R(0));
        v[deg] = c;
        return Poly(std::move(v));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero_poly() const { return coeffs_.empty(); }

    const R& lc() const {
        assert(!coeffs_.empty());
        return coeffs_.back();
    }

    /// Coefficient of x^i, zero beyond the degree.
    const R& coeff(std::size_t i) const {
        static const R zero{0};
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }

    const std::vector<R>& coeffs() const { return coeffs_; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<R> v(std::max(a.coeffs_.size(), b.coeffs_.size()), R(0));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(v));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<R> v(std::max(a.coeffs_.size(), b.coeffs_.size()), R(0));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
        return Poly(std::move(v));
    }

    Poly operator-() const {
        std::vector<R> v = coeffs_;
        for (auto& c : v) c = R(0) - c;
        return Poly(std::move(v));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero_poly() || b.is_zero_poly()) return Poly();
        std::vector<R> v(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(v));
    }

    friend Poly operator*(const Poly& a, const R& s) {
        std::vector<R> v = a.coeffs_;
        for (auto& c : v) c = c * s;
        return Poly(std::move(v));
    }

    friend Poly operator*(const R& s, const Poly& a) { return a * s; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    /// Multiply by c*x^k.
    Poly shifted_scaled(const R& c, std::size_t k) const {
        if (is_zero_poly() || is_zero(c)) return Poly();
        std::vector<R> v(coeffs_.size() + k, R(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + k] = coeffs_[i] * c;
        return Poly(std::move(v));
    }

    Poly pow(unsigned e) const {
        Poly r(R(1)), b = *this;
        while (e) {
            if (e & 1u) r *= b;
            b = (e >>= 1) ? b * b : b;
        }
        return r;
    }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return Poly();
        std::vector<R> v(coeffs_.size() - 1, R(0));
        for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * R(static_cast<long>(i));
        return Poly(std::move(v));
    }

    template <class S>
    S eval(const S& x) const {
        S acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + S(coeffs_[i]);
        return acc;
    }

    /// f(x + a), synthetic Horner shift.
    Poly taylor_shift(const R& a) const {
        Poly acc;
        Poly lin(std::vector<R>{a, R(1)});
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * lin + Poly(coeffs_[i]);
        return acc;
    }

private:
    void trim() {
        while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<R> coeffs_;
};

template <class R>
bool is_zero(const Poly<R>& p) {
    return p.is_zero_poly();
}

/// Exact division in R[x]; throws NonZeroRemainder when b does not divide a.
template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
    if (is_zero(b)) throw DivisionByZero("polynomial division by zero");
    if (is_zero(a)) return Poly<R>();
    if (a.degree() < b.degree()) throw NonZeroRemainder("degree of divisor exceeds dividend");
    std::vector<R> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, R(0));
    Poly<R> r = a;
    while (!is_zero(r) && r.degree() >= b.degree()) {
        std::size_t k = static_cast<std::size_t>(r.degree() - b.degree());
        R c = exact_div(r.lc(), b.lc());
        q[k] = c;
        r = r - b.shifted_scaled(c, k);
        if (!is_zero(r) && r.degree() >= b.degree() + static_cast<int>(k))
            throw NonZeroRemainder("inexact polynomial division");
    }
    if (!is_zero(r)) throw NonZeroRemainder("inexact polynomial division");
    return Poly<R>(std::move(q));
}

/// Pseudo-remainder: prem(a,b) with multiplier lc(b)^(deg a - deg b + 1).
template <class R>
Poly<R> prem(Poly<R> a, const Poly<R>& b) {
    assert(!is_zero(b));
    int e = a.degree() - b.degree() + 1;
    if (e <= 0) return a;
    const R& lb = b.lc();
    while (!is_zero(a) && a.degree() >= b.degree()) {
        std::size_t k = static_cast<std::size_t>(a.degree() - b.degree());
        a = a * lb - b.shifted_scaled(a.lc(), k);
        --e;
    }
    R mult(1);
    for (int i = 0; i < e; ++i) mult = mult * lb;
    return a * mult;
}

template <class R>
R ring_pow(R base, unsigned e) {
    R r(1);
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

} // namespace csing

#endif
