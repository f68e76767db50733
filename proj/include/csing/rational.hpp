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

#ifndef CSING_RATIONAL_HPP
#define CSING_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "csing/errors.hpp"

namespace csing {

/// Exact rational number. mpq_class keeps values canonical (lowest terms,
/// positive denominator) as long as arithmetic goes through its operators.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return q.get_num() == 0; }

inline Rational exact_div(const Rational& a, const Rational& b) {
    if (is_zero(b)) throw DivisionByZero();
    return a / b;
}

/// Serialized form used everywhere a rational leaves the library:
/// "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace csing

#endif
