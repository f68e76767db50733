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

#ifndef CSING_ERRORS_HPP
#define CSING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace csing {

/// Base class for all library errors. `code()` is a stable,
/// machine-readable identifier suitable for CLI/JSON output.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct NonZeroRemainder : Error {
    explicit NonZeroRemainder(const std::string& msg = "exact division left a nonzero remainder")
        : Error("NON_ZERO_REMAINDER", msg) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg = "division by zero")
        : Error("DIVISION_BY_ZERO", msg) {}
};

struct IsALine : Error {
    explicit IsALine(const std::string& msg = "the parametrized curve is a line")
        : Error("IS_A_LINE", msg) {}
};

struct ZeroParametrization : Error {
    explicit ZeroParametrization(const std::string& msg = "parametrization is identically zero")
        : Error("ZERO_PARAMETRIZATION", msg) {}
};

struct NotProper : Error {
    explicit NotProper(int index)
        : Error("NOT_PROPER",
                "parametrization is not proper (tracing index " + std::to_string(index) + ")"),
          tracing_index(index) {}
    int tracing_index;
};

struct LimitPointUnsupported : Error {
    explicit LimitPointUnsupported(const std::string& msg =
                                       "multiplicity at the limit point is not supported")
        : Error("LIMIT_POINT_UNSUPPORTED", msg) {}
};

struct InternalInconsistency : Error {
    explicit InternalInconsistency(const std::string& msg)
        : Error("INTERNAL_INCONSISTENCY", msg) {}
};

struct TransformFailure : Error {
    explicit TransformFailure(const std::string& msg =
                                  "could not find a coordinate change removing bad points")
        : Error("TRANSFORM_FAILURE", msg) {}
};

struct NonIntegerFamilySize : Error {
    explicit NonIntegerFamilySize(const std::string& msg =
                                      "conjugate family degree is not divisible by multiplicity")
        : Error("NON_INTEGER_FAMILY_SIZE", msg) {}
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error("PARSE_ERROR", msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

} // namespace csing

#endif
