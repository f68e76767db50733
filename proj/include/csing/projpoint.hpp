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

#ifndef CSING_PROJPOINT_HPP
#define CSING_PROJPOINT_HPP

#include <string>
#include <utility>
#include <vector>

#include "csing/rational.hpp"
#include "csing/errors.hpp"

namespace csing {

/// Projective point with canonical homogeneous coordinates: the last
/// nonzero coordinate is scaled to 1, so equality is coordinate-wise.
class ProjPoint {
public:
    explicit ProjPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
        std::size_t last = coords_.size();
        for (std::size_t i = coords_.size(); i-- > 0;) {
            if (!is_zero(coords_[i])) {
                last = i;
                break;
            }
        }
        if (last == coords_.size())
            throw InternalInconsistency("projective point with all coordinates zero");
        Rational inv = Rational(1) / coords_[last];
        for (auto& c : coords_) c *= inv;
    }

    const std::vector<Rational>& coords() const { return coords_; }
    std::size_t dim() const { return coords_.size() - 1; }

    /// True when the homogenizing (last) coordinate is nonzero.
    bool is_affine() const { return !is_zero(coords_.back()); }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
        if (a.coords_.size() != b.coords_.size()) return a.coords_.size() < b.coords_.size();
        for (std::size_t i = 0; i < a.coords_.size(); ++i)
            if (a.coords_[i] != b.coords_[i]) return a.coords_[i] < b.coords_[i];
        return false;
    }

private:
    std::vector<Rational> coords_;
};

inline std::string to_string(const ProjPoint& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.coords().size(); ++i) {
        if (i) out += ":";
        out += to_string(p.coords()[i]);
    }
    return out + ")";
}

} // namespace csing

#endif
