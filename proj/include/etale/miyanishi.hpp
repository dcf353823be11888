/*
   Copyright 2026 The etale-forge Authors

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

#ifndef ETALE_MIYANISHI_HPP
#define ETALE_MIYANISHI_HPP

#include <optional>
#include <utility>
#include <vector>

#include "etale/endo.hpp"

namespace etale {

struct MiyParams {
    int n = 2;
    Poly b;  // univariate in x
};

struct MiyBCheck {
    bool ok = false;
    Poly s;          // (x^2 - 1) b^2 = 1 - s U_{n-1}, when ok
    Poly remainder;  // of 1 - (x^2 - 1) b^2 modulo U_{n-1}
};

/// 1 - (x^2 - 1) b^2 divisible by U_{n-1}.
MiyBCheck miy_b_check(int n, const Poly& b);

/// (T_n(x), U_{n-1}^2 y / n + (x^2 - 1) U_{n-1} b) in variables x, y; BadB when the b-condition fails.
std::pair<Poly, Poly> miy_eta0(const MiyParams& p);

/// Rational function on the (x, y) chart as a numerator / denominator pair.
struct RatFn {
    Poly num, den;
    RatFn(Poly n, Poly d);
    explicit RatFn(Poly n);
    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator*(const RatFn& o) const;
    RatFn operator/(const RatFn& o) const;
    RatFn pow(int e) const;
    /// Cross-multiplied equality.
    bool equals(const RatFn& o) const;
};

struct MiyLiftReport {
    std::vector<NamedCheck> checks;  // b_condition, V1_v1, V1_v2, V1_v3, V1_v3_s, V2_plus, V2_minus, V3
    bool all_ok() const;
    const NamedCheck* find(const std::string& name) const;
};

/// Every check runs even when the b-condition fails, so each failure is reported.
MiyLiftReport miy_lift_check(const MiyParams& p);

/// n = 2: b = theta over theta^2 + 1; n = 3: b = (2/3) theta over theta^2 + 3.  UnsupportedN otherwise.
MiyParams miy_b_find(int n);

}  // namespace etale

#endif  // ETALE_MIYANISHI_HPP
