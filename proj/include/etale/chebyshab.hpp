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

#ifndef ETALE_CHEBYSHAB_HPP
#define ETALE_CHEBYSHAB_HPP

#include <string>
#include <vector>

#include "etale/poly.hpp"

namespace etale {

/// First kind, by the three-term recurrence.
Poly chebyshev_T(int n, const std::string& var = "x");
/// Second kind, U_n = T_{n+1}' / (n+1).
Poly chebyshev_U(int n, const std::string& var = "x");

struct RamificationProfile {
    std::vector<FieldElement> branch_points;
    std::vector<std::vector<int>> partitions;  // one per branch point, non-increasing
    int degree = 0;
};

struct ThomResult {
    bool feasible = false;
    std::vector<std::string> diagnostics;  // empty when feasible
};

/// Both counting conditions for a polynomial cover of the line.
ThomResult thom_feasible(const RamificationProfile& profile);

struct ChebyshevVerdict {
    bool yes = false;
    int n = 0;           // degree when yes
    std::string reason;  // when no
};

/// Decides P == T_n, n = deg P, with the exact normalization tests.
ChebyshevVerdict is_chebyshev_normalized(const Poly& P);

struct ProfileExtraction {
    bool ok = false;  // false: more than two critical values
    RamificationProfile profile;
    std::string reason;
};

/// Profile over the branch points (0, 1); degree 1 gives ((1)) over (0).
ProfileExtraction extract_profile(const Poly& phi);

}  // namespace etale

#endif  // ETALE_CHEBYSHAB_HPP
