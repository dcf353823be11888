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

#ifndef ETALE_FAMILY_HPP
#define ETALE_FAMILY_HPP

#include <optional>
#include <string>
#include <vector>

#include "etale/endo.hpp"

namespace etale {

struct FamilySpec {
    int k = 2;
    int rbar = 1;
    EtaleParams base;                  // certified, alpha = 0, a = 1
    std::vector<FieldElement> avector;  // (a_1, ..., a_n)

    int r() const { return rbar * k; }
};

/// 1 + sum a_i x^{r i}; trailing zeros do not change the result.
Poly deformation_poly(const std::vector<FieldElement>& avector, int r);
/// Same with a_i replaced by parameter variables a1..an (over Q).
Poly symbolic_deformation_poly(int n, int r);

/// The C+ automorphism (x, y + ((z + P x^r)^k - z^k)/x^r, z + P x^r) of s; P in x,
/// possibly with parameter variables.
SurfaceMap theta(const Poly& P, const SurfaceSpec& s);

/// pi(x,y,z) = (x^k, y, xz): tilde(k, rbar k) -> hyper(k, rbar), degree k.
SurfaceMap covering(int k, int rbar);

/// pi after Theta^F after j_eta on hyper(k, rbar).
SurfaceMap family_member(const FamilySpec& f);
/// Same construction for an arbitrary deformation polynomial F in x (parameters allowed).
SurfaceMap family_member_for(const EtaleParams& base, int rbar, const Poly& F);

struct EcVerdict {
    bool equivalent = false;
    // P1(x) = lambda^r P2(lambda x) holds exactly for every lambda with lambda^g = mu
    int g = 0;
    std::optional<FieldElement> mu;
    std::optional<FieldElement> lambda;  // an explicit witness when one is found in the field
    std::string reason;
};

/// Decides whether P1(x) = lambda^r P2(lambda x) for some nonzero lambda.
EcVerdict ec_equivalent(const Poly& P1, const Poly& P2, int r);

/// True iff no two distinct a-vectors (after stripping trailing zeros) are equivalent;
/// false on duplicates.  Members must share k, rbar and the base.
bool family_pairwise_distinct(const std::vector<FamilySpec>& fs);

/// Trailing zero coordinates removed.
std::vector<FieldElement> canonical_avector(std::vector<FieldElement> a);

}  // namespace etale

#endif  // ETALE_FAMILY_HPP
