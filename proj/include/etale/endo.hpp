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

#ifndef ETALE_ENDO_HPP
#define ETALE_ENDO_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "etale/chebyshab.hpp"
#include "etale/surface.hpp"

namespace etale {

/// Data of an equivariant etale endomorphism: base polynomials in t plus twisting.
struct EtaleParams {
    int k = 2;
    int r = 2;
    int a = 1;
    int alpha = 1;
    int d = 1;
    FieldElement lambda = FieldElement(NumberField::rationals(), Rational(1));
    Poly R0, R1, R2;  // univariate in "t"

    /// Common coefficient field of lambda and the R_i.
    FieldPtr field() const;
};

struct DegreeTriple {
    int d0 = 0, d1 = 0, d2 = 0;
    friend bool operator==(const DegreeTriple& a, const DegreeTriple& b) {
        return a.d0 == b.d0 && a.d1 == b.d1 && a.d2 == b.d2;
    }
};

/// nullopt when the congruence fails or a value is not a nonnegative integer.
std::optional<DegreeTriple> degrees_from(int k, int r, int alpha, int d);

/// alpha = 1, or k | r with alpha = 0 and a = 1; gcd(a, k) = 1 in both cases.
bool alpha_condition(int k, int r, int alpha, int a);

struct NamedCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct EtaleCertificate {
    EtaleParams params;
    std::vector<NamedCheck> checks;  // identity, degrees, separability, normalization, congruence, alpha_condition
    bool verdict = false;
    std::optional<DegreeTriple> degrees;

    const NamedCheck* find(const std::string& name) const;
    std::vector<std::string> failing() const;
};

EtaleCertificate etale_certificate(const EtaleParams& p);

/// t (1-t)^{(1-alpha)r/k} R0 R2^r, the left side of the base identity.
Poly base_map_product(const EtaleParams& p);
/// 1 - (1-t)^alpha R1^k.
Poly base_map(const EtaleParams& p);

class NotAMorphism : public Error {
public:
    NotAMorphism(const std::string& what, Poly witness) : Error(what), witness_(std::move(witness)) {}
    /// Normal form of the pulled-back target relation.
    const Poly& witness() const noexcept { return witness_; }

private:
    Poly witness_;
};

struct SurfaceMap {
    SurfaceSpec source;
    SurfaceSpec target;
    std::array<Poly, 3> coords;  // in normal form over the source
    std::optional<EtaleParams> meta;
    std::optional<int> declared_degree;
    std::string label;

    FieldPtr field() const;
};

/// Validated construction; extra (parameter) variables in coords skip the sampling gate.
SurfaceMap make_map(const SurfaceSpec& source, const SurfaceSpec& target, std::array<Poly, 3> coords,
                    std::optional<int> declared_degree = std::nullopt, std::string label = {});

SurfacePoint apply(const SurfaceMap& m, const SurfacePoint& p);

/// g after f; throws SourceTargetMismatch.
SurfaceMap compose_maps(const SurfaceMap& g, const SurfaceMap& f);

SurfaceMap identity_map(const SurfaceSpec& s);

bool cstar_equivariant(const SurfaceMap& m);

struct ZkCompat {
    enum class Kind { equivariant, invariant, no };
    Kind kind = Kind::no;
    int m = 0;
};

ZkCompat zk_compatible(const SurfaceMap& m, int a);
/// Same test on raw coordinates (need not define a morphism).
ZkCompat zk_compatible(const SurfaceSpec& source, const SurfaceSpec& target, const std::array<Poly, 3>& coords, int a);

/// Induced map on the C*-quotient line: base coordinate z on the tilde model,
/// t = -u^rbar v on the hypersurface model.  Result is univariate in "z" or "t".
Poly quotient_map(const SurfaceMap& m);

/// Declared, base-quotient, or multiplicative degree; DegreeUndetermined otherwise.
int degree_of(const SurfaceMap& m);

struct BuiltMaps {
    SurfaceMap lift;                       // on tilde(k, r)
    std::optional<SurfaceMap> descended;   // on hyper(k, r/k) when a = 1 and k | r
};

BuiltMaps build_from_params(const EtaleParams& p);

/// Exact Jacobian determinant of the chart map (first, third coordinate) at p;
/// nullopt when p or its image lies off the chart.
std::optional<FieldElement> jacobian_at(const SurfaceMap& m, const SurfacePoint& p);

/// n seeded points, all determinants nonzero; ChartDegenerate after bounded retries.
bool jacobian_spotcheck(const SurfaceMap& m, int n, std::uint64_t seed);

/// Profile of the base map against the multiplicity pattern of certified data:
/// over 1, d1 parts k plus alpha parts 1; over 0, d2 parts r, one part r/k when
/// alpha = 0, and d0 + 1 parts 1.
struct PatternCheck {
    bool thom = false;
    bool pattern = false;
    ProfileExtraction extraction;
    std::vector<int> expected0, expected1;
};
PatternCheck ri_pattern(const EtaleParams& p);

}  // namespace etale

#endif  // ETALE_ENDO_HPP
