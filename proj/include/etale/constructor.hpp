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

#ifndef ETALE_CONSTRUCTOR_HPP
#define ETALE_CONSTRUCTOR_HPP

#include <utility>
#include <vector>

#include "etale/endo.hpp"

namespace etale {

/**
 * Params for (x lambda^{-1} U_{d-1}(z), lambda^2 y, T_d(z)) on tilde(2,2).
 * The stored lambda is d / lambda so that R2(0) = 1.  Throws InfeasibleDegree for even d.
 */
EtaleParams chebyshev_endo(int d, const FieldElement& lambda);

struct CyclicGalois {
    EtaleParams params;
    SurfaceMap j;  // hyper(k,1) -> tilde(k,k)
};

/// R1 = (eps - 1) t + 1 with eps = zeta_k^eps_power; BadEpsilon when eps = 1.
CyclicGalois cyclic_galois_endo(int k, int eps_power);

/**
 * alpha = 0 maps of tilde(2,2) of degree 2m:
 * R1 = T_m(1-2t), R2 = U_{m-1}(1-2t)/m, R0 = 4m^2.
 */
EtaleParams chebyshev_square_endo(int m);

/// j_eta: hyper(k, r/k) -> tilde(k, r); PreconditionViolated unless certified, alpha = 0, a = 1, k | r.
SurfaceMap factor_through_cover(const EtaleParams& p);

/// Solutions of the (k,r) = (3,2), alpha = 1 divisibility problem with deg R1 = 1 (d = 4).
std::vector<EtaleParams> solve_kr32_linear();

struct Kr32Candidate {
    FieldElement a1, a2;
    bool divisible = false;   // (R1 + 3(t-1)R1')^2 | 1 - (1-t)R1^3
    Poly remainder;           // of that division, zero when divisible
    std::optional<EtaleParams> params;  // when divisible
    std::optional<EtaleCertificate> certificate;
};

/// Verification of a quadratic candidate R1 = a2 t^2 + a1 t + 1 (d = 7).
Kr32Candidate kr32_check_candidate(const FieldElement& a1, const FieldElement& a2);

/// d0 = 1: both conjugate solutions.  d0 = 2: the certified subset of the candidates.
std::vector<EtaleParams> solve_kr32(int d0, const std::vector<std::pair<FieldElement, FieldElement>>& candidates = {});

/// The reference (a1, a2) pair for d0 = 2 over theta^2 + 7.
std::pair<FieldElement, FieldElement> kr32_reference_candidate();
/// The same numbers with a1 and a2 exchanged.
std::pair<FieldElement, FieldElement> kr32_swapped_candidate();

/// p(1 - z^k) = P(z) solved for p; throws DegreeUndetermined when P is not a polynomial in z^k.
Poly rewrite_in_t(const Poly& P_of_z, int k);

}  // namespace etale

#endif  // ETALE_CONSTRUCTOR_HPP
