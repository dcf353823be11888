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

#ifndef ETALE_SURFACE_HPP
#define ETALE_SURFACE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etale/poly.hpp"

namespace etale {

/// splitmix64; the only randomness source in the library.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// Uniform in [lo, hi].
    long long uniform(long long lo, long long hi) {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next() % span);
    }

private:
    std::uint64_t state_;
};

/**
 * Either x^r y = z^k - 1 in (x,y,z), or u^{rbar+1} v + u = w^k in (u,v,w).
 *
 * Canonical forms use lex order with the first variable largest, so the
 * leading monomial of the relation is x^r y (resp. u^{rbar+1} v).
 */
class SurfaceSpec {
public:
    enum class Model { tilde, hyper };

    static SurfaceSpec tilde(int k, int r);
    static SurfaceSpec hyper(int k, int rbar);
    /// "tilde(k,r)" or "hyper(k,rbar)".
    static SurfaceSpec from_id(const std::string& id);

    Model model() const noexcept { return model_; }
    bool is_tilde() const noexcept { return model_ == Model::tilde; }
    int k() const noexcept { return k_; }
    /// r for tilde, rbar for hyper.
    int r() const noexcept { return r_; }

    const std::vector<std::string>& vars() const noexcept { return vars_; }
    std::string id() const;
    const Poly& relation() const noexcept { return relation_; }
    /// C*-weights (1,-r,0) resp. (k,-rbar k,1).
    const std::array<int, 3>& weights() const noexcept { return weights_; }
    /// Z_k action exponents (1,-r,-a) for tilde.
    std::array<int, 3> zk_exponents(int a) const;

    /// Exponent of the first variable in the leading monomial.
    int lead_power() const noexcept { return is_tilde() ? r_ : r_ + 1; }
    /// The rewrite target of the leading monomial.
    const Poly& tail() const noexcept { return tail_; }

    friend bool operator==(const SurfaceSpec& a, const SurfaceSpec& b) {
        return a.model_ == b.model_ && a.k_ == b.k_ && a.r_ == b.r_;
    }
    friend bool operator!=(const SurfaceSpec& a, const SurfaceSpec& b) { return !(a == b); }

private:
    SurfaceSpec(Model m, int k, int r);

    Model model_;
    int k_, r_;
    std::vector<std::string> vars_;
    std::array<int, 3> weights_{};
    Poly relation_;
    Poly tail_;
};

using SurfacePoint = std::array<FieldElement, 3>;

/// Remainder modulo the relation; extra variables are treated as parameters.
/// The result is expressed over the surface variables followed by any extras.
Poly normal_form(const Poly& p, const SurfaceSpec& s);

bool on_surface(const SurfacePoint& pt, const SurfaceSpec& s);

/// Common weight of all monomials; nullopt when not weighted-homogeneous (or zero).
/// Variables outside the surface have weight 0.
std::optional<int> weight_of(const Poly& p, const SurfaceSpec& s);

/// Point with first and third coordinates given; nullopt when degenerate
/// (first coordinate zero, z^k = 1 resp. w^k = u).
std::optional<SurfacePoint> point_from_draws(const SurfaceSpec& s, const Rational& first, const Rational& third);

/// Deterministic rational point with all coordinates nonzero; heights bounded by 1000.
SurfacePoint sample_point(const SurfaceSpec& s, std::uint64_t seed);
/// n points from one generator stream.
std::vector<SurfacePoint> sample_points(const SurfaceSpec& s, int n, std::uint64_t seed);

std::map<std::string, FieldElement> point_map(const SurfaceSpec& s, const SurfacePoint& pt);

}  // namespace etale

#endif  // ETALE_SURFACE_HPP
