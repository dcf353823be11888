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

#include <set>

#include "doctest.h"
#include "etale/constructor.hpp"
#include "test_util.hpp"

using namespace etale;
using testutil::P;

namespace {

using oracle::Quad;
using KP = oracle::Dense<Quad>;

FieldElement q(const Rational& v) { return FieldElement(NumberField::rationals(), v); }

Quad to_quad(const FieldElement& e, const oracle::Q& D) {
    const auto& c = e.coords();
    return {c[0], c.size() > 1 ? c[1] : oracle::Q(0), D};
}

KP kp(std::vector<Quad> c, const oracle::Q& D) { return {std::move(c), Quad::of(0, D)}; }

// S^2 | 1 - (1-t) R1^3 with S = R1 + 3(t-1) R1', all in a+b*sqrt(D)
bool oracle_divisible(const std::vector<Quad>& r1, const oracle::Q& D) {
    KP R1 = kp(r1, D);
    KP one = kp({Quad::of(1, D)}, D);
    KP one_minus_t = kp({Quad::of(1, D), Quad::of(-1, D)}, D);
    KP t_minus_1 = kp({Quad::of(-1, D), Quad::of(1, D)}, D);
    KP f = one - one_minus_t * R1 * R1 * R1;
    KP S = R1 + t_minus_1 * R1.deriv().scale(Quad::of(3, D));
    auto [qq, rr] = f.divmod(S * S);
    return rr.c.empty();
}

}  // namespace

TEST_SUITE("constructor") {

TEST_CASE("Chebyshev family certifies for odd d") {
    for (int d = 1; d <= 21; d += 2) {
        auto p = chebyshev_endo(d, q(1));
        CHECK(etale_certificate(p).verdict);
        CHECK(p.R1.total_degree() == (d - 1) / 2);
        CHECK(p.lambda == q(d));
    }
    for (int d : {2, 4, 10}) CHECK_THROWS_AS(chebyshev_endo(d, q(1)), InfeasibleDegree);
    CHECK_THROWS_AS(chebyshev_endo(3, q(0)), PreconditionViolated);
}

TEST_CASE("Chebyshev over a number field lambda") {
    auto K = NumberField::make({2, 0, 1}, "theta");
    auto lam = FieldElement::generator(K);
    auto p = chebyshev_endo(5, lam);
    CHECK(etale_certificate(p).verdict);
    auto lift = build_from_params(p).lift;
    CHECK(lift.field() == K);
    CHECK(jacobian_spotcheck(lift, 5, 3));
}

TEST_CASE("rewrite in t") {
    CHECK(rewrite_in_t(P("z^2", {"z"}), 2) == P("1 - t", {"t"}));
    CHECK(rewrite_in_t(P("4*z^2 - 3", {"z"}), 2) == P("1 - 4*t", {"t"}));
    CHECK_THROWS_AS(rewrite_in_t(P("z^3", {"z"}), 2), DegreeUndetermined);
}

TEST_CASE("cyclic Galois family") {
    for (int k = 2; k <= 9; ++k)
        for (int e = 1; e < k; ++e) {
            auto cg = cyclic_galois_endo(k, e);
            CHECK(etale_certificate(cg.params).verdict);
            CHECK(cg.params.R0.total_degree() == k - 2);
            auto built = build_from_params(cg.params);
            REQUIRE(built.descended);
            // pi after j recovers the descended map
            auto pi_j = compose_maps(make_map(SurfaceSpec::tilde(k, k), SurfaceSpec::hyper(k, 1),
                                              {P("x^" + std::to_string(k), {"x", "y", "z"}), P("y", {"x", "y", "z"}),
                                               P("x*z", {"x", "y", "z"})}),
                                     cg.j);
            for (std::size_t i = 0; i < 3; ++i) CHECK(pi_j.coords[i] == built.descended->coords[i]);
        }
    CHECK_THROWS_AS(cyclic_galois_endo(3, 0), BadEpsilon);
    CHECK_THROWS_AS(cyclic_galois_endo(3, 3), BadEpsilon);
}

TEST_CASE("Chebyshev square family") {
    for (int m = 1; m <= 8; ++m) {
        auto p = chebyshev_square_endo(m);
        auto c = etale_certificate(p);
        CHECK(c.verdict);
        REQUIRE(c.degrees);
        CHECK(*c.degrees == DegreeTriple{0, m, m - 1});
        auto j = factor_through_cover(p);
        CHECK(degree_of(j) == m);
        auto built = build_from_params(p);
        REQUIRE(built.descended);
        CHECK(degree_of(*built.descended) == 2 * m);
        CHECK(jacobian_spotcheck(*built.descended, 5, 40 + m));
    }
}

TEST_CASE("factor_through_cover preconditions") {
    CHECK_THROWS_AS(factor_through_cover(chebyshev_endo(3, q(1))), PreconditionViolated);
    auto p = chebyshev_square_endo(2);
    p.d = 6;
    CHECK_THROWS_AS(factor_through_cover(p), PreconditionViolated);
}

TEST_CASE("kr32 degree one solutions") {
    auto sols = solve_kr32_linear();
    REQUIRE(sols.size() == 2);
    auto K = NumberField::make({2, 0, 1}, "theta");
    std::set<std::string> got;
    for (const auto& p : sols) {
        CHECK(p.k == 3);
        CHECK(p.r == 2);
        CHECK(p.d == 4);
        CHECK(p.field()->minpoly() == K->minpoly());
        auto a = p.R1.coefficient({1});
        got.insert(print_field_element(a));
        CHECK(oracle_divisible({Quad::of(1, -2), to_quad(a, -2)}, -2));
        CHECK(etale_certificate(p).verdict);
        auto lift = build_from_params(p).lift;
        CHECK(degree_of(lift) == 4);
        CHECK(jacobian_spotcheck(lift, 5, 1));
    }
    CHECK(got == std::set<std::string>{"(4/3)*theta - 7/3", "-(4/3)*theta - 7/3"});
    // a nonzero rational slope never works; zero is the identity
    for (long a = -10; a <= 10; ++a)
        if (a != 0) CHECK_FALSE(oracle_divisible({Quad::of(1, -2), Quad::of(a, -2)}, -2));
}

TEST_CASE("kr32 quadratic candidates") {
    auto ref = kr32_reference_candidate();
    auto bad = kr32_check_candidate(ref.first, ref.second);
    auto swapped = kr32_swapped_candidate();
    auto good = kr32_check_candidate(swapped.first, swapped.second);
    // the oracle agrees on both
    auto to3 = [](const std::pair<FieldElement, FieldElement>& c) {
        return std::vector<Quad>{Quad::of(1, -7), to_quad(c.first, -7), to_quad(c.second, -7)};
    };
    CHECK(oracle_divisible(to3(swapped), -7));
    CHECK_FALSE(oracle_divisible(to3(ref), -7));
    CHECK_FALSE(bad.divisible);
    CHECK_FALSE(bad.remainder.is_zero());
    REQUIRE(good.divisible);
    REQUIRE(good.certificate);
    CHECK(good.certificate->verdict);
    CHECK(good.params->d == 7);
    CHECK(*good.certificate->degrees == DegreeTriple{2, 2, 2});
    CHECK(solve_kr32(2).empty());
    CHECK(solve_kr32(2, {swapped}).size() == 1);
    CHECK(solve_kr32(2, {ref, swapped}).size() == 1);
    CHECK_THROWS_AS(solve_kr32(3), UnsupportedN);
    auto lift = build_from_params(*good.params).lift;
    CHECK(degree_of(lift) == 7);
    CHECK(jacobian_spotcheck(lift, 3, 2));
}

}  // TEST_SUITE
