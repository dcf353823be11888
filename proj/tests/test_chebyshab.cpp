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

#include "doctest.h"
#include "etale/chebyshab.hpp"
#include "test_util.hpp"

using namespace etale;
using testutil::P;
using testutil::to_oracle;

namespace {

FieldElement q(long v) { return FieldElement(NumberField::rationals(), v); }

// t = (1 + x)/2 sends {-1, 1} to {0, 1}; values rescaled the same way
Poly renormalize(const Poly& Tn) {
    Poly x_of_t = P("2*t - 1", {"t"});
    return (compose(Tn, x_of_t) + P("1", {"t"})) * FieldElement(NumberField::rationals(), Rational(1, 2));
}

}  // namespace

TEST_SUITE("chebyshab") {

TEST_CASE("T and U examples") {
    CHECK(chebyshev_T(3) == P("4*x^3 - 3*x"));
    CHECK(chebyshev_T(0) == P("1"));
    CHECK(chebyshev_T(5) == P("16*x^5 - 20*x^3 + 5*x"));
    CHECK(chebyshev_U(1) == P("2*x"));
    CHECK(chebyshev_U(0) == P("1"));
    CHECK(chebyshev_U(2) == P("4*x^2 - 1"));
}

TEST_CASE("identity suite up to 50 against the closed forms") {
    for (int n = 1; n <= 50; ++n) {
        Poly T = chebyshev_T(n), U = chebyshev_U(n - 1);
        CHECK(to_oracle(T, "x") == oracle::cheb_T_binomial(n));
        CHECK(to_oracle(U, "x") == oracle::cheb_U_closed(n - 1));
        CHECK(T * T - P("1") == P("x^2 - 1") * U * U);
        CHECK(T.derivative("x") == U * q(n));
        CHECK(T.evaluate({{"x", q(1)}}).is_one());
        CHECK(U.evaluate({{"x", q(1)}}) == q(n));
        CHECK(U.evaluate({{"x", q(-1)}}) == q(n % 2 ? n : -n));
        CHECK(compose(T, P("-x")) == T * q(n % 2 ? -1 : 1));
    }
}

TEST_CASE("composition law") {
    for (int n = 1; n <= 8; ++n)
        for (int m = 1; m <= 8; ++m) CHECK(compose(chebyshev_T(n), chebyshev_T(m)) == chebyshev_T(n * m));
}

TEST_CASE("Thom feasibility") {
    RamificationProfile a{{q(1), q(-1)}, {{2, 1}, {2, 1}}, 3};
    CHECK(thom_feasible(a).feasible);
    RamificationProfile b{{q(0), q(1)}, {{4}, {2, 2}}, 4};
    auto rb = thom_feasible(b);
    CHECK_FALSE(rb.feasible);
    REQUIRE(rb.diagnostics.size() == 1);
    CHECK(rb.diagnostics[0].find("(n-1)d+1") != std::string::npos);
    RamificationProfile c{{q(0)}, {{1}}, 1};
    CHECK(thom_feasible(c).feasible);
    RamificationProfile bad{{q(0)}, {{2}}, 3};
    CHECK(thom_feasible(bad).diagnostics.size() == 1);
    RamificationProfile worse{{q(0)}, {{2, 2}}, 3};
    CHECK(thom_feasible(worse).diagnostics.size() == 2);
}

TEST_CASE("Chebyshev characterization") {
    auto t4 = is_chebyshev_normalized(P("8*x^4 - 8*x^2 + 1"));
    CHECK(t4.yes);
    CHECK(t4.n == 4);
    auto sq = is_chebyshev_normalized(P("x^2"));
    CHECK_FALSE(sq.yes);
    CHECK(is_chebyshev_normalized(P("x")).yes);
    CHECK(is_chebyshev_normalized(P("x")).n == 1);
    for (int n = 1; n <= 20; ++n) CHECK(is_chebyshev_normalized(chebyshev_T(n)).yes);
    // -T_n fails P(1) = 1; perturbations fail the identity
    CHECK_FALSE(is_chebyshev_normalized(chebyshev_T(5) * q(-1)).yes);
    CHECK_FALSE(is_chebyshev_normalized(chebyshev_T(4) + P("x^3 - x")).yes);
}

TEST_CASE("profile extraction") {
    auto e = extract_profile(P("4*t*(1 - t)", {"t"}));
    REQUIRE(e.ok);
    CHECK(e.profile.partitions == std::vector<std::vector<int>>{{1, 1}, {2}});
    CHECK(e.profile.degree == 2);
    auto id = extract_profile(P("t", {"t"}));
    REQUIRE(id.ok);
    CHECK(id.profile.partitions == std::vector<std::vector<int>>{{1}});
    CHECK(id.profile.branch_points.size() == 1);
    auto three = extract_profile(P("t*(1 - t)*(t - 3)", {"t"}));
    CHECK_FALSE(three.ok);
    CHECK(three.reason.find("MoreThanTwoCriticalValues") == 0);
}

TEST_CASE("renormalized Chebyshev profiles") {
    for (int n = 2; n <= 12; ++n) {
        auto e = extract_profile(renormalize(chebyshev_T(n)));
        REQUIRE(e.ok);
        CHECK(thom_feasible(e.profile).feasible);
        // value -1 maps to 0, value 1 maps to 1
        std::vector<int> over_minus, over_plus;
        for (int i = 0; i < n / 2; ++i) {
            over_minus.push_back(2);
            over_plus.push_back(2);
        }
        if (n % 2) {
            over_minus.push_back(1);
            over_plus.push_back(1);
        } else {
            over_plus.push_back(1);
            over_plus.push_back(1);
            over_plus.erase(over_plus.begin());
        }
        CHECK(e.profile.partitions[0] == over_minus);
        CHECK(e.profile.partitions[1] == over_plus);
    }
}

}  // TEST_SUITE
