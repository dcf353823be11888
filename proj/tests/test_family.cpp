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
#include "etale/constructor.hpp"
#include "etale/family.hpp"
#include "test_util.hpp"

using namespace etale;
using testutil::P;

namespace {

const std::vector<std::string> XYZ{"x", "y", "z"};
const std::vector<std::string> UVW{"u", "v", "w"};

FieldElement q(const Rational& v) { return FieldElement(NumberField::rationals(), v); }

FamilySpec s2(std::vector<long> a) {
    FamilySpec f;
    f.k = 2;
    f.rbar = 1;
    f.base = cyclic_galois_endo(2, 1).params;
    for (long v : a) f.avector.push_back(q(v));
    return f;
}

Poly random_x_poly(oracle::Mix& rng, int maxdeg) {
    Poly p(NumberField::rationals(), {"x"});
    for (int i = 0; i <= maxdeg; ++i)
        if (rng.range(0, 1)) p.add_term({i}, q(Rational(rng.range(-6, 6), rng.range(1, 3))));
    return p;
}

}  // namespace

TEST_SUITE("family") {

TEST_CASE("theta examples") {
    auto s = SurfaceSpec::tilde(2, 2);
    auto t0 = theta(P("0"), s);
    for (std::size_t i = 0; i < 3; ++i) CHECK(t0.coords[i] == P(XYZ[i], XYZ));
    auto t1 = theta(P("1"), s);
    CHECK(t1.coords[0] == P("x", XYZ));
    CHECK(t1.coords[1] == P("y + 2*z + x^2", XYZ));
    CHECK(t1.coords[2] == P("z + x^2", XYZ));
    CHECK(degree_of(t1) == 1);
    auto both = compose_maps(theta(P("1"), s), theta(P("x^2"), s));
    auto sum = theta(P("1 + x^2"), s);
    for (std::size_t i = 0; i < 3; ++i) CHECK(both.coords[i] == sum.coords[i]);
}

TEST_CASE("theta group law and base fibration") {
    oracle::Mix rng(31);
    for (const auto& s : {SurfaceSpec::tilde(2, 2), SurfaceSpec::tilde(3, 3)}) {
        for (int it = 0; it < 20; ++it) {
            Poly A = random_x_poly(rng, 4), B = random_x_poly(rng, 4);
            auto lhs = compose_maps(theta(A, s), theta(B, s));
            auto rhs = theta(A + B, s);
            for (std::size_t i = 0; i < 3; ++i) CHECK(lhs.coords[i] == rhs.coords[i]);
            CHECK(rhs.coords[0] == P("x", XYZ));
        }
    }
}

TEST_CASE("covering") {
    auto pi = covering(2, 1);
    auto a = etale::apply(pi, {q(1), q(3), q(2)});
    auto b = etale::apply(pi, {q(-1), q(3), q(-2)});
    for (std::size_t i = 0; i < 3; ++i) CHECK(a[i] == b[i]);
    CHECK(a[0] == q(1));
    CHECK(a[1] == q(3));
    CHECK(a[2] == q(2));
    CHECK(degree_of(covering(3, 1)) == 3);
    CHECK(covering(3, 2).source == SurfaceSpec::tilde(3, 6));
}

TEST_CASE("S2 family, trivial vector") {
    auto m = family_member(s2({}));
    CHECK(m.coords[0] == P("w^2", UVW));
    CHECK(m.coords[1] == normal_form(P("4*v + 2*(1 + 2*u*v) + w^2", UVW), m.source));
    CHECK(m.coords[2] == normal_form(P("(1 + 2*u*v)*w + w^3", UVW), m.source));
    auto img = etale::apply(m, {q(1), q(3), q(2)});
    CHECK(img[0] == q(4));
    CHECK(img[1] == q(30));
    CHECK(img[2] == q(22));
    CHECK(degree_of(m) == 2);
    CHECK(jacobian_spotcheck(m, 25, 5));
}

TEST_CASE("S2 family matches the closed formulas symbolically") {
    auto base = cyclic_galois_endo(2, 1).params;
    std::vector<std::string> all{"u", "v", "w", "a1", "a2", "a3"};
    for (int n = 0; n <= 3; ++n) {
        auto m = family_member_for(base, 1, symbolic_deformation_poly(n, 2));
        std::string Qa = "0";
        for (int i = 1; i <= n; ++i) Qa += " + a" + std::to_string(i) + "*w^" + std::to_string(2 * (i - 1));
        std::string G = "(1 + w^2*(" + Qa + "))";
        auto hs = SurfaceSpec::hyper(2, 1);
        Poly e1 = normal_form(P("w^2", all), hs);
        Poly e2 = normal_form(P("4*v + 2*(1 + 2*u*v)*" + G + " + w^2*" + G + "^2", all), hs);
        Poly e3 = normal_form(P("(1 + 2*u*v)*w + w^3*" + G, all), hs);
        CHECK((m.coords[0] - e1).is_zero());
        CHECK((m.coords[1] - e2).is_zero());
        CHECK((m.coords[2] - e3).is_zero());
    }
}

TEST_CASE("one parameter member matches the closed form second coordinate") {
    auto m = family_member(s2({5}));
    CHECK((m.coords[1] - normal_form(P("4*v + 2*(1 + 2*u*v)*(1 + 5*w^2) + w^2*(1 + 5*w^2)^2", UVW), m.source)).is_zero());
}

TEST_CASE("members: degree, spot-check, no C* symmetry") {
    oracle::Mix rng(32);
    for (int it = 0; it < 10; ++it) {
        std::vector<long> a;
        int n = static_cast<int>(rng.range(1, 3));
        for (int i = 0; i < n; ++i) a.push_back(rng.range(-4, 4));
        a.back() = a.back() == 0 ? 1 : a.back();
        auto m = family_member(s2(a));
        CHECK_FALSE(cstar_equivariant(m));
        CHECK(degree_of(m) == 2);
    }
    CHECK(cstar_equivariant(family_member(s2({}))) == false);
    for (int m = 1; m <= 3; ++m) {
        FamilySpec f;
        f.k = 2;
        f.rbar = 1;
        f.base = chebyshev_square_endo(m);
        f.avector = {q(1), q(-2)};
        auto mm = family_member(f);
        // k (N (rbar k - 1) + rbar) with N = m - 1
        CHECK(degree_of(mm) == 2 * ((m - 1) + 1));
        CHECK(jacobian_spotcheck(mm, 25, 7));
    }
    FamilySpec g;
    g.k = 3;
    g.rbar = 1;
    g.base = cyclic_galois_endo(3, 1).params;
    g.avector = {root_of_unity_power(3, 1)};
    auto gm = family_member(g);
    CHECK(degree_of(gm) == 3);
    CHECK(jacobian_spotcheck(gm, 25, 8));
}

TEST_CASE("ec_equivalent examples") {
    auto e = ec_equivalent(P("1 + x^2"), P("1 + x^2"), 2);
    CHECK(e.equivalent);
    REQUIRE(e.lambda);
    CHECK(e.lambda->is_one());
    CHECK_FALSE(ec_equivalent(P("1 + x^2"), P("1 + 2*x^2"), 2).equivalent);
    CHECK_FALSE(ec_equivalent(P("1 + x^2"), P("1 + x^4"), 2).equivalent);
    // pure rescaling: 16 x^2 = lambda^2 * (lambda x)^2 with lambda = 2
    auto s = ec_equivalent(P("16*x^2"), P("x^2"), 2);
    CHECK(s.equivalent);
    REQUIRE(s.lambda);
    CHECK(s.lambda->pow(4) == q(16));
}

TEST_CASE("ec_equivalent witnesses are exact") {
    oracle::Mix rng(33);
    for (int it = 0; it < 30; ++it) {
        int r = static_cast<int>(rng.range(1, 4));
        Poly F2(NumberField::rationals(), {"x"});
        for (int i = 0; i <= 3; ++i)
            if (rng.range(0, 1)) F2.add_term({r * i}, q(rng.range(1, 5)));
        if (F2.is_zero()) F2 = P("1");
        Rational lam(rng.range(-3, 3));
        if (lam == 0) lam = 2;
        Poly F1 = compose(F2, P("x") * q(lam)) * q(lam).pow(r);
        auto v = ec_equivalent(F1, F2, r);
        REQUIRE(v.equivalent);
        REQUIRE(v.mu);
        CHECK(q(lam).pow(v.g) == *v.mu);
        if (v.lambda) CHECK(F1 == compose(F2, P("x") * *v.lambda) * v.lambda->pow(r));
    }
}

TEST_CASE("the a^2 + a x^r family is classified by cube roots of unity") {
    auto K = cyclotomic_field(3);
    auto z = FieldElement::generator(K);
    const int r = 2;
    auto Pa = [&](const FieldElement& a) {
        Poly p(K, {"x"});
        p.add_term({0}, a * a);
        p.add_term({r}, a);
        return p;
    };
    FieldElement one(K, Rational(1)), two(K, Rational(2)), three(K, Rational(3));
    std::vector<std::tuple<FieldElement, FieldElement, bool>> pairs{
        {two, two * z, true}, {three, three * z * z, true}, {one + z, (one + z) * z, true},
        {two, three, false},  {two, two * (z + two), false}};
    for (const auto& [a, b, want] : pairs) {
        auto v = ec_equivalent(Pa(b), Pa(a), r);
        CHECK(v.equivalent == want);
        // independent: (a/b)^3 = 1
        CHECK(((a / b).pow(3) == one) == want);
        if (want && v.lambda) CHECK(Pa(b) == compose(Pa(a), Poly::variable("x", K) * *v.lambda) * v.lambda->pow(r));
    }
}

TEST_CASE("pairwise distinctness") {
    CHECK(family_pairwise_distinct({s2({}), s2({1}), s2({2}), s2({1, 1})}));
    CHECK_FALSE(family_pairwise_distinct({s2({1}), s2({2}), s2({1})}));
    CHECK_FALSE(family_pairwise_distinct({s2({1}), s2({1, 0})}));
    CHECK(canonical_avector({q(1), q(0), q(0)}).size() == 1);
    auto other = s2({});
    other.base = chebyshev_square_endo(2);
    CHECK_THROWS_AS(family_pairwise_distinct({s2({}), other}), PreconditionViolated);
}

}  // TEST_SUITE
