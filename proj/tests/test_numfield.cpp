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
#include "test_util.hpp"

using namespace etale;
using testutil::fe;

TEST_SUITE("numfield") {

TEST_CASE("theta squared reduces by the minimal polynomial") {
    auto K = NumberField::make({2, 0, 1}, "theta");
    auto th = FieldElement::generator(K);
    CHECK(th * th == FieldElement(K, Rational(-2)));
}

TEST_CASE("cube root of unity satisfies its defining relation") {
    auto K = cyclotomic_field(3);
    auto z = FieldElement::generator(K);
    CHECK((z * z + z + FieldElement(K, Rational(1))).is_zero());
}

TEST_CASE("inverse of theta matches the quadratic oracle") {
    auto K = NumberField::make({2, 0, 1}, "theta");
    auto inv = FieldElement::generator(K).inverse();
    oracle::Quad th(0, 1, -2);
    auto expect = th.inv();
    CHECK(inv.coords()[0] == expect.a);
    CHECK(inv.coords()[1] == expect.b);
    CHECK(inv.coords()[1] == Rational(-1, 2));
}

TEST_CASE("cyclotomic minimal polynomials by exact division") {
    // oracle: (x^k - 1) / prod_{d | k, d < k} Phi_d, via oracle long division
    std::vector<oracle::QP> phi(25);
    for (int k = 1; k <= 24; ++k) {
        std::vector<oracle::Q> c(static_cast<std::size_t>(k) + 1, 0);
        c[0] = -1;
        c.back() = 1;
        oracle::QP num(c, 0);
        for (int d = 1; d < k; ++d)
            if (k % d == 0) num = num.divmod(phi[static_cast<std::size_t>(d)]).first;
        phi[static_cast<std::size_t>(k)] = num;
        auto lib = cyclotomic_polynomial(k);
        REQUIRE(lib.size() == num.c.size());
        for (std::size_t i = 0; i < lib.size(); ++i) CHECK(lib[i] == num.c[i]);
    }
    CHECK(cyclotomic_field(2)->minpoly() == QPoly{1, 1});
    CHECK(cyclotomic_field(3)->minpoly() == QPoly{1, 1, 1});
    CHECK(cyclotomic_field(1)->minpoly() == QPoly{-1, 1});
    CHECK(cyclotomic_field(1)->is_rational());
}

TEST_CASE("root_of_unity_power examples") {
    CHECK(root_of_unity_power(2, 1) == FieldElement(cyclotomic_field(2), Rational(-1)));
    CHECK(root_of_unity_power(4, 2) == FieldElement(cyclotomic_field(4), Rational(-1)));
    CHECK(root_of_unity_power(3, 3).is_one());
    CHECK(root_of_unity_power(5, -1) == root_of_unity_power(5, 4));
}

TEST_CASE("primitive roots have exact order k for k <= 24") {
    for (int k = 1; k <= 24; ++k) {
        auto z = root_of_unity_power(k, 1);
        FieldElement acc = z;
        for (int j = 1; j < k; ++j) {
            CHECK_FALSE(acc.is_one());
            acc *= z;
        }
        CHECK(acc.is_one());
        CHECK(z.pow(k).is_one());
    }
}

TEST_CASE("field axioms on random triples") {
    std::vector<FieldPtr> fields{NumberField::rationals(), NumberField::make({2, 0, 1}, "theta"),
                                 NumberField::make({7, 0, 1}, "theta"), cyclotomic_field(5)};
    oracle::Mix rng(12345);
    auto rnd = [&](const FieldPtr& f) {
        std::vector<Rational> c;
        for (int i = 0; i < f->degree(); ++i) c.emplace_back(rng.range(-30, 30), rng.range(1, 9));
        return FieldElement(f, c);
    };
    for (const auto& f : fields) {
        for (int it = 0; it < 1000; ++it) {
            auto a = rnd(f), b = rnd(f), c = rnd(f);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!b.is_zero()) {
                CHECK((b * b.inverse()).is_one());
                CHECK((a / b) * b == a);
            }
        }
    }
}

TEST_CASE("quadratic field products agree with the oracle") {
    auto K = NumberField::make({7, 0, 1}, "theta");
    oracle::Mix rng(7);
    for (int it = 0; it < 200; ++it) {
        long a0 = rng.range(-50, 50), a1 = rng.range(-50, 50), b0 = rng.range(-50, 50), b1 = rng.range(-50, 50);
        auto lib = fe(K, {a0, a1}) * fe(K, {b0, b1});
        auto orc = oracle::Quad(a0, a1, -7) * oracle::Quad(b0, b1, -7);
        CHECK(lib.coords()[0] == orc.a);
        CHECK(lib.coords()[1] == orc.b);
    }
}

TEST_CASE("errors") {
    auto K = NumberField::make({2, 0, 1}, "theta");
    CHECK_THROWS_AS(FieldElement(K).inverse(), DivisionByZero);
    auto L = NumberField::make({7, 0, 1}, "theta");
    CHECK_THROWS_AS(FieldElement::generator(K) + FieldElement::generator(L), FieldMismatch);
    CHECK_THROWS_AS(NumberField::make({-1, 0, 1}, "t"), ReducibleMinpoly);
    CHECK_THROWS_AS(NumberField::make({4, 0, 0, 0, 1}, "t"), ReducibleMinpoly);  // (t^2-2t+2)(t^2+2t+2)
    CHECK_NOTHROW(NumberField::make({2, 0, 0, 0, 1}, "t"));
    CHECK(NumberField::make({1, 0, 0, 0, 0, 1, 1}, "t")->asserted_irreducible());
    // rationals mix with everything
    CHECK(FieldElement(NumberField::rationals(), Rational(3)) * FieldElement::generator(K) ==
          fe(K, {0, 3}));
}

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(to_string(Rational(-3, 2)) == "-3/2");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK(NumberField::rationals()->minpoly_string() == "Q");
}

}  // TEST_SUITE
