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
#include "etale/serialize.hpp"
#include "test_util.hpp"

using namespace etale;
using testutil::P;

namespace {

bool same_params(const EtaleParams& a, const EtaleParams& b) {
    return a.k == b.k && a.r == b.r && a.a == b.a && a.alpha == b.alpha && a.d == b.d && a.lambda == b.lambda &&
           a.R0 == b.R0 && a.R1 == b.R1 && a.R2 == b.R2;
}

}  // namespace

TEST_SUITE("serialize") {

TEST_CASE("field elements") {
    auto K = NumberField::make({7, 0, 1}, "theta");
    FieldElement e(K, std::vector<Rational>{Rational(-7, 3), Rational(4, 3)});
    auto j = to_json(e);
    CHECK(j["field"] == "theta^2 + 7");
    CHECK(j["coords"][0] == "-7/3");
    CHECK(field_element_from_json(j) == e);
    // short coordinate lists are padded
    CHECK(field_element_from_json(json{{"field", "theta^2 + 7"}, {"coords", {"2"}}}) == FieldElement(K, Rational(2)));
    CHECK_THROWS_AS(field_element_from_json(json{{"field", "Q"}, {"coords", {"1", "2"}}}), FormatError);
    CHECK_THROWS_AS(field_element_from_json(json{{"coords", {"1/0x"}}}), FormatError);
    CHECK_THROWS_AS(field_element_from_json(json{{"coords", {"1/0"}}}), FormatError);
    CHECK(field_element_from_json(json{{"coords", {"6/4"}}}) == FieldElement(NumberField::rationals(), Rational(3, 2)));
}

TEST_CASE("params round trip") {
    std::vector<EtaleParams> ps{chebyshev_endo(5, FieldElement(NumberField::rationals(), Rational(2))),
                                chebyshev_square_endo(3), cyclic_galois_endo(5, 2).params};
    for (const auto& p : solve_kr32_linear()) ps.push_back(p);
    for (const auto& p : ps) {
        auto j = to_json(p);
        auto back = params_from_json(json::parse(j.dump()));
        CHECK(same_params(p, back));
        CHECK(to_json(back) == j);
    }
    CHECK_THROWS_AS(params_from_json(json{{"k", 2}}), FormatError);
    CHECK_THROWS_AS(params_from_json(json{{"k", "two"}, {"r", 2}}), FormatError);
}

TEST_CASE("certificate labels") {
    auto p = chebyshev_endo(3, FieldElement(NumberField::rationals(), Rational(1)));
    p.R2 = p.R2 + P("t", {"t"});
    auto j = to_json(etale_certificate(p));
    CHECK(j["verdict"] == false);
    bool named = false;
    for (const auto& c : j["checks"])
        if (c["ok"] == false && c["label"] == "C1") named = true;
    CHECK(named);
    CHECK(check_label("congruence") == "C4");
    CHECK(check_label("alpha_condition") == "C5");
    CHECK(check_label("normalization") == "C3");
    CHECK(check_label("nonsense").empty());
    auto good = to_json(etale_certificate(chebyshev_endo(3, FieldElement(NumberField::rationals(), Rational(1)))));
    CHECK(good["verdict"] == true);
    CHECK(good["degrees"]["d2"].is_number());
}

TEST_CASE("maps round trip") {
    auto lift = build_from_params(chebyshev_endo(3, FieldElement(NumberField::rationals(), Rational(1)))).lift;
    auto j = to_json(lift);
    auto back = map_from_json(json::parse(j.dump()));
    CHECK(back.coords == lift.coords);
    CHECK(back.source.id() == lift.source.id());
    CHECK(to_json(back) == j);
    // parameter variables survive
    auto sym = theta(symbolic_deformation_poly(1, 2), SurfaceSpec::tilde(2, 2));
    auto js = to_json(sym);
    REQUIRE(js.contains("params"));
    CHECK(map_from_json(js).coords == sym.coords);
    // a non-morphism is rejected on load
    json bad = j;
    bad["coords"][1] = "y + 1";
    CHECK_THROWS_AS(map_from_json(bad), NotAMorphism);
    bad["coords"] = {"x"};
    CHECK_THROWS_AS(map_from_json(bad), FormatError);
}

TEST_CASE("miyanishi params") {
    auto p = miy_b_find(3);
    auto j = to_json(p);
    auto back = miy_from_json(j);
    CHECK(back.n == 3);
    CHECK(back.b == p.b);
    CHECK(to_json(miy_lift_check(back))["ok"] == true);
}

TEST_CASE("files") {
    CHECK_THROWS_AS(load_json_file("/nonexistent/file.json"), FormatError);
}

}  // TEST_SUITE
