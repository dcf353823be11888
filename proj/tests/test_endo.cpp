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
#include "etale/endo.hpp"
#include "test_util.hpp"

using namespace etale;
using testutil::P;

namespace {

const std::vector<std::string> XYZ{"x", "y", "z"};
const std::vector<std::string> UVW{"u", "v", "w"};

FieldElement q(const Rational& v) { return FieldElement(NumberField::rationals(), v); }

SurfacePoint pt(long a, long b, long c) { return {q(a), q(b), q(c)}; }

Rational R(const FieldElement& e) { return e.rational_value(); }

// x U_{d-1}(z), y, T_d(z) at a point, straight from the closed forms
std::array<oracle::Q, 3> cheb_oracle(int d, const SurfacePoint& p) {
    oracle::Q z = R(p[2]);
    return {R(p[0]) * oracle::cheb_U_closed(d - 1).eval(z), R(p[1]), oracle::cheb_T_binomial(d).eval(z)};
}

}  // namespace

TEST_SUITE("endo") {

TEST_CASE("degree triples") {
    auto a = degrees_from(2, 2, 1, 3);
    REQUIRE(a);
    CHECK(*a == DegreeTriple{0, 1, 1});
    CHECK_FALSE(degrees_from(2, 2, 1, 4));
    CHECK(*degrees_from(3, 2, 1, 4) == DegreeTriple{1, 1, 1});
    CHECK(*degrees_from(3, 2, 1, 7) == DegreeTriple{2, 2, 2});
    for (int m = 1; m <= 6; ++m) CHECK(*degrees_from(2, 2, 0, 2 * m) == DegreeTriple{0, m, m - 1});
    for (int k = 2; k <= 7; ++k) CHECK(*degrees_from(k, k, 0, k) == DegreeTriple{k - 2, 1, 0});
    // counting identities on everything the formula accepts
    for (int k = 1; k <= 5; ++k)
        for (int r = 2; r <= 6; ++r)
            for (int alpha = 0; alpha <= 1; ++alpha)
                for (int d = 1; d <= 40; ++d) {
                    auto t = degrees_from(k, r, alpha, d);
                    if (!t) continue;
                    CHECK(k * t->d1 + alpha == d);
                    CHECK(r * k * t->d2 + k * t->d0 + k + (1 - alpha) * r == k * d);
                }
}

TEST_CASE("alpha condition") {
    CHECK(alpha_condition(2, 2, 1, 1));
    CHECK(alpha_condition(3, 2, 1, 2));
    CHECK_FALSE(alpha_condition(2, 2, 1, 2));
    CHECK(alpha_condition(3, 6, 0, 1));
    CHECK_FALSE(alpha_condition(3, 6, 0, 2));
    CHECK_FALSE(alpha_condition(3, 4, 0, 1));
}

TEST_CASE("certificate examples") {
    auto p = chebyshev_endo(3, q(1));
    auto c = etale_certificate(p);
    CHECK(c.verdict);
    CHECK(c.checks.size() == 6);
    CHECK(c.failing().empty());

    auto bad = p;
    bad.R1 += P("t^2", {"t"});
    auto cb = etale_certificate(bad);
    CHECK_FALSE(cb.verdict);
    REQUIRE(cb.find("identity"));
    CHECK_FALSE(cb.find("identity")->ok);
    CHECK_FALSE(cb.find("identity")->detail.empty());

    auto wrong_d = p;
    wrong_d.d = 5;
    auto cd = etale_certificate(wrong_d);
    CHECK_FALSE(cd.verdict);
    CHECK_FALSE(cd.find("degrees")->ok);
    CHECK(cd.find("identity")->ok);

    auto wrong_a = p;
    wrong_a.a = 2;
    CHECK(etale_certificate(wrong_a).failing() == std::vector<std::string>{"alpha_condition"});

    auto unnorm = p;
    unnorm.R2 = unnorm.R2 * q(2);
    unnorm.R0 = unnorm.R0 * q(Rational(1, 4));
    auto cu = etale_certificate(unnorm);
    CHECK(cu.find("identity")->ok);
    CHECK_FALSE(cu.find("normalization")->ok);
}

TEST_CASE("base map identity, random perturbations are caught") {
    oracle::Mix rng(21);
    for (int d : {1, 3, 5, 7, 9}) {
        auto p = chebyshev_endo(d, q(1));
        CHECK(base_map_product(p) == base_map(p));
        for (int it = 0; it < 10; ++it) {
            auto b = p;
            int which = static_cast<int>(rng.range(0, 2));
            Poly bump = Poly::variable("t", NumberField::rationals()).pow(static_cast<int>(rng.range(1, 4))) *
                        q(static_cast<long>(rng.range(1, 9)));
            (which == 0 ? b.R0 : which == 1 ? b.R1 : b.R2) += bump;
            CHECK_FALSE(etale_certificate(b).verdict);
        }
    }
}

TEST_CASE("make_map rejects non-morphisms") {
    auto s = SurfaceSpec::tilde(2, 2);
    try {
        make_map(s, s, {P("x", XYZ), P("y", XYZ), P("z + 1", XYZ)});
        FAIL("expected NotAMorphism");
    } catch (const NotAMorphism& e) {
        CHECK_FALSE(e.witness().is_zero());
    }
    auto id = make_map(s, s, {P("x", XYZ), P("y", XYZ), P("z", XYZ)});
    CHECK(degree_of(id) == 1);
    CHECK(cstar_equivariant(id));
    // coordinates are stored reduced
    auto m = make_map(s, s, {P("x", XYZ), P("y + x^2*y - z^2 + 1", XYZ), P("z", XYZ)});
    CHECK(m.coords[1] == P("y", XYZ));
}

TEST_CASE("Chebyshev lift against the closed forms") {
    auto built = build_from_params(chebyshev_endo(3, q(1)));
    auto img = etale::apply(built.lift, pt(1, 3, 2));
    CHECK(img[0] == q(15));
    CHECK(img[1] == q(3));
    CHECK(img[2] == q(26));
    CHECK(built.descended);
    for (int d : {1, 3, 5, 7}) {
        auto lift = build_from_params(chebyshev_endo(d, q(1))).lift;
        CHECK(degree_of(lift) == d);
        CHECK(cstar_equivariant(lift));
        for (const auto& p : sample_points(lift.source, 15, 100 + d)) {
            auto im = etale::apply(lift, p);
            auto want = cheb_oracle(d, p);
            for (std::size_t i = 0; i < 3; ++i) CHECK(R(im[i]) == want[i]);
            CHECK(on_surface(im, lift.target));
        }
    }
}

TEST_CASE("lambda twist") {
    auto lam = q(Rational(2, 3));
    auto lift = build_from_params(chebyshev_endo(3, lam)).lift;
    auto im = etale::apply(lift, pt(1, 3, 2));
    CHECK(im[0] == q(Rational(45, 2)));
    CHECK(im[1] == q(Rational(4, 3)));
    CHECK(im[2] == q(26));
}

TEST_CASE("composition and degree multiplicativity") {
    auto l3 = build_from_params(chebyshev_endo(3, q(1))).lift;
    auto l5 = build_from_params(chebyshev_endo(5, q(1))).lift;
    auto l15 = build_from_params(chebyshev_endo(15, q(1))).lift;
    auto c = compose_maps(l3, l5);
    for (std::size_t i = 0; i < 3; ++i) CHECK(c.coords[i] == l15.coords[i]);
    c.declared_degree.reset();
    CHECK(degree_of(c) == 15);
    auto id = identity_map(l3.source);
    CHECK(compose_maps(id, l3).coords[0] == l3.coords[0]);
    CHECK(compose_maps(l3, id).coords[2] == l3.coords[2]);
    auto other = build_from_params(cyclic_galois_endo(3, 1).params).lift;
    CHECK_THROWS_AS(compose_maps(l3, other), SourceTargetMismatch);
}

TEST_CASE("Z_k compatibility") {
    auto lift = build_from_params(chebyshev_endo(3, q(1))).lift;
    auto zc = zk_compatible(lift, 1);
    CHECK(zc.kind == ZkCompat::Kind::equivariant);
    CHECK(zc.m == 1);
    auto s = SurfaceSpec::tilde(2, 2);
    // z -> z^2 style coordinates break the character
    CHECK(zk_compatible(s, s, {P("x", XYZ), P("y", XYZ), P("z + 1", XYZ)}, 1).kind == ZkCompat::Kind::no);
    CHECK(zk_compatible(s, s, {P("x*z", XYZ), P("y", XYZ), P("z^2", XYZ)}, 1).kind == ZkCompat::Kind::invariant);
    CHECK_THROWS_AS(zk_compatible(lift, 2), PreconditionViolated);
    for (int k = 2; k <= 5; ++k) {
        auto g = build_from_params(cyclic_galois_endo(k, 1).params).lift;
        CHECK(zk_compatible(g, 1).kind != ZkCompat::Kind::no);
    }
}

TEST_CASE("cyclic Galois descends and factors") {
    auto cg = cyclic_galois_endo(2, 1);
    auto built = build_from_params(cg.params);
    REQUIRE(built.descended);
    auto h = SurfaceSpec::hyper(2, 1);
    CHECK(built.descended->coords[0] == normal_form(P("u*(1 + u*v)", UVW), h));
    CHECK(built.descended->coords[1] == P("4*v", UVW));
    CHECK(built.descended->coords[2] == P("w*(1 + 2*u*v)", UVW));
    CHECK(cg.j.coords[0] == P("w", UVW));
    CHECK(cg.j.coords[1] == P("4*v", UVW));
    CHECK(cg.j.coords[2] == P("1 + 2*u*v", UVW));
    CHECK(degree_of(cg.j) == 1);
    CHECK(degree_of(*built.descended) == 2);
    CHECK(degree_of(built.lift) == 2);
}

TEST_CASE("quotient maps") {
    auto lift = build_from_params(chebyshev_endo(3, q(1))).lift;
    CHECK(quotient_map(lift) == P("4*z^3 - 3*z", {"z"}));
    auto eta = *build_from_params(chebyshev_square_endo(2)).descended;
    auto qm = quotient_map(eta);
    CHECK(qm.total_degree() == 4);
    CHECK(qm == base_map(chebyshev_square_endo(2)));
}

TEST_CASE("ramification pattern") {
    for (int d : {1, 3, 5, 7, 9, 11}) {
        auto pc = ri_pattern(chebyshev_endo(d, q(1)));
        CHECK(pc.thom);
        CHECK(pc.pattern);
    }
    for (int m = 1; m <= 5; ++m) {
        auto pc = ri_pattern(chebyshev_square_endo(m));
        CHECK(pc.thom);
        CHECK(pc.pattern);
    }
    for (int k = 2; k <= 5; ++k) CHECK(ri_pattern(cyclic_galois_endo(k, 1).params).pattern);
}

TEST_CASE("Jacobian oracle") {
    for (int d : {3, 5}) {
        auto lift = build_from_params(chebyshev_endo(d, q(1))).lift;
        CHECK(jacobian_spotcheck(lift, 20, 9));
    }
    auto eta = *build_from_params(chebyshev_square_endo(3)).descended;
    CHECK(jacobian_spotcheck(eta, 20, 9));

    // ramified along z = 0
    auto s = SurfaceSpec::tilde(2, 2);
    auto ram = make_map(s, s, {P("x", XYZ), P("y*(z^4 + z^2 + 1)", XYZ), P("z^3", XYZ)});
    auto det = jacobian_at(ram, pt(1, -1, 0));
    REQUIRE(det);
    CHECK(det->is_zero());
    auto det2 = jacobian_at(ram, pt(1, 3, 2));
    REQUIRE(det2);
    CHECK(*det2 == q(12));
    CHECK_FALSE(jacobian_at(ram, pt(0, 5, 1)));
    CHECK_THROWS_AS(jacobian_at(ram, pt(1, 1, 1)), PreconditionViolated);
}

TEST_CASE("build needs a certificate") {
    auto p = chebyshev_endo(3, q(1));
    p.d = 5;
    CHECK_THROWS_AS(build_from_params(p), CertificateRequired);
}

}  // TEST_SUITE
