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

#include "etale/miyanishi.hpp"

#include <algorithm>

#include "etale/chebyshab.hpp"
#include "etale/parse.hpp"

namespace etale {

namespace {

const std::vector<std::string> kXY{"x", "y"};

// b as a polynomial in x (any single variable is renamed)
Poly as_x(const Poly& b) {
    std::string v = main_variable(b);
    if (v.empty() || v == "x") return b.with_vars({"x"});
    Poly out(b.field(), {"x"});
    int idx = b.var_index(v);
    for (const auto& [e, c] : b.terms()) out.add_term({e[static_cast<std::size_t>(idx)]}, c);
    return out;
}

Poly cst(const FieldPtr& f, const Rational& v, const std::vector<std::string>& vars) {
    return Poly::constant(FieldElement(f, v), vars);
}

}  // namespace

MiyBCheck miy_b_check(int n, const Poly& b_in) {
    if (n < 2) throw PreconditionViolated("n must be at least 2");
    Poly b = as_x(b_in);
    FieldPtr f = b.field();
    Poly x2m1 = Poly::variable("x", f).pow(2) - cst(f, 1, {"x"});
    Poly r = cst(f, 1, {"x"}) - x2m1 * b * b;
    Poly U = chebyshev_U(n - 1).in_field(f);
    auto [q, rem] = divide(r, U);
    MiyBCheck out;
    out.remainder = rem;
    out.ok = rem.is_zero();
    if (out.ok) out.s = q;
    return out;
}

std::pair<Poly, Poly> miy_eta0(const MiyParams& p) {
    auto bc = miy_b_check(p.n, p.b);
    if (!bc.ok) throw BadB("b fails the divisibility 1 - (x^2-1) b^2 = s U_{n-1}; remainder " + print_poly(bc.remainder));
    Poly b = as_x(p.b).with_vars(kXY);
    FieldPtr f = b.field();
    Poly x = Poly::variable("x", kXY, f), y = Poly::variable("y", kXY, f);
    Poly T = chebyshev_T(p.n).in_field(f).with_vars(kXY);
    Poly U = chebyshev_U(p.n - 1).in_field(f).with_vars(kXY);
    Poly second = U * U * y * FieldElement(f, Rational(1, p.n)) + (x * x - cst(f, 1, kXY)) * U * b;
    return {T, second};
}

// ---------------------------------------------------------------------------

RatFn::RatFn(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
}
RatFn::RatFn(Poly n) : num(std::move(n)), den(Poly::constant(FieldElement(num.field(), Rational(1)), num.vars())) {}

RatFn RatFn::operator+(const RatFn& o) const { return {num * o.den + o.num * den, den * o.den}; }
RatFn RatFn::operator-(const RatFn& o) const { return {num * o.den - o.num * den, den * o.den}; }
RatFn RatFn::operator*(const RatFn& o) const { return {num * o.num, den * o.den}; }
RatFn RatFn::operator/(const RatFn& o) const {
    if (o.num.is_zero()) throw DivisionByZero("division by the zero rational function");
    return {num * o.den, den * o.num};
}
RatFn RatFn::pow(int e) const { return {num.pow(e), den.pow(e)}; }
bool RatFn::equals(const RatFn& o) const { return (num * o.den - o.num * den).is_zero(); }

bool MiyLiftReport::all_ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.ok; });
}

const NamedCheck* MiyLiftReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

MiyLiftReport miy_lift_check(const MiyParams& p) {
    MiyLiftReport rep;
    auto bc = miy_b_check(p.n, p.b);
    rep.checks.push_back({"b_condition", bc.ok, bc.ok ? "s = " + print_poly(bc.s) : "remainder " + print_poly(bc.remainder)});

    Poly b = as_x(p.b).with_vars(kXY);
    FieldPtr f = b.field();
    const FieldElement inv_n(f, Rational(1, p.n));
    Poly x = Poly::variable("x", kXY, f), y = Poly::variable("y", kXY, f);
    Poly one = cst(f, 1, kXY);
    Poly x2m1 = x * x - one;
    Poly T = chebyshev_T(p.n).in_field(f).with_vars(kXY);
    Poly U = chebyshev_U(p.n - 1).in_field(f).with_vars(kXY);
    Poly eta_y = U * U * y * inv_n + x2m1 * U * b;
    Poly L = U * y * inv_n + x2m1 * b;  // eta_y = U L

    // direct substitution into v1, v2, v3
    Poly Tx2m1 = T * T - one;
    RatFn d1(Tx2m1, eta_y);
    RatFn d2(Tx2m1, eta_y.pow(2));
    RatFn d3(Tx2m1 - eta_y * eta_y, eta_y.pow(3));

    RatFn v1(x2m1, y);
    RatFn s1 = (v1 * RatFn(U)) / (RatFn(U * inv_n) + v1 * RatFn(b));
    RatFn s2(x2m1, L.pow(2));
    RatFn s3(x2m1 - L * L, U * L.pow(3));
    rep.checks.push_back({"V1_v1", d1.equals(s1), "v1 U / (U/n + v1 b)"});
    rep.checks.push_back({"V1_v2", d2.equals(s2), "(x^2-1) / (U y/n + (x^2-1) b)^2"});
    rep.checks.push_back({"V1_v3", d3.equals(s3), "((x^2-1) - L^2) / (U L^3)"});
    if (bc.ok) {
        Poly s = bc.s.with_vars(kXY);
        RatFn s3s(x2m1 * s - U * y * y * inv_n * inv_n - y * x2m1 * b * FieldElement(f, Rational(2, p.n)), L.pow(3));
        rep.checks.push_back({"V1_v3_s", d3.equals(s3s), "((x^2-1) s - U y^2/n^2 - 2 y (x^2-1) b/n) / L^3"});
    } else {
        rep.checks.push_back({"V1_v3_s", false, "needs the quotient s of the b-condition"});
    }

    for (int sign : {1, -1}) {
        FieldElement xv(f, Rational(sign)), zero(f, Rational(0));
        std::map<std::string, FieldElement> at{{"x", xv}, {"y", zero}};
        FieldElement img_x = T.evaluate(at), img_y = eta_y.evaluate(at);
        FieldElement want = xv.pow(p.n);
        bool ok = img_x == want && img_y.is_zero();
        rep.checks.push_back({sign > 0 ? "V2_plus" : "V2_minus", ok,
                              "eta0(" + std::to_string(sign) + ",0) = (" + print_field_element(img_x) + ", " +
                                  print_field_element(img_y) + ")"});
    }

    Poly g = gcd(as_x(p.b), chebyshev_U(p.n - 1).in_field(f));
    bool coprime = g.total_degree() == 0;
    rep.checks.push_back({"V3", coprime, coprime ? "gcd(b, U_{n-1}) = 1" : "gcd(b, U_{n-1}) = " + print_poly(g)});
    return rep;
}

MiyParams miy_b_find(int n) {
    if (n == 2) {
        auto K = NumberField::make({1, 0, 1}, "theta");
        return {2, Poly::constant(FieldElement::generator(K), {"x"})};
    }
    if (n == 3) {
        auto K = NumberField::make({3, 0, 1}, "theta");
        return {3, Poly::constant(FieldElement::generator(K) * FieldElement(K, Rational(2, 3)), {"x"})};
    }
    throw UnsupportedN("b is only constructed for n in {2, 3}; supply b for larger n");
}

}  // namespace etale
