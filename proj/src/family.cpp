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

#include "etale/family.hpp"

#include <numeric>

#include "etale/constructor.hpp"
#include "etale/parse.hpp"

namespace etale {

namespace {

Rational binom(int n, int k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

// u*a + v*b = gcd(a, b)
int ext_gcd(int a, int b, long long& u, long long& v) {
    long long r0 = a, r1 = b, u0 = 1, u1 = 0, v0 = 0, v1 = 1;
    while (r1 != 0) {
        long long qq = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - qq * r1);
        std::tie(u0, u1) = std::make_pair(u1, u0 - qq * u1);
        std::tie(v0, v1) = std::make_pair(v1, v0 - qq * v1);
    }
    u = u0;
    v = v0;
    return static_cast<int>(r0);
}

std::map<int, FieldElement> coeff_map(const Poly& p) {
    std::map<int, FieldElement> out;
    std::string var = main_variable(p);
    int idx = var.empty() ? -1 : p.var_index(var);
    for (const auto& [e, c] : p.terms()) out.emplace(idx < 0 ? 0 : e[static_cast<std::size_t>(idx)], c);
    return out;
}

// exact g-th root of a rational, when there is one
std::optional<Rational> rational_root(const Rational& q, int g) {
    if (g <= 0) return std::nullopt;
    if (q == 0) return Rational(0);
    bool neg = q < 0;
    if (neg && g % 2 == 0) return std::nullopt;
    Integer n = abs(q.get_num()), d = q.get_den(), rn, rd;
    if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(g))) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(g))) return std::nullopt;
    Rational out(rn, rd);
    out.canonicalize();
    return neg ? Rational(-out) : out;
}

// some lambda in the field of mu with lambda^g = mu, via rational roots or finite order
std::optional<FieldElement> root_in_field(const FieldElement& mu, int g) {
    if (g == 1) return mu;
    if (mu.is_rational()) {
        if (auto r = rational_root(mu.rational_value(), g)) return FieldElement(mu.field(), *r);
    }
    // roots of unity: orders of torsion in small number fields are small
    FieldElement p = mu;
    for (int n = 1; n <= 240; ++n) {
        if (p.is_one()) {
            // mu of order n: mu^u works when u g = 1 mod n
            long long u, v;
            if (ext_gcd(g, n, u, v) != 1) return std::nullopt;
            return mu.pow(static_cast<int>(((u % n) + n) % n));
        }
        p *= mu;
    }
    return std::nullopt;
}

bool same_base(const EtaleParams& a, const EtaleParams& b) {
    return a.k == b.k && a.r == b.r && a.a == b.a && a.alpha == b.alpha && a.d == b.d && a.lambda == b.lambda &&
           a.R0 == b.R0 && a.R1 == b.R1 && a.R2 == b.R2;
}

}  // namespace

std::vector<FieldElement> canonical_avector(std::vector<FieldElement> a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    return a;
}

Poly deformation_poly(const std::vector<FieldElement>& avector, int r) {
    FieldPtr f = NumberField::rationals();
    for (const auto& a : avector) f = common_field(f, a.field());
    Poly F = Poly::constant(FieldElement(f, Rational(1)), {"x"});
    for (std::size_t i = 0; i < avector.size(); ++i) {
        if (avector[i].is_zero()) continue;
        Poly t(f, {"x"});
        t.add_term({r * static_cast<int>(i + 1)}, avector[i].in_field(f));
        F += t;
    }
    return F;
}

Poly symbolic_deformation_poly(int n, int r) {
    auto Q = NumberField::rationals();
    std::vector<std::string> vars{"x"};
    for (int i = 1; i <= n; ++i) vars.push_back("a" + std::to_string(i));
    Poly F = Poly::constant(Q, 1, vars);
    Poly x = Poly::variable("x", vars, Q);
    for (int i = 1; i <= n; ++i) F += Poly::variable("a" + std::to_string(i), vars, Q) * x.pow(r * i);
    return F;
}

SurfaceMap theta(const Poly& P, const SurfaceSpec& s) {
    if (!s.is_tilde()) throw PreconditionViolated("Theta acts on the tilde model");
    const int k = s.k(), r = s.r();
    auto vars = merge_vars(s.vars(), P.vars());
    FieldPtr f = P.field();
    Poly x = Poly::variable("x", vars, f), y = Poly::variable("y", vars, f), z = Poly::variable("z", vars, f);
    Poly Px = P.with_vars(vars);
    Poly shift = Px * x.pow(r);
    // ((z + P x^r)^k - z^k) / x^r expanded termwise
    Poly add(f, vars);
    Poly Ppow = Px;
    for (int i = 1; i <= k; ++i) {
        add += z.pow(k - i) * Ppow * x.pow(r * (i - 1)) * FieldElement(f, binom(k, i));
        Ppow *= Px;
    }
    return make_map(s, s, {x, y + add, z + shift}, 1, "theta");
}

SurfaceMap covering(int k, int rbar) {
    auto Q = NumberField::rationals();
    SurfaceSpec tl = SurfaceSpec::tilde(k, rbar * k);
    SurfaceSpec hs = SurfaceSpec::hyper(k, rbar);
    const auto& v = tl.vars();
    Poly x = Poly::variable("x", v, Q), y = Poly::variable("y", v, Q), z = Poly::variable("z", v, Q);
    return make_map(tl, hs, {x.pow(k), y, x * z}, k, "pi");
}

SurfaceMap family_member_for(const EtaleParams& base, int rbar, const Poly& F) {
    if (base.r != rbar * base.k) throw PreconditionViolated("base must live on tilde(k, rbar k)");
    SurfaceMap j = factor_through_cover(base);
    SurfaceMap th = theta(F, SurfaceSpec::tilde(base.k, base.r));
    SurfaceMap pi = covering(base.k, rbar);
    SurfaceMap m = compose_maps(pi, compose_maps(th, j));
    m.declared_degree = base.k * degree_of(j);
    m.label = "eta^F";
    return m;
}

SurfaceMap family_member(const FamilySpec& f) {
    if (f.base.k != f.k || f.base.r != f.r()) throw PreconditionViolated("family (k, rbar) differs from the base");
    return family_member_for(f.base, f.rbar, deformation_poly(f.avector, f.r()));
}

EcVerdict ec_equivalent(const Poly& P1, const Poly& P2, int r) {
    EcVerdict out;
    FieldPtr f = common_field(P1.field(), P2.field());
    if (P1.is_zero() || P2.is_zero()) {
        out.equivalent = P1.is_zero() && P2.is_zero();
        if (out.equivalent) {
            out.g = 1;
            out.mu = out.lambda = FieldElement(f, Rational(1));
        } else {
            out.reason = "exactly one polynomial is zero";
        }
        return out;
    }
    auto c1 = coeff_map(P1), c2 = coeff_map(P2);
    for (const auto& [i, c] : c1)
        if (!c2.count(i)) {
            out.reason = "supports differ at degree " + std::to_string(i);
            return out;
        }
    for (const auto& [i, c] : c2)
        if (!c1.count(i)) {
            out.reason = "supports differ at degree " + std::to_string(i);
            return out;
        }
    // coefficientwise: c1_i = lambda^{r+i} c2_i; fold the exponents with Bezout
    int g = 0;
    FieldElement mu(f, Rational(1));
    for (const auto& [i, c] : c1) {
        FieldElement rho = c.in_field(f) / c2.at(i).in_field(f);
        int n = r + i;
        if (g == 0) {
            g = n;
            mu = rho;
            continue;
        }
        long long u, v;
        int gg = ext_gcd(g, n, u, v);
        mu = mu.pow(static_cast<int>(u)) * rho.pow(static_cast<int>(v));
        g = gg;
    }
    if (g <= 0) {
        out.reason = "exponent r + i vanished";
        return out;
    }
    for (const auto& [i, c] : c1) {
        FieldElement rho = c.in_field(f) / c2.at(i).in_field(f);
        if (mu.pow((r + i) / g) != rho) {
            out.reason = "coefficient ratio at degree " + std::to_string(i) + " is inconsistent with lambda^" +
                         std::to_string(g) + " = " + print_field_element(mu);
            out.g = g;
            out.mu = mu;
            return out;
        }
    }
    out.equivalent = true;
    out.g = g;
    out.mu = mu;
    out.lambda = root_in_field(mu, g);
    return out;
}

bool family_pairwise_distinct(const std::vector<FamilySpec>& fs) {
    for (const auto& f : fs)
        if (f.k != fs.front().k || f.rbar != fs.front().rbar || !same_base(f.base, fs.front().base))
            throw PreconditionViolated("family members must share k, rbar and the base");
    std::vector<Poly> Fs;
    for (const auto& f : fs) Fs.push_back(deformation_poly(canonical_avector(f.avector), f.r()));
    for (std::size_t i = 0; i < Fs.size(); ++i)
        for (std::size_t j = i + 1; j < Fs.size(); ++j)
            if (ec_equivalent(Fs[i], Fs[j], fs[i].r()).equivalent) return false;
    return true;
}

}  // namespace etale
