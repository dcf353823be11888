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

#include "etale/constructor.hpp"

#include "etale/chebyshab.hpp"
#include "etale/parse.hpp"

namespace etale {

namespace {

const std::vector<std::string> kT{"t"};

Poly cst(const FieldPtr& f, const Rational& v, const std::vector<std::string>& vars = kT) {
    return Poly::constant(FieldElement(f, v), vars);
}

Poly tvar(const FieldPtr& f) { return Poly::variable("t", f); }

}  // namespace

Poly rewrite_in_t(const Poly& P, int k) {
    std::string var = main_variable(P);
    FieldPtr f = P.field();
    Poly out(f, kT);
    Poly s = cst(f, 1) - tvar(f);  // z^k = 1 - t
    for (const auto& [e, c] : P.terms()) {
        int deg = var.empty() ? 0 : e[static_cast<std::size_t>(P.var_index(var))];
        if (deg % k != 0) throw DegreeUndetermined("polynomial is not a function of z^" + std::to_string(k));
        out += s.pow(deg / k) * c;
    }
    return out;
}

EtaleParams chebyshev_endo(int d, const FieldElement& lambda) {
    if (d < 1 || d % 2 == 0) throw InfeasibleDegree("Chebyshev endomorphisms of tilde(2,2) need odd d >= 1");
    if (lambda.is_zero()) throw PreconditionViolated("lambda must be nonzero");
    FieldPtr f = lambda.field();
    Poly T = chebyshev_T(d, "z"), U = chebyshev_U(d - 1, "z");
    EtaleParams p;
    p.k = 2;
    p.r = 2;
    p.a = 1;
    p.alpha = 1;
    p.d = d;
    p.lambda = FieldElement(f, Rational(d)) / lambda;
    p.R1 = rewrite_in_t(exact_div(T, Poly::variable("z")), 2).in_field(f);
    p.R2 = (rewrite_in_t(U, 2) * FieldElement(NumberField::rationals(), Rational(1, d))).in_field(f);
    p.R0 = cst(f, Rational(d) * Rational(d));
    return p;
}

CyclicGalois cyclic_galois_endo(int k, int eps_power) {
    if (k < 2) throw PreconditionViolated("k must be at least 2");
    FieldElement eps = root_of_unity_power(k, eps_power);
    if (eps.is_one()) throw BadEpsilon("epsilon must be a k-th root of unity other than 1");
    FieldPtr f = eps.field();
    Poly t = tvar(f);
    Poly R1 = t * (eps - FieldElement(f, Rational(1))) + cst(f, 1);
    EtaleParams p;
    p.k = k;
    p.r = k;
    p.a = 1;
    p.alpha = 0;
    p.d = k;
    p.lambda = FieldElement(f, Rational(1));
    p.R1 = R1;
    p.R0 = exact_div(R1.pow(k) - cst(f, 1), t * (t - cst(f, 1)));
    p.R2 = cst(f, 1);
    return {p, factor_through_cover(p)};
}

EtaleParams chebyshev_square_endo(int m) {
    if (m < 1) throw InfeasibleDegree("m must be positive");
    auto Q = NumberField::rationals();
    Poly s = cst(Q, 1) - tvar(Q) * FieldElement(Q, Rational(2));
    EtaleParams p;
    p.k = 2;
    p.r = 2;
    p.a = 1;
    p.alpha = 0;
    p.d = 2 * m;
    p.lambda = FieldElement(Q, Rational(1));
    p.R1 = compose(chebyshev_T(m), s);
    p.R2 = compose(chebyshev_U(m - 1), s) * FieldElement(Q, Rational(1, m));
    p.R0 = cst(Q, Rational(4 * m) * m);
    return p;
}

SurfaceMap factor_through_cover(const EtaleParams& p) {
    if (p.alpha != 0) throw PreconditionViolated("factorization through the cover needs alpha = 0");
    if (p.r % p.k != 0) throw PreconditionViolated("factorization through the cover needs k | r");
    if (((p.a % p.k) + p.k) % p.k != 1 % p.k) throw PreconditionViolated("factorization through the cover needs a = 1");
    auto cert = etale_certificate(p);
    if (!cert.verdict) throw PreconditionViolated("params are not certified");
    FieldPtr f = p.field();
    SurfaceSpec hs = SurfaceSpec::hyper(p.k, p.r / p.k);
    SurfaceSpec tl = SurfaceSpec::tilde(p.k, p.r);
    const auto& v = hs.vars();
    Poly u = Poly::variable("u", v, f), vv = Poly::variable("v", v, f), w = Poly::variable("w", v, f);
    Poly t = -(u.pow(p.r / p.k) * vv);
    FieldElement lam = p.lambda.in_field(f);
    Poly c1 = w * compose(p.R2, t) * lam;
    Poly c2 = vv * compose(p.R0, t) * lam.inverse().pow(p.r);
    Poly c3 = compose(p.R1, t);
    SurfaceMap j = make_map(hs, tl, {c1, c2, c3}, std::nullopt, "j");
    j.meta = p;
    return j;
}

// ---------------------------------------------------------------------------
// (k,r) = (3,2)

namespace {

// f = 1 - (1-t) R1^3 and S = R1 + 3(t-1) R1'
std::pair<Poly, Poly> kr32_f_and_S(const Poly& R1) {
    FieldPtr f = R1.field();
    std::vector<std::string> vars = merge_vars(kT, R1.vars());
    Poly one = cst(f, 1, vars);
    Poly t = Poly::variable("t", vars, f);
    Poly F = one - (one - t) * R1.pow(3);
    Poly S = R1 + (t - one) * R1.derivative("t") * FieldElement(f, Rational(3));
    return {F, S};
}

// Pseudo-remainder in t; coefficients are polynomials in the other variables.
std::vector<Poly> pseudo_remainder(const Poly& F, const Poly& G) {
    auto a = coefficients_in(F, "t");
    auto b = coefficients_in(G, "t");
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    while (a.size() >= b.size() && !a.empty()) {
        std::size_t shift = a.size() - b.size();
        Poly lead_a = a.back();
        for (auto& c : a) c = c * b.back();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= lead_a * b[j];
        while (!a.empty() && a.back().is_zero()) a.pop_back();
    }
    return a;
}

// |N| = s^2 * D0 with D0 squarefree, sign kept on D0
std::pair<Integer, Integer> square_split(Integer N) {
    Integer sign = N < 0 ? -1 : 1;
    N = abs(N);
    if (N > Integer("1000000000000")) throw UnsupportedN("discriminant too large to split");
    Integer s = 1;
    for (Integer p = 2; p * p <= N; ++p) {
        while (N % (p * p) == 0) {
            N /= p * p;
            s *= p;
        }
    }
    return {s, sign * N};
}

EtaleParams kr32_params(const Poly& R1, int d) {
    auto [F, S] = kr32_f_and_S(R1);
    FieldPtr f = R1.field();
    FieldElement s0 = S.constant_term();
    Poly R2 = S * s0.inverse();
    EtaleParams p;
    p.k = 3;
    p.r = 2;
    p.a = 1;
    p.alpha = 1;
    p.d = d;
    p.lambda = FieldElement(f, Rational(1));
    p.R1 = R1.with_vars(kT);
    p.R2 = R2.with_vars(kT);
    p.R0 = exact_div(F, tvar(f) * R2.pow(2)).with_vars(kT);
    return p;
}

}  // namespace

std::vector<EtaleParams> solve_kr32_linear() {
    auto Q = NumberField::rationals();
    std::vector<std::string> vars{"t", "a"};
    Poly t = Poly::variable("t", vars, Q), a = Poly::variable("a", vars, Q);
    Poly R1 = a * t + cst(Q, 1, vars);
    auto [F, S] = kr32_f_and_S(R1);
    Poly S2 = S * S;
    auto rem = pseudo_remainder(F, S2);

    // common roots in a of all remainder coefficients
    Poly g(Q, {"a"});
    for (const auto& c : rem) g = gcd(g, c.with_vars(merge_vars({"a"}, c.vars())).with_vars({"a"}));
    if (g.is_zero()) throw PreconditionViolated("divisibility holds identically; no finite solution set");
    // roots where S loses degree or S(0) vanishes cannot give R2(0) = 1 with the right degree
    auto sc = coefficients_in(S, "t");
    for (const Poly& bad : {sc.back(), sc.front()}) {
        Poly b = bad.with_vars(merge_vars({"a"}, bad.vars())).with_vars({"a"});
        for (;;) {
            Poly h = gcd(g, b);
            if (h.total_degree() < 1) break;
            g = exact_div(g, h);
        }
    }
    g = make_monic(g);
    std::vector<EtaleParams> out;
    const int deg = g.total_degree();
    if (deg == 1) {
        FieldElement root = -g.constant_term();
        Poly R1s = Poly::variable("t", Q) * root + cst(Q, 1);
        out.push_back(kr32_params(R1s, 4));
        return out;
    }
    if (deg != 2) throw UnsupportedN("eliminant of degree " + std::to_string(deg) + " is beyond the quadratic solver");
    Rational c1 = g.coefficient({1}).rational_value(), c0 = g.coefficient({0}).rational_value();
    Rational disc = c1 * c1 - 4 * c0;
    // disc = N / den^2
    Integer N = disc.get_num() * disc.get_den();
    auto [s, D0] = square_split(N);
    Rational scale = Rational(s) / Rational(disc.get_den());  // sqrt(disc) = scale * sqrt(D0)
    FieldPtr K = D0 == 1 ? Q : NumberField::make({Rational(-D0), 0, 1}, "theta");
    FieldElement root_d0 = D0 == 1 ? FieldElement(Q, Rational(1)) : FieldElement::generator(K);
    for (int sign : {1, -1}) {
        FieldElement root = (FieldElement(K, -c1) + root_d0 * FieldElement(K, scale * sign)) * FieldElement(K, Rational(1, 2));
        Poly R1s = Poly::variable("t", K) * root + cst(K, 1);
        out.push_back(kr32_params(R1s, 4));
    }
    return out;
}

Kr32Candidate kr32_check_candidate(const FieldElement& a1, const FieldElement& a2) {
    Kr32Candidate c{a1, a2, false, Poly(), std::nullopt, std::nullopt};
    FieldPtr f = common_field(a1.field(), a2.field());
    Poly t = tvar(f);
    Poly R1 = t * t * a2 + t * a1 + cst(f, 1);
    auto [F, S] = kr32_f_and_S(R1);
    auto [q, r] = divide(F, S * S);
    c.remainder = r;
    c.divisible = r.is_zero() && !S.constant_term().is_zero();
    if (c.divisible) {
        c.params = kr32_params(R1, 7);
        c.certificate = etale_certificate(*c.params);
    }
    return c;
}

std::pair<FieldElement, FieldElement> kr32_reference_candidate() {
    auto K = NumberField::make({7, 0, 1}, "theta");
    FieldElement a1 = parse_field_element("(87 + 91*theta)/24", K);
    FieldElement a2 = parse_field_element("-(139 + 63*theta)/24", K);
    return {a1, a2};
}

std::pair<FieldElement, FieldElement> kr32_swapped_candidate() {
    auto [a1, a2] = kr32_reference_candidate();
    return {a2, a1};
}

std::vector<EtaleParams> solve_kr32(int d0, const std::vector<std::pair<FieldElement, FieldElement>>& candidates) {
    if (d0 == 1) return solve_kr32_linear();
    if (d0 != 2) throw UnsupportedN("solve_kr32 handles d0 in {1, 2}");
    std::vector<std::pair<FieldElement, FieldElement>> cands = candidates;
    if (cands.empty()) cands.push_back(kr32_reference_candidate());
    std::vector<EtaleParams> out;
    for (const auto& [a1, a2] : cands) {
        auto c = kr32_check_candidate(a1, a2);
        if (c.certificate && c.certificate->verdict) out.push_back(*c.params);
    }
    return out;
}

}  // namespace etale
