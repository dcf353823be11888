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

#include "etale/endo.hpp"

#include <algorithm>
#include <numeric>

#include "etale/parse.hpp"

namespace etale {

namespace {

const std::vector<std::string> kT{"t"};

Poly cst(const FieldPtr& f, const Rational& v, const std::vector<std::string>& vars) {
    return Poly::constant(FieldElement(f, v), vars);
}

int mod(long long a, long long m) { return static_cast<int>(((a % m) + m) % m); }

bool only_vars(const Poly& p, const std::vector<std::string>& allowed) {
    for (const auto& v : p.used_vars())
        if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) return false;
    return true;
}

int deg_t(const Poly& p) { return p.is_zero() ? -1 : p.degree_in("t"); }

FieldElement eval_t(const Poly& p, const FieldElement& t) { return p.with_vars(merge_vars(kT, p.vars())).evaluate({{"t", t}}); }

}  // namespace

FieldPtr EtaleParams::field() const {
    FieldPtr f = lambda.field();
    for (const Poly* p : {&R0, &R1, &R2}) f = common_field(f, p->field());
    return f;
}

bool alpha_condition(int k, int r, int alpha, int a) {
    if (k < 1 || r < 1) return false;
    if (std::gcd(a, k) != 1) return false;
    if (alpha == 1) return true;
    if (alpha == 0) return r % k == 0 && mod(a, k) == mod(1, k);
    return false;
}

std::optional<DegreeTriple> degrees_from(int k, int r, int alpha, int d) {
    if (k < 1 || r < 2 || (alpha != 0 && alpha != 1) || d < 1) return std::nullopt;
    if (alpha == 0 && r % k != 0) return std::nullopt;
    const long long m = static_cast<long long>(k) * (r - 1);
    const long long num = static_cast<long long>(d) - alpha - static_cast<long long>(r) * (1 - alpha);
    if (mod(num, m) != 0) return std::nullopt;
    Rational d2 = Rational(static_cast<long>(num)) / static_cast<long>(m);
    Rational d1 = Rational(d - alpha) / k;
    Rational rk = Rational(r * (1 - alpha)) / k;
    Rational d0 = Rational(d - 1) - Rational(r) * d2 - rk;
    for (const Rational* v : {&d0, &d1, &d2})
        if (v->get_den() != 1 || *v < 0) return std::nullopt;
    // both counting identities
    if (Rational(1) + d0 + Rational(r) * d2 + rk != Rational(d)) return std::nullopt;
    if (Rational(alpha) + Rational(k) * d1 != Rational(d)) return std::nullopt;
    return DegreeTriple{static_cast<int>(d0.get_num().get_si()), static_cast<int>(d1.get_num().get_si()),
                        static_cast<int>(d2.get_num().get_si())};
}

const NamedCheck* EtaleCertificate::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::vector<std::string> EtaleCertificate::failing() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.ok) out.push_back(c.name);
    return out;
}

Poly base_map_product(const EtaleParams& p) {
    FieldPtr f = p.field();
    if (p.alpha == 0 && p.r % p.k != 0) throw PreconditionViolated("(1-alpha)r/k is not an integer");
    const int e = (1 - p.alpha) * p.r / p.k;
    Poly t = Poly::variable("t", f);
    Poly one_minus_t = cst(f, 1, kT) - t;
    return t * one_minus_t.pow(e) * p.R0.with_vars(merge_vars(kT, p.R0.vars())) * p.R2.pow(p.r);
}

Poly base_map(const EtaleParams& p) {
    FieldPtr f = p.field();
    Poly one_minus_t = cst(f, 1, kT) - Poly::variable("t", f);
    return cst(f, 1, kT) - one_minus_t.pow(p.alpha) * p.R1.pow(p.k);
}

EtaleCertificate etale_certificate(const EtaleParams& p) {
    EtaleCertificate cert;
    cert.params = p;
    const bool shape_ok = only_vars(p.R0, kT) && only_vars(p.R1, kT) && only_vars(p.R2, kT) && p.k >= 1 &&
                          p.r >= 2 && (p.alpha == 0 || p.alpha == 1);
    FieldPtr f;
    try {
        f = p.field();
    } catch (const FieldMismatch&) {
        cert.checks.push_back({"identity", false, "lambda and R_i live in different fields"});
        for (const char* n : {"degrees", "separability", "normalization", "congruence", "alpha_condition"})
            cert.checks.push_back({n, false, "field mismatch"});
        return cert;
    }

    // identity
    {
        NamedCheck c{"identity", false, ""};
        if (!shape_ok) {
            c.detail = "R_i must be univariate in t, r >= 2, alpha in {0,1}";
        } else if (p.alpha == 0 && p.r % p.k != 0) {
            c.detail = "(1-alpha)r/k is not an integer";
        } else {
            Poly lhs = base_map_product(p), rhs = base_map(p);
            c.ok = lhs == rhs;
            if (!c.ok) c.detail = "t(1-t)^e R0 R2^r - (1 - (1-t)^alpha R1^k) = " + print_poly(lhs - rhs);
        }
        cert.checks.push_back(c);
    }
    // degrees
    {
        NamedCheck c{"degrees", false, ""};
        cert.degrees = shape_ok ? degrees_from(p.k, p.r, p.alpha, p.d) : std::nullopt;
        if (!cert.degrees) {
            c.detail = "no nonnegative integer degree triple for d = " + std::to_string(p.d);
        } else {
            const auto& dt = *cert.degrees;
            int e0 = deg_t(p.R0), e1 = deg_t(p.R1), e2 = deg_t(p.R2);
            int eb = deg_t(base_map(p));
            c.ok = e0 == dt.d0 && e1 == dt.d1 && e2 == dt.d2 && eb == p.d;
            c.detail = "expected (d0,d1,d2) = (" + std::to_string(dt.d0) + "," + std::to_string(dt.d1) + "," +
                       std::to_string(dt.d2) + "), got (" + std::to_string(e0) + "," + std::to_string(e1) + "," +
                       std::to_string(e2) + "); base degree " + std::to_string(eb);
        }
        cert.checks.push_back(c);
    }
    // separability
    {
        NamedCheck c{"separability", false, ""};
        if (shape_ok && !p.R0.is_zero() && !p.R1.is_zero() && !p.R2.is_zero()) {
            Poly prod = (cst(f, 1, kT) - Poly::variable("t", f)) * p.R0 * p.R1 * p.R2;
            c.ok = is_squarefree(prod);
            if (!c.ok) c.detail = "(1-t) R0 R1 R2 has a repeated factor";
        } else {
            c.detail = "R_i must be nonzero univariate polynomials in t";
        }
        cert.checks.push_back(c);
    }
    // normalization
    {
        NamedCheck c{"normalization", false, ""};
        if (shape_ok) {
            FieldElement zero(f);
            bool r1 = eval_t(p.R1, zero).is_one(), r2 = eval_t(p.R2, zero).is_one();
            bool r0 = !eval_t(p.R0, zero).is_zero();
            bool lam = !p.lambda.is_zero();
            c.ok = r1 && r2 && r0 && lam;
            if (!r1) c.detail += "R1(0) != 1; ";
            if (!r2) c.detail += "R2(0) != 1; ";
            if (!r0) c.detail += "R0(0) = 0; ";
            if (!lam) c.detail += "lambda = 0; ";
        } else {
            c.detail = "R_i must be univariate in t";
        }
        cert.checks.push_back(c);
    }
    // congruence
    {
        NamedCheck c{"congruence", false, ""};
        if (p.k >= 1 && p.r >= 2) {
            long long m = static_cast<long long>(p.k) * (p.r - 1);
            long long want = p.alpha + static_cast<long long>(p.r) * (1 - p.alpha);
            c.ok = mod(p.d - want, m) == 0;
            c.detail = "d = " + std::to_string(p.d) + ", need d = " + std::to_string(mod(want, m)) + " mod " +
                       std::to_string(m);
        } else {
            c.detail = "modulus k(r-1) must be positive";
        }
        cert.checks.push_back(c);
    }
    // alpha condition
    {
        NamedCheck c{"alpha_condition", alpha_condition(p.k, p.r, p.alpha, p.a), ""};
        if (!c.ok) c.detail = "need gcd(a,k) = 1 and either alpha = 1, or alpha = 0 with k | r and a = 1";
        cert.checks.push_back(c);
    }
    cert.verdict = std::all_of(cert.checks.begin(), cert.checks.end(), [](const NamedCheck& c) { return c.ok; });
    return cert;
}

// ---------------------------------------------------------------------------
// maps

FieldPtr SurfaceMap::field() const {
    FieldPtr f = coords[0].field();
    for (const auto& c : coords) f = common_field(f, c.field());
    return f;
}

namespace {

bool has_extra_vars(const std::array<Poly, 3>& coords, const SurfaceSpec& s) {
    for (const auto& c : coords)
        if (!only_vars(c, s.vars())) return true;
    return false;
}

Poly pull_back(const Poly& p, const SurfaceSpec& target, const std::array<Poly, 3>& coords) {
    std::map<std::string, Poly> img;
    for (std::size_t i = 0; i < 3; ++i) img.emplace(target.vars()[i], coords[i]);
    return substitute(p.with_vars(merge_vars(target.vars(), p.vars())), img);
}

FieldElement eval_at(const Poly& p, const SurfaceSpec& s, const SurfacePoint& pt) {
    return p.evaluate(point_map(s, pt));
}

}  // namespace

SurfaceMap make_map(const SurfaceSpec& source, const SurfaceSpec& target, std::array<Poly, 3> coords,
                    std::optional<int> declared_degree, std::string label) {
    for (auto& c : coords) c = normal_form(c, source);
    Poly rel = normal_form(pull_back(target.relation(), target, coords), source);
    if (!rel.is_zero())
        throw NotAMorphism("target relation does not vanish on the source: " + print_poly(rel), rel);
    if (!has_extra_vars(coords, source)) {
        for (const auto& pt : sample_points(source, 20, 0x5eedULL)) {
            SurfacePoint img{eval_at(coords[0], source, pt), eval_at(coords[1], source, pt),
                             eval_at(coords[2], source, pt)};
            if (!on_surface(img, target)) throw NotAMorphism("sampled image leaves the target", rel);
        }
    }
    SurfaceMap m{source, target, std::move(coords), std::nullopt, declared_degree, std::move(label)};
    return m;
}

SurfacePoint apply(const SurfaceMap& m, const SurfacePoint& p) {
    SurfacePoint img{eval_at(m.coords[0], m.source, p), eval_at(m.coords[1], m.source, p),
                     eval_at(m.coords[2], m.source, p)};
    if (on_surface(p, m.source) && !on_surface(img, m.target))
        throw NotAMorphism("image point is not on the target", Poly());
    return img;
}

SurfaceMap identity_map(const SurfaceSpec& s) {
    auto Q = NumberField::rationals();
    return make_map(s, s, {Poly::variable(s.vars()[0], s.vars(), Q), Poly::variable(s.vars()[1], s.vars(), Q),
                           Poly::variable(s.vars()[2], s.vars(), Q)},
                    1, "id");
}

SurfaceMap compose_maps(const SurfaceMap& g, const SurfaceMap& f) {
    if (f.target != g.source)
        throw SourceTargetMismatch("cannot compose: " + f.target.id() + " is not " + g.source.id());
    std::array<Poly, 3> coords;
    for (std::size_t i = 0; i < 3; ++i) coords[i] = pull_back(g.coords[i], g.source, f.coords);
    std::optional<int> deg;
    try {
        deg = degree_of(g) * degree_of(f);
    } catch (const DegreeUndetermined&) {
    }
    std::string label = (g.label.empty() ? "g" : g.label) + "*" + (f.label.empty() ? "f" : f.label);
    return make_map(f.source, g.target, std::move(coords), deg, label);
}

bool cstar_equivariant(const SurfaceMap& m) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (m.coords[i].is_zero()) continue;
        auto w = weight_of(m.coords[i], m.source);
        if (!w || *w != m.target.weights()[i]) return false;
    }
    return true;
}

ZkCompat zk_compatible(const SurfaceSpec& source, const SurfaceSpec& target, const std::array<Poly, 3>& coords, int a) {
    if (!source.is_tilde() || !target.is_tilde() || source.k() != target.k())
        throw PreconditionViolated("Z_k compatibility needs tilde models with the same k");
    const int k = source.k();
    if (std::gcd(a, k) != 1) throw PreconditionViolated("a must be coprime to k");
    auto ex_s = source.zk_exponents(a);
    auto ex_t = target.zk_exponents(a);
    // characters of every monomial of every coordinate
    std::array<std::vector<int>, 3> chars;
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<int> idx;
        for (const auto& v : source.vars()) idx.push_back(coords[i].var_index(v));
        for (const auto& [e, c] : coords[i].terms()) {
            long long ch = 0;
            for (std::size_t j = 0; j < 3; ++j)
                if (idx[j] >= 0) ch += static_cast<long long>(ex_s[j]) * e[static_cast<std::size_t>(idx[j])];
            chars[i].push_back(mod(ch, k));
        }
    }
    for (int m = 0; m < k; ++m) {
        bool ok = true;
        for (std::size_t i = 0; i < 3 && ok; ++i) {
            int want = mod(static_cast<long long>(m) * ex_t[i], k);
            for (int ch : chars[i])
                if (ch != want) {
                    ok = false;
                    break;
                }
        }
        if (ok) return {m == 0 ? ZkCompat::Kind::invariant : ZkCompat::Kind::equivariant, m};
    }
    return {ZkCompat::Kind::no, 0};
}

ZkCompat zk_compatible(const SurfaceMap& m, int a) { return zk_compatible(m.source, m.target, m.coords, a); }

namespace {

// The base coordinate of the target pulled back to the source, in normal form.
Poly pulled_base(const SurfaceMap& m) {
    if (m.target.is_tilde()) return m.coords[2];
    return normal_form(-(m.coords[0].pow(m.target.r()) * m.coords[1]), m.source);
}

SurfaceMap covering_of(const SurfaceSpec& hyper) {
    auto Q = NumberField::rationals();
    SurfaceSpec tl = SurfaceSpec::tilde(hyper.k(), hyper.r() * hyper.k());
    const auto& v = tl.vars();
    Poly x = Poly::variable("x", v, Q), y = Poly::variable("y", v, Q), z = Poly::variable("z", v, Q);
    SurfaceMap pi{tl, hyper, {x.pow(hyper.k()), y, x * z}, std::nullopt, hyper.k(), "pi"};
    return pi;
}

// Univariate in z on the tilde model; throws when other surface variables remain.
Poly as_z_poly(const Poly& h, const SurfaceSpec& s) {
    for (const auto& v : h.used_vars())
        if (v != s.vars()[2]) throw DegreeUndetermined("base pullback is not a function of the quotient coordinate");
    return h;
}

}  // namespace

Poly quotient_map(const SurfaceMap& m) {
    if (!cstar_equivariant(m)) throw DegreeUndetermined("map is not C*-equivariant");
    if (m.source.is_tilde()) {
        Poly h = as_z_poly(pulled_base(m), m.source);
        return h.with_vars({"z"});
    }
    // hypersurface source: go through the covering, where t = 1 - z^k
    SurfaceMap pi = covering_of(m.source);
    Poly b = pulled_base(m);
    Poly h = normal_form(pull_back(b, m.source, pi.coords), pi.source);
    h = as_z_poly(h, pi.source).with_vars({"z"});
    const int k = m.source.k();
    FieldPtr f = h.field();
    Poly out(f, {"t"});
    Poly s = cst(f, 1, kT) - Poly::variable("t", f);  // z^k = 1 - t
    for (const auto& [e, c] : h.terms()) {
        if (e[0] % k != 0) throw DegreeUndetermined("base pullback is not a polynomial in z^k");
        out += s.pow(e[0] / k) * c;
    }
    return out;
}

int degree_of(const SurfaceMap& m) {
    if (m.declared_degree) return *m.declared_degree;
    Poly q = quotient_map(m);
    int d = q.total_degree();
    if (d < 1) throw DegreeUndetermined("induced base map is constant");
    return d;
}

BuiltMaps build_from_params(const EtaleParams& p) {
    auto cert = etale_certificate(p);
    if (!cert.verdict) throw CertificateRequired("certificate fails: " + [&] {
        std::string s;
        for (const auto& n : cert.failing()) s += (s.empty() ? "" : ", ") + n;
        return s;
    }());
    FieldPtr f = p.field();
    const FieldElement lam = p.lambda.in_field(f);
    const FieldElement lam_inv_r = lam.inverse().pow(p.r);

    SurfaceSpec tl = SurfaceSpec::tilde(p.k, p.r);
    const auto& v = tl.vars();
    Poly x = Poly::variable("x", v, f), y = Poly::variable("y", v, f), z = Poly::variable("z", v, f);
    Poly s = cst(f, 1, v) - z.pow(p.k);
    Poly c1 = x * z.pow(1 - p.alpha) * compose(p.R2, s) * lam;
    Poly c2 = y * compose(p.R0, s) * lam_inv_r;
    Poly c3 = z.pow(p.alpha) * compose(p.R1, s);
    BuiltMaps out{make_map(tl, tl, {c1, c2, c3}, std::nullopt, "lift"), std::nullopt};
    out.lift.meta = p;

    if (p.r % p.k == 0 && mod(p.a, p.k) == mod(1, p.k)) {
        SurfaceSpec hs = SurfaceSpec::hyper(p.k, p.r / p.k);
        const auto& hv = hs.vars();
        Poly u = Poly::variable("u", hv, f), vv = Poly::variable("v", hv, f), w = Poly::variable("w", hv, f);
        Poly t = -(u.pow(p.r / p.k) * vv);
        Poly R2t = compose(p.R2, t);
        Poly h1 = u * (cst(f, 1, hv) - t).pow(1 - p.alpha) * R2t.pow(p.k) * lam.pow(p.k);
        Poly h2 = vv * compose(p.R0, t) * lam_inv_r;
        Poly h3 = w * compose(p.R1, t) * R2t * lam;
        out.descended = make_map(hs, hs, {h1, h2, h3}, std::nullopt, "eta");
        out.descended->meta = p;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Jacobian oracle

namespace {

struct ChartJet {
    // partials of the relation and of coords 0 and 2
    std::array<Poly, 3> rel;
    std::array<std::array<Poly, 3>, 2> cd;
};

ChartJet jet_of(const SurfaceMap& m) {
    ChartJet j;
    const auto& v = m.source.vars();
    for (std::size_t i = 0; i < 3; ++i) {
        j.rel[i] = m.source.relation().derivative(v[i]);
        j.cd[0][i] = m.coords[0].with_vars(merge_vars(v, m.coords[0].vars())).derivative(v[i]);
        j.cd[1][i] = m.coords[2].with_vars(merge_vars(v, m.coords[2].vars())).derivative(v[i]);
    }
    return j;
}

std::optional<FieldElement> det_with_jet(const SurfaceMap& m, const ChartJet& j, const SurfacePoint& p) {
    auto pm = point_map(m.source, p);
    FieldElement Rb = j.rel[1].evaluate(pm);
    if (Rb.is_zero()) return std::nullopt;
    FieldElement first_img = m.coords[0].evaluate(pm);
    if (first_img.is_zero()) return std::nullopt;
    FieldElement dya = -(j.rel[0].evaluate(pm) / Rb);
    FieldElement dyc = -(j.rel[2].evaluate(pm) / Rb);
    std::array<std::array<FieldElement, 2>, 2> J;
    for (std::size_t r = 0; r < 2; ++r) {
        FieldElement ca = j.cd[r][0].evaluate(pm), cb = j.cd[r][1].evaluate(pm), cc = j.cd[r][2].evaluate(pm);
        J[r][0] = ca + cb * dya;
        J[r][1] = cc + cb * dyc;
    }
    return J[0][0] * J[1][1] - J[0][1] * J[1][0];
}

}  // namespace

std::optional<FieldElement> jacobian_at(const SurfaceMap& m, const SurfacePoint& p) {
    if (has_extra_vars(m.coords, m.source)) throw ArityError("Jacobian needs a map without free parameters");
    if (!on_surface(p, m.source)) throw PreconditionViolated("point is not on the source surface");
    return det_with_jet(m, jet_of(m), p);
}

bool jacobian_spotcheck(const SurfaceMap& m, int n, std::uint64_t seed) {
    if (has_extra_vars(m.coords, m.source)) throw ArityError("Jacobian needs a map without free parameters");
    ChartJet j = jet_of(m);
    const int budget = 20 * std::max(n, 1);
    auto pts = sample_points(m.source, budget, seed);
    int good = 0;
    bool all_nonzero = true;
    for (const auto& p : pts) {
        if (good >= n) break;
        auto det = det_with_jet(m, j, p);
        if (!det) continue;  // chart degenerate here, resample
        ++good;
        if (det->is_zero()) all_nonzero = false;
    }
    if (good < n) throw ChartDegenerate("too many sample points fell off the chart");
    return all_nonzero;
}

PatternCheck ri_pattern(const EtaleParams& p) {
    PatternCheck out;
    out.extraction = extract_profile(base_map(p));
    out.thom = out.extraction.ok && thom_feasible(out.extraction.profile).feasible;
    auto dt = degrees_from(p.k, p.r, p.alpha, p.d);
    if (!dt || !out.extraction.ok) return out;
    for (int i = 0; i < dt->d2; ++i) out.expected0.push_back(p.r);
    if (p.alpha == 0) out.expected0.push_back(p.r / p.k);
    for (int i = 0; i < dt->d0 + 1; ++i) out.expected0.push_back(1);
    for (int i = 0; i < dt->d1; ++i) out.expected1.push_back(p.k);
    if (p.alpha == 1) out.expected1.push_back(1);
    std::sort(out.expected0.rbegin(), out.expected0.rend());
    std::sort(out.expected1.rbegin(), out.expected1.rend());
    const auto& parts = out.extraction.profile.partitions;
    if (p.d == 1)
        out.pattern = parts.size() == 1 && parts[0] == std::vector<int>{1};
    else
        out.pattern = parts.size() == 2 && parts[0] == out.expected0 && parts[1] == out.expected1;
    return out;
}

}  // namespace etale
