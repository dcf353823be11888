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

#include "etale/reproduce.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <set>

#include "etale/chebyshab.hpp"
#include "etale/constructor.hpp"
#include "etale/family.hpp"
#include "etale/miyanishi.hpp"
#include "etale/parse.hpp"

namespace etale {

namespace {

const std::vector<std::string> kUVW{"u", "v", "w"};

FieldElement q(const Rational& v) { return FieldElement(NumberField::rationals(), v); }

// Missing or unreadable fixture: named in the notes and the criterion fails.
struct FixtureMissing : Error {
    using Error::Error;
};

struct Ctx {
    std::string dir;
    std::uint64_t seed = 0;
    CriterionResult* out = nullptr;

    json fixture(const std::string& name) const {
        auto path = (std::filesystem::path(dir) / name).string();
        if (!std::filesystem::exists(path)) throw FixtureMissing("missing fixture: " + name);
        return load_json_file(path);
    }
    // records a failed sub-check; returns ok
    bool expect(bool ok, const std::string& what) const {
        if (!ok) {
            out->pass = false;
            out->notes.push_back("failed: " + what);
        }
        return ok;
    }
    void note(const std::string& s) const { out->notes.push_back(s); }
    std::uint64_t sub(std::uint64_t salt) const { return seed * 0x9e3779b97f4a7c15ULL + salt; }
};

SurfacePoint point_of(const json& arr, const FieldPtr& f) {
    auto s = arr.get<std::vector<std::string>>();
    if (s.size() != 3) throw FormatError("a point needs three coordinates");
    return {parse_field_element(s[0], f), parse_field_element(s[1], f), parse_field_element(s[2], f)};
}

// every certified construction used below; labels for notes
std::vector<std::pair<std::string, EtaleParams>> certified_corpus() {
    std::vector<std::pair<std::string, EtaleParams>> out;
    for (int d : {1, 3, 5, 7, 9}) out.emplace_back("chebyshev d=" + std::to_string(d), chebyshev_endo(d, q(1)));
    out.emplace_back("chebyshev d=3 lambda=2/3", chebyshev_endo(3, q(Rational(2, 3))));
    for (int m = 1; m <= 4; ++m) out.emplace_back("chebyshev square m=" + std::to_string(m), chebyshev_square_endo(m));
    for (int k = 2; k <= 5; ++k)
        for (int e = 1; e < k; ++e)
            out.emplace_back("cyclic k=" + std::to_string(k) + " eps=" + std::to_string(e), cyclic_galois_endo(k, e).params);
    int i = 0;
    for (const auto& p : solve_kr32_linear()) out.emplace_back("kr32 linear #" + std::to_string(++i), p);
    auto [a1, a2] = kr32_swapped_candidate();
    auto c = kr32_check_candidate(a1, a2);
    if (c.params && c.certificate && c.certificate->verdict) out.emplace_back("kr32 quadratic (swapped)", *c.params);
    return out;
}

// ---------------------------------------------------------------------------

void c1(const Ctx& cx) {
    const auto X = Poly::variable("x");
    const auto one = Poly::constant(NumberField::rationals(), Rational(1), {"x"});
    for (int n = 1; n <= 50; ++n) {
        Poly T = chebyshev_T(n), U = chebyshev_U(n - 1);
        std::string tag = " (n=" + std::to_string(n) + ")";
        cx.expect(T * T - one == (X * X - one) * U * U, "T^2 - 1 = (x^2-1) U^2" + tag);
        cx.expect(U * q(n) == T.derivative("x"), "n U = T'" + tag);
        cx.expect(T.evaluate({{"x", q(1)}}) == q(1), "T(1) = 1" + tag);
        cx.expect(U.evaluate({{"x", q(1)}}) == q(n), "U(1) = n" + tag);
        cx.expect(U.evaluate({{"x", q(-1)}}) == q(n % 2 == 1 ? n : -n), "U(-1) = (-1)^(n-1) n" + tag);
    }
    cx.note("n = 1..50");
}

void c2(const Ctx& cx) {
    auto fx = cx.fixture("s2_galois.json");
    auto fp = params_from_json(fx);
    auto cert = etale_certificate(fp);
    cx.expect(cert.verdict, "fixture certificate verdict");
    auto cg = cyclic_galois_endo(2, 1);
    for (auto [a, b] : {std::pair{fp.R0, cg.params.R0}, {fp.R1, cg.params.R1}, {fp.R2, cg.params.R2}})
        cx.expect(print_poly(a) == print_poly(b), "constructor data equals fixture data: " + print_poly(b));
    auto F = cg.j.field();
    const auto& ex = fx.at("expect");
    auto hs = SurfaceSpec::hyper(2, 1);
    auto jw = ex.at("j").get<std::vector<std::string>>();
    auto ew = ex.at("eta").get<std::vector<std::string>>();
    auto built = build_from_params(cg.params);
    if (!cx.expect(built.descended.has_value(), "descended map exists")) return;
    for (std::size_t i = 0; i < 3; ++i) {
        cx.expect(cg.j.coords[i] == normal_form(parse_poly(jw[i], kUVW, F), hs), "j coordinate " + jw[i]);
        cx.expect(built.descended->coords[i] == normal_form(parse_poly(ew[i], kUVW, F), hs), "eta coordinate " + ew[i]);
    }
    cx.expect(degree_of(*built.descended) == ex.at("degree").get<int>(), "degree 2");
    Poly t = Poly::variable("t", fp.field());
    Poly want = t * FieldElement(fp.field(), Rational(4)) * (Poly::constant(fp.field(), Rational(1), {"t"}) - t);
    cx.expect(base_map_product(fp) == want, "t (1-t)^0 R0 R2^2 = 4t(1-t)");
    cx.expect(base_map(fp) == want, "1 - R1^2 = 4t(1-t)");
}

void c3(const Ctx& cx) {
    auto fx = cx.fixture("chebyshev_d3.json");
    for (int d : {3, 5, 7, 9}) {
        std::string tag = " (d=" + std::to_string(d) + ")";
        auto p = chebyshev_endo(d, q(1));
        cx.expect(etale_certificate(p).verdict, "certificate" + tag);
        auto lift = build_from_params(p).lift;
        cx.expect(cstar_equivariant(lift), "C* equivariance" + tag);
        cx.expect(degree_of(lift) == d, "degree" + tag);
        cx.expect(jacobian_spotcheck(lift, 25, cx.sub(300 + static_cast<std::uint64_t>(d))), "Jacobian spot-check" + tag);
    }
    auto fp = params_from_json(fx);
    cx.expect(etale_certificate(fp).verdict, "fixture certificate");
    auto lift = build_from_params(fp).lift;
    auto in = point_of(fx.at("point").at("in"), fp.field());
    auto want = point_of(fx.at("point").at("out"), fp.field());
    cx.expect(etale::apply(lift, in) == want, "point fixture (1,3,2) -> (15,3,26)");
}

void c4(const Ctx& cx) {
    auto fx = cx.fixture("kr32_d0_1.json");
    auto K = parse_field(fx.at("field").get<std::string>());
    std::set<std::string> expected, got;
    for (const auto& s : fx.at("a1").get<std::vector<std::string>>()) expected.insert(print_field_element(parse_field_element(s, K)));
    auto sols = solve_kr32(1);
    for (const auto& p : sols) {
        got.insert(print_field_element(p.R1.coefficient({1})));
        auto cert = etale_certificate(p);
        bool ok = cert.verdict && p.d == fx.at("d").get<int>() && cert.degrees && *cert.degrees == DegreeTriple{1, 1, 1};
        cx.expect(ok, "rebuilt params certify with d = 4, d0 = d1 = d2 = 1");
    }
    cx.expect(sols.size() == 2, "two conjugate solutions");
    if (cx.out->pass) cx.note("both solver outputs certify with d = 4, d0 = d1 = d2 = 1");
    std::string g, e;
    for (const auto& s : got) g += (g.empty() ? "" : ", ") + s;
    for (const auto& s : expected) e += (e.empty() ? "" : ", ") + s;
    cx.expect(got == expected, "solver a1 = {" + g + "} vs expected {" + e + "}");
}

void c5(const Ctx& cx) {
    auto fx = cx.fixture("kr32_d0_2_reference.json");
    auto K = parse_field(fx.at("field").get<std::string>());
    auto a1 = parse_field_element(fx.at("a1").get<std::string>(), K);
    auto a2 = parse_field_element(fx.at("a2").get<std::string>(), K);
    auto c = kr32_check_candidate(a1, a2);
    cx.expect(c.divisible, "divisibility for the fixture pair; remainder " + print_poly(c.remainder));
    cx.expect(c.certificate && c.certificate->verdict && c.params && c.params->d == 7, "certificate verdict with d = 7");
    try {
        auto sw = cx.fixture("kr32_d0_2_swapped.json");
        auto s = kr32_check_candidate(parse_field_element(sw.at("a1").get<std::string>(), K),
                                      parse_field_element(sw.at("a2").get<std::string>(), K));
        cx.note(std::string("same numbers with a1 and a2 exchanged: ") +
                (s.certificate && s.certificate->verdict ? "certified, d = 7" : "not certified"));
    } catch (const FixtureMissing& e) {
        cx.note(e.what());
    }
}

void c6(const Ctx& cx) {
    int cases = 0;
    for (int k = 2; k <= 5; ++k)
        for (int r = 2; r <= 5; ++r)
            for (int alpha = 0; alpha <= 1; ++alpha) {
                if (!alpha_condition(k, r, alpha, 1)) continue;
                int mod = k * (r - 1);
                int res = alpha + r * (1 - alpha);
                for (int d = 1; d <= 30; ++d) {
                    ++cases;
                    auto t = degrees_from(k, r, alpha, d);
                    bool cong = ((d - res) % mod + mod) % mod == 0;
                    std::string tag = " (k=" + std::to_string(k) + " r=" + std::to_string(r) + " alpha=" +
                                      std::to_string(alpha) + " d=" + std::to_string(d) + ")";
                    cx.expect(t.has_value() == cong, "feasible iff congruence" + tag);
                    if (t) {
                        cx.expect(k * t->d1 + alpha == d, "first counting identity" + tag);
                        cx.expect(r * k * t->d2 + k * t->d0 + k + (1 - alpha) * r == k * d, "second counting identity" + tag);
                    }
                }
            }
    cx.note(std::to_string(cases) + " (k, r, alpha, d) cases");
}

void c7(const Ctx& cx) {
    auto fp = params_from_json(cx.fixture("alpha0_m2.json"));
    auto corpus = certified_corpus();
    corpus.emplace_back("fixture alpha0_m2", fp);
    int n = 0;
    for (const auto& [label, p] : corpus) {
        if (p.alpha != 0 || p.a != 1 || p.r % p.k != 0 || !etale_certificate(p).verdict) continue;
        ++n;
        int rbar = p.r / p.k;
        auto j = factor_through_cover(p);
        auto eta = build_from_params(p).descended;
        if (!cx.expect(eta.has_value(), "descended map (" + label + ")")) continue;
        auto pj = compose_maps(covering(p.k, rbar), j);
        cx.expect(pj.coords == eta->coords, "pi o j = eta (" + label + ")");
        int dj = degree_of(j);
        cx.expect(((dj - rbar) % (p.r - 1) + (p.r - 1)) % (p.r - 1) == 0,
                  "deg j = " + std::to_string(dj) + " against rbar mod r-1 (" + label + ")");
    }
    cx.note(std::to_string(n) + " alpha = 0 builds");
    cx.expect(n > 0, "at least one alpha = 0 build");
}

void c8(const Ctx& cx) {
    auto fx = cx.fixture("family_k2.json");
    auto base = cyclic_galois_endo(fx.at("k").get<int>(), 1).params;
    auto F = base.field();
    std::vector<FamilySpec> specs;
    for (const auto& av : fx.at("avectors")) {
        FamilySpec f;
        f.k = fx.at("k").get<int>();
        f.rbar = fx.at("rbar").get<int>();
        f.base = base;
        for (const auto& s : av.get<std::vector<std::string>>()) f.avector.push_back(parse_field_element(s, F));
        specs.push_back(f);
    }
    cx.expect(family_pairwise_distinct(specs), "members pairwise distinct");
    std::uint64_t salt = 800;
    for (const auto& f : specs) {
        auto m = family_member(f);
        std::string tag = " (a of length " + std::to_string(f.avector.size()) + ")";
        cx.expect(degree_of(m) == 2, "degree 2" + tag);
        cx.expect(jacobian_spotcheck(m, 25, cx.sub(++salt)), "spot-check" + tag);
    }
    auto m0 = family_member(specs.at(0));
    cx.expect(etale::apply(m0, point_of(fx.at("point").at("in"), F)) == point_of(fx.at("point").at("out"), F),
              "point fixture (1,3,2) -> (4,30,22)");

    // symbolic coordinates for up to three parameters
    std::vector<std::string> all{"u", "v", "w", "a1", "a2", "a3"};
    auto hs = SurfaceSpec::hyper(2, 1);
    for (int n = 0; n <= 3; ++n) {
        auto m = family_member_for(base, 1, symbolic_deformation_poly(n, 2));
        std::string Qa = "0";
        for (int i = 1; i <= n; ++i) Qa += " + a" + std::to_string(i) + "*w^" + std::to_string(2 * (i - 1));
        std::string G = "(1 + w^2*(" + Qa + "))";
        std::array<std::string, 3> want{"w^2", "4*v + 2*(1 + 2*u*v)*" + G + " + w^2*" + G + "^2", "(1 + 2*u*v)*w + w^3*" + G};
        for (std::size_t i = 0; i < 3; ++i)
            cx.expect((m.coords[i] - normal_form(parse_poly(want[i], all, F), hs)).is_zero(),
                      "symbolic coordinate " + std::to_string(i + 1) + " with " + std::to_string(n) + " parameters");
    }

    // a^2 + a x^r: equivalence classes are cube roots of unity
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
        bool cube = (b / a).pow(3) == one;
        cx.expect(cube == want && ec_equivalent(Pa(b), Pa(a), r).equivalent == cube,
                  "equivalent iff b/a is a cube root of unity, a = " + print_field_element(a) + ", b = " + print_field_element(b));
    }
}

void c9(const Ctx& cx) {
    SplitMix64 rng(cx.sub(900));
    auto random_p = [&] {
        Poly p(NumberField::rationals(), {"x"});
        int deg = static_cast<int>(rng.uniform(0, 3));
        for (int i = 0; i <= deg; ++i) p.add_term({i}, q(Rational(static_cast<long>(rng.uniform(-5, 5)), static_cast<long>(rng.uniform(1, 3)))));
        return p;
    };
    for (int k : {2, 3}) {
        auto s = SurfaceSpec::tilde(k, k);
        for (int i = 0; i < 20; ++i) {
            Poly P = random_p(), Qp = random_p();
            auto lhs = compose_maps(theta(P, s), theta(Qp, s));
            cx.expect(lhs.coords == theta(P + Qp, s).coords,
                      "theta(P) o theta(Q) = theta(P+Q) on " + s.id() + " with P = " + print_poly(P) + ", Q = " + print_poly(Qp));
        }
    }
    cx.note("20 pairs on each of tilde(2,2), tilde(3,3)");
}

void c10(const Ctx& cx) {
    for (const char* name : {"miyanishi_n2.json", "miyanishi_n3.json"}) {
        auto p = miy_from_json(cx.fixture(name));
        std::string tag = std::string(" (n=") + std::to_string(p.n) + ")";
        cx.expect(miy_b_check(p.n, p.b).ok, "b-condition" + tag);
        auto rep = miy_lift_check(p);
        for (const auto& c : rep.checks) cx.expect(c.ok, c.name + tag);
        if (p.n == 2) {
            auto first = miy_eta0(p).first;
            auto v = is_chebyshev_normalized(first.with_vars({"x"}));
            cx.expect(v.yes && v.n == 2, "base map is T_2, degree 2");
        }
    }
}

void c11(const Ctx& cx) {
    auto corpus = certified_corpus();
    for (const char* name : {"s2_galois.json", "chebyshev_d3.json", "alpha0_m2.json"})
        corpus.emplace_back(std::string("fixture ") + name, params_from_json(cx.fixture(name)));
    for (const auto& [label, p] : corpus) {
        auto pc = ri_pattern(p);
        cx.expect(pc.extraction.ok, "profile extraction (" + label + ")");
        cx.expect(pc.thom, "Thom feasibility (" + label + ")");
        cx.expect(pc.pattern, "multiplicity pattern (" + label + ")");
    }
    cx.note(std::to_string(corpus.size()) + " certified parameter sets");
}

void c12(const Ctx& cx) {
    std::vector<std::pair<std::string, SurfaceMap>> maps;
    auto corpus = certified_corpus();
    for (const char* name : {"s2_galois.json", "chebyshev_d3.json", "alpha0_m2.json"})
        corpus.emplace_back(std::string("fixture ") + name, params_from_json(cx.fixture(name)));
    for (const auto& [label, p] : corpus) {
        if (!etale_certificate(p).verdict) continue;
        auto b = build_from_params(p);
        maps.emplace_back(label + " lift", b.lift);
        if (b.descended) maps.emplace_back(label + " descended", *b.descended);
    }
    auto base = cyclic_galois_endo(2, 1).params;
    for (int n = 0; n <= 2; ++n) {
        FamilySpec f{2, 1, base, {}};
        for (int i = 0; i < n; ++i) f.avector.push_back(FieldElement(base.field(), Rational(i + 1)));
        maps.emplace_back("family member " + std::to_string(n), family_member(f));
    }
    std::uint64_t salt = 1200;
    for (const auto& [label, m] : maps) cx.expect(jacobian_spotcheck(m, 6, cx.sub(++salt)), "spot-check (" + label + ")");
    cx.note(std::to_string(maps.size()) + " certified maps");
    cx.expect(maps.size() >= 30, "corpus of at least 30 maps");

    // a ramified non-example, sampled where the third coordinate vanishes
    auto fx = cx.fixture("ramified_tilde22.json");
    auto ram = map_from_json(fx);
    SplitMix64 rng(cx.sub(1299));
    int hits = 0, tried = 0;
    while (tried < 10) {
        Rational x(static_cast<long>(rng.uniform(1, 40) * (rng.uniform(0, 1) ? 1 : -1)), static_cast<long>(rng.uniform(1, 9)));
        x.canonicalize();
        auto pt = point_from_draws(ram.source, x, Rational(0));
        if (!pt) continue;
        ++tried;
        auto det = jacobian_at(ram, *pt);
        if (det && det->is_zero()) ++hits;
    }
    cx.expect(hits == tried, "ramified map: zero Jacobian at every sampled point of the locus (" + std::to_string(hits) +
                                 "/" + std::to_string(tried) + ")");
    cx.expect(!etale_certificate(params_from_json(cx.fixture("s2_galois.json"))).checks.empty(), "certificate runs");
}

struct Entry {
    const char* title;
    std::function<void(const Ctx&)> run;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> e{
        {"Chebyshev identities, n <= 50", c1},
        {"S2 cyclic-Galois fixture", c2},
        {"Chebyshev endomorphisms of tilde(2,2)", c3},
        {"(3,2) d0 = 1 solver, literal conjugate pair", c4},
        {"(3,2) d0 = 2, literal candidate pair", c5},
        {"degree congruence law", c6},
        {"factorization through the cover", c7},
        {"deformation family", c8},
        {"Theta group law", c9},
        {"Miyanishi example", c10},
        {"profile consistency", c11},
        {"oracle cross-validation", c12},
    };
    return e;
}

}  // namespace

bool ReproduceReport::all_pass() const {
    return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.pass; });
}

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> n{
        "s2_galois.json",       "chebyshev_d3.json",     "kr32_d0_1.json",    "kr32_d0_2_reference.json",
        "kr32_d0_2_swapped.json", "alpha0_m2.json",      "family_k2.json",    "miyanishi_n2.json",
        "miyanishi_n3.json",    "ramified_tilde22.json"};
    return n;
}

int criterion_count() { return static_cast<int>(entries().size()); }

CriterionResult run_criterion(int id, const std::string& fixture_dir, std::uint64_t seed) {
    if (id < 1 || id > criterion_count()) throw PreconditionViolated("no criterion " + std::to_string(id));
    CriterionResult out;
    out.id = id;
    out.title = entries()[static_cast<std::size_t>(id - 1)].title;
    out.pass = true;
    Ctx cx{fixture_dir, seed, &out};
    try {
        entries()[static_cast<std::size_t>(id - 1)].run(cx);
    } catch (const FixtureMissing& e) {
        out.pass = false;
        out.notes.push_back(e.what());
    } catch (const std::exception& e) {
        out.pass = false;
        out.notes.push_back(std::string("error: ") + e.what());
    }
    return out;
}

ReproduceReport reproduce_paper(const std::string& fixture_dir, std::uint64_t seed, std::optional<int> only) {
    ReproduceReport rep;
    for (const auto& n : fixture_names())
        if (!std::filesystem::exists(std::filesystem::path(fixture_dir) / n)) rep.missing.push_back(n);
    for (int id = 1; id <= criterion_count(); ++id)
        if (!only || *only == id) rep.results.push_back(run_criterion(id, fixture_dir, seed));
    return rep;
}

json to_json(const ReproduceReport& r) {
    json items = json::array();
    for (const auto& c : r.results) items.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"notes", c.notes}});
    return {{"all_pass", r.all_pass()}, {"missing_fixtures", r.missing}, {"criteria", items}};
}

}  // namespace etale
