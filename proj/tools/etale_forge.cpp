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

// etale-forge: construct and verify etale endomorphisms of C*-surfaces.
// Exit codes: 0 success / verdict true, 2 verdict false, 1 usage or input error.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "etale/chebyshab.hpp"
#include "etale/constructor.hpp"
#include "etale/family.hpp"
#include "etale/miyanishi.hpp"
#include "etale/parse.hpp"
#include "etale/reproduce.hpp"
#include "etale/serialize.hpp"

using namespace etale;

namespace {

constexpr int kOk = 0, kUsage = 1, kFalse = 2;

struct Global {
    std::uint64_t seed = 0;
    bool json_out = false;
};

void emit(const Global& g, const json& j, const std::function<void()>& text) {
    if (g.json_out)
        std::cout << j.dump(2) << "\n";
    else
        text();
}

FieldPtr field_arg(const std::string& s) { return s.empty() ? NumberField::rationals() : parse_field(s); }

json profile_json(const RamificationProfile& p) {
    json bp = json::array();
    for (const auto& b : p.branch_points) bp.push_back(print_field_element(b));
    return {{"degree", p.degree}, {"branch_points", bp}, {"partitions", p.partitions}};
}

void print_checks(const std::vector<NamedCheck>& checks, bool labels) {
    for (const auto& c : checks) {
        std::string l = labels ? check_label(c.name) : "";
        std::cout << "  " << (c.ok ? "ok   " : "FAIL ") << (l.empty() ? "" : l + " ") << c.name;
        if (!c.detail.empty()) std::cout << ": " << c.detail;
        std::cout << "\n";
    }
}

void print_map(const SurfaceMap& m) {
    std::cout << m.source.id() << " -> " << m.target.id() << ": (" << print_poly(m.coords[0]) << ", "
              << print_poly(m.coords[1]) << ", " << print_poly(m.coords[2]) << ")\n";
}

int verify(const Global& g, const std::string& path) {
    auto cert = etale_certificate(params_from_json(load_json_file(path)));
    std::vector<std::string> failing;
    for (const auto& c : cert.checks)
        if (!c.ok) failing.push_back(check_label(c.name) + " " + c.name);
    auto j = to_json(cert);
    j["failing"] = failing;
    emit(g, j, [&] {
        std::cout << "verdict: " << (cert.verdict ? "true" : "false") << "\n";
        print_checks(cert.checks, true);
        for (const auto& f : failing) std::cout << "failing check: " << f << "\n";
    });
    return cert.verdict ? kOk : kFalse;
}

json built_json(const EtaleParams& p) {
    auto b = build_from_params(p);
    json j = {{"params", to_json(p)}, {"lift", to_json(b.lift)}};
    if (b.descended) j["descended"] = to_json(*b.descended);
    return j;
}

void print_built(const EtaleParams& p) {
    std::cout << "params: " << to_json(p).dump() << "\n";
    auto b = build_from_params(p);
    print_map(b.lift);
    if (b.descended) print_map(*b.descended);
}

std::vector<FieldElement> avec_arg(const std::string& text, const FieldPtr& f) {
    std::vector<FieldElement> out;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("bad a-vector: ") + e.what());
    }
    if (!j.is_array()) throw FormatError("an a-vector is a JSON array");
    for (const auto& v : j) out.push_back(parse_field_element(v.is_string() ? v.get<std::string>() : v.dump(), f));
    return out;
}

EtaleParams family_base(int k, int rbar, const std::string& base_path) {
    if (!base_path.empty()) return params_from_json(load_json_file(base_path));
    if (rbar != 1) throw PreconditionViolated("rbar > 1 needs --base with certified alpha = 0 data and r = rbar k");
    return cyclic_galois_endo(k, 1).params;
}

std::uint64_t env_seed() {
    const char* s = std::getenv("ETALE_FORGE_SEED");
    if (!s || !*s) return 0;
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw FormatError(std::string("ETALE_FORGE_SEED is not an unsigned integer: ") + s);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construct and verify etale endomorphisms of C*-surfaces"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    Global g;
    std::optional<std::uint64_t> seed_opt;
    app.add_option("--seed", seed_opt, "seed for sample points (default: ETALE_FORGE_SEED or 0)");
    app.add_flag("--json", g.json_out, "machine-readable output");

    int code = kOk;
    std::function<int()> action;

    // verify-endo
    auto* ver = app.add_subcommand("verify-endo", "check the etale certificate of a parameter file");
    std::string params_path;
    ver->add_option("--params", params_path, "EtaleParams JSON")->required()->check(CLI::ExistingFile);
    ver->callback([&] { action = [&] { return verify(g, params_path); }; });

    // construct
    auto* con = app.add_subcommand("construct", "build parameter data");
    con->require_subcommand(1);
    auto* cheb = con->add_subcommand("chebyshev", "Chebyshev endomorphism of tilde(2,2)");
    int cheb_d = 3;
    std::string cheb_lambda = "1", cheb_field;
    cheb->add_option("--d", cheb_d, "odd degree")->required();
    cheb->add_option("--lambda", cheb_lambda, "nonzero scalar");
    cheb->add_option("--field", cheb_field, "minimal polynomial of the coefficient field");
    cheb->callback([&] {
        action = [&] {
            auto p = chebyshev_endo(cheb_d, parse_field_element(cheb_lambda, field_arg(cheb_field)));
            emit(g, built_json(p), [&] { print_built(p); });
            return kOk;
        };
    });
    auto* cyc = con->add_subcommand("cyclic-galois", "cyclic Galois cover data on tilde(k,k)");
    int cyc_k = 2, cyc_eps = 1;
    cyc->add_option("--k", cyc_k)->required();
    cyc->add_option("--eps", cyc_eps, "eps = zeta_k^eps");
    cyc->callback([&] {
        action = [&] {
            auto cg = cyclic_galois_endo(cyc_k, cyc_eps);
            auto j = built_json(cg.params);
            j["j"] = to_json(cg.j);
            emit(g, j, [&] {
                print_built(cg.params);
                print_map(cg.j);
            });
            return kOk;
        };
    });
    auto* kr = con->add_subcommand("kr32", "(k,r) = (3,2) solutions");
    int kr_d0 = 1;
    std::vector<std::string> kr_candidates;
    kr->add_option("--d0", kr_d0, "1 or 2")->required();
    kr->add_option("--candidate", kr_candidates, "candidate JSON {field, a1, a2} for d0 = 2")->check(CLI::ExistingFile);
    kr->callback([&] {
        action = [&]() -> int {
            if (kr_d0 == 1) {
                auto sols = solve_kr32(1);
                json arr = json::array();
                for (const auto& p : sols) arr.push_back(to_json(p));
                emit(g, {{"d0", 1}, {"solutions", arr}}, [&] {
                    for (const auto& p : sols) std::cout << to_json(p).dump() << "\n";
                });
                return sols.empty() ? kFalse : kOk;
            }
            std::vector<std::pair<std::string, std::pair<FieldElement, FieldElement>>> cands;
            if (kr_candidates.empty()) {
                cands.emplace_back("reference", kr32_reference_candidate());
                cands.emplace_back("swapped", kr32_swapped_candidate());
            }
            for (const auto& path : kr_candidates) {
                auto j = load_json_file(path);
                auto K = parse_field(j.at("field").get<std::string>());
                cands.emplace_back(path, std::pair{parse_field_element(j.at("a1").get<std::string>(), K),
                                                   parse_field_element(j.at("a2").get<std::string>(), K)});
            }
            if (kr_d0 != 2) solve_kr32(kr_d0);  // throws UnsupportedN
            json arr = json::array();
            bool any = false;
            for (const auto& [name, c] : cands) {
                auto r = kr32_check_candidate(c.first, c.second);
                bool cert = r.certificate && r.certificate->verdict;
                any = any || cert;
                json e = {{"candidate", name},
                          {"a1", print_field_element(r.a1)},
                          {"a2", print_field_element(r.a2)},
                          {"divisible", r.divisible},
                          {"remainder", print_poly(r.remainder)},
                          {"certified", cert}};
                if (r.params) e["params"] = to_json(*r.params);
                arr.push_back(e);
            }
            emit(g, {{"d0", 2}, {"candidates", arr}}, [&] {
                for (const auto& e : arr)
                    std::cout << e["candidate"].get<std::string>() << ": a1 = " << e["a1"].get<std::string>()
                              << ", a2 = " << e["a2"].get<std::string>() << ", divisible " << e["divisible"]
                              << ", certified " << e["certified"] << "\n";
            });
            return any ? kOk : kFalse;
        };
    });

    // family
    auto* fam = app.add_subcommand("family", "deformation family of an alpha = 0 endomorphism");
    fam->require_subcommand(1);
    auto* gen = fam->add_subcommand("gen", "one family member");
    int fk = 2, frbar = 1;
    std::string favec = "[]", fbase;
    gen->add_option("--k", fk);
    gen->add_option("--rbar", frbar);
    gen->add_option("--avec", favec, "JSON array of field elements");
    gen->add_option("--base", fbase, "EtaleParams JSON (default: cyclic cover data)")->check(CLI::ExistingFile);
    gen->callback([&] {
        action = [&] {
            FamilySpec f;
            f.k = fk;
            f.rbar = frbar;
            f.base = family_base(fk, frbar, fbase);
            f.avector = avec_arg(favec, f.base.field());
            auto m = family_member(f);
            json j = to_json(m);
            j["degree"] = degree_of(m);
            emit(g, j, [&] {
                print_map(m);
                std::cout << "degree " << degree_of(m) << "\n";
            });
            return kOk;
        };
    });
    auto* eq = fam->add_subcommand("equiv", "are two deformation polynomials equivalent");
    std::string f1, f2, ffield;
    int fr = 2;
    eq->add_option("--f1", f1, "polynomial in x")->required();
    eq->add_option("--f2", f2, "polynomial in x")->required();
    eq->add_option("--r", fr)->required();
    eq->add_option("--field", ffield);
    eq->callback([&] {
        action = [&] {
            auto F = field_arg(ffield);
            auto v = ec_equivalent(parse_poly(f1, {"x"}, F), parse_poly(f2, {"x"}, F), fr);
            json j = {{"equivalent", v.equivalent}, {"g", v.g}, {"reason", v.reason}};
            j["mu"] = v.mu ? json(print_field_element(*v.mu)) : json(nullptr);
            j["lambda"] = v.lambda ? json(print_field_element(*v.lambda)) : json(nullptr);
            emit(g, j, [&] {
                std::cout << "equivalent: " << (v.equivalent ? "true" : "false") << "\n";
                if (v.lambda) std::cout << "lambda = " << print_field_element(*v.lambda) << "\n";
                if (!v.reason.empty()) std::cout << v.reason << "\n";
            });
            return v.equivalent ? kOk : kFalse;
        };
    });
    auto* dis = fam->add_subcommand("distinct", "pairwise distinctness of members");
    std::string favecs = "[[], [1], [2], [1, 1]]";
    dis->add_option("--k", fk);
    dis->add_option("--rbar", frbar);
    dis->add_option("--avecs", favecs, "JSON array of a-vectors");
    dis->add_option("--base", fbase)->check(CLI::ExistingFile);
    dis->callback([&] {
        action = [&] {
            auto base = family_base(fk, frbar, fbase);
            json all;
            try {
                all = json::parse(favecs);
            } catch (const json::parse_error& e) {
                throw FormatError(std::string("bad --avecs: ") + e.what());
            }
            if (!all.is_array()) throw FormatError("--avecs is a JSON array of arrays");
            std::vector<FamilySpec> fs;
            for (const auto& a : all) fs.push_back({fk, frbar, base, avec_arg(a.dump(), base.field())});
            bool d = family_pairwise_distinct(fs);
            emit(g, {{"distinct", d}, {"members", fs.size()}},
                 [&] { std::cout << "pairwise distinct: " << (d ? "true" : "false") << "\n"; });
            return d ? kOk : kFalse;
        };
    });

    // miyanishi
    auto* miy = app.add_subcommand("miyanishi", "the non-proper etale map of the complement of a conic");
    miy->require_subcommand(1);
    int mn = 2;
    std::string mb, mfield;
    auto* mcheck = miy->add_subcommand("check", "b-condition and the lift identities");
    auto* mfind = miy->add_subcommand("find-b", "a valid b for small n");
    auto* meta = miy->add_subcommand("eta0", "the map on the (x, y) chart");
    for (auto* s : {mcheck, meta}) {
        s->add_option("--n", mn)->required();
        s->add_option("--b", mb, "polynomial in x")->required();
        s->add_option("--field", mfield);
    }
    mfind->add_option("--n", mn)->required();
    mcheck->callback([&] {
        action = [&] {
            MiyParams p{mn, parse_poly(mb, {"x"}, field_arg(mfield))};
            auto rep = miy_lift_check(p);
            emit(g, to_json(rep), [&] {
                std::cout << "ok: " << (rep.all_ok() ? "true" : "false") << "\n";
                print_checks(rep.checks, false);
            });
            return rep.all_ok() ? kOk : kFalse;
        };
    });
    mfind->callback([&] {
        action = [&] {
            auto p = miy_b_find(mn);
            emit(g, to_json(p), [&] {
                std::cout << "b = " << print_poly(p.b) << " over " << field_to_string(p.b.field()) << "\n";
            });
            return kOk;
        };
    });
    meta->callback([&] {
        action = [&] {
            auto [a, b] = miy_eta0({mn, parse_poly(mb, {"x"}, field_arg(mfield))});
            emit(g, {{"coords", {print_poly(a), print_poly(b)}}},
                 [&] { std::cout << "(" << print_poly(a) << ", " << print_poly(b) << ")\n"; });
            return kOk;
        };
    });

    // chebyshev
    auto* ch = app.add_subcommand("chebyshev", "Chebyshev polynomials");
    ch->require_subcommand(1);
    int chn = 1;
    for (const char* kind : {"T", "U"}) {
        auto* s = ch->add_subcommand(kind, std::string(kind) + "_n(x)");
        s->add_option("--n", chn)->required()->check(CLI::NonNegativeNumber);
        std::string k = kind;
        s->callback([&, k] {
            action = [&, k] {
                Poly p = k == "T" ? chebyshev_T(chn) : chebyshev_U(chn);
                emit(g, {{"kind", k}, {"n", chn}, {"poly", print_poly(p)}}, [&] { std::cout << print_poly(p) << "\n"; });
                return kOk;
            };
        });
    }

    // shabat
    auto* sh = app.add_subcommand("shabat", "profiles of polynomials with two critical values");
    sh->require_subcommand(1);
    auto* cp = sh->add_subcommand("check-profile", "Thom feasibility of a profile");
    std::string profile_path;
    cp->add_option("--profile", profile_path, "JSON {field, degree, branch_points, partitions}")->required()->check(CLI::ExistingFile);
    cp->callback([&] {
        action = [&] {
            auto j = load_json_file(profile_path);
            auto F = field_arg(j.value("field", std::string()));
            RamificationProfile p;
            p.degree = j.at("degree").get<int>();
            for (const auto& b : j.at("branch_points")) p.branch_points.push_back(parse_field_element(b.get<std::string>(), F));
            p.partitions = j.at("partitions").get<std::vector<std::vector<int>>>();
            auto t = thom_feasible(p);
            emit(g, {{"feasible", t.feasible}, {"diagnostics", t.diagnostics}}, [&] {
                std::cout << "feasible: " << (t.feasible ? "true" : "false") << "\n";
                for (const auto& d : t.diagnostics) std::cout << "  " << d << "\n";
            });
            return t.feasible ? kOk : kFalse;
        };
    });
    auto* ex = sh->add_subcommand("extract", "critical values and fiber partitions");
    std::string ex_poly, ex_var = "t", ex_field;
    ex->add_option("--poly", ex_poly)->required();
    ex->add_option("--var", ex_var);
    ex->add_option("--field", ex_field);
    ex->callback([&] {
        action = [&] {
            auto e = extract_profile(parse_poly(ex_poly, {ex_var}, field_arg(ex_field)));
            json j = {{"ok", e.ok}, {"reason", e.reason}};
            if (e.ok) {
                j["profile"] = profile_json(e.profile);
                j["feasible"] = thom_feasible(e.profile).feasible;
            }
            emit(g, j, [&] {
                if (!e.ok) {
                    std::cout << "not a Shabat polynomial: " << e.reason << "\n";
                    return;
                }
                std::cout << "degree " << e.profile.degree << "\n";
                for (std::size_t i = 0; i < e.profile.branch_points.size(); ++i) {
                    std::cout << "  over " << print_field_element(e.profile.branch_points[i]) << ":";
                    for (int m : e.profile.partitions[i]) std::cout << " " << m;
                    std::cout << "\n";
                }
            });
            return e.ok ? kOk : kFalse;
        };
    });

    // reproduce-paper
    auto* rp = app.add_subcommand("reproduce-paper", "run every acceptance item against the fixtures");
    std::string fixtures = "fixtures";
    std::optional<int> only;
    rp->add_option("--fixtures", fixtures, "fixture directory");
    rp->add_option("--only", only, "a single criterion")->check(CLI::Range(1, criterion_count()));
    rp->callback([&] {
        action = [&] {
            auto rep = reproduce_paper(fixtures, g.seed, only);
            emit(g, to_json(rep), [&] {
                for (const auto& m : rep.missing) std::cout << "missing fixture: " << m << "\n";
                for (const auto& r : rep.results) {
                    std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << " " << r.title << "\n";
                    for (const auto& n : r.notes) std::cout << "     " << n << "\n";
                }
            });
            return rep.all_pass() ? kOk : kFalse;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    try {
        g.seed = seed_opt ? *seed_opt : env_seed();
        if (action) code = action();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return code;
}
