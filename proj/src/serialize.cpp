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

#include "etale/serialize.hpp"

#include <fstream>
#include <regex>

#include "etale/parse.hpp"

namespace etale {

namespace {

template <class T>
T field_of(const json& j, const char* key) {
    if (!j.contains(key)) throw FormatError(std::string("missing key '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad value for '") + key + "': " + e.what());
    }
}

FieldPtr field_from(const json& j) {
    return j.contains("field") ? parse_field(field_of<std::string>(j, "field")) : NumberField::rationals();
}

}  // namespace

std::string field_to_string(const FieldPtr& f) { return f->minpoly_string(); }

json to_json(const FieldElement& e) {
    json coords = json::array();
    for (const auto& c : e.coords()) coords.push_back(c.get_str());
    return {{"field", field_to_string(e.field())}, {"coords", coords}};
}

FieldElement field_element_from_json(const json& j) {
    FieldPtr f = field_from(j);
    auto cs = field_of<std::vector<std::string>>(j, "coords");
    if (static_cast<int>(cs.size()) > f->degree()) throw FormatError("more coordinates than the field degree");
    std::vector<Rational> v;
    for (const auto& s : cs) {
        static const std::regex shape(R"([+-]?[0-9]+(/[0-9]+)?)");
        if (!std::regex_match(s, shape)) throw FormatError("bad rational '" + s + "'");
        Rational q(s);
        if (q.get_den() == 0) throw FormatError("zero denominator in '" + s + "'");
        q.canonicalize();
        v.push_back(q);
    }
    v.resize(static_cast<std::size_t>(f->degree()));
    return FieldElement(f, v);
}

json to_json(const EtaleParams& p) {
    return {{"k", p.k},
            {"r", p.r},
            {"a", p.a},
            {"alpha", p.alpha},
            {"d", p.d},
            {"field", field_to_string(p.field())},
            {"lambda", print_field_element(p.lambda)},
            {"R0", print_poly(p.R0)},
            {"R1", print_poly(p.R1)},
            {"R2", print_poly(p.R2)}};
}

EtaleParams params_from_json(const json& j) {
    EtaleParams p;
    FieldPtr f = field_from(j);
    p.k = field_of<int>(j, "k");
    p.r = field_of<int>(j, "r");
    p.a = field_of<int>(j, "a");
    p.alpha = field_of<int>(j, "alpha");
    p.d = field_of<int>(j, "d");
    p.lambda = j.contains("lambda") ? parse_field_element(field_of<std::string>(j, "lambda"), f) : FieldElement(f, Rational(1));
    p.R0 = parse_poly(field_of<std::string>(j, "R0"), {"t"}, f);
    p.R1 = parse_poly(field_of<std::string>(j, "R1"), {"t"}, f);
    p.R2 = parse_poly(field_of<std::string>(j, "R2"), {"t"}, f);
    return p;
}

std::string check_label(const std::string& name) {
    if (name == "identity") return "C1";
    if (name == "degrees") return "C2";
    if (name == "separability" || name == "normalization") return "C3";
    if (name == "congruence") return "C4";
    if (name == "alpha_condition") return "C5";
    return "";
}

json to_json(const EtaleCertificate& c) {
    json checks = json::array();
    for (const auto& ch : c.checks)
        checks.push_back({{"name", ch.name}, {"label", check_label(ch.name)}, {"ok", ch.ok}, {"detail", ch.detail}});
    json deg = nullptr;
    if (c.degrees) deg = {{"d0", c.degrees->d0}, {"d1", c.degrees->d1}, {"d2", c.degrees->d2}};
    return {{"verdict", c.verdict}, {"checks", checks}, {"degrees", deg}, {"params", to_json(c.params)}};
}

json to_json(const SurfaceMap& m) {
    json coords = json::array();
    std::vector<std::string> extra;
    for (const auto& c : m.coords) {
        coords.push_back(print_poly(c));
        for (const auto& v : c.used_vars())
            if (m.source.vars()[0] != v && m.source.vars()[1] != v && m.source.vars()[2] != v &&
                std::find(extra.begin(), extra.end(), v) == extra.end())
                extra.push_back(v);
    }
    json out = {{"source", m.source.id()}, {"target", m.target.id()}, {"field", field_to_string(m.field())},
                {"coords", coords}, {"label", m.label}};
    out["declared_degree"] = m.declared_degree ? json(*m.declared_degree) : json(nullptr);
    if (!extra.empty()) out["params"] = extra;
    return out;
}

SurfaceMap map_from_json(const json& j) {
    SurfaceSpec src = SurfaceSpec::from_id(field_of<std::string>(j, "source"));
    SurfaceSpec tgt = SurfaceSpec::from_id(field_of<std::string>(j, "target"));
    FieldPtr f = field_from(j);
    auto vars = src.vars();
    if (j.contains("params"))
        for (const auto& v : field_of<std::vector<std::string>>(j, "params")) vars.push_back(v);
    auto cs = field_of<std::vector<std::string>>(j, "coords");
    if (cs.size() != 3) throw FormatError("a surface map needs three coordinates");
    std::array<Poly, 3> coords{parse_poly(cs[0], vars, f), parse_poly(cs[1], vars, f), parse_poly(cs[2], vars, f)};
    std::optional<int> deg;
    if (j.contains("declared_degree") && !j.at("declared_degree").is_null()) deg = field_of<int>(j, "declared_degree");
    return make_map(src, tgt, coords, deg, j.value("label", std::string()));
}

json to_json(const MiyParams& p) {
    return {{"n", p.n}, {"field", field_to_string(p.b.field())}, {"b", print_poly(p.b)}};
}

MiyParams miy_from_json(const json& j) {
    FieldPtr f = field_from(j);
    return {field_of<int>(j, "n"), parse_poly(field_of<std::string>(j, "b"), {"x"}, f)};
}

json to_json(const MiyLiftReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    return {{"ok", r.all_ok()}, {"checks", checks}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
}

}  // namespace etale
