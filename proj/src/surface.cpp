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

#include "etale/surface.hpp"

#include <regex>

namespace etale {

namespace {

FieldElement q(const Rational& v) { return FieldElement(NumberField::rationals(), v); }

}  // namespace

SurfaceSpec::SurfaceSpec(Model m, int k, int r) : model_(m), k_(k), r_(r) {
    auto Q = NumberField::rationals();
    if (m == Model::tilde) {
        if (k < 1 || r < 1) throw std::invalid_argument("tilde surface needs k >= 1, r >= 1");
        vars_ = {"x", "y", "z"};
        weights_ = {1, -r, 0};
        relation_ = Poly(Q, vars_);
        relation_.add_term({r, 1, 0}, q(1));
        relation_.add_term({0, 0, k}, q(-1));
        relation_.add_term({0, 0, 0}, q(1));
        tail_ = Poly(Q, vars_);
        tail_.add_term({0, 0, k}, q(1));
        tail_.add_term({0, 0, 0}, q(-1));
    } else {
        if (k < 2 || r < 1) throw std::invalid_argument("hypersurface model needs k >= 2, rbar >= 1");
        vars_ = {"u", "v", "w"};
        weights_ = {k, -r * k, 1};
        relation_ = Poly(Q, vars_);
        relation_.add_term({r + 1, 1, 0}, q(1));
        relation_.add_term({1, 0, 0}, q(1));
        relation_.add_term({0, 0, k}, q(-1));
        tail_ = Poly(Q, vars_);
        tail_.add_term({0, 0, k}, q(1));
        tail_.add_term({1, 0, 0}, q(-1));
    }
}

SurfaceSpec SurfaceSpec::tilde(int k, int r) { return SurfaceSpec(Model::tilde, k, r); }
SurfaceSpec SurfaceSpec::hyper(int k, int rbar) { return SurfaceSpec(Model::hyper, k, rbar); }

SurfaceSpec SurfaceSpec::from_id(const std::string& id) {
    static const std::regex re(R"(\s*(tilde|hyper)\s*\(\s*(\d{1,4})\s*,\s*(\d{1,4})\s*\)\s*)");
    std::smatch m;
    if (!std::regex_match(id, m, re)) throw FormatError("bad surface id '" + id + "'");
    int k = std::stoi(m[2]), r = std::stoi(m[3]);
    try {
        return m[1] == "tilde" ? tilde(k, r) : hyper(k, r);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

std::string SurfaceSpec::id() const {
    return std::string(is_tilde() ? "tilde(" : "hyper(") + std::to_string(k_) + "," + std::to_string(r_) + ")";
}

std::array<int, 3> SurfaceSpec::zk_exponents(int a) const {
    if (!is_tilde()) throw std::invalid_argument("Z_k action is defined on the tilde model");
    return {1, -r_, -a};
}

Poly normal_form(const Poly& p_in, const SurfaceSpec& s) {
    auto vars = merge_vars(s.vars(), p_in.vars());
    Poly p = p_in.with_vars(vars);
    Poly tail = s.tail().with_vars(vars);
    const int lp = s.lead_power();
    std::vector<Poly> tail_pow{Poly::constant(FieldElement(p.field(), Rational(1)), vars)};
    auto tail_power = [&](int m) -> const Poly& {
        while (static_cast<int>(tail_pow.size()) <= m) tail_pow.push_back(tail_pow.back() * tail);
        return tail_pow[static_cast<std::size_t>(m)];
    };

    for (;;) {
        Poly out(p.field(), vars);
        bool changed = false;
        for (const auto& [e, c] : p.terms()) {
            int m = std::min(e[0] / lp, e[1]);
            if (m == 0) {
                out.add_term(e, c);
                continue;
            }
            changed = true;
            Poly::Exponents rest = e;
            rest[0] -= m * lp;
            rest[1] -= m;
            Poly mono(p.field(), vars);
            mono.add_term(rest, c);
            out += mono * tail_power(m);
        }
        p = std::move(out);
        if (!changed) return p;
    }
}

bool on_surface(const SurfacePoint& pt, const SurfaceSpec& s) {
    return s.relation().evaluate(point_map(s, pt)).is_zero();
}

std::map<std::string, FieldElement> point_map(const SurfaceSpec& s, const SurfacePoint& pt) {
    const auto& v = s.vars();
    return {{v[0], pt[0]}, {v[1], pt[1]}, {v[2], pt[2]}};
}

std::optional<int> weight_of(const Poly& p, const SurfaceSpec& s) {
    if (p.is_zero()) return std::nullopt;
    std::vector<int> w(p.vars().size(), 0);
    for (std::size_t i = 0; i < 3; ++i) {
        int idx = p.var_index(s.vars()[i]);
        if (idx >= 0) w[static_cast<std::size_t>(idx)] = s.weights()[i];
    }
    std::optional<int> out;
    for (const auto& [e, c] : p.terms()) {
        int tw = 0;
        for (std::size_t i = 0; i < e.size(); ++i) tw += w[i] * e[i];
        if (out && *out != tw) return std::nullopt;
        out = tw;
    }
    return out;
}

std::optional<SurfacePoint> point_from_draws(const SurfaceSpec& s, const Rational& first, const Rational& third) {
    if (first == 0) return std::nullopt;
    auto Q = NumberField::rationals();
    Rational tk = 1;
    for (int i = 0; i < s.k(); ++i) tk *= third;
    Rational num = tk;
    num -= s.is_tilde() ? Rational(1) : first;
    if (num == 0) return std::nullopt;
    Rational den = 1;
    for (int i = 0; i < s.lead_power(); ++i) den *= first;
    Rational mid = num / den;
    return SurfacePoint{FieldElement(Q, first), FieldElement(Q, mid), FieldElement(Q, third)};
}

namespace {

Rational draw(SplitMix64& g) {
    long long num = 0;
    while (num == 0) num = g.uniform(-1000, 1000);
    // integers half of the time keeps images small
    long long den = g.uniform(0, 1) ? 1 : g.uniform(1, 1000);
    return Rational(Integer(static_cast<long>(num))) / Rational(Integer(static_cast<long>(den)));
}

}  // namespace

std::vector<SurfacePoint> sample_points(const SurfaceSpec& s, int n, std::uint64_t seed) {
    SplitMix64 g(seed);
    std::vector<SurfacePoint> out;
    out.reserve(static_cast<std::size_t>(std::max(0, n)));
    while (static_cast<int>(out.size()) < n) {
        Rational a = draw(g), b = draw(g);
        if (auto pt = point_from_draws(s, a, b)) out.push_back(*pt);
    }
    return out;
}

SurfacePoint sample_point(const SurfaceSpec& s, std::uint64_t seed) { return sample_points(s, 1, seed).front(); }

}  // namespace etale
