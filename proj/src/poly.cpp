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

#include "etale/poly.hpp"

#include <algorithm>
#include <set>

namespace etale {

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& v : b)
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
}

Poly::Poly(FieldPtr field, std::vector<std::string> vars) : field_(std::move(field)), vars_(std::move(vars)) {
    std::set<std::string> seen(vars_.begin(), vars_.end());
    if (seen.size() != vars_.size()) throw std::invalid_argument("duplicate variable name");
}

Poly Poly::constant(const FieldElement& c, std::vector<std::string> vars) {
    Poly p(c.field(), std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

Poly Poly::constant(FieldPtr field, const Rational& c, std::vector<std::string> vars) {
    return constant(FieldElement(std::move(field), c), std::move(vars));
}

Poly Poly::variable(const std::string& name, FieldPtr field) {
    return variable(name, {name}, std::move(field));
}

Poly Poly::variable(const std::string& name, std::vector<std::string> vars, FieldPtr field) {
    Poly p(field, std::move(vars));
    int i = p.var_index(name);
    if (i < 0) throw std::invalid_argument("variable " + name + " not in ring");
    Exponents e(p.vars_.size(), 0);
    e[static_cast<std::size_t>(i)] = 1;
    p.add_term(e, FieldElement(field, Rational(1)));
    return p;
}

bool Poly::is_constant() const noexcept {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

FieldElement Poly::constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

FieldElement Poly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    if (it == terms_.end()) return FieldElement(field_);
    return it->second;
}

int Poly::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

int Poly::degree_in(const std::string& name) const {
    if (terms_.empty()) return -1;
    int i = var_index(name);
    if (i < 0) return 0;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(i)]);
    return d;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

std::vector<std::string> Poly::used_vars() const {
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) used[i] = true;
    std::vector<std::string> out;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) out.push_back(vars_[i]);
    return out;
}

Poly Poly::with_vars(const std::vector<std::string>& vars) const {
    if (vars == vars_) return *this;
    Poly out(field_, vars);
    std::vector<int> where(vars_.size(), -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) where[i] = out.var_index(vars_[i]);
    for (const auto& [e, c] : terms_) {
        Exponents ne(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (where[i] < 0) throw ArityError("variable " + vars_[i] + " missing from target ring");
            ne[static_cast<std::size_t>(where[i])] = e[i];
        }
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

Poly Poly::in_field(const FieldPtr& f) const {
    Poly out(f, vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.in_field(f));
    return out;
}

void Poly::add_term(const Exponents& e, const FieldElement& c) {
    if (e.size() != vars_.size()) throw ArityError("exponent vector arity mismatch");
    if (c.is_zero()) return;
    if (c.field() != field_) field_ = common_field(field_, c.field());
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

namespace {

// Bring both operands to the union ring.
void align(Poly& a, Poly& b) {
    if (a.vars() == b.vars()) return;
    auto vars = merge_vars(a.vars(), b.vars());
    a = a.with_vars(vars);
    b = b.with_vars(vars);
}

}  // namespace

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.vars_ == vars_) {
        for (const auto& [e, c] : rhs.terms_) add_term(e, c);
        return *this;
    }
    Poly b = rhs;
    align(*this, b);
    for (const auto& [e, c] : b.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) { return *this += -rhs; }

Poly& Poly::operator*=(const Poly& rhs) {
    Poly a = *this;
    Poly b = rhs;
    align(a, b);
    Poly out(common_field(a.field_, b.field_), a.vars_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    *this = std::move(out);
    return *this;
}

Poly& Poly::operator*=(const FieldElement& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    field_ = common_field(field_, c.field());
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Poly result = constant(FieldElement(field_, Rational(1)), vars_);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Poly Poly::derivative(const std::string& var) const {
    Poly out(field_, vars_);
    int i = var_index(var);
    if (i < 0) return out;
    auto ui = static_cast<std::size_t>(i);
    for (const auto& [e, c] : terms_) {
        if (e[ui] == 0) continue;
        Exponents ne = e;
        ne[ui] -= 1;
        out.add_term(ne, c * FieldElement(field_, Rational(e[ui])));
    }
    return out;
}

FieldElement Poly::evaluate(const std::map<std::string, FieldElement>& point) const {
    std::vector<FieldElement> vals;
    vals.reserve(vars_.size());
    for (const auto& v : vars_) {
        auto it = point.find(v);
        vals.push_back(it == point.end() ? FieldElement(field_) : it->second);
    }
    // a variable missing from the point only matters if it occurs
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (point.count(vars_[i])) continue;
        for (const auto& [e, c] : terms_)
            if (e[i] != 0) throw ArityError("no value for variable " + vars_[i]);
    }
    FieldElement acc(field_);
    for (const auto& [e, c] : terms_) {
        FieldElement t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) t *= vals[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    Poly x = a, y = b;
    align(x, y);
    return x.terms_ == y.terms_;
}

Poly poly_arith(const Poly& a, const Poly& b, PolyOp op) {
    switch (op) {
        case PolyOp::add: return a + b;
        case PolyOp::sub: return a - b;
        case PolyOp::mul: return a * b;
    }
    throw std::invalid_argument("unknown poly op");
}

// ---------------------------------------------------------------------------
// substitution and composition

Poly substitute(const Poly& p, const std::vector<Poly>& images) {
    if (images.size() != p.vars().size()) throw ArityError("substitution arity mismatch");
    std::vector<std::string> vars;
    FieldPtr field = p.field();
    for (const auto& img : images) {
        vars = merge_vars(vars, img.vars());
        field = common_field(field, img.field());
    }
    std::vector<Poly> imgs;
    imgs.reserve(images.size());
    for (const auto& img : images) imgs.push_back(img.with_vars(vars));

    // power caches per variable
    std::vector<std::vector<Poly>> powers(imgs.size());
    auto power = [&](std::size_t i, int e) -> const Poly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Poly::constant(FieldElement(field, Rational(1)), vars));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * imgs[i]);
        return cache[static_cast<std::size_t>(e)];
    };

    Poly out(field, vars);
    for (const auto& [e, c] : p.terms()) {
        Poly term = Poly::constant(c, vars);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) term *= power(i, e[i]);
        out += term;
    }
    return out;
}

Poly substitute(const Poly& p, const std::map<std::string, Poly>& images) {
    std::vector<Poly> imgs;
    imgs.reserve(p.vars().size());
    for (const auto& v : p.vars()) {
        auto it = images.find(v);
        if (it != images.end())
            imgs.push_back(it->second);
        else
            imgs.push_back(Poly::variable(v, p.field()));
    }
    return substitute(p, imgs);
}

std::string main_variable(const Poly& p) {
    auto used = p.used_vars();
    if (used.size() > 1) throw ArityError("polynomial is not univariate");
    return used.empty() ? std::string() : used.front();
}

Poly compose(const Poly& outer, const Poly& inner) {
    auto used = outer.used_vars();
    if (used.size() > 1) throw ArityError("outer polynomial is not univariate");
    if (used.empty()) return Poly::constant(outer.is_zero() ? FieldElement(outer.field()) : outer.constant_term(), inner.vars());
    auto coeffs = coefficients_in(outer, used.front());
    // Horner
    FieldPtr f = common_field(outer.field(), inner.field());
    Poly acc(f, inner.vars());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc *= inner;
        if (!it->is_zero()) acc += Poly::constant(it->constant_term(), inner.vars());
    }
    return acc;
}

// ---------------------------------------------------------------------------
// division

namespace {

bool divides(const Poly::Exponents& small, const Poly::Exponents& big) {
    for (std::size_t i = 0; i < small.size(); ++i)
        if (small[i] > big[i]) return false;
    return true;
}

}  // namespace

std::pair<Poly, Poly> divide(const Poly& a_in, const Poly& b_in) {
    if (b_in.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly a = a_in, b = b_in;
    align(a, b);
    FieldPtr f = common_field(a.field(), b.field());
    const auto& [lb_e, lb_c] = b.leading_term();
    const Poly::Exponents lead_e = lb_e;
    const FieldElement lead_inv = lb_c.inverse();
    Poly q(f, a.vars()), r(f, a.vars());
    Poly p = a;
    Poly::Exponents qe(a.vars().size());
    while (!p.is_zero()) {
        auto lt = p.leading_term();
        if (divides(lead_e, lt.first)) {
            for (std::size_t i = 0; i < qe.size(); ++i) qe[i] = lt.first[i] - lead_e[i];
            FieldElement qc = lt.second * lead_inv;
            q.add_term(qe, qc);
            // p -= qc * x^qe * b
            Poly::Exponents e(qe.size());
            for (const auto& [be, bc] : b.terms()) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = be[i] + qe[i];
                p.add_term(e, -(qc * bc));
            }
        } else {
            r.add_term(lt.first, lt.second);
            p.add_term(lt.first, -lt.second);
        }
    }
    return {q, r};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divide(a, b);
    if (!r.is_zero()) throw NotDivisible("polynomial is not divisible", r);
    return q;
}

// ---------------------------------------------------------------------------
// univariate algorithms

std::vector<Poly> coefficients_in(const Poly& p, const std::string& var) {
    int i = p.var_index(var);
    std::vector<Poly> out;
    if (p.is_zero()) return out;
    if (i < 0) {
        out.push_back(p);
        return out;
    }
    auto ui = static_cast<std::size_t>(i);
    out.assign(static_cast<std::size_t>(p.degree_in(var)) + 1, Poly(p.field(), p.vars()));
    for (const auto& [e, c] : p.terms()) {
        Poly::Exponents ne = e;
        ne[ui] = 0;
        out[static_cast<std::size_t>(e[ui])].add_term(ne, c);
    }
    return out;
}

namespace {

// Dense univariate kernel over FieldElement, low to high.
using Dense = std::vector<FieldElement>;

void dtrim(Dense& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

struct Univ {
    std::string var;
    std::vector<std::string> vars;
    FieldPtr field;
};

Dense to_dense(const Poly& p, const std::string& var) {
    Dense out;
    if (p.is_zero()) return out;
    int i = p.var_index(var);
    out.assign(static_cast<std::size_t>(std::max(0, p.degree_in(var))) + 1, FieldElement(p.field()));
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t j = 0; j < e.size(); ++j)
            if (static_cast<int>(j) != i && e[j] != 0) throw ArityError("polynomial is not univariate");
        out[i < 0 ? 0 : static_cast<std::size_t>(e[static_cast<std::size_t>(i)])] = c;
    }
    dtrim(out);
    return out;
}

Poly from_dense(const Dense& d, const Univ& u) {
    Poly out(u.field, u.vars);
    int i = out.var_index(u.var);
    Poly::Exponents e(u.vars.size(), 0);
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (d[k].is_zero()) continue;
        if (i >= 0) e[static_cast<std::size_t>(i)] = static_cast<int>(k);
        out.add_term(e, d[k]);
    }
    return out;
}

std::pair<Dense, Dense> ddivmod(const Dense& a, const Dense& b, const FieldPtr& f) {
    if (b.empty()) throw DivisionByZero("univariate division by zero");
    Dense r = a;
    dtrim(r);
    if (r.size() < b.size()) return {Dense{}, r};
    Dense q(r.size() - b.size() + 1, FieldElement(f));
    FieldElement inv = b.back().inverse();
    for (std::size_t k = r.size(); k-- >= b.size();) {
        FieldElement c = r[k] * inv;
        std::size_t shift = k - (b.size() - 1);
        q[shift] = c;
        if (!c.is_zero())
            for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
        if (k == b.size() - 1) break;
    }
    dtrim(r);
    dtrim(q);
    return {q, r};
}

Dense dmonic(Dense p) {
    if (p.empty()) return p;
    FieldElement inv = p.back().inverse();
    for (auto& c : p) c *= inv;
    return p;
}

Dense dgcd(Dense a, Dense b, const FieldPtr& f) {
    dtrim(a);
    dtrim(b);
    while (!b.empty()) {
        auto r = ddivmod(a, b, f).second;
        a = std::move(b);
        b = std::move(r);
    }
    return dmonic(a);
}

Dense dderiv(const Dense& p, const FieldPtr& f) {
    Dense out;
    for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * FieldElement(f, Rational(static_cast<long>(k))));
    dtrim(out);
    return out;
}

Dense dsub(const Dense& a, const Dense& b, const FieldPtr& f) {
    Dense out(std::max(a.size(), b.size()), FieldElement(f));
    for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) out[k] -= b[k];
    dtrim(out);
    return out;
}

Dense dmul(const Dense& a, const Dense& b, const FieldPtr& f) {
    if (a.empty() || b.empty()) return {};
    Dense out(a.size() + b.size() - 1, FieldElement(f));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    dtrim(out);
    return out;
}

int ddeg(const Dense& p) { return static_cast<int>(p.size()) - 1; }

Univ univ_of(const Poly& a, const Poly& b) {
    auto ua = a.used_vars(), ub = b.used_vars();
    if (ua.size() > 1 || ub.size() > 1) throw ArityError("polynomial is not univariate");
    if (!ua.empty() && !ub.empty() && ua.front() != ub.front())
        throw ArityError("univariate polynomials in different variables");
    std::string var = !ua.empty() ? ua.front() : (!ub.empty() ? ub.front() : std::string());
    std::vector<std::string> vars = merge_vars(a.vars(), b.vars());
    return Univ{var, vars, common_field(a.field(), b.field())};
}

// Yun on a dense polynomial; returns (monic factor, multiplicity) with nonconstant factors.
std::vector<std::pair<Dense, int>> dyun(const Dense& p, const FieldPtr& f) {
    std::vector<std::pair<Dense, int>> out;
    if (ddeg(p) < 1) return out;
    Dense dp = dderiv(p, f);
    Dense a = dgcd(p, dp, f);
    Dense b = ddivmod(p, a, f).first;
    Dense c = ddivmod(dp, a, f).first;
    Dense d = dsub(c, dderiv(b, f), f);
    int i = 1;
    while (ddeg(b) >= 1) {
        Dense g = dgcd(b, d, f);
        if (ddeg(g) >= 1) out.emplace_back(g, i);
        b = ddivmod(b, g, f).first;
        c = ddivmod(d, g, f).first;
        d = dsub(c, dderiv(b, f), f);
        ++i;
    }
    return out;
}

}  // namespace

FieldElement leading_coefficient(const Poly& p) {
    std::string var = main_variable(p);
    auto d = to_dense(p, var);
    if (d.empty()) return FieldElement(p.field());
    return d.back();
}

Poly make_monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p * leading_coefficient(p).inverse();
}

Poly gcd(const Poly& a, const Poly& b) {
    Univ u = univ_of(a, b);
    return from_dense(dgcd(to_dense(a, u.var), to_dense(b, u.var), u.field), u);
}

bool is_squarefree(const Poly& p) {
    if (p.is_zero()) return false;
    std::string var = main_variable(p);
    auto d = to_dense(p, var);
    return ddeg(dgcd(d, dderiv(d, p.field()), p.field())) == 0;
}

std::vector<MultiplicityFactor> squarefree_decomposition(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
    Univ u = univ_of(p, p);
    std::vector<MultiplicityFactor> out;
    for (auto& [fac, m] : dyun(to_dense(p, u.var), u.field)) out.push_back({from_dense(fac, u), m});
    return out;
}

std::vector<int> multiplicity_profile(const Poly& phi, const FieldElement& c) {
    Poly shifted = phi - Poly::constant(c, phi.vars());
    if (shifted.is_zero()) throw std::invalid_argument("profile of a constant polynomial");
    std::vector<int> parts;
    for (const auto& mf : squarefree_decomposition(shifted)) {
        int deg = mf.factor.total_degree();
        for (int k = 0; k < deg; ++k) parts.push_back(mf.multiplicity);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return parts;
}

namespace {

// Kernel vector of the first dependent column; columns are coordinate vectors.
// Returns coefficients c_0..c_m (c_m = 1) with sum c_j col_j = 0, m minimal.
std::vector<FieldElement> first_dependency(const std::vector<std::vector<FieldElement>>& cols, const FieldPtr& f) {
    // incremental elimination: keep reduced basis with pivot rows and the combination producing it
    struct Row {
        std::vector<FieldElement> vec;
        std::vector<FieldElement> comb;
        std::size_t pivot;
    };
    std::vector<Row> basis;
    const std::size_t n = cols.size();
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<FieldElement> v = cols[j];
        std::vector<FieldElement> comb(n, FieldElement(f));
        comb[j] = FieldElement(f, Rational(1));
        for (const auto& b : basis) {
            if (v[b.pivot].is_zero()) continue;
            FieldElement c = v[b.pivot];
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * b.vec[i];
            for (std::size_t i = 0; i < n; ++i) comb[i] -= c * b.comb[i];
        }
        std::size_t piv = v.size();
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) {
                piv = i;
                break;
            }
        if (piv == v.size()) {
            comb.resize(j + 1);
            return comb;
        }
        FieldElement inv = v[piv].inverse();
        for (auto& x : v) x *= inv;
        for (auto& x : comb) x *= inv;
        basis.push_back({std::move(v), std::move(comb), piv});
    }
    return {};
}

}  // namespace

CriticalValues critical_values(const Poly& phi) {
    Univ u = univ_of(phi, phi);
    const FieldPtr& f = u.field;
    Dense p = to_dense(phi, u.var);
    if (ddeg(p) < 1) throw std::invalid_argument("critical values of a constant");
    CriticalValues out;
    Dense dp = dderiv(p, f);
    if (ddeg(dp) == 0) {
        out.complete = true;
        return out;
    }
    // g: squarefree part of phi'
    Dense g = dmonic(ddivmod(dp, dgcd(dp, dderiv(dp, f), f), f).first);
    const std::size_t n = static_cast<std::size_t>(ddeg(g));

    // irrational critical points: some squarefree factor of phi' without a root in the field
    if (f->is_rational()) {
        QPoly gq;
        for (const auto& c : g) gq.push_back(c.rational_value());
        std::size_t nroots = qpoly::rational_roots(gq).size();
        out.irrational_critical_points = nroots < n;
    } else {
        out.irrational_critical_points = n > 1;
    }

    // minimal polynomial of phi mod g in F[x]/(g)
    Dense rho = ddivmod(p, g, f).second;
    std::vector<std::vector<FieldElement>> cols;
    Dense power{FieldElement(f, Rational(1))};
    for (std::size_t j = 0; j <= n; ++j) {
        std::vector<FieldElement> col(n, FieldElement(f));
        for (std::size_t i = 0; i < power.size() && i < n; ++i) col[i] = power[i];
        cols.push_back(col);
        power = ddivmod(dmul(power, rho, f), g, f).second;
    }
    std::vector<FieldElement> minpoly = first_dependency(cols, f);
    dtrim(minpoly);
    minpoly = dmonic(minpoly);
    const int m = ddeg(minpoly);

    if (m == 1) {
        out.values.push_back(-minpoly[0]);
    } else {
        bool all_rational = std::all_of(minpoly.begin(), minpoly.end(), [](const FieldElement& c) { return c.is_rational(); });
        if (all_rational) {
            QPoly mq;
            for (const auto& c : minpoly) mq.push_back(c.rational_value());
            for (const auto& r : qpoly::rational_roots(mq)) out.values.emplace_back(f, r);
        }
    }
    out.complete = static_cast<int>(out.values.size()) == m;
    return out;
}

}  // namespace etale
