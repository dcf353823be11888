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

#include "etale/chebyshab.hpp"

#include <numeric>

namespace etale {

namespace {

FieldElement qe(const Rational& v) { return FieldElement(NumberField::rationals(), v); }

}  // namespace

Poly chebyshev_T(int n, const std::string& var) {
    if (n < 0) throw std::invalid_argument("chebyshev_T needs n >= 0");
    Poly x = Poly::variable(var);
    Poly prev = Poly::constant(qe(1), {var});
    if (n == 0) return prev;
    Poly cur = x;
    Poly two_x = x * qe(2);
    for (int i = 2; i <= n; ++i) {
        Poly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Poly chebyshev_U(int n, const std::string& var) {
    if (n < 0) throw std::invalid_argument("chebyshev_U needs n >= 0");
    return chebyshev_T(n + 1, var).derivative(var) * qe(Rational(1, n + 1));
}

ThomResult thom_feasible(const RamificationProfile& p) {
    ThomResult out;
    const int d = p.degree;
    const int n = static_cast<int>(p.partitions.size());
    if (d < 1) out.diagnostics.push_back("degree must be positive");
    if (n < 1) out.diagnostics.push_back("at least one branch point is required");
    if (static_cast<int>(p.branch_points.size()) != n && !p.branch_points.empty())
        out.diagnostics.push_back("branch point count differs from partition count");
    long long parts = 0;
    for (int i = 0; i < n; ++i) {
        const auto& part = p.partitions[static_cast<std::size_t>(i)];
        long long sum = 0;
        bool positive = true;
        for (int m : part) {
            sum += m;
            positive = positive && m > 0;
        }
        if (!positive) out.diagnostics.push_back("partition " + std::to_string(i) + " has a non-positive part");
        if (sum != d)
            out.diagnostics.push_back("partition " + std::to_string(i) + " sums to " + std::to_string(sum) +
                                      ", not the degree " + std::to_string(d));
        parts += static_cast<long long>(part.size());
    }
    long long want = static_cast<long long>(n - 1) * d + 1;
    if (n >= 1 && parts != want)
        out.diagnostics.push_back("part count " + std::to_string(parts) + " differs from (n-1)d+1 = " +
                                  std::to_string(want));
    out.feasible = out.diagnostics.empty();
    return out;
}

ChebyshevVerdict is_chebyshev_normalized(const Poly& P) {
    std::string var = main_variable(P);
    ChebyshevVerdict v;
    const int n = var.empty() ? 0 : P.degree_in(var);
    if (n < 1) {
        v.reason = "degree must be at least 1";
        return v;
    }
    auto at = [&](const Poly& f, long val) { return f.evaluate({{var, FieldElement(P.field(), Rational(val))}}); };
    Poly dP = P.derivative(var);
    if (!at(P, 1).is_one()) {
        v.reason = "P(1) != 1";
        return v;
    }
    FieldElement pm = at(P, -1);
    if (!(pm * pm).is_one()) {
        v.reason = "P(-1)^2 != 1";
        return v;
    }
    if (at(dP, 1).is_zero() || at(dP, -1).is_zero()) {
        v.reason = "P'(1) or P'(-1) vanishes";
        return v;
    }
    Poly Qp = dP * FieldElement(P.field(), Rational(1, n));
    Poly one = Poly::constant(FieldElement(P.field(), Rational(1)), P.vars());
    Poly x = Poly::variable(var, P.vars(), P.field());
    if (P * P - one != (x * x - one) * Qp * Qp) {
        v.reason = "P^2 - 1 != (x^2 - 1)(P'/n)^2";
        return v;
    }
    v.yes = true;
    v.n = n;
    return v;
}

ProfileExtraction extract_profile(const Poly& phi) {
    ProfileExtraction out;
    std::string var = main_variable(phi);
    int d = var.empty() ? 0 : phi.degree_in(var);
    if (d < 1) {
        out.reason = "constant polynomial";
        return out;
    }
    auto zero = FieldElement(phi.field());
    auto one = FieldElement(phi.field(), Rational(1));
    out.profile.degree = d;
    if (d == 1) {
        out.ok = true;
        out.profile.branch_points = {zero};
        out.profile.partitions = {{1}};
        return out;
    }
    auto p0 = multiplicity_profile(phi, zero);
    auto p1 = multiplicity_profile(phi, one);
    int defect = (d - static_cast<int>(p0.size())) + (d - static_cast<int>(p1.size()));
    if (defect != d - 1) {
        out.reason = "MoreThanTwoCriticalValues: ramification over {0,1} accounts for " + std::to_string(defect) +
                     " of " + std::to_string(d - 1);
        return out;
    }
    out.ok = true;
    out.profile.branch_points = {zero, one};
    out.profile.partitions = {p0, p1};
    return out;
}

}  // namespace etale
