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

#include "etale/numfield.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace etale {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s.push_back(c);
    if (s.empty()) throw FormatError("empty rational");
    if (s.front() == '+') s.erase(0, 1);
    Rational q;
    auto slash = s.find('/');
    auto valid_int = [](const std::string& part) {
        std::size_t i = (!part.empty() && part[0] == '-') ? 1 : 0;
        if (i >= part.size()) return false;
        return std::all_of(part.begin() + static_cast<long>(i), part.end(),
                           [](char c) { return c >= '0' && c <= '9'; });
    };
    if (!valid_int(s.substr(0, slash)) ||
        (slash != std::string::npos && !valid_int(s.substr(slash + 1))))
        throw FormatError("malformed rational '" + text + "'");
    if (q.set_str(s, 10) != 0) throw FormatError("malformed rational '" + text + "'");
    if (q.get_den() == 0) throw DivisionByZero("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

// ---------------------------------------------------------------------------
// Dense Q[x]

namespace qpoly {

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    QPoly rem = a;
    trim(rem);
    if (rem.size() < b.size()) return {{}, rem};
    QPoly quo(rem.size() - b.size() + 1);
    const Rational& lead = b.back();
    while (rem.size() >= b.size()) {
        std::size_t shift = rem.size() - b.size();
        Rational c = rem.back() / lead;
        quo[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) rem[i + shift] -= c * b[i];
        rem.pop_back();
        trim(rem);
    }
    trim(quo);
    return {quo, rem};
}

// Positive divisors by trial division; refuses absurdly large inputs.
std::vector<Integer> positive_divisors(Integer n) {
    if (n < 0) n = -n;
    if (n == 0) return {};
    if (n > Integer("100000000000000")) throw Error("integer too large for divisor enumeration");
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

namespace {

// Primitive integer polynomial proportional to p.
std::vector<Integer> integer_cleared(const QPoly& p) {
    Integer l = 1;
    for (const auto& c : p) {
        Integer den = c.get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<Integer> out;
    out.reserve(p.size());
    for (const auto& c : p) out.push_back(Integer(c.get_num() * (l / c.get_den())));
    return out;
}

Rational eval(const QPoly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

std::vector<Rational> rational_roots(const QPoly& p_in) {
    QPoly p = p_in;
    trim(p);
    std::vector<Rational> roots;
    if (p.size() <= 1) return roots;
    std::size_t zeros = 0;
    while (zeros < p.size() && p[zeros] == 0) ++zeros;
    if (zeros > 0) roots.emplace_back(0);
    p.erase(p.begin(), p.begin() + static_cast<long>(zeros));
    if (p.size() <= 1) return roots;
    auto ints = integer_cleared(p);
    auto nums = positive_divisors(ints.front());
    auto dens = positive_divisors(ints.back());
    for (const auto& q : dens) {
        for (const auto& n : nums) {
            for (int sign : {1, -1}) {
                Rational cand(sign * n, q);
                cand.canonicalize();
                if (cand.get_den() != q) continue;  // seen with a smaller denominator
                if (eval(p, cand) == 0) roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

bool has_rational_root(const QPoly& p) { return !rational_roots(p).empty(); }

}  // namespace qpoly

// ---------------------------------------------------------------------------
// NumberField

namespace {

std::string qpoly_to_string(const QPoly& p, const std::string& var) {
    std::ostringstream os;
    bool first = true;
    for (int i = qpoly::degree(p); i >= 0; --i) {
        const Rational& c = p[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = (mag == 1) && i > 0;
        if (!unit) {
            if (mag.get_den() != 1 && i > 0)
                os << "(" << to_string(mag) << ")";
            else
                os << to_string(mag);
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

// Monic integer quartic: does it split into two monic integer quadratics?
bool quartic_has_quadratic_factor(const std::vector<Integer>& c) {
    // x^4 + p3 x^3 + p2 x^2 + p1 x + p0 = (x^2 + a x + b)(x^2 + c x + d)
    const Integer &p0 = c[0], &p1 = c[1], &p2 = c[2], &p3 = c[3];
    if (p0 == 0) return true;
    Integer n = p0 < 0 ? Integer(-p0) : p0;
    for (const Integer& b : qpoly::positive_divisors(n)) {
        for (int sb : {1, -1}) {
            Integer bb = sb * b;
            Integer dd = p0 / bb;
            // a + c = p3, a d + b c = p1, b + d + a c = p2
            if (dd != bb) {
                // a (d - b) = p1 - b p3
                Integer num = p1 - bb * p3, den = dd - bb;
                if (num % den != 0) continue;
                Integer a = num / den, cc = p3 - a;
                if (bb + dd + a * cc == p2) return true;
            } else {
                if (p1 != bb * p3) continue;
                // a, c roots of X^2 - p3 X + (p2 - 2b)
                Integer disc = p3 * p3 - 4 * (p2 - 2 * bb);
                if (disc < 0) continue;
                Integer s = sqrt(disc);
                if (s * s == disc && (p3 + s) % 2 == 0) return true;
            }
        }
    }
    return false;
}

// Irreducibility over Q for degree <= 4: no rational root, and for quartics
// no product of two rational quadratics (checked on the scaled integral monic model).
bool is_irreducible_small(const QPoly& monic) {
    int deg = qpoly::degree(monic);
    if (deg <= 1) return true;
    if (qpoly::has_rational_root(monic)) return false;
    if (deg <= 3) return true;
    // g(x) = L^4 f(x/L) is monic with integer coefficients.
    Integer l = 1;
    for (const auto& q : monic) {
        Integer den = q.get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<Integer> g(5);
    Integer lp = 1;
    for (int i = 4; i >= 0; --i) {
        Rational v = monic[static_cast<std::size_t>(i)] * Rational(lp);
        g[static_cast<std::size_t>(i)] = v.get_num();
        lp *= l;
    }
    return !quartic_has_quadratic_factor(g);
}

}  // namespace

std::shared_ptr<const NumberField> NumberField::make(QPoly minpoly, std::string generator) {
    for (auto& c : minpoly) c.canonicalize();
    qpoly::trim(minpoly);
    if (minpoly.size() < 2) throw std::invalid_argument("minimal polynomial must have degree >= 1");
    if (generator.empty()) throw std::invalid_argument("empty generator name");
    Rational lead = minpoly.back();
    for (auto& c : minpoly) c /= lead;
    bool asserted = false;
    if (qpoly::degree(minpoly) <= 4) {
        if (!is_irreducible_small(minpoly))
            throw ReducibleMinpoly("minimal polynomial " + qpoly_to_string(minpoly, generator) +
                                   " is reducible over Q");
    } else {
        asserted = true;
    }
    return std::shared_ptr<const NumberField>(
        new NumberField(std::move(minpoly), std::move(generator), asserted));
}

std::shared_ptr<const NumberField> NumberField::make_trusted(QPoly minpoly, std::string generator) {
    qpoly::trim(minpoly);
    if (minpoly.size() < 2) throw std::invalid_argument("minimal polynomial must have degree >= 1");
    Rational lead = minpoly.back();
    for (auto& c : minpoly) c /= lead;
    return std::shared_ptr<const NumberField>(
        new NumberField(std::move(minpoly), std::move(generator), false));
}

std::shared_ptr<const NumberField> NumberField::rationals() {
    static const FieldPtr q = std::shared_ptr<const NumberField>(
        new NumberField(QPoly{Rational(0), Rational(1)}, "", false));
    return q;
}

std::string NumberField::minpoly_string() const {
    if (generator_.empty()) return "Q";
    return qpoly_to_string(minpoly_, generator_);
}

bool NumberField::same_as(const NumberField& other) const noexcept {
    if (this == &other) return true;
    if (is_rational() && other.is_rational()) return true;
    return minpoly_ == other.minpoly_ && generator_ == other.generator_;
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
    if (a == b || a->same_as(*b)) return a->is_rational() ? b : a;
    if (a->is_rational()) return b;
    if (b->is_rational()) return a;
    throw FieldMismatch("mixing elements of " + a->minpoly_string() + " and " +
                        b->minpoly_string());
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(FieldPtr field)
    : field_(std::move(field)), coords_(static_cast<std::size_t>(field_->degree())) {}

FieldElement::FieldElement(FieldPtr field, const Rational& value) : FieldElement(std::move(field)) {
    coords_[0] = value;
    coords_[0].canonicalize();
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    reduce();
}

FieldElement FieldElement::generator(FieldPtr field) {
    std::vector<Rational> c{Rational(0), Rational(1)};
    return FieldElement(std::move(field), std::move(c));
}

void FieldElement::reduce() {
    auto deg = static_cast<std::size_t>(field_->degree());
    for (auto& q : coords_) q.canonicalize();
    qpoly::trim(coords_);
    if (coords_.size() > deg) coords_ = qpoly::divmod(coords_, field_->minpoly()).second;
    coords_.resize(deg);
}

bool FieldElement::is_zero() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

bool FieldElement::is_one() const noexcept { return is_rational() && coords_[0] == 1; }

bool FieldElement::is_rational() const noexcept {
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& q) { return q == 0; });
}

FieldElement FieldElement::in_field(const FieldPtr& f) const {
    if (f == field_ || f->same_as(*field_)) {
        FieldElement out = *this;
        out.field_ = f;
        if (f->degree() != field_->degree()) out.coords_.resize(static_cast<std::size_t>(f->degree()));
        return out;
    }
    if (field_->is_rational()) return FieldElement(f, coords_[0]);
    if (f->is_rational() && is_rational()) return FieldElement(f, coords_[0]);
    throw FieldMismatch("cannot move element of " + field_->minpoly_string() + " into " +
                        f->minpoly_string());
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    FieldPtr f = common_field(field_, rhs.field_);
    if (f != field_) *this = in_field(f);
    const FieldElement& b = rhs.field_ == f ? rhs : rhs.in_field(f);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += b.coords_[i];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
    FieldPtr f = common_field(field_, rhs.field_);
    if (f != field_) *this = in_field(f);
    const FieldElement& b = rhs.field_ == f ? rhs : rhs.in_field(f);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= b.coords_[i];
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
    FieldPtr f = common_field(field_, rhs.field_);
    if (f->is_rational()) {
        coords_.resize(1);
        coords_[0] *= rhs.coords_[0];
        field_ = f;
        return *this;
    }
    if (rhs.field_->is_rational()) {
        if (f != field_) *this = in_field(f);
        for (auto& c : coords_) c *= rhs.coords_[0];
        return *this;
    }
    if (field_->is_rational()) {
        Rational s = coords_[0];
        *this = rhs;
        for (auto& c : coords_) c *= s;
        return *this;
    }
    coords_ = qpoly::mul(coords_, rhs.coords_);
    field_ = f;
    reduce();
    return *this;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero field element");
    if (field_->is_rational() || is_rational()) return FieldElement(field_, 1 / coords_[0]);
    // Extended Euclid on (a, m): s*a + t*m = g with g a nonzero constant.
    QPoly r0 = field_->minpoly(), r1 = coords_;
    qpoly::trim(r1);
    QPoly s0{}, s1{Rational(1)};
    while (qpoly::degree(r1) > 0) {
        auto [q, r] = qpoly::divmod(r0, r1);
        QPoly s2 = qpoly::sub(s0, qpoly::mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant because m is irreducible
    if (r1.empty()) throw DivisionByZero("element is a zero divisor; minimal polynomial is reducible");
    Rational g = r1[0];
    for (auto& c : s1) c /= g;
    return FieldElement(field_, s1);
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) { return *this *= rhs.inverse(); }

FieldElement FieldElement::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement result(field_, Rational(1));
    FieldElement base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.field_->is_rational() || b.field_->is_rational()) {
        return a.is_rational() && b.is_rational() && a.coords_[0] == b.coords_[0];
    }
    if (!a.field_->same_as(*b.field_)) throw FieldMismatch("comparing elements of different fields");
    return a.coords_ == b.coords_;
}

FieldElement nf_arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Cyclotomic fields

QPoly cyclotomic_polynomial(int k) {
    if (k < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
    static std::mutex mu;
    static std::map<int, QPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
    }
    // x^k - 1 divided by Phi_d for every proper divisor d of k
    QPoly p(static_cast<std::size_t>(k) + 1);
    p[0] = -1;
    p[static_cast<std::size_t>(k)] = 1;
    for (int d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        auto [q, r] = qpoly::divmod(p, cyclotomic_polynomial(d));
        p = std::move(q);
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(k, p);
    return p;
}

FieldPtr cyclotomic_field(int k, const std::string& generator) {
    return NumberField::make_trusted(cyclotomic_polynomial(k), generator);
}

FieldElement root_of_unity_power(int k, long long j, const std::string& generator) {
    FieldPtr f = cyclotomic_field(k, generator);
    long long e = ((j % k) + k) % k;
    if (f->is_rational()) {
        // zeta is the single root of a linear Phi_k: 1 for k = 1, -1 for k = 2
        Rational z = -f->minpoly()[0];
        FieldElement base(f, z);
        return base.pow(e);
    }
    return FieldElement::generator(f).pow(e);
}

}  // namespace etale
