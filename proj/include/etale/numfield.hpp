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

#ifndef ETALE_NUMFIELD_HPP
#define ETALE_NUMFIELD_HPP

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "etale/errors.hpp"

namespace etale {

/// Exact rational; GMP keeps it canonical (gcd 1, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Dense univariate polynomial over Q, coefficients low to high, no trailing zeros.
using QPoly = std::vector<Rational>;

/**
 * A simple number field Q[g]/(m(g)).
 *
 * The minimal polynomial is stored monic.  Irreducibility is checked for
 * degree <= 4; above that the field is marked as asserted irreducible.
 * Degree-1 fields are all copies of Q and mix freely with any other field.
 */
class NumberField {
public:
    /// Throws ReducibleMinpoly when a factor is found, std::invalid_argument on bad input.
    static std::shared_ptr<const NumberField> make(QPoly minpoly, std::string generator);

    /// The field of rationals; serializes as "Q".
    static std::shared_ptr<const NumberField> rationals();

    /// Skips the irreducibility check (cyclotomic fields).
    static std::shared_ptr<const NumberField> make_trusted(QPoly minpoly, std::string generator);

    const QPoly& minpoly() const noexcept { return minpoly_; }
    const std::string& generator() const noexcept { return generator_; }
    int degree() const noexcept { return static_cast<int>(minpoly_.size()) - 1; }
    bool is_rational() const noexcept { return degree() == 1; }
    bool asserted_irreducible() const noexcept { return asserted_; }

    /// "theta^2 + 2" style, or "Q" for the rationals.
    std::string minpoly_string() const;

    bool same_as(const NumberField& other) const noexcept;

private:
    NumberField(QPoly minpoly, std::string generator, bool asserted)
        : minpoly_(std::move(minpoly)), generator_(std::move(generator)), asserted_(asserted) {}

    QPoly minpoly_;
    std::string generator_;
    bool asserted_ = false;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Picks the common field of two operands, or throws FieldMismatch.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

/// Element of a NumberField as its reduced residue: coords[i] is the coefficient of g^i.
class FieldElement {
public:
    FieldElement() : FieldElement(NumberField::rationals()) {}
    explicit FieldElement(FieldPtr field);
    FieldElement(FieldPtr field, const Rational& value);
    FieldElement(FieldPtr field, std::vector<Rational> coords);

    static FieldElement generator(FieldPtr field);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Rational>& coords() const noexcept { return coords_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    bool is_rational() const noexcept;
    /// Precondition: is_rational().
    const Rational& rational_value() const { return coords_.front(); }

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);

    /// Throws DivisionByZero.
    FieldElement inverse() const;
    FieldElement pow(long long e) const;

    /// The same element viewed in a field compatible with this one.
    FieldElement in_field(const FieldPtr& f) const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    void reduce();

    FieldPtr field_;
    std::vector<Rational> coords_;
};

inline FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
inline FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
inline FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
inline FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
inline bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

enum class ArithOp { add, sub, mul, div };
FieldElement nf_arith(const FieldElement& a, const FieldElement& b, ArithOp op);

/// k-th cyclotomic polynomial over Q (integer coefficients, low to high).
QPoly cyclotomic_polynomial(int k);

/// Q[zeta]/(Phi_k(zeta)); k = 1 and k = 2 give degree-1 copies of Q.
FieldPtr cyclotomic_field(int k, const std::string& generator = "zeta");

/// zeta_k^(j mod k) in cyclotomic_field(k).
FieldElement root_of_unity_power(int k, long long j, const std::string& generator = "zeta");

namespace qpoly {
// Small dense Q[x] kernel shared by the field code and the irreducibility test.
void trim(QPoly& p);
int degree(const QPoly& p);
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
/// Quotient and remainder; b nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Has a rational root (rational root test on the integer-cleared polynomial).
bool has_rational_root(const QPoly& p);
std::vector<Rational> rational_roots(const QPoly& p);
std::vector<Integer> positive_divisors(Integer n);
}  // namespace qpoly

}  // namespace etale

#endif  // ETALE_NUMFIELD_HPP
