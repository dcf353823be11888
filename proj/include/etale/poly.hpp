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

#ifndef ETALE_POLY_HPP
#define ETALE_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "etale/numfield.hpp"

namespace etale {

/**
 * Sparse multivariate polynomial over a number field.
 *
 * Terms are keyed by exponent vectors aligned with vars(); the map order is
 * lexicographic with vars()[0] most significant, so the last entry is the
 * lex-leading term.  Zero coefficients are never stored.  Binary operations
 * on polynomials with different variable lists work over the union (left
 * operand's variables first).
 */
class Poly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, FieldElement>;

    Poly() : Poly(NumberField::rationals(), {}) {}
    Poly(FieldPtr field, std::vector<std::string> vars);

    static Poly constant(const FieldElement& c, std::vector<std::string> vars = {});
    static Poly constant(FieldPtr field, const Rational& c, std::vector<std::string> vars = {});
    static Poly variable(const std::string& name, FieldPtr field = NumberField::rationals());
    /// The variable `name` inside the ring with the given variable list.
    static Poly variable(const std::string& name, std::vector<std::string> vars, FieldPtr field);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<std::string>& vars() const noexcept { return vars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Constant term (zero when absent).
    FieldElement constant_term() const;
    FieldElement coefficient(const Exponents& e) const;

    int var_index(const std::string& name) const;  // -1 when absent
    int degree_in(const std::string& name) const;  // -1 for the zero polynomial
    int total_degree() const;
    /// Variables that actually occur.
    std::vector<std::string> used_vars() const;
    bool is_univariate() const { return used_vars().size() <= 1; }

    /// Re-express over a superset (or reordering) of the used variables.
    Poly with_vars(const std::vector<std::string>& vars) const;
    /// Re-express over another field compatible with this one.
    Poly in_field(const FieldPtr& f) const;

    /// Lex-leading term; precondition !is_zero().
    const std::pair<const Exponents, FieldElement>& leading_term() const { return *terms_.rbegin(); }

    void add_term(const Exponents& e, const FieldElement& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const FieldElement& c);
    Poly pow(int e) const;

    Poly derivative(const std::string& var) const;
    FieldElement evaluate(const std::map<std::string, FieldElement>& point) const;

    friend bool operator==(const Poly& a, const Poly& b);

private:
    FieldPtr field_;
    std::vector<std::string> vars_;
    TermMap terms_;
};

inline Poly operator+(Poly a, const Poly& b) { return a += b; }
inline Poly operator-(Poly a, const Poly& b) { return a -= b; }
inline Poly operator*(const Poly& a, const Poly& b) { Poly r = a; r *= b; return r; }
inline Poly operator*(Poly a, const FieldElement& c) { return a *= c; }
inline Poly operator*(const FieldElement& c, Poly a) { return a *= c; }
inline bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

/// Union of variable lists, `a` first.
std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b);

class NotDivisible : public Error {
public:
    NotDivisible(const std::string& what, Poly remainder)
        : Error(what), remainder_(std::move(remainder)) {}
    const Poly& remainder() const noexcept { return remainder_; }

private:
    Poly remainder_;
};

enum class PolyOp { add, sub, mul };
Poly poly_arith(const Poly& a, const Poly& b, PolyOp op);

/// Substitute images[i] for vars()[i]; the result lives over the union of the images' variables.
Poly substitute(const Poly& p, const std::vector<Poly>& images);
/// Substitute selected variables; others stay.
Poly substitute(const Poly& p, const std::map<std::string, Poly>& images);

/// outer(inner) for univariate outer; throws ArityError otherwise.
Poly compose(const Poly& outer, const Poly& inner);

/// Quotient and remainder of multivariate division by a single divisor (lex order).
std::pair<Poly, Poly> divide(const Poly& a, const Poly& b);
/// Exact quotient; throws NotDivisible carrying the remainder.
Poly exact_div(const Poly& a, const Poly& b);

// ---- univariate algorithms (the polynomial may carry extra unused variables) ----

/// Coefficients low to high with respect to `var`; other variables stay in the coefficients.
std::vector<Poly> coefficients_in(const Poly& p, const std::string& var);

/// The single variable of a univariate polynomial ("" for constants).
std::string main_variable(const Poly& p);

/// Monic gcd of univariate polynomials in the same variable; gcd(0,0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// p divided by its leading coefficient.
Poly make_monic(const Poly& p);
FieldElement leading_coefficient(const Poly& p);
bool is_squarefree(const Poly& p);

struct MultiplicityFactor {
    Poly factor;  // monic, squarefree
    int multiplicity = 0;
};

/// Yun decomposition; multiplicities ascending, factors monic and pairwise coprime.
std::vector<MultiplicityFactor> squarefree_decomposition(const Poly& p);

/// Root multiplicities of phi - c over the algebraic closure, non-increasing.
std::vector<int> multiplicity_profile(const Poly& phi, const FieldElement& c);

struct CriticalValues {
    std::vector<FieldElement> values;
    /// Every critical value lies in the coefficient field and is listed.
    bool complete = false;
    /// phi' has roots outside the coefficient field.
    bool irrational_critical_points = false;
};

CriticalValues critical_values(const Poly& phi);

}  // namespace etale

#endif  // ETALE_POLY_HPP
