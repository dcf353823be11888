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

#ifndef ETALE_PARSE_HPP
#define ETALE_PARSE_HPP

#include <memory>
#include <string>
#include <vector>

#include "etale/poly.hpp"

namespace etale {

class ParseError : public Error {
public:
    enum class Kind { syntax, unknown_symbol, non_integer_exponent };
    ParseError(Kind kind, std::size_t offset, const std::string& msg);
    Kind kind() const noexcept { return kind_; }
    /// Byte offset into the input.
    std::size_t offset() const noexcept { return offset_; }

private:
    Kind kind_;
    std::size_t offset_;
};

class SyntaxError : public ParseError {
public:
    SyntaxError(std::size_t offset, const std::string& msg) : ParseError(Kind::syntax, offset, msg) {}
};
class UnknownSymbol : public ParseError {
public:
    UnknownSymbol(std::size_t offset, const std::string& msg) : ParseError(Kind::unknown_symbol, offset, msg) {}
};
class NonIntegerExponent : public ParseError {
public:
    NonIntegerExponent(std::size_t offset, const std::string& msg)
        : ParseError(Kind::non_integer_exponent, offset, msg) {}
};

struct ExprAST {
    enum class Kind { number, symbol, add, sub, mul, div, pow, neg, paren };
    Kind kind;
    std::string text;  // number digits or symbol name
    int exponent = 0;  // pow only
    std::size_t offset = 0;
    std::vector<std::unique_ptr<ExprAST>> children;
};

/// Syntax tree only; symbols are not resolved.
std::unique_ptr<ExprAST> parse_expr(const std::string& text);

/// Parse over `field`; the field generator name is a legal constant.
Poly parse_poly(const std::string& text, const std::vector<std::string>& vars, const FieldPtr& field);

/// Canonical text: terms in descending lex order, "2*x^2 - 1", "0" for zero.
std::string print_poly(const Poly& p);

/// "theta - 7/3", "3", "0".
std::string print_field_element(const FieldElement& c);
FieldElement parse_field_element(const std::string& text, const FieldPtr& field);

/// "Q" or a monic polynomial in a single symbol, e.g. "theta^2 + 2".
FieldPtr parse_field(const std::string& text);

/// Bounds that keep hostile input cheap.
inline constexpr int kMaxExponent = 100000;
inline constexpr int kMaxDepth = 512;

}  // namespace etale

#endif  // ETALE_PARSE_HPP
