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

#include "etale/parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace etale {

ParseError::ParseError(Kind kind, std::size_t offset, const std::string& msg)
    : Error(msg + " at offset " + std::to_string(offset)), kind_(kind), offset_(offset) {}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    std::unique_ptr<ExprAST> run() {
        skip();
        if (pos_ == s_.size()) throw SyntaxError(pos_, "empty expression");
        auto e = expr();
        skip();
        if (pos_ != s_.size()) {
            if (is_ident_start(s_[pos_]) || is_digit(s_[pos_]) || s_[pos_] == '(')
                throw SyntaxError(pos_, "implicit multiplication is not allowed");
            throw SyntaxError(pos_, std::string("unexpected character '") + s_[pos_] + "'");
        }
        return e;
    }

private:
    using Node = std::unique_ptr<ExprAST>;

    static Node make(ExprAST::Kind k, std::size_t off) {
        auto n = std::make_unique<ExprAST>();
        n->kind = k;
        n->offset = off;
        return n;
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    struct DepthGuard {
        Parser& p;
        explicit DepthGuard(Parser& parser, std::size_t off) : p(parser) {
            if (++p.depth_ > kMaxDepth) throw SyntaxError(off, "expression nested too deeply");
        }
        ~DepthGuard() { --p.depth_; }
    };

    // expr := term (('+' | '-') term)*
    Node expr() {
        DepthGuard g(*this, pos_);
        Node lhs = term();
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-') return lhs;
            auto n = make(c == '+' ? ExprAST::Kind::add : ExprAST::Kind::sub, pos_);
            ++pos_;
            n->children.push_back(std::move(lhs));
            n->children.push_back(term());
            lhs = std::move(n);
        }
    }

    // term := unary (('*' | '/') unary)*
    Node term() {
        Node lhs = unary();
        for (;;) {
            char c = peek();
            if (c != '*' && c != '/') return lhs;
            auto n = make(c == '*' ? ExprAST::Kind::mul : ExprAST::Kind::div, pos_);
            ++pos_;
            n->children.push_back(std::move(lhs));
            n->children.push_back(unary());
            lhs = std::move(n);
        }
    }

    // unary := ('-' | '+') unary | power
    Node unary() {
        DepthGuard g(*this, pos_);
        char c = peek();
        if (c == '-') {
            auto n = make(ExprAST::Kind::neg, pos_);
            ++pos_;
            n->children.push_back(unary());
            return n;
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    // power := primary ('^' integer)?
    Node power() {
        Node base = primary();
        if (peek() != '^') return base;
        std::size_t op = pos_;
        ++pos_;
        skip();
        std::size_t start = pos_;
        if (pos_ >= s_.size()) throw SyntaxError(pos_, "missing exponent");
        if (!is_digit(s_[pos_])) {
            if (s_[pos_] == '-' || s_[pos_] == '(' || s_[pos_] == '.' || is_ident_start(s_[pos_]))
                throw NonIntegerExponent(pos_, "exponent must be a nonnegative integer literal");
            throw SyntaxError(pos_, "missing exponent");
        }
        while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
        if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == '/'))
            throw NonIntegerExponent(start, "exponent must be a nonnegative integer literal");
        std::string digits = s_.substr(start, pos_ - start);
        if (digits.size() > 6 || std::stol(digits) > kMaxExponent)
            throw SyntaxError(start, "exponent too large");
        auto n = make(ExprAST::Kind::pow, op);
        n->exponent = static_cast<int>(std::stol(digits));
        n->text = digits;
        n->children.push_back(std::move(base));
        if (peek() == '^') throw SyntaxError(pos_, "chained exponent needs parentheses");
        return n;
    }

    // primary := integer | symbol | '(' expr ')'
    Node primary() {
        char c = peek();
        std::size_t start = pos_;
        if (c == '(') {
            ++pos_;
            auto n = make(ExprAST::Kind::paren, start);
            n->children.push_back(expr());
            if (peek() != ')') throw SyntaxError(pos_, "expected ')'");
            ++pos_;
            return n;
        }
        if (is_digit(c)) {
            while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '.') throw SyntaxError(pos_, "decimal literals are not supported");
            auto n = make(ExprAST::Kind::number, start);
            n->text = s_.substr(start, pos_ - start);
            return n;
        }
        if (is_ident_start(c)) {
            while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
            auto n = make(ExprAST::Kind::symbol, start);
            n->text = s_.substr(start, pos_ - start);
            return n;
        }
        if (c == '\0') throw SyntaxError(pos_, "unexpected end of input");
        throw SyntaxError(pos_, std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int depth_ = 0;
};

struct Evaluator {
    const std::vector<std::string>& vars;
    const FieldPtr& field;

    Poly eval(const ExprAST& n) const {
        switch (n.kind) {
            case ExprAST::Kind::number:
                return Poly::constant(field, Rational(Integer(n.text, 10)), vars);
            case ExprAST::Kind::symbol: {
                if (std::find(vars.begin(), vars.end(), n.text) != vars.end())
                    return Poly::variable(n.text, vars, field);
                if (!field->is_rational() && n.text == field->generator())
                    return Poly::constant(FieldElement::generator(field), vars);
                throw UnknownSymbol(n.offset, "unknown symbol '" + n.text + "'");
            }
            case ExprAST::Kind::add: return eval(*n.children[0]) + eval(*n.children[1]);
            case ExprAST::Kind::sub: return eval(*n.children[0]) - eval(*n.children[1]);
            case ExprAST::Kind::mul: return eval(*n.children[0]) * eval(*n.children[1]);
            case ExprAST::Kind::div: {
                Poly num = eval(*n.children[0]);
                Poly den = eval(*n.children[1]);
                if (!den.is_constant() || den.is_zero())
                    throw SyntaxError(n.offset, "division only by a nonzero constant");
                return num * den.constant_term().inverse();
            }
            case ExprAST::Kind::pow: {
                Poly base = eval(*n.children[0]);
                if (n.exponent > 64 && base.size() > 1)
                    throw SyntaxError(n.offset, "exponent too large for a multi-term base");
                return base.pow(n.exponent);
            }
            case ExprAST::Kind::neg: return -eval(*n.children[0]);
            case ExprAST::Kind::paren: return eval(*n.children[0]);
        }
        throw SyntaxError(n.offset, "bad node");
    }
};

std::string rational_text(const Rational& q) { return q.get_str(10); }

// Rational coefficient in front of a monomial: "3", "(1/3)"
std::string coeff_text(const Rational& q) {
    if (q.get_den() == 1) return rational_text(q);
    return "(" + rational_text(q) + ")";
}

std::string monomial_text(const Poly::Exponents& e, const std::vector<std::string>& vars) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[i];
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

// Shared term printer; coefficient is a rational or a parenthesized field element.
std::string join_terms(const std::vector<std::pair<std::string, std::pair<int, std::string>>>& terms) {
    // each: (monomial, (sign, magnitude-or-paren-text))
    std::string out;
    bool first = true;
    for (const auto& [mono, cs] : terms) {
        const auto& [sign, ctext] = cs;
        std::string body;
        if (mono.empty())
            body = ctext.empty() ? "1" : ctext;
        else if (ctext.empty())
            body = mono;
        else
            body = ctext + "*" + mono;
        if (first) {
            out = (sign < 0 ? "-" : "") + body;
            first = false;
        } else {
            out += sign < 0 ? " - " : " + ";
            out += body;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::unique_ptr<ExprAST> parse_expr(const std::string& text) { return Parser(text).run(); }

Poly parse_poly(const std::string& text, const std::vector<std::string>& vars, const FieldPtr& field) {
    auto ast = parse_expr(text);
    Evaluator ev{vars, field};
    Poly p = ev.eval(*ast);
    return p.with_vars(vars).in_field(common_field(field, p.field()));
}

std::string print_field_element(const FieldElement& c) {
    std::vector<std::pair<std::string, std::pair<int, std::string>>> terms;
    const auto& co = c.coords();
    const std::string& g = c.field()->generator();
    for (std::size_t i = co.size(); i-- > 0;) {
        if (co[i] == 0) continue;
        int sign = co[i] < 0 ? -1 : 1;
        Rational mag = abs(co[i]);
        std::string mono = i == 0 ? "" : (i == 1 ? g : g + "^" + std::to_string(i));
        std::string ct;
        if (i == 0)
            ct = rational_text(mag);
        else if (mag != 1)
            ct = coeff_text(mag);
        terms.push_back({mono, {sign, ct}});
    }
    return join_terms(terms);
}

FieldElement parse_field_element(const std::string& text, const FieldPtr& field) {
    Poly p = parse_poly(text, {}, field);
    if (p.is_zero()) return FieldElement(field);
    return p.constant_term().in_field(field);
}

std::string print_poly(const Poly& p) {
    std::vector<std::pair<std::string, std::pair<int, std::string>>> terms;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono = monomial_text(e, p.vars());
        if (c.is_rational()) {
            const Rational& q = c.rational_value();
            int sign = q < 0 ? -1 : 1;
            Rational mag = abs(q);
            std::string ct;
            if (mono.empty())
                ct = rational_text(mag);
            else if (mag != 1)
                ct = coeff_text(mag);
            terms.push_back({mono, {sign, ct}});
        } else {
            terms.push_back({mono, {1, "(" + print_field_element(c) + ")"}});
        }
    }
    return join_terms(terms);
}

FieldPtr parse_field(const std::string& text) {
    std::string trimmed = text;
    trimmed.erase(std::remove_if(trimmed.begin(), trimmed.end(), [](unsigned char ch) { return std::isspace(ch); }),
                  trimmed.end());
    if (trimmed == "Q") return NumberField::rationals();
    auto ast = parse_expr(text);
    // collect symbols
    std::set<std::string> syms;
    std::vector<const ExprAST*> stack{ast.get()};
    while (!stack.empty()) {
        const ExprAST* n = stack.back();
        stack.pop_back();
        if (n->kind == ExprAST::Kind::symbol) syms.insert(n->text);
        for (const auto& c : n->children) stack.push_back(c.get());
    }
    if (syms.size() != 1) throw SyntaxError(0, "field minpoly must use exactly one symbol");
    std::string g = *syms.begin();
    Poly m = parse_poly(text, {g}, NumberField::rationals());
    int deg = m.degree_in(g);
    if (deg < 1) throw SyntaxError(0, "field minpoly must have positive degree");
    QPoly q(static_cast<std::size_t>(deg) + 1);
    for (const auto& [e, c] : m.terms()) q[static_cast<std::size_t>(e[0])] = c.rational_value();
    return NumberField::make(q, g);
}

}  // namespace etale
