/*
   Copyright 2026 The trisect authors

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

#ifndef TRISECT_IO_HPP
#define TRISECT_IO_HPP

#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "trisect/polynomial.hpp"

namespace trisect {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_no(line) {}
    int line_no;
};

/// Expression tree for one parsed polynomial; field-independent so the same
/// parse can instantiate over the rationals or a prime field.
struct Expr {
    enum class Kind { constant, variable, add, sub, mul, neg, pow };
    Kind kind;
    mpq_class value;             // constant
    int var = -1;                // variable (index into SystemAst::vars)
    std::shared_ptr<const Expr> lhs, rhs;
    std::uint32_t exponent = 0;  // pow
};
using ExprPtr = std::shared_ptr<const Expr>;

struct SystemAst {
    std::vector<std::string> vars;  // smallest first
    std::uint64_t characteristic = 0;
    std::vector<ExprPtr> polys;
};

namespace detail {

struct Token {
    enum class Kind { ident, number, sym, end };
    Kind kind = Kind::end;
    std::string text;
};

class Lexer {
public:
    Lexer(const std::string& s, int line) : s_(s), line_(line) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }
    bool at_sym(const char* s) const { return tok_.kind == Token::Kind::sym && tok_.text == s; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, msg); }

private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) {
            tok_ = {Token::Kind::end, ""};
            return;
        }
        char c = s_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            tok_ = {Token::Kind::ident, s_.substr(start, pos_ - start)};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            tok_ = {Token::Kind::number, s_.substr(start, pos_ - start)};
            return;
        }
        static const std::string symbols = "+-*^()/<:,";
        if (symbols.find(c) != std::string::npos) {
            tok_ = {Token::Kind::sym, std::string(1, c)};
            ++pos_;
            return;
        }
        throw ParseError(line_, std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int line_;
    Token tok_;
};

class PolyParser {
public:
    PolyParser(Lexer& lex, const std::vector<std::string>& vars) : lex_(lex), vars_(vars) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        if (lex_.peek().kind != Token::Kind::end) lex_.fail("unexpected trailing input");
        return e;
    }

private:
    static ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

    ExprPtr expr() {
        ExprPtr e;
        if (lex_.at_sym("-")) {
            lex_.take();
            Expr n{Expr::Kind::neg, {}, -1, term(), nullptr, 0};
            e = node(std::move(n));
        } else {
            e = term();
        }
        while (lex_.at_sym("+") || lex_.at_sym("-")) {
            bool plus = lex_.take().text == "+";
            Expr n{plus ? Expr::Kind::add : Expr::Kind::sub, {}, -1, e, term(), 0};
            e = node(std::move(n));
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (lex_.at_sym("*")) {
            lex_.take();
            Expr n{Expr::Kind::mul, {}, -1, e, factor(), 0};
            e = node(std::move(n));
        }
        return e;
    }

    ExprPtr factor() {
        ExprPtr base = atom();
        if (!lex_.at_sym("^")) return base;
        lex_.take();
        if (lex_.peek().kind != Token::Kind::number)
            lex_.fail("malformed exponent (must be a nonnegative integer)");
        std::string digits = lex_.take().text;
        if (digits.size() > 6) lex_.fail("exponent too large");
        Expr n{Expr::Kind::pow, {}, -1, base, nullptr,
               static_cast<std::uint32_t>(std::stoul(digits))};
        return node(std::move(n));
    }

    ExprPtr atom() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::ident) {
            std::string name = lex_.take().text;
            auto it = std::find(vars_.begin(), vars_.end(), name);
            if (it == vars_.end()) lex_.fail("unknown identifier '" + name + "'");
            Expr n{Expr::Kind::variable, {}, static_cast<int>(it - vars_.begin()), nullptr, nullptr, 0};
            return node(std::move(n));
        }
        if (t.kind == Token::Kind::number) {
            mpz_class num(lex_.take().text);
            mpz_class den = 1;
            if (lex_.at_sym("/")) {
                lex_.take();
                if (lex_.peek().kind != Token::Kind::number) lex_.fail("expected integer denominator");
                den = mpz_class(lex_.take().text);
                if (den == 0) lex_.fail("zero denominator");
            }
            mpq_class v(num, den);
            v.canonicalize();
            Expr n{Expr::Kind::constant, std::move(v), -1, nullptr, nullptr, 0};
            return node(std::move(n));
        }
        if (t.kind == Token::Kind::sym && t.text == "(") {
            lex_.take();
            ExprPtr e = expr();
            if (!lex_.at_sym(")")) lex_.fail("expected ')'");
            lex_.take();
            return e;
        }
        lex_.fail("expected a variable, number or '('");
    }

    Lexer& lex_;
    const std::vector<std::string>& vars_;
};

inline std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

inline bool is_blank(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

inline bool is_directive(const std::string& line, const char* name) {
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && std::isalpha(static_cast<unsigned char>(line[j]))) ++j;
    if (line.substr(i, j - i) != name) return false;
    while (j < line.size() && std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    return j < line.size() && line[j] == ':';
}

}  // namespace detail

/// Grammar: `vars: a < b < c` (smallest first), optional `char: p`, `#`
/// comments, then one polynomial per line in infix + - * ^ with integer or
/// a/b rational coefficients; explicit `*` required, parentheses allowed.
inline SystemAst parse_system(const std::string& text) {
    SystemAst ast;
    bool have_vars = false;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string raw = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        start = end == std::string::npos ? text.size() + 1 : end + 1;
        ++line_no;
        std::string line = detail::strip_comment(raw);
        if (detail::is_blank(line)) continue;

        if (detail::is_directive(line, "vars")) {
            if (have_vars) throw ParseError(line_no, "duplicate vars line");
            detail::Lexer lex(line, line_no);
            lex.take();  // vars
            if (!lex.at_sym(":")) lex.fail("expected ':'");
            lex.take();
            while (true) {
                if (lex.peek().kind != detail::Token::Kind::ident) lex.fail("expected variable name");
                ast.vars.push_back(lex.take().text);
                if (!lex.at_sym("<")) break;
                lex.take();
            }
            if (lex.peek().kind != detail::Token::Kind::end) lex.fail("unexpected trailing input");
            for (std::size_t i = 0; i < ast.vars.size(); ++i)
                for (std::size_t j = i + 1; j < ast.vars.size(); ++j)
                    if (ast.vars[i] == ast.vars[j])
                        throw ParseError(line_no, "duplicate variable '" + ast.vars[i] + "'");
            have_vars = true;
            continue;
        }
        if (detail::is_directive(line, "char")) {
            detail::Lexer lex(line, line_no);
            lex.take();
            if (!lex.at_sym(":")) lex.fail("expected ':'");
            lex.take();
            if (lex.peek().kind != detail::Token::Kind::number) lex.fail("expected characteristic");
            mpz_class c(lex.take().text);
            if (c != 0 && (!c.fits_ulong_p() || !is_prime(c.get_ui())))
                throw ParseError(line_no, "characteristic is not 0 or a prime");
            ast.characteristic = c.get_ui();
            continue;
        }

        if (!have_vars) throw ParseError(line_no, "polynomial before vars line");
        detail::Lexer lex(line, line_no);
        detail::PolyParser pp(lex, ast.vars);
        ast.polys.push_back(pp.parse());
    }
    if (!have_vars) throw ParseError(line_no, "missing vars line");
    return ast;
}

template <class F>
Polynomial<F> build_poly(const ExprPtr& e, const ContextPtr<F>& ctx) {
    switch (e->kind) {
        case Expr::Kind::constant:
            return Polynomial<F>::constant(ctx, ctx->field.from_ratio(e->value.get_num(), e->value.get_den()));
        case Expr::Kind::variable:
            return Polynomial<F>::variable(ctx, e->var);
        case Expr::Kind::add:
            return build_poly(e->lhs, ctx) + build_poly(e->rhs, ctx);
        case Expr::Kind::sub:
            return build_poly(e->lhs, ctx) - build_poly(e->rhs, ctx);
        case Expr::Kind::mul:
            return build_poly(e->lhs, ctx) * build_poly(e->rhs, ctx);
        case Expr::Kind::neg:
            return negate(build_poly(e->lhs, ctx));
        case Expr::Kind::pow:
            return power(build_poly(e->lhs, ctx), e->exponent);
    }
    throw std::logic_error("unreachable");
}

template <class F>
std::vector<Polynomial<F>> build_system(const SystemAst& ast, const ContextPtr<F>& ctx) {
    std::vector<Polynomial<F>> out;
    out.reserve(ast.polys.size());
    for (const auto& e : ast.polys) out.push_back(build_poly(e, ctx));
    return out;
}

/// Parse a single polynomial over an existing context (round-trip support).
template <class F>
Polynomial<F> parse_poly(const std::string& text, const ContextPtr<F>& ctx) {
    detail::Lexer lex(text, 1);
    detail::PolyParser pp(lex, ctx->vars.names());
    return build_poly(pp.parse(), ctx);
}

}  // namespace trisect

#endif
