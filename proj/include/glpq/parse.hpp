#pragma once

// Recursive-descent parser for the canonical expression grammar:
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | 'p' | 'q' | generator | '(' expr ')' | factor '^' integer
//
// Powers of generators expand to repeated words; negative powers are only
// admitted on p, q, ai, di. print(parse(s)) canonicalizes; parse(print(e))
// is the identity.

#include "glpq/element.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace glpq {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};
struct UnknownSymbol : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IllegalInverse : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace ast {

enum class Kind { rational, param, generator, symbol, neg, sum, prod, pow };

struct Node {
    Kind kind;
    Rational value;                   // rational
    char param = 0;                   // 'p' or 'q'
    Gen gen = Gen::COUNT;             // generator
    std::string symbol;               // named composite symbol
    int exponent = 1;                 // pow
    std::vector<std::shared_ptr<Node>> children;
};

using NodePtr = std::shared_ptr<Node>;

}  // namespace ast

class Parser {
public:
    using SymbolTable = std::map<std::string, Element>;

    explicit Parser(std::string text, const SymbolTable* symbols = nullptr)
        : text_(std::move(text)), symbols_(symbols) {}

    ast::NodePtr parse_tree() {
        auto n = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return n;
    }

    Element parse_element() { return evaluate(*parse_tree()); }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    ast::NodePtr parse_expr() {
        auto first = std::make_shared<ast::Node>();
        first->kind = ast::Kind::sum;
        bool lead_neg = eat('-');
        auto t = parse_term();
        if (lead_neg) {
            auto n = std::make_shared<ast::Node>();
            n->kind = ast::Kind::neg;
            n->children.push_back(t);
            t = n;
        }
        first->children.push_back(t);
        while (true) {
            if (eat('+')) {
                first->children.push_back(parse_term());
            } else if (eat('-')) {
                auto n = std::make_shared<ast::Node>();
                n->kind = ast::Kind::neg;
                n->children.push_back(parse_term());
                first->children.push_back(n);
            } else {
                break;
            }
        }
        return first->children.size() == 1 ? first->children[0] : first;
    }

    ast::NodePtr parse_term() {
        auto prod = std::make_shared<ast::Node>();
        prod->kind = ast::Kind::prod;
        prod->children.push_back(parse_factor());
        while (eat('*')) prod->children.push_back(parse_factor());
        return prod->children.size() == 1 ? prod->children[0] : prod;
    }

    ast::NodePtr parse_factor() {
        auto base = parse_primary();
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                skip_ws();
                bool neg = eat('-');
                std::size_t start = pos_;
                long v = parse_integer();
                auto n = std::make_shared<ast::Node>();
                n->kind = ast::Kind::pow;
                n->exponent = static_cast<int>(neg ? -v : v);
                n->children.push_back(base);
                if (neg && !invertible_base(*base))
                    throw IllegalInverse("negative power not allowed on this factor (position " +
                                         std::to_string(start) + ")");
                base = n;
            } else {
                break;
            }
        }
        return base;
    }

    static bool invertible_base(const ast::Node& n) {
        if (n.kind == ast::Kind::param) return true;
        if (n.kind == ast::Kind::generator) return n.gen == Gen::ai || n.gen == Gen::di;
        return false;
    }

    long parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected integer", start);
        return std::stol(text_.substr(start, pos_ - start));
    }

    ast::NodePtr parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = parse_integer();
            Rational r(num);
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                long den = parse_integer();
                if (den == 0) throw ParseError("zero denominator", pos_);
                r = Rational(num, den);
            }
            auto n = std::make_shared<ast::Node>();
            n->kind = ast::Kind::rational;
            n->value = r;
            return n;
        }
        if (c == '(') {
            ++pos_;
            auto inner = parse_expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_]))))
                ++pos_;
            std::string id = text_.substr(start, pos_ - start);
            auto n = std::make_shared<ast::Node>();
            if (id == "p" || id == "q") {
                n->kind = ast::Kind::param;
                n->param = id[0];
                return n;
            }
            if (auto g = gen_by_name(id)) {
                n->kind = ast::Kind::generator;
                n->gen = *g;
                return n;
            }
            if (symbols_ && symbols_->count(id)) {
                n->kind = ast::Kind::symbol;
                n->symbol = id;
                return n;
            }
            throw UnknownSymbol("unknown symbol '" + id + "' at position " +
                                std::to_string(start));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    Element evaluate(const ast::Node& n) const {
        switch (n.kind) {
            case ast::Kind::rational:
                return Element(Scalar(n.value));
            case ast::Kind::param:
                return Element(n.param == 'p' ? Scalar::p() : Scalar::q());
            case ast::Kind::generator:
                return Element::gen(n.gen);
            case ast::Kind::symbol:
                return symbols_->at(n.symbol);
            case ast::Kind::neg:
                return -evaluate(*n.children[0]);
            case ast::Kind::sum: {
                Element r;
                for (const auto& ch : n.children) r += evaluate(*ch);
                return r;
            }
            case ast::Kind::prod: {
                Element r = Element::unit();
                for (const auto& ch : n.children) r = mul(r, evaluate(*ch));
                return r;
            }
            case ast::Kind::pow: {
                const ast::Node& b = *n.children[0];
                int k = n.exponent;
                if (k < 0) {
                    if (b.kind == ast::Kind::param) {
                        Scalar s = b.param == 'p' ? Scalar::p(k) : Scalar::q(k);
                        return Element(s);
                    }
                    // ai^-n = a^n, di^-n = d^n
                    Gen partner = *inverse_of(b.gen);
                    Element r = Element::unit();
                    for (int i = 0; i < -k; ++i) r = mul(r, Element::gen(partner));
                    return r;
                }
                Element base = evaluate(b);
                Element r = Element::unit();
                for (int i = 0; i < k; ++i) r = mul(r, base);
                return r;
            }
        }
        throw std::logic_error("unreachable");
    }

    std::string text_;
    std::size_t pos_ = 0;
    const SymbolTable* symbols_;
};

inline Element parse(const std::string& text, const Parser::SymbolTable* symbols = nullptr) {
    return Parser(text, symbols).parse_element();
}

}  // namespace glpq
