#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "muimage/errors.hpp"
#include "muimage/polynomial.hpp"
#include "muimage/rational.hpp"

namespace muimage {

namespace detail {

// Recursive-descent parser for the expression grammar
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ['^' uint]
//   base   := integer | variable | '(' expr ')'
// Whitespace is ignored; there is no implicit multiplication. Offsets in
// errors are 0-based positions into the original text.
class PolyParser {
public:
    PolyParser(const std::string& text, std::vector<std::string> variables)
        : text_(text), vars_(std::move(variables)) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ < text_.size())
            throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
        return p;
    }

private:
    Polynomial expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '-') { ++pos_; negate = true; }
        Polynomial acc = term();
        if (negate) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+') { ++pos_; acc = acc + term(); }
            else if (c == '-') { ++pos_; acc = acc - term(); }
            else break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') { ++pos_; acc = acc * factor(); }
            else break;
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            return b.pow(exponent());
        }
        return b;
    }

    Polynomial base() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return Polynomial::constant(Rational(Integer(text_.substr(start, pos_ - start))),
                                        vars_);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            for (const auto& v : vars_)
                if (v == name) return Polynomial::variable(name, vars_);
            throw ParseError("unknown variable '" + name + "'", start);
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    unsigned exponent() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected exponent", pos_);
        unsigned long long e = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            e = e * 10 + static_cast<unsigned long long>(text_[pos_] - '0');
            if (e > 1000000ULL) throw ParseError("exponent too large", pos_);
            ++pos_;
        }
        return static_cast<unsigned>(e);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    const std::string& text_;
    std::vector<std::string> vars_;
    std::size_t pos_ = 0;
};

}  // namespace detail

// Parses `text` as a polynomial over the declared variables. All declared
// variables participate in the result's variable order even when unused.
inline Polynomial parse_polynomial(const std::string& text,
                                   const std::vector<std::string>& variables) {
    return detail::PolyParser(text, variables).parse();
}

}  // namespace muimage
