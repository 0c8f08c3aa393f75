#ifndef GASYM_PARSER_HPP
#define GASYM_PARSER_HPP

#include <cctype>
#include <string>
#include <vector>

#include "gasym/multipoly.hpp"

namespace gasym {

// Recursive-descent parser for polynomial expressions over named variables.
// Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := rational | variable | '(' expr ')'
//   rational := uint ('/' uint)?
// Implicit multiplication is a syntax error.
class PolyParser {
public:
    PolyParser(std::string text, std::vector<std::string> vars)
        : text_(std::move(text)), vars_(std::move(vars)) {}

    MultiPoly parse() {
        MultiPoly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        if (p.is_zero() && text_.find_first_not_of(" \t\r\n") == std::string::npos)
            fail("empty expression");
        return p;
    }

private:
    std::string text_;
    std::vector<std::string> vars_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        int line = 1, col = 1;
        for (size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else
                ++col;
        }
        throw parse_error(msg, line, col);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (peek_is(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly parse_expr() {
        skip_ws();
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        MultiPoly acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            if (accept('+')) acc = acc + parse_term();
            else if (accept('-')) acc = acc - parse_term();
            else break;
        }
        return acc;
    }

    MultiPoly parse_term() {
        MultiPoly acc = parse_factor();
        while (accept('*')) acc = acc * parse_factor();
        // implicit multiplication: a factor start right after a factor
        skip_ws();
        if (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '(')
                fail("implicit multiplication is not allowed; insert '*'");
        }
        return acc;
    }

    MultiPoly parse_factor() {
        MultiPoly base = parse_base();
        if (accept('^')) {
            long e = parse_uint("exponent");
            if (e < 0 || e > 64) fail("exponent out of supported range");
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    long parse_uint(const char* what) {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail(std::string("expected ") + what);
        try {
            return std::stol(text_.substr(start, pos_ - start));
        } catch (...) {
            fail(std::string(what) + " too large");
        }
    }

    MultiPoly parse_base() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly inner = parse_expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string num = text_.substr(start, pos_ - start);
            if (peek_is('/')) {
                size_t save = pos_;
                ++pos_;
                skip_ws();
                if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    size_t dstart = pos_;
                    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
                    std::string den = text_.substr(dstart, pos_ - dstart);
                    if (den == "0") fail("zero denominator");
                    Rational q(num + "/" + den);
                    q.canonicalize();
                    return MultiPoly::constant(AlgNum(q), vars_);
                }
                pos_ = save; // '/' was not a rational literal; leave it be
            }
            return MultiPoly::constant(AlgNum(Rational(num)), vars_);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            for (size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i] == name) return MultiPoly::variable(i, vars_);
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

inline MultiPoly parse_poly(const std::string& text,
                            std::vector<std::string> vars = {"x1", "x2", "x3"}) {
    return PolyParser(text, std::move(vars)).parse();
}

} // namespace gasym

#endif
