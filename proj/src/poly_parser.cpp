#include "pfe/poly_parser.hpp"

#include <cctype>

namespace pfe {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    XPolynomial run() {
        XPolynomial p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw PolyParseError(what, pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
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

    XPolynomial parse_expr() {
        XPolynomial acc = parse_term();
        for (;;) {
            if (eat('+')) acc += parse_term();
            else if (eat('-')) acc -= parse_term();
            else return acc;
        }
    }

    XPolynomial parse_term() {
        XPolynomial acc = parse_unary();
        while (eat('*')) acc = acc * parse_unary();
        return acc;
    }

    XPolynomial parse_unary() {
        if (eat('-')) return Rational(-1) * parse_unary();
        return parse_power();
    }

    XPolynomial parse_power() {
        XPolynomial base = parse_atom();
        if (!eat('^')) return base;
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected a nonnegative integer exponent");
        unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
        return base.pow(static_cast<unsigned>(e));
    }

    XPolynomial parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            XPolynomial inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'x') {
            ++pos_;
            return XPolynomial::variable();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_literal();
        fail("expected a literal, 'x' or '('");
    }

    XPolynomial parse_literal() {
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            size_t den_start = pos_;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == den_start) fail("expected denominator digits");
        }
        std::string lit(text_.substr(start, pos_ - start));
        try {
            return XPolynomial::constant(Rational::parse(lit));
        } catch (const std::exception& e) {
            pos_ = start;
            fail(e.what());
        }
    }

    std::string_view text_;
    size_t pos_ = 0;
};

}  // namespace

XPolynomial parse_poly(std::string_view text) {
    return Parser(text).run();
}

}  // namespace pfe
