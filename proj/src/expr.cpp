#include "hff/expr.hpp"

#include <cctype>

#include "hff/errors.hpp"

namespace hff {
namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : s_(text) {}

    BivarPoly run() {
        BivarPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(Errc::Parse, what + " at position " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    BivarPoly expr() {
        BivarPoly acc = term();
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    BivarPoly term() {
        BivarPoly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    BivarPoly factor() {
        bool neg = false;
        while (true) {
            if (eat('-'))
                neg = !neg;
            else if (eat('+'))
                ;
            else
                break;
        }
        BivarPoly base = atom();
        if (eat('^')) {
            unsigned e = uint_lit();
            BivarPoly acc = BivarPoly::constant(RatFunc(1));
            for (unsigned k = 0; k < e; ++k) acc = acc * base;
            base = acc;
        }
        return neg ? -base : base;
    }

    BivarPoly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            BivarPoly inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == 't') {
            ++pos_;
            return BivarPoly::constant(RatFunc::t());
        }
        if (c == 'x') {
            ++pos_;
            return BivarPoly::var_x();
        }
        if (c == 'y') {
            ++pos_;
            return BivarPoly::var_y();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = int_lit();
            if (eat('/')) {
                BigInt den = int_lit();
                if (sgn(den) == 0) fail("zero denominator");
                return BivarPoly::constant(RatFunc(rat(num, den)));
            }
            return BivarPoly::constant(RatFunc(BigRat(num)));
        }
        fail("expected a literal, variable or '('");
    }

    BigInt int_lit() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        return BigInt(s_.substr(start, pos_ - start));
    }

    unsigned uint_lit() {
        BigInt v = int_lit();
        if (v < 0 || v > 1024) fail("exponent out of range");
        return static_cast<unsigned>(v.get_ui());
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

BivarPoly parse_poly(const std::string& text) { return Parser(text).run(); }

RatFunc parse_scalar(const std::string& text) {
    BivarPoly p = parse_poly(text);
    if (p.deg_x() > 0 || p.deg_y() > 0)
        throw Error(Errc::Parse, "expression must not involve x or y: " + text);
    return p.coeff(0, 0);
}

}  // namespace hff
