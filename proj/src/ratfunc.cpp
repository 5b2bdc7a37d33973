#include "hff/ratfunc.hpp"

#include <stdexcept>

namespace hff {

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = UniPoly::one();
        return;
    }
    if (den_.degree() == 0) {
        BigRat c = den_[0];
        if (c != 1) num_ = num_ * (BigRat(1) / c);
        den_ = UniPoly::one();
        return;
    }
    UniPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    BigRat lc = den_.leading();
    if (lc != 1) {
        BigRat inv = BigRat(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

BigRat RatFunc::constant_value() const {
    if (!is_constant()) throw std::domain_error("not a constant rational function");
    return num_.is_zero() ? BigRat(0) : num_[0] / den_[0];
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    // cross-reduce first so the big product is already close to lowest terms
    UniPoly g1 = poly_gcd(a.num_, b.den_);
    UniPoly g2 = poly_gcd(b.num_, a.den_);
    UniPoly n = (g1.degree() > 0 ? exact_div(a.num_, g1) : a.num_) *
                (g2.degree() > 0 ? exact_div(b.num_, g2) : b.num_);
    UniPoly d = (g2.degree() > 0 ? exact_div(a.den_, g2) : a.den_) *
                (g1.degree() > 0 ? exact_div(b.den_, g1) : b.den_);
    return RatFunc(std::move(n), std::move(d));
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return a * RatFunc(b.den_, b.num_);
}

RatFunc RatFunc::derivative() const {
    if (is_polynomial()) return RatFunc(num_.derivative());
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::complex<double> RatFunc::eval(std::complex<double> t0) const {
    return eval_c(num_, t0) / eval_c(den_, t0);
}

std::string RatFunc::str() const {
    if (is_polynomial()) return to_string(num_);
    std::string n = to_string(num_);
    if (num_.degree() > 0) n = "(" + n + ")";
    return n + "/(" + to_string(den_) + ")";
}

std::string to_string(const RatFunc& f) { return f.str(); }

}  // namespace hff
