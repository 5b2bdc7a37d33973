#pragma once

#include <complex>
#include <string>

#include "hff/unipoly.hpp"

namespace hff {

/// Element of the function field K = Q(t), kept reduced: gcd(num, den) = 1
/// and den monic. Equality is therefore structural.
class RatFunc {
  public:
    RatFunc() : num_(), den_(UniPoly::one()) {}
    RatFunc(int v) : num_(UniPoly(BigRat(v))), den_(UniPoly::one()) {}
    RatFunc(long v) : num_(UniPoly(BigRat(v))), den_(UniPoly::one()) {}
    RatFunc(BigRat v) : num_(UniPoly(std::move(v))), den_(UniPoly::one()) {}
    RatFunc(UniPoly p) : num_(std::move(p)), den_(UniPoly::one()) {}
    RatFunc(UniPoly num, UniPoly den);

    /// The coordinate function t itself.
    static RatFunc t() { return RatFunc(UniPoly::monomial(BigRat(1), 1)); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    /// For constants, the value as a rational number.
    BigRat constant_value() const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
    friend bool operator==(const RatFunc& a, int v) { return a == RatFunc(v); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc derivative() const;

    std::complex<double> eval(std::complex<double> t0) const;

    std::string str() const;

  private:
    UniPoly num_, den_;
};

std::string to_string(const RatFunc& f);

}  // namespace hff
