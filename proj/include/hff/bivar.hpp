#pragma once

#include <map>
#include <string>
#include <utility>

#include "hff/ratfunc.hpp"

namespace hff {

/// Sparse polynomial in (x, y) with coefficients in K = Q(t). Zero
/// coefficients are never stored.
class BivarPoly {
  public:
    using Key = std::pair<int, int>;  // (x-power, y-power)

    BivarPoly() = default;
    static BivarPoly constant(RatFunc c);
    static BivarPoly var_x() { return monomial(1, 0, RatFunc(1)); }
    static BivarPoly var_y() { return monomial(0, 1, RatFunc(1)); }
    static BivarPoly monomial(int i, int j, RatFunc c);

    const std::map<Key, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int total_degree() const;  // kZeroPolyDegree when zero
    int deg_x() const;
    int deg_y() const;

    /// Coefficient of x^i y^j (zero if absent).
    RatFunc coeff(int i, int j) const;

    /// The homogeneous part of top total degree.
    BivarPoly top_form() const;

    void add_term(int i, int j, const RatFunc& c);

    friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator*(const BivarPoly& a, const RatFunc& s);
    BivarPoly operator-() const;
    BivarPoly& operator+=(const BivarPoly& o) { return *this = *this + o; }
    BivarPoly& operator-=(const BivarPoly& o) { return *this = *this - o; }

    friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }

    /// Substitute x -> px, y -> py.
    BivarPoly substituted(const BivarPoly& px, const BivarPoly& py) const;

    RatFunc eval(const RatFunc& x, const RatFunc& y) const;

    BivarPoly d_dx() const;
    BivarPoly d_dy() const;

    /// View as a polynomial in x whose coefficients live in K[y].
    FPoly<FPoly<RatFunc>> as_poly_in_x() const;
    /// View as a polynomial in y whose coefficients live in K[x].
    FPoly<FPoly<RatFunc>> as_poly_in_y() const;

    std::string str() const;

  private:
    std::map<Key, RatFunc> terms_;
};

std::string to_string(const BivarPoly& p);

}  // namespace hff
