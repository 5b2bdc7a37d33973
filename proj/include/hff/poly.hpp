#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hff {

/// Degree of the zero polynomial. Sentinel standing in for -infinity; any
/// code that adds degrees must check is_zero() first.
inline constexpr int kZeroPolyDegree = -1;

/// Dense univariate polynomial over a field F (F needs +,-,*,/ and
/// comparison with F(0)). Coefficients are stored by ascending power and
/// trailing zeros are stripped, so degree() is exact.
template <class F>
class FPoly {
  public:
    FPoly() = default;
    explicit FPoly(F constant) { coef_.push_back(std::move(constant)); trim(); }
    explicit FPoly(std::vector<F> coeffs) : coef_(std::move(coeffs)) { trim(); }

    static FPoly zero() { return FPoly(); }
    static FPoly one() { return FPoly(F(1)); }
    /// c * X^k
    static FPoly monomial(F c, int k) {
        FPoly p;
        p.coef_.assign(static_cast<size_t>(k) + 1, F(0));
        p.coef_.back() = std::move(c);
        p.trim();
        return p;
    }

    bool is_zero() const { return coef_.empty(); }
    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    const std::vector<F>& coeffs() const { return coef_; }

    const F& operator[](size_t i) const {
        static const F kZero{0};
        return i < coef_.size() ? coef_[i] : kZero;
    }

    const F& leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return coef_.back();
    }

    friend bool operator==(const FPoly& a, const FPoly& b) { return a.coef_ == b.coef_; }
    friend bool operator!=(const FPoly& a, const FPoly& b) { return !(a == b); }

    FPoly operator-() const {
        FPoly r = *this;
        for (auto& c : r.coef_) c = -c;
        return r;
    }

    friend FPoly operator+(const FPoly& a, const FPoly& b) {
        FPoly r;
        r.coef_.resize(std::max(a.coef_.size(), b.coef_.size()), F(0));
        for (size_t i = 0; i < r.coef_.size(); ++i) {
            if (i < a.coef_.size()) r.coef_[i] = r.coef_[i] + a.coef_[i];
            if (i < b.coef_.size()) r.coef_[i] = r.coef_[i] + b.coef_[i];
        }
        r.trim();
        return r;
    }

    friend FPoly operator-(const FPoly& a, const FPoly& b) { return a + (-b); }

    friend FPoly operator*(const FPoly& a, const FPoly& b) {
        if (a.is_zero() || b.is_zero()) return FPoly();
        return poly_mul_impl(a, b);
    }

    friend FPoly operator*(const FPoly& a, const F& s) {
        FPoly r = a;
        for (auto& c : r.coef_) c = c * s;
        r.trim();
        return r;
    }
    friend FPoly operator*(const F& s, const FPoly& a) { return a * s; }

    FPoly& operator+=(const FPoly& o) { return *this = *this + o; }
    FPoly& operator-=(const FPoly& o) { return *this = *this - o; }
    FPoly& operator*=(const FPoly& o) { return *this = *this * o; }

    /// Division with remainder; requires b != 0.
    friend std::pair<FPoly, FPoly> divmod(const FPoly& a, const FPoly& b) {
        if (b.is_zero()) throw std::domain_error("division by zero polynomial");
        FPoly q, r = a;
        const F& lc = b.leading();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int k = r.degree() - b.degree();
            F c = r.leading() / lc;
            q += monomial(c, k);
            r -= monomial(std::move(c), k) * b;
        }
        return {q, r};
    }

    /// Exact division; throws if the remainder is nonzero.
    friend FPoly exact_div(const FPoly& a, const FPoly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
        return q;
    }

    FPoly derivative() const {
        FPoly r;
        for (size_t i = 1; i < coef_.size(); ++i)
            r.coef_.push_back(coef_[i] * F(static_cast<long>(i)));
        r.trim();
        return r;
    }

    /// Horner evaluation at a point of any ring V that mixes with F.
    template <class V>
    V eval(const V& x) const {
        V acc{0};
        for (size_t i = coef_.size(); i-- > 0;) acc = acc * x + V(coef_[i]);
        return acc;
    }

    FPoly monic() const {
        if (is_zero()) return *this;
        return *this * (F(1) / leading());
    }

    FPoly pow(unsigned e) const {
        FPoly r = one(), b = *this;
        while (e) {
            if (e & 1u) r *= b;
            b = (e >>= 1) ? b * b : b;
        }
        return r;
    }

    /// Drop all terms of degree >= n (power-series truncation).
    FPoly truncated(int n) const {
        if (n <= 0) return FPoly();
        FPoly r = *this;
        if (static_cast<int>(r.coef_.size()) > n) r.coef_.resize(static_cast<size_t>(n));
        r.trim();
        return r;
    }

    /// Substitute X -> X + a (Taylor shift), by Horner on the coefficients.
    FPoly shifted(const F& a) const {
        FPoly r;
        FPoly lin(std::vector<F>{a, F(1)});
        for (size_t i = coef_.size(); i-- > 0;) r = r * lin + FPoly(coef_[i]);
        return r;
    }

  private:
    void trim() {
        while (!coef_.empty() && coef_.back() == F(0)) coef_.pop_back();
    }

    std::vector<F> coef_;
};

/// Default schoolbook product; UniPoly overrides this via an overload found
/// by argument-dependent lookup.
template <class F>
FPoly<F> poly_mul_impl(const FPoly<F>& a, const FPoly<F>& b) {
    std::vector<F> c(static_cast<size_t>(a.degree() + b.degree()) + 1, F(0));
    for (int i = 0; i <= a.degree(); ++i) {
        if (a[static_cast<size_t>(i)] == F(0)) continue;
        for (int j = 0; j <= b.degree(); ++j)
            c[static_cast<size_t>(i + j)] =
                c[static_cast<size_t>(i + j)] + a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
    }
    return FPoly<F>(std::move(c));
}

/// Monic gcd by the Euclidean algorithm; fine over fields where coefficient
/// growth is not a concern. UniPoly uses the subresultant variant instead.
template <class F>
FPoly<F> euclid_gcd(FPoly<F> a, FPoly<F> b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace hff
