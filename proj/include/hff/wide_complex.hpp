#pragma once

#include <cmath>
#include <complex>

namespace hff {

/// Complex number with a separate power-of-two exponent: value = m * 2^e,
/// |m| kept in [1, 2). Lets escape-rate orbits run far past the double
/// range without switching to a log-only recurrence.
struct WideComplex {
    std::complex<double> m{0.0, 0.0};
    long e = 0;

    WideComplex() = default;
    WideComplex(std::complex<double> v) : m(v) { normalize(); }
    explicit WideComplex(double v) : m(v, 0.0) { normalize(); }

    bool is_zero() const { return m.real() == 0.0 && m.imag() == 0.0; }

    void normalize() {
        double a = std::abs(m);
        if (a == 0.0) {
            e = 0;
            return;
        }
        int k = std::ilogb(a);
        if (k != 0) {
            m = {std::ldexp(m.real(), -k), std::ldexp(m.imag(), -k)};
            e += k;
        }
    }

    /// log of the magnitude; -inf for zero.
    double log_abs() const {
        if (is_zero()) return -std::numeric_limits<double>::infinity();
        return std::log(std::abs(m)) + static_cast<double>(e) * M_LN2;
    }

    friend WideComplex operator*(const WideComplex& a, const WideComplex& b) {
        WideComplex r;
        r.m = a.m * b.m;
        r.e = a.e + b.e;
        r.normalize();
        return r;
    }

    friend WideComplex operator*(const WideComplex& a, std::complex<double> s) {
        WideComplex r;
        r.m = a.m * s;
        r.e = a.e;
        r.normalize();
        return r;
    }

    friend WideComplex operator+(const WideComplex& a, const WideComplex& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long delta = a.e - b.e;
        if (delta >= 108) return a;
        if (delta <= -108) return b;
        WideComplex r;
        if (delta >= 0) {
            r.m = a.m + std::complex<double>(std::ldexp(b.m.real(), static_cast<int>(-delta)),
                                             std::ldexp(b.m.imag(), static_cast<int>(-delta)));
            r.e = a.e;
        } else {
            r.m = b.m + std::complex<double>(std::ldexp(a.m.real(), static_cast<int>(delta)),
                                             std::ldexp(a.m.imag(), static_cast<int>(delta)));
            r.e = b.e;
        }
        r.normalize();
        return r;
    }

    friend WideComplex operator-(const WideComplex& a, const WideComplex& b) {
        return a + (b * std::complex<double>(-1.0, 0.0));
    }
};

}  // namespace hff
