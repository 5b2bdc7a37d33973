#pragma once

#include <gmpxx.h>
#include <complex>
#include <string>

namespace hff {

/// Arbitrary-precision rational scalar. GMP keeps the canonical form we
/// require: gcd(|num|, den) = 1, den > 0, zero stored as 0/1.
using BigRat = mpq_class;
using BigInt = mpz_class;

inline BigRat rat(long num, long den = 1) {
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

inline BigRat rat(const BigInt& num, const BigInt& den) {
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const BigRat& q) { return sgn(q) == 0; }

inline std::string to_string(const BigRat& q) { return q.get_str(); }

inline double to_double(const BigRat& q) { return q.get_d(); }

/// Evaluation helper: rationals embed into the complex numbers.
inline std::complex<double> to_complex(const BigRat& q) {
    return {q.get_d(), 0.0};
}

}  // namespace hff
