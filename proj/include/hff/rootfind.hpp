#pragma once

#include <utility>
#include <vector>

#include "hff/bivar.hpp"
#include "hff/errors.hpp"

namespace hff {

/// All rational roots of p, exactly and completely: candidates are found as
/// simple roots modulo a prime, Hensel-lifted, reconstructed as fractions
/// and verified by exact evaluation. Completeness comes from the rational
/// root theorem bounds |num| <= |trailing coeff|, den <= |leading coeff|.
std::vector<BigRat> rational_roots(const UniPoly& p);

/// Polynomial in y over K.
using KPoly = FPoly<RatFunc>;

struct KRoots {
    std::vector<std::pair<RatFunc, int>> roots;  // root with multiplicity in the input
    KPoly residual;                              // input / product of found linear factors, monic
};

/// All roots of R in K = Q(t), with the non-K-rational residual factor.
/// Exact: specialize at a non-degenerate rational base point, find the
/// rational roots there, Newton-lift each to a power series in (t - a), cut
/// the series back to a bounded-degree fraction and verify by exact
/// division. The degree bound D = max coefficient degree follows from
/// Gauss's lemma, so roots of the generic fiber cannot be missed.
KRoots roots_in_k(const KPoly& r);

/// Fraction-free determinant (Bareiss). T needs ring ops, is_zero() and
/// exact_div.
template <class T>
T bareiss_det(std::vector<std::vector<T>> m) {
    const size_t n = m.size();
    if (n == 0) return T(1);
    int sign = 1;
    T prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return T(0);
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    T det = m[n - 1][n - 1];
    return sign < 0 ? T(0) - det : det;
}

/// Resultant of a and b with respect to x; the result lives in K[y].
/// Throws Error(Errc::ResultantDegenerate) when the resultant vanishes
/// identically.
KPoly resultant_x(const BivarPoly& a, const BivarPoly& b);

}  // namespace hff
