#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "hff/bivar.hpp"
#include "hff/errors.hpp"
#include "hff/point.hpp"

namespace hff {

/// Elementary factor (x, y) -> (a*y, x + p(y)) with deg p >= 2.
struct HenonFactor {
    RatFunc a;
    std::vector<RatFunc> p;  // coefficients of p by ascending power of y

    int degree() const { return static_cast<int>(p.size()) - 1; }
};

/// Invertible affine factor (x, y) -> M*(x, y) + t.
struct AffineFactor {
    RatFunc m00, m01, m10, m11;
    RatFunc t0, t1;

    RatFunc det() const { return m00 * m11 - m01 * m10; }
};

AffineFactor affine_inverse(const AffineFactor& g);

using Factor = std::variant<HenonFactor, AffineFactor>;

struct ValidationReport {
    bool ok = false;
    int degree = 0;                       // product of factor degrees
    int expanded_degree = 0;              // degree of the expanded map
    std::vector<std::string> violations;  // empty iff ok
    std::string bad_params;               // polynomial whose roots are the bad parameters
};

/// 2x2 matrix over K, for Jacobians along orbits.
struct Mat2 {
    RatFunc a, b, c, d;

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    RatFunc trace() const { return a + d; }
    RatFunc det() const { return a * d - b * c; }
};

class NumericMap;

/// Algebraic family of plane polynomial automorphisms given as a composition
/// of elementary factors, applied in list order. Immutable once composed.
class RegularFamily {
  public:
    /// Empty shell; fill it through compose. Kept public so configuration
    /// structs can hold a family by value.
    RegularFamily() = default;

    /// Assembles the family, expands (p, q) and the inverse, and collects the
    /// bad parameters. Rejects factor lists without a Henon factor (d < 2)
    /// and factors violating their shape invariants.
    static RegularFamily compose(std::vector<Factor> factors);

    int degree() const { return d_; }
    const std::vector<Factor>& factors() const { return factors_; }

    const BivarPoly& px() const { return p_; }
    const BivarPoly& qy() const { return q_; }
    const BivarPoly& inv_px() const { return pinv_; }
    const BivarPoly& inv_qy() const { return qinv_; }

    PointK apply(const PointK& z) const;
    PointK apply_inverse(const PointK& z) const;
    PointK iterate(const PointK& z, long n) const;  // n < 0 walks backwards

    /// Expanded components of the n-th iterate.
    std::pair<BivarPoly, BivarPoly> iterate_components(int n) const;

    /// Jacobian matrix of the composed map at z, by the chain rule through
    /// the factors.
    Mat2 jacobian(const PointK& z) const;

    /// Squarefree polynomial whose roots are the degenerate parameters
    /// (zeros/poles of the a's, of leading coefficients, of denominators).
    const UniPoly& bad_poly() const { return bad_poly_; }
    const std::vector<std::complex<double>>& bad_param_locations() const { return bad_roots_; }

    /// Double-precision evaluator at t = lambda0. Throws BadParameter when
    /// lambda0 is within tol of a bad parameter.
    NumericMap specialize(std::complex<double> lambda0, double tol = 1e-9) const;

  private:
    std::vector<Factor> factors_;
    int d_ = 0;
    BivarPoly p_, q_, pinv_, qinv_;
    UniPoly bad_poly_;
    std::vector<std::complex<double>> bad_roots_;
};

/// Checks the normalization the library works in: deg p < deg q = deg_y q,
/// top form of q a nonzero multiple of y^d (indeterminacy point [1:0:0]) and
/// the symmetric condition for the inverse at [0:1:0].
ValidationReport validate_regular(const RegularFamily& f);

/// Numeric specialization of a family at a fixed parameter.
class NumericMap {
  public:
    using cd = std::complex<double>;

    struct NumHenon {
        cd a;
        std::vector<cd> p;
    };
    struct NumAffine {
        cd m00, m01, m10, m11, t0, t1;
        cd i00, i01, i10, i11;  // inverse matrix
    };

    int degree() const { return d_; }
    cd parameter() const { return lambda_; }
    const std::vector<std::variant<NumHenon, NumAffine>>& factors() const { return factors_; }

    /// Works for std::complex<double> and for the wide-exponent type used by
    /// the Green-function iteration.
    template <class C>
    std::pair<C, C> apply(C x, C y) const {
        for (const auto& g : factors_) {
            if (std::holds_alternative<NumHenon>(g)) {
                const auto& h = std::get<NumHenon>(g);
                C py = C(h.p.back());
                for (size_t i = h.p.size() - 1; i-- > 0;) py = py * y + C(h.p[i]);
                C nx = y * h.a;
                y = x + py;
                x = nx;
            } else {
                const auto& m = std::get<NumAffine>(g);
                C nx = x * m.m00 + y * m.m01 + C(m.t0);
                C ny = x * m.m10 + y * m.m11 + C(m.t1);
                x = nx;
                y = ny;
            }
        }
        return {x, y};
    }

    template <class C>
    std::pair<C, C> apply_inverse(C x, C y) const {
        for (size_t i = factors_.size(); i-- > 0;) {
            const auto& g = factors_[i];
            if (std::holds_alternative<NumHenon>(g)) {
                // factor inverse: (u, v) -> (v - p(u/a), u/a)
                const auto& h = std::get<NumHenon>(g);
                C y0 = x * (1.0 / h.a);
                C py = C(h.p.back());
                for (size_t k = h.p.size() - 1; k-- > 0;) py = py * y0 + C(h.p[k]);
                x = y - py;
                y = y0;
            } else {
                const auto& m = std::get<NumAffine>(g);
                C dx = x - C(m.t0), dy = y - C(m.t1);
                C nx = dx * m.i00 + dy * m.i01;
                C ny = dx * m.i10 + dy * m.i11;
                x = nx;
                y = ny;
            }
        }
        return {x, y};
    }

  private:
    friend class RegularFamily;

    std::vector<std::variant<NumHenon, NumAffine>> factors_;
    int d_ = 0;
    cd lambda_;
};

}  // namespace hff
