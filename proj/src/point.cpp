#include "hff/point.hpp"

namespace hff {

ProjPointK homogenize(const PointK& z) {
    // common denominator W = lcm(den x, den y)
    const UniPoly &bx = z.x.den(), &by = z.y.den();
    UniPoly g = poly_gcd(bx, by);
    UniPoly W = bx * exact_div(by, g);
    UniPoly X = z.x.num() * exact_div(by, g);
    UniPoly Y = z.y.num() * exact_div(bx, g);

    // gcd(X, W) first: it is constant whenever the denominators were trivial
    UniPoly common = poly_gcd(poly_gcd(X, W), Y);
    if (common.degree() > 0) {
        X = exact_div(X, common);
        Y = exact_div(Y, common);
        W = exact_div(W, common);
    }
    const UniPoly* first = !X.is_zero() ? &X : (!Y.is_zero() ? &Y : &W);
    BigRat scale = BigRat(1) / first->leading();
    return {X * scale, Y * scale, W * scale};
}

long naive_height(const PointK& z) {
    ProjPointK p = homogenize(z);
    long h = 0;
    h = std::max<long>(h, p.X.degree());
    h = std::max<long>(h, p.Y.degree());
    h = std::max<long>(h, p.W.degree());
    return h;
}

std::string to_string(const PointK& z) { return "(" + z.x.str() + ", " + z.y.str() + ")"; }

}  // namespace hff
