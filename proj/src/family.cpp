#include "hff/family.hpp"

#include <sstream>

#include "hff/numpoly.hpp"

namespace hff {

AffineFactor affine_inverse(const AffineFactor& g) {
    RatFunc det = g.det();
    if (det.is_zero()) throw Error(Errc::NotRegular, "affine factor with zero determinant");
    RatFunc i00 = g.m11 / det, i01 = -g.m01 / det;
    RatFunc i10 = -g.m10 / det, i11 = g.m00 / det;
    // inverse map: w -> M^{-1}(w - t)
    RatFunc t0 = -(i00 * g.t0 + i01 * g.t1);
    RatFunc t1 = -(i10 * g.t0 + i11 * g.t1);
    return {i00, i01, i10, i11, t0, t1};
}

namespace {

// image of (P, Q) under one factor, symbolically
std::pair<BivarPoly, BivarPoly> push_through(const Factor& g, const BivarPoly& P,
                                             const BivarPoly& Q) {
    if (std::holds_alternative<HenonFactor>(g)) {
        const auto& h = std::get<HenonFactor>(g);
        BivarPoly py = BivarPoly::constant(h.p.back());
        for (size_t i = h.p.size() - 1; i-- > 0;) py = py * Q + BivarPoly::constant(h.p[i]);
        return {Q * h.a, P + py};
    }
    const auto& m = std::get<AffineFactor>(g);
    return {P * m.m00 + Q * m.m01 + BivarPoly::constant(m.t0),
            P * m.m10 + Q * m.m11 + BivarPoly::constant(m.t1)};
}

Factor factor_inverse(const Factor& g) {
    if (std::holds_alternative<AffineFactor>(g))
        return affine_inverse(std::get<AffineFactor>(g));
    return g;  // Henon factors invert structurally, see apply_inverse
}

// Henon inverse, symbolically: (u, v) -> (v - p(u/a), u/a)
std::pair<BivarPoly, BivarPoly> push_through_henon_inverse(const HenonFactor& h,
                                                           const BivarPoly& U,
                                                           const BivarPoly& V) {
    BivarPoly y0 = U * (RatFunc(1) / h.a);
    BivarPoly py = BivarPoly::constant(h.p.back());
    for (size_t i = h.p.size() - 1; i-- > 0;) py = py * y0 + BivarPoly::constant(h.p[i]);
    return {V - py, y0};
}

void collect_bad(const RatFunc& f, std::vector<UniPoly>& out, bool numerator_too) {
    if (numerator_too && f.num().degree() > 0) out.push_back(f.num());
    if (f.den().degree() > 0) out.push_back(f.den());
}

}  // namespace

RegularFamily RegularFamily::compose(std::vector<Factor> factors) {
    if (factors.empty()) throw Error(Errc::NotRegular, "empty factor list");
    RegularFamily f;
    f.d_ = 1;
    bool has_henon = false;
    std::vector<UniPoly> bad;
    for (const Factor& g : factors) {
        if (std::holds_alternative<HenonFactor>(g)) {
            const auto& h = std::get<HenonFactor>(g);
            if (h.a.is_zero()) throw Error(Errc::NotRegular, "henon factor with a = 0");
            if (h.p.size() < 3 || h.p.back().is_zero())
                throw Error(Errc::NotRegular, "henon factor needs deg p >= 2 with nonzero leading coefficient");
            has_henon = true;
            f.d_ *= h.degree();
            collect_bad(h.a, bad, true);
            collect_bad(h.p.back(), bad, true);
            for (const auto& c : h.p) collect_bad(c, bad, false);
        } else {
            const auto& m = std::get<AffineFactor>(g);
            RatFunc det = m.det();
            if (det.is_zero()) throw Error(Errc::NotRegular, "affine factor with zero determinant");
            collect_bad(det, bad, true);
            for (const RatFunc* c : {&m.m00, &m.m01, &m.m10, &m.m11, &m.t0, &m.t1})
                collect_bad(*c, bad, false);
        }
    }
    if (!has_henon || f.d_ < 2)
        throw Error(Errc::NotRegular, "composition is affine (degree < 2)");

    f.factors_ = std::move(factors);

    BivarPoly X = BivarPoly::var_x(), Y = BivarPoly::var_y();
    BivarPoly P = X, Q = Y;
    for (const Factor& g : f.factors_) std::tie(P, Q) = push_through(g, P, Q);
    f.p_ = std::move(P);
    f.q_ = std::move(Q);

    BivarPoly Pi = X, Qi = Y;
    for (size_t i = f.factors_.size(); i-- > 0;) {
        const Factor& g = f.factors_[i];
        if (std::holds_alternative<HenonFactor>(g))
            std::tie(Pi, Qi) = push_through_henon_inverse(std::get<HenonFactor>(g), Pi, Qi);
        else
            std::tie(Pi, Qi) = push_through(factor_inverse(g), Pi, Qi);
    }
    f.pinv_ = std::move(Pi);
    f.qinv_ = std::move(Qi);

    UniPoly prod = UniPoly::one();
    for (const auto& b : bad) prod = prod * b;
    f.bad_poly_ = squarefree_part(prod);
    if (f.bad_poly_.degree() > 0) f.bad_roots_ = complex_roots(f.bad_poly_);
    return f;
}

PointK RegularFamily::apply(const PointK& z) const {
    RatFunc x = z.x, y = z.y;
    for (const Factor& g : factors_) {
        if (std::holds_alternative<HenonFactor>(g)) {
            const auto& h = std::get<HenonFactor>(g);
            RatFunc py = h.p.back();
            for (size_t i = h.p.size() - 1; i-- > 0;) py = py * y + h.p[i];
            RatFunc nx = h.a * y;
            y = x + py;
            x = std::move(nx);
        } else {
            const auto& m = std::get<AffineFactor>(g);
            RatFunc nx = m.m00 * x + m.m01 * y + m.t0;
            RatFunc ny = m.m10 * x + m.m11 * y + m.t1;
            x = std::move(nx);
            y = std::move(ny);
        }
    }
    return {x, y};
}

PointK RegularFamily::apply_inverse(const PointK& z) const {
    RatFunc x = z.x, y = z.y;
    for (size_t i = factors_.size(); i-- > 0;) {
        const Factor& g = factors_[i];
        if (std::holds_alternative<HenonFactor>(g)) {
            const auto& h = std::get<HenonFactor>(g);
            RatFunc y0 = x / h.a;
            RatFunc py = h.p.back();
            for (size_t k = h.p.size() - 1; k-- > 0;) py = py * y0 + h.p[k];
            x = y - py;
            y = std::move(y0);
        } else {
            AffineFactor inv = affine_inverse(std::get<AffineFactor>(g));
            RatFunc nx = inv.m00 * x + inv.m01 * y + inv.t0;
            RatFunc ny = inv.m10 * x + inv.m11 * y + inv.t1;
            x = std::move(nx);
            y = std::move(ny);
        }
    }
    return {x, y};
}

PointK RegularFamily::iterate(const PointK& z, long n) const {
    PointK w = z;
    for (long i = 0; i < (n < 0 ? -n : n); ++i) w = n < 0 ? apply_inverse(w) : apply(w);
    return w;
}

std::pair<BivarPoly, BivarPoly> RegularFamily::iterate_components(int n) const {
    BivarPoly P = BivarPoly::var_x(), Q = BivarPoly::var_y();
    for (int k = 0; k < n; ++k) {
        BivarPoly np = p_.substituted(P, Q);
        BivarPoly nq = q_.substituted(P, Q);
        P = std::move(np);
        Q = std::move(nq);
    }
    return {P, Q};
}

Mat2 RegularFamily::jacobian(const PointK& z) const {
    Mat2 j{RatFunc(1), RatFunc(0), RatFunc(0), RatFunc(1)};
    RatFunc x = z.x, y = z.y;
    for (const Factor& g : factors_) {
        if (std::holds_alternative<HenonFactor>(g)) {
            const auto& h = std::get<HenonFactor>(g);
            // dp/dy at y
            RatFunc dp;
            for (size_t i = h.p.size(); i-- > 1;)
                dp = dp * y + h.p[i] * RatFunc(static_cast<long>(i));
            Mat2 jg{RatFunc(0), h.a, RatFunc(1), dp};
            j = jg * j;
            RatFunc py = h.p.back();
            for (size_t i = h.p.size() - 1; i-- > 0;) py = py * y + h.p[i];
            RatFunc nx = h.a * y;
            y = x + py;
            x = std::move(nx);
        } else {
            const auto& m = std::get<AffineFactor>(g);
            Mat2 jg{m.m00, m.m01, m.m10, m.m11};
            j = jg * j;
            RatFunc nx = m.m00 * x + m.m01 * y + m.t0;
            RatFunc ny = m.m10 * x + m.m11 * y + m.t1;
            x = std::move(nx);
            y = std::move(ny);
        }
    }
    return j;
}

NumericMap RegularFamily::specialize(std::complex<double> lambda0, double tol) const {
    for (const auto& r : bad_roots_)
        if (std::abs(lambda0 - r) <= tol)
            throw Error(Errc::BadParameter, "parameter within tolerance of a bad parameter");
    NumericMap nm;
    nm.d_ = d_;
    nm.lambda_ = lambda0;
    for (const Factor& g : factors_) {
        if (std::holds_alternative<HenonFactor>(g)) {
            const auto& h = std::get<HenonFactor>(g);
            NumericMap::NumHenon nh;
            nh.a = h.a.eval(lambda0);
            for (const auto& c : h.p) nh.p.push_back(c.eval(lambda0));
            nm.factors_.emplace_back(std::move(nh));
        } else {
            const auto& m = std::get<AffineFactor>(g);
            NumericMap::NumAffine na;
            na.m00 = m.m00.eval(lambda0);
            na.m01 = m.m01.eval(lambda0);
            na.m10 = m.m10.eval(lambda0);
            na.m11 = m.m11.eval(lambda0);
            na.t0 = m.t0.eval(lambda0);
            na.t1 = m.t1.eval(lambda0);
            std::complex<double> det = na.m00 * na.m11 - na.m01 * na.m10;
            na.i00 = na.m11 / det;
            na.i01 = -na.m01 / det;
            na.i10 = -na.m10 / det;
            na.i11 = na.m00 / det;
            nm.factors_.emplace_back(std::move(na));
        }
    }
    return nm;
}

ValidationReport validate_regular(const RegularFamily& f) {
    ValidationReport rep;
    rep.degree = f.degree();
    rep.bad_params = to_string(f.bad_poly());

    const BivarPoly &p = f.px(), &q = f.qy();
    rep.expanded_degree = q.total_degree();
    auto check_pair = [&](const BivarPoly& lo, const BivarPoly& hi, bool along_y,
                          const std::string& tag) {
        int dh = hi.total_degree();
        if (dh != f.degree())
            rep.violations.push_back(tag + ": expanded degree " + std::to_string(dh) +
                                     " differs from factor-degree product " +
                                     std::to_string(f.degree()));
        if (lo.total_degree() >= dh)
            rep.violations.push_back(tag + ": first component must have strictly smaller degree");
        int axis_deg = along_y ? hi.deg_y() : hi.deg_x();
        if (axis_deg != dh)
            rep.violations.push_back(tag + (along_y ? ": deg_y q" : ": deg_x p") +
                                     " must equal the total degree");
        BivarPoly top = hi.top_form();
        if (static_cast<int>(top.terms().size()) != 1 ||
            top.coeff(along_y ? 0 : dh, along_y ? dh : 0).is_zero())
            rep.violations.push_back(tag + ": top form is not a multiple of " +
                                     (along_y ? std::string("y^d") : std::string("x^d")));
    };
    check_pair(p, q, /*along_y=*/true, "forward");
    check_pair(f.inv_qy(), f.inv_px(), /*along_y=*/false, "inverse");

    rep.ok = rep.violations.empty();
    return rep;
}

}  // namespace hff
