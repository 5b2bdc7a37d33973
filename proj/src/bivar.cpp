#include "hff/bivar.hpp"

#include <sstream>
#include <vector>

namespace hff {

BivarPoly BivarPoly::constant(RatFunc c) { return monomial(0, 0, std::move(c)); }

BivarPoly BivarPoly::monomial(int i, int j, RatFunc c) {
    BivarPoly p;
    if (!c.is_zero()) p.terms_.emplace(Key{i, j}, std::move(c));
    return p;
}

int BivarPoly::total_degree() const {
    int d = kZeroPolyDegree;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
}

int BivarPoly::deg_x() const {
    int d = kZeroPolyDegree;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int BivarPoly::deg_y() const {
    int d = kZeroPolyDegree;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

RatFunc BivarPoly::coeff(int i, int j) const {
    auto it = terms_.find(Key{i, j});
    return it == terms_.end() ? RatFunc() : it->second;
}

BivarPoly BivarPoly::top_form() const {
    int d = total_degree();
    BivarPoly r;
    for (const auto& [k, c] : terms_)
        if (k.first + k.second == d) r.terms_.emplace(k, c);
    return r;
}

void BivarPoly::add_term(int i, int j, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(Key{i, j}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
    return r;
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) { return a + (-b); }

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

BivarPoly operator*(const BivarPoly& a, const RatFunc& s) {
    BivarPoly r;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, c * s);
    return r;
}

BivarPoly BivarPoly::substituted(const BivarPoly& px, const BivarPoly& py) const {
    // Horner in x over precomputed powers of py.
    int dx = deg_x(), dy = deg_y();
    if (dx < 0) return BivarPoly();
    std::vector<BivarPoly> ypow(static_cast<size_t>(dy) + 1);
    ypow[0] = BivarPoly::constant(RatFunc(1));
    for (int j = 1; j <= dy; ++j) ypow[static_cast<size_t>(j)] = ypow[static_cast<size_t>(j - 1)] * py;

    BivarPoly acc;
    for (int i = dx; i >= 0; --i) {
        BivarPoly ci;  // coefficient of x^i, evaluated at py
        for (const auto& [k, c] : terms_)
            if (k.first == i) ci += ypow[static_cast<size_t>(k.second)] * c;
        acc = acc * px + ci;
    }
    return acc;
}

RatFunc BivarPoly::eval(const RatFunc& x, const RatFunc& y) const {
    int dx = deg_x(), dy = deg_y();
    if (dx < 0) return RatFunc();
    std::vector<RatFunc> ypow(static_cast<size_t>(dy) + 1, RatFunc(1));
    for (int j = 1; j <= dy; ++j) ypow[static_cast<size_t>(j)] = ypow[static_cast<size_t>(j - 1)] * y;
    RatFunc acc;
    for (int i = dx; i >= 0; --i) {
        RatFunc ci;
        for (const auto& [k, c] : terms_)
            if (k.first == i) ci += ypow[static_cast<size_t>(k.second)] * c;
        acc = acc * x + ci;
    }
    return acc;
}

BivarPoly BivarPoly::d_dx() const {
    BivarPoly r;
    for (const auto& [k, c] : terms_)
        if (k.first > 0) r.add_term(k.first - 1, k.second, c * RatFunc(k.first));
    return r;
}

BivarPoly BivarPoly::d_dy() const {
    BivarPoly r;
    for (const auto& [k, c] : terms_)
        if (k.second > 0) r.add_term(k.first, k.second - 1, c * RatFunc(k.second));
    return r;
}

FPoly<FPoly<RatFunc>> BivarPoly::as_poly_in_x() const {
    int dx = deg_x();
    if (dx < 0) return FPoly<FPoly<RatFunc>>();
    std::vector<FPoly<RatFunc>> cs(static_cast<size_t>(dx) + 1);
    for (const auto& [k, c] : terms_)
        cs[static_cast<size_t>(k.first)] += FPoly<RatFunc>::monomial(c, k.second);
    return FPoly<FPoly<RatFunc>>(std::move(cs));
}

FPoly<FPoly<RatFunc>> BivarPoly::as_poly_in_y() const {
    int dy = deg_y();
    if (dy < 0) return FPoly<FPoly<RatFunc>>();
    std::vector<FPoly<RatFunc>> cs(static_cast<size_t>(dy) + 1);
    for (const auto& [k, c] : terms_)
        cs[static_cast<size_t>(k.second)] += FPoly<RatFunc>::monomial(c, k.first);
    return FPoly<FPoly<RatFunc>>(std::move(cs));
}

std::string BivarPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // highest total degree first, x-major within a degree
    std::vector<std::pair<Key, RatFunc>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first > b.first;
    });
    for (const auto& [k, c] : ts) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            first = false;
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        if (neg) cs = cs.substr(1);
        bool unit = (cs == "1");
        bool needs_paren = cs.find_first_of("+-/ ") != std::string::npos;
        bool has_var = k.first > 0 || k.second > 0;
        if (!unit || !has_var) out << (needs_paren ? "(" + cs + ")" : cs);
        if (!unit && has_var) out << "*";
        if (k.first > 0) {
            out << "x";
            if (k.first > 1) out << "^" << k.first;
            if (k.second > 0) out << "*";
        }
        if (k.second > 0) {
            out << "y";
            if (k.second > 1) out << "^" << k.second;
        }
    }
    return out.str();
}

std::string to_string(const BivarPoly& p) { return p.str(); }

}  // namespace hff
