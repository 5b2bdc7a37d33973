#pragma once

// Test-only brute-force symbolic iteration, independent of the library's
// polynomial stack: dense integer-coefficient polynomials in t with
// schoolbook arithmetic, and the explicit inverse of the quadratic family.

#include <gmpxx.h>

#include <algorithm>
#include <vector>

namespace oracle {

using ZPoly = std::vector<mpz_class>;  // ascending powers of t

inline void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

inline ZPoly add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

inline ZPoly sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

inline ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

struct PointZ {
    ZPoly x, y;
};

// height of a point with polynomial coordinates: the homogenization
// [X : Y : 1] is already coprime, so the height is the max degree
inline long height(const PointZ& z) {
    return std::max<long>(0, std::max(deg(z.x), deg(z.y)));
}

// forward map (x, y) -> (y, x + y^2 + t)
inline PointZ step_plus(const PointZ& z) {
    ZPoly t = {0, 1};
    return {z.y, add(add(z.x, mul(z.y, z.y)), t)};
}

// inverse map (u, v) -> (v - u^2 - t, u)
inline PointZ step_plus_inverse(const PointZ& z) {
    ZPoly t = {0, 1};
    return {sub(sub(z.y, mul(z.x, z.x)), t), z.x};
}

inline std::vector<long> orbit_degrees_plus(int n, bool forward) {
    PointZ z{{}, {}};
    std::vector<long> out{height(z)};
    for (int k = 0; k < n; ++k) {
        z = forward ? step_plus(z) : step_plus_inverse(z);
        out.push_back(height(z));
    }
    return out;
}

}  // namespace oracle
