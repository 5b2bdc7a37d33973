#pragma once

#include <string>

#include "hff/ratfunc.hpp"

namespace hff {

/// Point of the affine plane over K.
struct PointK {
    RatFunc x, y;

    friend bool operator==(const PointK& a, const PointK& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const PointK& a, const PointK& b) { return !(a == b); }
};

/// Coprime homogeneous coordinates [X : Y : W] over Q[t], scaled so the
/// first nonzero entry is monic.
struct ProjPointK {
    UniPoly X, Y, W;
};

/// Clear denominators and remove the common polynomial factor.
ProjPointK homogenize(const PointK& z);

/// Standard Weil height over K = Q(t): the max degree of the coprime
/// homogeneous coordinates. Zero exactly for points with constant
/// coordinates.
long naive_height(const PointK& z);

/// Stable serialization used for orbit hashing and reports.
std::string to_string(const PointK& z);

}  // namespace hff
