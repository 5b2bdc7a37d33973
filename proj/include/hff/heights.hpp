#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hff/family.hpp"

namespace hff {

enum class Direction { Forward, Backward };

struct HeightParams {
    int max_iters = 12;        // orbit length used when no certificate appears
    long degree_cap = 4096;    // abort threshold for h(f^n z)
    int recursion_window = 3;  // consecutive steps required, plus as many verification steps
};

struct OrbitDegrees {
    std::vector<long> degrees;            // h(z), h(fz), ...
    std::optional<int> cap_exceeded_at;   // set when the last entry broke the cap
};

/// Exact degree sequence along the orbit. On a cap breach the sequence is
/// returned as far as computed, with the offending index recorded.
OrbitDegrees orbit_degrees(const RegularFamily& f, const PointK& z, int n, Direction dir,
                           long degree_cap = 4096);

enum class Certificate { CertifiedEmpirical, Empirical };

/// Canonical-height value. Exact when the affine degree recursion
/// h_{n+1} = d h_n + c was observed and verified; an interval from the
/// geometric tail bound otherwise; a bare lower bound when the degree cap
/// was exceeded.
struct HeightValue {
    enum class Kind { Exact, Interval, LowerBound };
    Kind kind = Kind::Exact;
    BigRat lo{0}, hi{0};
    Certificate cert = Certificate::Empirical;

    bool positive() const { return sgn(lo) > 0; }
    bool known_zero() const { return kind == Kind::Exact && sgn(lo) == 0; }
};

HeightValue canonical_height_plus(const RegularFamily& f, const PointK& z,
                                  const HeightParams& params = {});
HeightValue canonical_height_minus(const RegularFamily& f, const PointK& z,
                                   const HeightParams& params = {});
HeightValue height_sum(const HeightValue& a, const HeightValue& b);

struct AlphaResult {
    bool resolved = false;
    int value = 0;  // 1 or d when resolved
    std::string note;
};

/// Arithmetic degree of the orbit of z: d when the forward canonical height
/// is positive, 1 when periodicity is detected, Unresolved otherwise.
AlphaResult arithmetic_degree(const RegularFamily& f, const PointK& z,
                              const HeightParams& params = {});

/// h(fz) + h(f^-1 z) - (d + 1/d) h(z), exactly.
BigRat height_gap(const RegularFamily& f, const PointK& z);

struct HeightReport {
    std::vector<long> degrees_forward;
    std::vector<long> degrees_backward;
    std::optional<int> cap_forward, cap_backward;
    HeightValue h_plus, h_minus, h_total;
    AlphaResult alpha;
};

HeightReport height_report(const RegularFamily& f, const PointK& z,
                           const HeightParams& params = {});

struct GapProbeResult {
    int samples = 0;
    BigRat min_gap{0};
    BigRat c_emp{0};  // max(0, -min_gap)
    bool height_bound_ok = true;  // h <= canonical height + c_emp across the sample
    int height_bound_violations = 0;
    BigRat worst_deficiency{0};  // max over samples of h - lower bound of canonical height
};

/// Samples random points of height <= max_height, collects the empirical
/// constant from the height inequality gaps and cross-checks
/// h <= h_canonical + C_emp on the same sample.
GapProbeResult height_gap_probe(const RegularFamily& f, int samples, int max_height, unsigned seed,
                               const HeightParams& params = {});

/// Deterministic random point with polynomial coordinates of degree
/// <= max_height and small integer coefficients.
PointK random_point(std::uint64_t seed, int max_height);

std::string to_string(const HeightValue& v);

}  // namespace hff
