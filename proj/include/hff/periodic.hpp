#pragma once

#include <string>
#include <vector>

#include "hff/family.hpp"
#include "hff/rootfind.hpp"

namespace hff {

struct PeriodicityVerdict {
    enum class Status { Periodic, NotPeriodic, Inconclusive };
    Status status = Status::Inconclusive;
    int period = 0;               // minimal period when Periodic
    std::string reason;           // "degree-blow-up" for NotPeriodic
    int stopped_at = 0;           // iterate index where the verdict was reached
    std::vector<PointK> witness;  // orbit as far as computed
    long degree_guard = 0;
    long budget = 0;
};

long default_guard(const PointK& z);

/// Exact periodicity detection by orbit hashing. Degrees above the guard
/// refute periodicity (NotPeriodic "degree-blow-up"); a bounded orbit with
/// no repeat within the budget stays Inconclusive.
PeriodicityVerdict detect_periodic(const RegularFamily& f, const PointK& z, long guard,
                                   long budget = -1);

struct FixedPointsResult {
    std::vector<PointK> points;  // all K-rational points of period dividing n
    int residual_degree = 0;     // degree of the non-K-rational factor of R(y)
    std::string residual_text;   // that factor, denominators cleared, in y and t
};

/// K-rational points of period dividing n, by eliminating x from
/// (p_n - x, q_n - y) and finding the K-rational roots of the resultant.
/// Requires d^n <= iterate_bound.
FixedPointsResult fixed_points(const RegularFamily& f, int n, long iterate_bound = 16);

struct CycleData {
    std::vector<PointK> points;
    RatFunc multiplier_trace;
    RatFunc jacobian_det;
};

/// Jacobian product along a verified cycle; throws NotACycle otherwise.
CycleData cycle_multiplier(const RegularFamily& f, std::vector<PointK> cycle);

/// Groups periodic points into their cycles and attaches multiplier data.
std::vector<CycleData> cycles_among(const RegularFamily& f, const std::vector<PointK>& points);

struct NonIsoCertificate {
    bool certified = false;
    std::string method;  // "cycle-trace" or "numeric-multiplier-spectrum"
    RatFunc witness_trace;
    int witness_period = 0;
    std::string detail;
};

/// Sufficient non-isotriviality test: a non-constant multiplier trace along
/// a short cycle certifies, and a numeric comparison of fixed-point
/// multiplier spectra at two parameters serves as fallback. Never proves
/// isotriviality.
NonIsoCertificate nonisotriviality_certificate(const RegularFamily& f);

}  // namespace hff
