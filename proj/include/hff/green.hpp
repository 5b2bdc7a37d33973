#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "hff/family.hpp"
#include "hff/heights.hpp"

namespace hff {

struct EscapeParams {
    int max_iter = 160;
    double target_eps = 1e-10;   // stop refining once the tail bound is below this
    double tail_constant = 0.0;  // 0: derive from the specialized family
};

enum class CellFlag : std::uint8_t { Converged = 0, Truncated = 1, NearBadParam = 2 };

struct GreenValue {
    double g = 0.0;
    double err = 0.0;
    CellFlag flag = CellFlag::Converged;
};

/// Escape geometry of a specialized family.
struct EscapeData {
    double radius = 2.0;         // documented escape radius
    double strict_radius = 2.0;  // radius used internally before closing the tail
    double tail_constant = 0.0;  // per-step log slack in the dominance region
    double global_slack = 0.0;   // one-step upper slack valid everywhere
};

EscapeData escape_data(const NumericMap& m);

/// Escape radius R(lambda0) = max over Henon factors of
/// 1 + sum of non-leading |p_j| + |a|. In the dominance region
/// |y| >= max(|x|, R) one factor step gives |y1| >= min(1, |lead|) |y|^m / 2,
/// |y1| >= |x1| and |y1| >= R; the property tests exercise this.
double escape_radius(const RegularFamily& f, std::complex<double> lambda0);

/// Escape-rate Green function at one point of one fiber, with a rigorous
/// tail bound: once the orbit is in the dominance region, stopping at step n
/// leaves at most tail_constant * d^-n / (d-1).
GreenValue green_plus(const NumericMap& m, std::complex<double> x, std::complex<double> y,
                      const EscapeParams& params);

struct ChartSpec {
    std::complex<double> center{0.0, 0.0};
    double halfwidth = 8.0;
    int resolution = 200;
    bool at_infinity = false;  // grid lives in mu = 1/t
};

struct GreenGrid {
    ChartSpec chart;
    double margin = 0.0;
    std::vector<GreenValue> cells;      // row-major resolution^2
    std::vector<std::uint8_t> claimed;  // partition mask for multi-chart sums
    std::vector<std::complex<double>> holes;  // excluded branch points, chart coordinates

    std::complex<double> cell_param(int row, int col) const;   // chart coordinate
    std::complex<double> cell_lambda(int row, int col) const;  // parameter value
};

/// lambda -> G^+_lambda(z(lambda)) sampled on a chart. Cells within margin of
/// a bad parameter, of a pole of z, or of the infinity branch are flagged
/// NearBadParam and skipped. `parallel` switches between the serial
/// reference kernel and the OpenMP one; both produce identical cells.
GreenGrid green_marked(const RegularFamily& f, const PointK& z, const ChartSpec& chart,
                       const EscapeParams& params, double margin = 0.04, bool parallel = true);

/// Marks each cell of each grid as claimed when no earlier chart's region
/// contains its parameter; keeps multi-chart masses disjoint.
void mark_partition(std::vector<GreenGrid>& grids);

struct MassReport {
    double mass = 0.0;
    double err = 0.0;
    long stencil_cells = 0;
    long excluded_cells = 0;
    double branch_flux = 0.0;           // log-pole coefficient near excluded holes
    double branch_flux_residual = 0.0;  // spread of that estimate
};

/// Total mass of dd^c G over the claimed interior cells, as the 5-point
/// Laplacian sum over 2 pi; normalization makes dd^c log|t| the unit point
/// mass. Throws InsufficientGrid below 9 usable stencils.
MassReport bif_mass(const GreenGrid& grid);

double pairwise_sum(const std::vector<double>& v);

struct StabilityTolerances {
    double green_rel = 1e-6;  // relative spread treated as "constant"
    double mass_rel = 0.10;   // relative mass-vs-height agreement
};

struct StabilityReport {
    enum class Verdict { ConsistentStable, ConsistentUnstable, Discrepant };

    bool degrees_bounded = false;
    std::vector<long> degree_seq;
    bool green_constant = false;
    double green_spread = 0.0, green_max = 0.0, green_threshold = 0.0;
    double mass_total = 0.0, mass_err = 0.0;
    bool mass_zero = false;
    double h_plus = 0.0;
    bool h_plus_exact = false;
    bool mass_matches_height = false;
    double branch_flux_total = 0.0;
    Verdict verdict = Verdict::Discrepant;
};

/// Cross-checks the three stability tests: bounded degree sequence,
/// constancy of the marked Green function over the charts, and vanishing of
/// the bifurcation mass (compared against the symbolic forward height).
StabilityReport stability_probe(const RegularFamily& f, const PointK& z,
                                const std::vector<ChartSpec>& charts, const EscapeParams& params,
                                const StabilityTolerances& tol = {},
                                const HeightParams& hparams = {});

}  // namespace hff
