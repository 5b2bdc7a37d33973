#include <algorithm>
#include <cmath>

#include "hff/green.hpp"
#include "hff/numpoly.hpp"

namespace hff {

using cd = std::complex<double>;

cd GreenGrid::cell_param(int row, int col) const {
    const int res = chart.resolution;
    double step = 2.0 * chart.halfwidth / res;
    double re = chart.center.real() - chart.halfwidth + (col + 0.5) * step;
    double im = chart.center.imag() - chart.halfwidth + (row + 0.5) * step;
    return {re, im};
}

cd GreenGrid::cell_lambda(int row, int col) const {
    cd p = cell_param(row, col);
    return chart.at_infinity ? 1.0 / p : p;
}

namespace {

struct CellContext {
    std::vector<cd> avoid;  // bad parameters and poles of the marked point
};

GreenValue eval_cell(const RegularFamily& f, const PointK& z, const GreenGrid& grid,
                     const CellContext& ctx, const EscapeParams& params, int row, int col) {
    cd param = grid.cell_param(row, col);
    if (grid.chart.at_infinity && std::abs(param) <= grid.margin)
        return {0.0, 0.0, CellFlag::NearBadParam};
    cd lambda = grid.chart.at_infinity ? 1.0 / param : param;
    for (const cd& r : ctx.avoid)
        if (std::abs(lambda - r) <= grid.margin) return {0.0, 0.0, CellFlag::NearBadParam};
    try {
        NumericMap nm = f.specialize(lambda, 1e-12);
        return green_plus(nm, z.x.eval(lambda), z.y.eval(lambda), params);
    } catch (const Error&) {
        // a cell closer to a degenerate parameter than the margin admits
        return {0.0, 0.0, CellFlag::NearBadParam};
    }
}

}  // namespace

GreenGrid green_marked(const RegularFamily& f, const PointK& z, const ChartSpec& chart,
                       const EscapeParams& params, double margin, bool parallel) {
    GreenGrid grid;
    grid.chart = chart;
    grid.margin = margin;
    const int res = chart.resolution;
    grid.cells.assign(static_cast<size_t>(res) * res, GreenValue{});
    grid.claimed.assign(grid.cells.size(), 1);

    CellContext ctx;
    ctx.avoid = f.bad_param_locations();
    for (const UniPoly* den : {&z.x.den(), &z.y.den()})
        if (den->degree() > 0)
            for (cd r : complex_roots(*den)) ctx.avoid.push_back(r);

    if (chart.at_infinity) grid.holes.push_back(cd(0.0, 0.0));
    for (const cd& r : ctx.avoid) {
        cd p = chart.at_infinity ? (std::abs(r) > 1e-12 ? 1.0 / r : cd(1e300, 0.0)) : r;
        if (std::abs(p.real() - chart.center.real()) <= chart.halfwidth &&
            std::abs(p.imag() - chart.center.imag()) <= chart.halfwidth)
            grid.holes.push_back(p);
    }

    if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (int idx = 0; idx < res * res; ++idx)
            grid.cells[static_cast<size_t>(idx)] =
                eval_cell(f, z, grid, ctx, params, idx / res, idx % res);
    } else {
        for (int idx = 0; idx < res * res; ++idx)
            grid.cells[static_cast<size_t>(idx)] =
                eval_cell(f, z, grid, ctx, params, idx / res, idx % res);
    }
    return grid;
}

namespace {

bool in_chart_region(const ChartSpec& chart, cd lambda) {
    if (chart.at_infinity) {
        if (lambda == cd(0.0, 0.0)) return false;
        cd mu = 1.0 / lambda;
        return std::abs(mu.real() - chart.center.real()) <= chart.halfwidth &&
               std::abs(mu.imag() - chart.center.imag()) <= chart.halfwidth;
    }
    return std::abs(lambda.real() - chart.center.real()) <= chart.halfwidth &&
           std::abs(lambda.imag() - chart.center.imag()) <= chart.halfwidth;
}

}  // namespace

void mark_partition(std::vector<GreenGrid>& grids) {
    for (size_t gi = 0; gi < grids.size(); ++gi) {
        GreenGrid& g = grids[gi];
        const int res = g.chart.resolution;
        for (int row = 0; row < res; ++row)
            for (int col = 0; col < res; ++col) {
                cd lambda = g.cell_lambda(row, col);
                bool taken = false;
                for (size_t gj = 0; gj < gi && !taken; ++gj)
                    taken = in_chart_region(grids[gj].chart, lambda);
                g.claimed[static_cast<size_t>(row) * res + col] = taken ? 0 : 1;
            }
    }
}

double pairwise_sum(const std::vector<double>& v) {
    // fixed-topology pairwise reduction, independent of thread count
    if (v.empty()) return 0.0;
    std::vector<double> acc = v;
    while (acc.size() > 1) {
        size_t half = (acc.size() + 1) / 2;
        for (size_t i = 0; i + half < acc.size(); ++i) acc[i] += acc[i + half];
        acc.resize(half);
    }
    return acc[0];
}

namespace {

MassReport mass_with_stride(const GreenGrid& grid, int stride) {
    const int res = grid.chart.resolution;
    auto at = [&](int row, int col) -> const GreenValue& {
        return grid.cells[static_cast<size_t>(row) * res + col];
    };
    auto usable = [&](int row, int col) {
        return at(row, col).flag != CellFlag::NearBadParam;
    };
    std::vector<double> stencil, errs;
    long used = 0;
    for (int row = stride; row + stride < res; row += stride)
        for (int col = stride; col + stride < res; col += stride) {
            if (!grid.claimed[static_cast<size_t>(row) * res + col]) continue;
            if (!usable(row, col) || !usable(row - stride, col) || !usable(row + stride, col) ||
                !usable(row, col - stride) || !usable(row, col + stride))
                continue;
            const GreenValue &c = at(row, col), &n = at(row - stride, col), &s = at(row + stride, col),
                             &w = at(row, col - stride), &e = at(row, col + stride);
            stencil.push_back(n.g + s.g + w.g + e.g - 4.0 * c.g);
            errs.push_back(n.err + s.err + w.err + e.err + 4.0 * c.err);
            ++used;
        }
    MassReport rep;
    rep.stencil_cells = used;
    rep.mass = pairwise_sum(stencil) / (2.0 * M_PI);
    rep.err = pairwise_sum(errs) / (2.0 * M_PI);
    return rep;
}

}  // namespace

MassReport bif_mass(const GreenGrid& grid) {
    MassReport rep = mass_with_stride(grid, 1);
    if (rep.stencil_cells < 9)
        throw Error(Errc::InsufficientGrid, "fewer than 9 usable interior cells");

    // discretization estimate: compare against the stride-2 Laplacian
    if (grid.chart.resolution >= 8) {
        MassReport coarse = mass_with_stride(grid, 2);
        if (coarse.stencil_cells >= 9) rep.err += std::abs(rep.mass - coarse.mass);
    }

    const int res = grid.chart.resolution;
    std::vector<double> flux_est;
    long excluded = 0;
    for (int row = 0; row < res; ++row)
        for (int col = 0; col < res; ++col) {
            const GreenValue& c = grid.cells[static_cast<size_t>(row) * res + col];
            if (c.flag == CellFlag::NearBadParam) {
                ++excluded;
                continue;
            }
            if (grid.margin <= 0.0 || grid.holes.empty()) continue;
            // log-pole coefficient estimate on the ring around excluded holes
            cd p = grid.cell_param(row, col);
            double dist = 1e300;
            for (const cd& h : grid.holes) dist = std::min(dist, std::abs(p - h));
            bool near = dist <= 3.0 * grid.margin && dist > grid.margin;
            if (near && c.flag == CellFlag::Converged && dist < 1.0)
                flux_est.push_back(c.g / std::log(1.0 / dist));
        }
    rep.excluded_cells = excluded;
    if (!flux_est.empty()) {
        std::sort(flux_est.begin(), flux_est.end());
        rep.branch_flux = flux_est[flux_est.size() / 2];
        rep.branch_flux_residual =
            std::max(std::abs(flux_est.front() - rep.branch_flux),
                     std::abs(flux_est.back() - rep.branch_flux));
        // worst-case mass hiding inside the excluded margin, log-pole model
        rep.err += rep.branch_flux_residual;
    }
    return rep;
}

StabilityReport stability_probe(const RegularFamily& f, const PointK& z,
                                const std::vector<ChartSpec>& charts, const EscapeParams& params,
                                const StabilityTolerances& tol, const HeightParams& hparams) {
    StabilityReport rep;

    OrbitDegrees deg = orbit_degrees(f, z, hparams.max_iters, Direction::Forward, hparams.degree_cap);
    rep.degree_seq = deg.degrees;
    HeightValue hp = canonical_height_plus(f, z, hparams);
    rep.degrees_bounded = hp.known_zero();
    rep.h_plus = to_double(hp.lo) * 0.5 + to_double(hp.hi) * 0.5;
    if (hp.kind == HeightValue::Kind::LowerBound) rep.h_plus = to_double(hp.lo);
    rep.h_plus_exact = hp.kind == HeightValue::Kind::Exact;

    std::vector<GreenGrid> grids;
    grids.reserve(charts.size());
    for (const ChartSpec& c : charts) grids.push_back(green_marked(f, z, c, params));
    mark_partition(grids);

    double gmin = 1e300, gmax = -1e300, maxerr = 0.0;
    std::vector<double> masses, mass_errs, fluxes;
    for (const GreenGrid& g : grids) {
        const int res = g.chart.resolution;
        for (int i = 0; i < res * res; ++i) {
            if (!g.claimed[static_cast<size_t>(i)]) continue;
            const GreenValue& c = g.cells[static_cast<size_t>(i)];
            if (c.flag == CellFlag::NearBadParam) continue;
            gmin = std::min(gmin, c.g);
            gmax = std::max(gmax, c.g);
            maxerr = std::max(maxerr, c.err);
        }
        MassReport m = bif_mass(g);
        masses.push_back(m.mass);
        mass_errs.push_back(m.err);
        if (m.branch_flux != 0.0) fluxes.push_back(m.branch_flux);
    }
    rep.green_spread = gmax - gmin;
    rep.green_max = gmax;
    rep.green_threshold = tol.green_rel * std::max(1.0, gmax) + 2.0 * maxerr;
    rep.green_constant = rep.green_spread <= rep.green_threshold;
    rep.mass_total = pairwise_sum(masses);
    rep.mass_err = pairwise_sum(mass_errs);
    rep.branch_flux_total = pairwise_sum(fluxes);
    rep.mass_zero = std::abs(rep.mass_total) <= rep.mass_err + 1e-9;

    if (rep.h_plus_exact && rep.h_plus == 0.0)
        rep.mass_matches_height = rep.mass_zero;
    else
        rep.mass_matches_height =
            std::abs(rep.mass_total - rep.h_plus) <= tol.mass_rel * std::max(rep.h_plus, 1e-12);

    bool stable_a = rep.degrees_bounded, stable_b = rep.green_constant, stable_c = rep.mass_zero;
    if (stable_a == stable_b && stable_b == stable_c && rep.mass_matches_height)
        rep.verdict = stable_a ? StabilityReport::Verdict::ConsistentStable
                               : StabilityReport::Verdict::ConsistentUnstable;
    else
        rep.verdict = StabilityReport::Verdict::Discrepant;
    return rep;
}

}  // namespace hff
