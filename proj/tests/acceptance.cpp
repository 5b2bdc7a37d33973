// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected values come from the independent oracle in
// oracle_poly.hpp or from closed forms, never from the code under test.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hff/green.hpp"
#include "hff/heights.hpp"
#include "hff/periodic.hpp"
#include "oracle_poly.hpp"

using namespace hff;
using cd = std::complex<double>;

namespace {

RatFunc t() { return RatFunc::t(); }

RegularFamily fam_plus() {
    return RegularFamily::compose({HenonFactor{RatFunc(1), {t(), RatFunc(0), RatFunc(1)}}});
}

RegularFamily fam_minus() {
    return RegularFamily::compose({HenonFactor{RatFunc(1), {-(t() * t()), RatFunc(0), RatFunc(1)}}});
}

const PointK kOrigin{RatFunc(0), RatFunc(0)};

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::vector<int> g_alpha_values;  // collected for criterion 8
int g_alpha_degree_bound = 1;

// ---------------------------------------------------------------------- 1
Outcome degree_growth_oracle() {
    Outcome o;
    auto oracle_fwd = oracle::orbit_degrees_plus(8, true);
    o.require(oracle_fwd == std::vector<long>{0, 1, 2, 4, 8, 16, 32, 64, 128},
              "oracle disagrees with the frozen sequence");

    RegularFamily f = fam_plus();
    OrbitDegrees got = orbit_degrees(f, kOrigin, 8, Direction::Forward);
    o.require(got.degrees == oracle_fwd, "orbit_degrees deviates from the oracle");

    HeightValue hp = canonical_height_plus(f, kOrigin);
    o.require(hp.kind == HeightValue::Kind::Exact && hp.lo == rat(1, 2),
              "forward canonical height is not exactly 1/2");
    o.require(hp.cert == Certificate::CertifiedEmpirical, "certificate missing");
    return o;
}

// ---------------------------------------------------------------------- 2
Outcome periodicity_height_witnesses() {
    Outcome o;
    RegularFamily g = fam_minus();

    NonIsoCertificate cert = nonisotriviality_certificate(g);
    bool trace_2t = cert.witness_trace == t() * RatFunc(2) || cert.witness_trace == t() * RatFunc(-2);
    o.require(cert.certified && trace_2t, "non-isotriviality witness of trace +-2t not found");

    for (const PointK& z : {PointK{t(), t()}, PointK{-t(), -t()}}) {
        PeriodicityVerdict v = detect_periodic(g, z, 16);
        o.require(v.status == PeriodicityVerdict::Status::Periodic && v.period == 1,
                  "fixed point not Periodic(1)");
        HeightValue total =
            height_sum(canonical_height_plus(g, z), canonical_height_minus(g, z));
        o.require(total.known_zero(), "canonical height of a fixed point is not exactly 0");
        AlphaResult a = arithmetic_degree(g, z);
        o.require(a.resolved && a.value == 1, "alpha of a periodic point is not 1");
        if (a.resolved) g_alpha_values.push_back(a.value);
    }

    PeriodicityVerdict nv = detect_periodic(g, kOrigin, 16);
    o.require(nv.status == PeriodicityVerdict::Status::NotPeriodic, "(0,0) not refuted");
    HeightValue hp = canonical_height_plus(g, kOrigin);
    o.require(hp.positive(), "(0,0) forward height not positive");
    AlphaResult a = arithmetic_degree(g, kOrigin);
    o.require(a.resolved && a.value == 2, "alpha of the escaping point is not 2");
    if (a.resolved) g_alpha_values.push_back(a.value);
    return o;
}

// ---------------------------------------------------------------------- 3
Outcome height_equals_mass() {
    Outcome o;
    std::vector<ChartSpec> charts(2);
    charts[0].center = {0.0, 0.0};
    charts[0].halfwidth = 8.0;
    charts[0].resolution = 200;
    charts[1].at_infinity = true;
    charts[1].halfwidth = 0.125;
    charts[1].resolution = 200;

    RegularFamily f = fam_plus();
    std::vector<GreenGrid> grids;
    for (const ChartSpec& c : charts) grids.push_back(green_marked(f, kOrigin, c, {}));
    mark_partition(grids);
    std::vector<double> masses, errs;
    for (const GreenGrid& g : grids) {
        MassReport m = bif_mass(g);
        masses.push_back(m.mass);
        errs.push_back(m.err);
    }
    double total = pairwise_sum(masses);
    std::ostringstream detail;
    detail << "mass=" << total << " vs 1/2";
    o.require(std::abs(total - 0.5) <= 0.05, "total mass off the symbolic 1/2 by more than 10%: " +
                                                 detail.str());

    RegularFamily g = fam_minus();
    std::vector<GreenGrid> fixed_grids;
    for (const ChartSpec& c : charts) fixed_grids.push_back(green_marked(g, {t(), t()}, c, {}));
    mark_partition(fixed_grids);
    for (const GreenGrid& grid : fixed_grids) {
        MassReport m = bif_mass(grid);
        o.require(std::abs(m.mass) <= m.err + 1e-12, "fixed-point mass exceeds its error bound");
    }
    if (o.pass) o.detail = detail.str();
    return o;
}

// ---------------------------------------------------------------------- 4
Outcome height_inequality() {
    Outcome o;
    std::vector<RegularFamily> families;
    families.push_back(fam_plus());
    families.push_back(fam_minus());
    families.push_back(RegularFamily::compose(
        {HenonFactor{RatFunc(-1), {RatFunc(2), t(), RatFunc(1)}}}));  // a=-1, p=y^2+t y+2
    {
        AffineFactor aff;
        aff.m00 = RatFunc(1);
        aff.m01 = RatFunc(0);
        aff.m10 = RatFunc(2);
        aff.m11 = RatFunc(1);
        aff.t0 = RatFunc(1);
        aff.t1 = RatFunc(-1);
        families.push_back(RegularFamily::compose(
            {HenonFactor{RatFunc(1), {-t(), RatFunc(1), RatFunc(1)}}, aff}));
    }
    families.push_back(RegularFamily::compose(
        {HenonFactor{RatFunc(1), {t(), RatFunc(0), RatFunc(0), RatFunc(1)}}}));  // d = 3

    unsigned seed = 20240;
    for (size_t fi = 0; fi < families.size(); ++fi) {
        const RegularFamily& f = families[fi];
        GapProbeResult probe = height_gap_probe(f, 200, 4, seed + static_cast<unsigned>(fi));
        std::ostringstream tag;
        tag << "family " << fi << " (d=" << f.degree() << ", C_emp=" << probe.c_emp.get_str() << ")";
        o.require(probe.samples == 200, tag.str() + ": sample size");
        // C_emp is finite by construction; re-verify the gap bound explicitly
        for (int i = 0; i < 200; ++i) {
            PointK z = random_point((static_cast<std::uint64_t>(seed + fi) << 20) + i, 4);
            if (!(height_gap(f, z) >= -probe.c_emp)) {
                o.require(false, tag.str() + ": gap below -C_emp");
                break;
            }
        }
        o.require(probe.height_bound_ok,
                  tag.str() + ": naive height exceeds canonical height + C_emp (" +
                      std::to_string(probe.height_bound_violations) + " violations)");
        // collect alpha classifications for criterion 8 on a light subsample
        for (int i = 0; i < 10; ++i) {
            PointK z = random_point((static_cast<std::uint64_t>(seed + fi) << 20) + i, 2);
            AlphaResult a = arithmetic_degree(f, z);
            if (a.resolved) {
                g_alpha_values.push_back(a.value);
                if (a.value != 1 && a.value != f.degree())
                    o.require(false, tag.str() + ": alpha outside {1, d}");
            }
        }
        g_alpha_degree_bound = std::max(g_alpha_degree_bound, f.degree());
    }
    return o;
}

// ---------------------------------------------------------------------- 5
Outcome functional_equations() {
    Outcome o;
    RegularFamily f = fam_plus();
    const int d = f.degree();
    int certified_pairs = 0;
    for (int i = 0; i < 50; ++i) {
        PointK z = random_point(52000 + static_cast<std::uint64_t>(i), 3);
        HeightValue h0p = canonical_height_plus(f, z);
        HeightValue h1p = canonical_height_plus(f, f.apply(z));
        if (h0p.kind == HeightValue::Kind::Exact && h1p.kind == HeightValue::Kind::Exact) {
            ++certified_pairs;
            if (h1p.lo != BigRat(d) * h0p.lo) {
                o.require(false, "forward functional equation fails at sample " + std::to_string(i));
                break;
            }
        }
        HeightValue h0m = canonical_height_minus(f, z);
        HeightValue h1m = canonical_height_minus(f, f.apply(z));
        if (h0m.kind == HeightValue::Kind::Exact && h1m.kind == HeightValue::Kind::Exact) {
            if (BigRat(d) * h1m.lo != h0m.lo) {
                o.require(false, "backward functional equation fails at sample " + std::to_string(i));
                break;
            }
        }
    }
    o.require(certified_pairs >= 40, "too few certified samples: " + std::to_string(certified_pairs));

    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    int escaping = 0, tried = 0;
    while (escaping < 1000 && tried < 8000) {
        ++tried;
        cd lambda(u(rng), u(rng));
        NumericMap nm = f.specialize(lambda);
        cd x(u(rng), u(rng)), y(u(rng), u(rng));
        GreenValue gz = green_plus(nm, x, y, {});
        if (gz.g <= 0.0) continue;
        ++escaping;
        auto [fx, fy] = nm.apply(x, y);
        GreenValue gf = green_plus(nm, fx, fy, {});
        double err_budget = 2.0 * (gf.err + d * gz.err) + 1e-12;
        if (std::abs(gf.g - d * gz.g) > err_budget) {
            o.require(false, "numeric functional equation out of bounds");
            break;
        }
    }
    o.require(escaping == 1000, "could not collect 1000 escaping samples");
    return o;
}

// ---------------------------------------------------------------------- 6
Outcome laplacian_calibration() {
    Outcome o;
    auto make_grid = [](cd center, double hw, int res) {
        GreenGrid g;
        g.chart.center = center;
        g.chart.halfwidth = hw;
        g.chart.resolution = res;
        g.cells.assign(static_cast<size_t>(res) * res, GreenValue{});
        g.claimed.assign(g.cells.size(), 1);
        for (int row = 0; row < res; ++row)
            for (int col = 0; col < res; ++col) {
                cd p = g.cell_param(row, col);
                g.cells[static_cast<size_t>(row) * res + col] = {std::log(std::abs(p)), 0.0,
                                                                 CellFlag::Converged};
            }
        return g;
    };
    MassReport inside = bif_mass(make_grid({0.0, 0.0}, 2.0, 200));
    o.require(std::abs(inside.mass - 1.0) <= 0.02,
              "interior pole mass " + std::to_string(inside.mass) + " not within 2% of 1");
    MassReport outside = bif_mass(make_grid({5.0, 0.0}, 2.0, 200));
    o.require(std::abs(outside.mass) <= std::max(outside.err, 1e-5),
              "harmonic grid mass " + std::to_string(outside.mass) + " above the discretization bound");
    return o;
}

// ---------------------------------------------------------------------- 7
Outcome exact_arithmetic_suite() {
    Outcome o;
    long cases = 0;
    std::mt19937 rng(20401);
    std::uniform_int_distribution<int> dc(-6, 6);

    auto rand_poly = [&](int maxdeg) {
        std::uniform_int_distribution<int> dd(0, maxdeg);
        int deg = dd(rng);
        std::vector<BigRat> c(static_cast<size_t>(deg) + 1);
        for (int i = 0; i <= deg; ++i) c[static_cast<size_t>(i)] = BigRat(dc(rng));
        if (is_zero(c.back())) c.back() = BigRat(1);
        return UniPoly(std::move(c));
    };

    // gcd and normalization invariants
    for (int i = 0; i < 4000 && o.pass; ++i) {
        int maxdeg = i % 20 == 0 ? 30 : 7;
        UniPoly g = rand_poly(4), a = g * rand_poly(maxdeg), b = g * rand_poly(maxdeg);
        UniPoly d = poly_gcd(a, b);
        ++cases;
        if (d.is_zero() || d.leading() != 1 || !(exact_div(a, d) * d == a) ||
            !(exact_div(b, d) * d == b) || !(poly_gcd(d, g) == g.monic()))
            o.require(false, "gcd invariant failed at case " + std::to_string(i));
    }
    // field arithmetic exactness
    for (int i = 0; i < 3000 && o.pass; ++i) {
        RatFunc a(rand_poly(4), rand_poly(3));
        RatFunc b(rand_poly(4), rand_poly(3));
        ++cases;
        if (!((a + b) - b == a)) o.require(false, "additive round trip failed");
        if (!b.is_zero() && !((a * b) / b == a)) o.require(false, "multiplicative round trip failed");
    }
    // apply / apply_inverse round trips
    RegularFamily fams[] = {fam_plus(), fam_minus(),
                            RegularFamily::compose({HenonFactor{
                                RatFunc(2), {t(), RatFunc(-1), RatFunc(0), RatFunc(1)}}})};
    for (int i = 0; i < 900 && o.pass; ++i) {
        const RegularFamily& f = fams[i % 3];
        PointK z = random_point(700000 + static_cast<std::uint64_t>(i), 5);
        ++cases;
        if (!(f.apply_inverse(f.apply(z)) == z) || !(f.apply(f.apply_inverse(z)) == z))
            o.require(false, "automorphism round trip failed at case " + std::to_string(i));
    }
    // conjugation invariance of cycle traces
    std::uniform_int_distribution<int> dm(-2, 2);
    for (int i = 0; i < 2200 && o.pass; ++i) {
        AffineFactor aff;
        aff.m00 = RatFunc(1 + std::abs(dm(rng)));
        aff.m01 = RatFunc(dm(rng));
        aff.m10 = RatFunc(0);
        aff.m11 = RatFunc(1);
        aff.t0 = RatFunc(dm(rng));
        aff.t1 = RatFunc(dm(rng));
        AffineFactor inv = affine_inverse(aff);
        RegularFamily g = fam_minus();
        std::vector<Factor> conj;
        conj.emplace_back(aff);
        for (const Factor& fac : g.factors()) conj.push_back(fac);
        conj.emplace_back(inv);
        RegularFamily gc = RegularFamily::compose(std::move(conj));
        RatFunc x = inv.m00 * t() + inv.m01 * t() + inv.t0;
        RatFunc y = inv.m10 * t() + inv.m11 * t() + inv.t1;
        ++cases;
        CycleData c = cycle_multiplier(gc, {{x, y}});
        if (!(c.multiplier_trace == t() * RatFunc(2)))
            o.require(false, "conjugated trace drifted at case " + std::to_string(i));
    }
    o.require(cases >= 10000, "only " + std::to_string(cases) + " randomized cases ran");
    if (o.pass) o.detail = std::to_string(cases) + " randomized cases";
    return o;
}

// ---------------------------------------------------------------------- 8
Outcome alpha_classification() {
    Outcome o;
    o.require(!g_alpha_values.empty(), "no alpha values collected");
    for (int a : g_alpha_values)
        o.require(a == 1 || (a >= 2 && a <= g_alpha_degree_bound),
                  "alpha value " + std::to_string(a) + " outside {1, d}");
    if (o.pass)
        o.detail = std::to_string(g_alpha_values.size()) + " resolved values, all in {1, d}";
    return o;
}

struct Criterion {
    const char* name;
    std::function<Outcome()> fn;
    double budget_seconds;  // 0: no runtime requirement
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"degree-growth oracle and canonical height 1/2", degree_growth_oracle, 5.0},
        {"height-zero / periodicity equivalence on witnesses", periodicity_height_witnesses, 0.0},
        {"canonical height equals bifurcation mass", height_equals_mass, 60.0},
        {"height-inequality probe", height_inequality, 0.0},
        {"functional equations, exact and numeric", functional_equations, 0.0},
        {"Laplacian calibration on closed-form grids", laplacian_calibration, 0.0},
        {"exact-arithmetic randomized suite", exact_arithmetic_suite, 0.0},
        {"arithmetic-degree classification", alpha_classification, 0.0},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criteria[i].budget_seconds > 0 && secs > criteria[i].budget_seconds) {
            o.pass = false;
            o.detail += (o.detail.empty() ? "" : "; ") + std::string("runtime ") +
                        std::to_string(secs) + "s exceeds " +
                        std::to_string(criteria[i].budget_seconds) + "s";
        }
        std::printf("[%s] criterion %zu: %s (%.1f s)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].name, secs, o.detail.empty() ? "" : " -- ", o.detail.c_str());
        if (!o.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}
