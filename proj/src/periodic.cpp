#include "hff/periodic.hpp"

#include <algorithm>
#include <complex>
#include <set>
#include <unordered_map>

#include "hff/heights.hpp"
#include "hff/numpoly.hpp"

namespace hff {

long default_guard(const PointK& z) { return std::max<long>(16 * (naive_height(z) + 1), 64); }

PeriodicityVerdict detect_periodic(const RegularFamily& f, const PointK& z, long guard,
                                   long budget) {
    if (guard < naive_height(z))
        throw Error(Errc::Config, "periodicity guard below the height of the point");
    if (budget < 0) budget = 10 * guard + 64;

    PeriodicityVerdict v;
    v.degree_guard = guard;
    v.budget = budget;

    std::unordered_map<std::string, int> seen;
    PointK w = z;
    v.witness.push_back(w);
    seen.emplace(to_string(w), 0);
    for (long n = 1; n <= budget; ++n) {
        w = f.apply(w);
        long h = naive_height(w);
        if (h > guard) {
            v.status = PeriodicityVerdict::Status::NotPeriodic;
            v.reason = "degree-blow-up";
            v.stopped_at = static_cast<int>(n);
            v.witness.push_back(w);
            return v;
        }
        auto [it, fresh] = seen.emplace(to_string(w), static_cast<int>(n));
        if (!fresh) {
            // an automorphism repeats only through its starting point
            int first = it->second;
            int period = static_cast<int>(n) - first;
            // minimal period: check the divisors against the stored orbit
            for (int q = 1; q <= period / 2; ++q) {
                if (period % q != 0) continue;
                if (v.witness[static_cast<size_t>(first + q)] == v.witness[static_cast<size_t>(first)]) {
                    period = q;
                    break;
                }
            }
            v.status = PeriodicityVerdict::Status::Periodic;
            v.period = period;
            v.stopped_at = static_cast<int>(n);
            return v;
        }
        v.witness.push_back(w);
    }
    v.status = PeriodicityVerdict::Status::Inconclusive;
    v.stopped_at = static_cast<int>(budget);
    return v;
}

namespace {

KPoly eval_at_y(const BivarPoly& p, const RatFunc& y0) {
    // polynomial in x left after substituting y = y0
    auto in_x = p.as_poly_in_x();
    std::vector<RatFunc> cs;
    cs.reserve(in_x.coeffs().size());
    for (const auto& cy : in_x.coeffs()) {
        RatFunc acc;
        for (size_t j = cy.coeffs().size(); j-- > 0;) acc = acc * y0 + cy.coeffs()[j];
        cs.push_back(acc);
    }
    return KPoly(std::move(cs));
}

std::string residual_as_text(const KPoly& r) {
    if (r.is_zero()) return "0";
    // clear t-denominators and render as a polynomial in y and t
    UniPoly den = UniPoly::one();
    for (const auto& c : r.coeffs()) {
        UniPoly g = poly_gcd(den, c.den());
        den = den * exact_div(c.den(), g);
    }
    std::string out;
    bool first = true;
    for (size_t j = r.coeffs().size(); j-- > 0;) {
        const RatFunc& c = r.coeffs()[j];
        if (c.is_zero()) continue;
        UniPoly cj = c.num() * exact_div(den, c.den());
        std::string cs = to_string(cj);
        if (!first) out += " + ";
        first = false;
        if (j == 0) {
            out += cs;
            continue;
        }
        if (cs != "1") {
            bool paren = cs.find_first_of("+-") != std::string::npos && cs[0] != '-';
            paren = cs.find(' ') != std::string::npos;
            out += paren ? "(" + cs + ")" : cs;
            out += "*";
        }
        out += "y";
        if (j > 1) out += "^" + std::to_string(j);
    }
    return out.empty() ? "0" : out;
}

}  // namespace

FixedPointsResult fixed_points(const RegularFamily& f, int n, long iterate_bound) {
    if (n < 1) throw Error(Errc::Config, "period must be >= 1");
    long dn = 1;
    for (int i = 0; i < n; ++i) {
        dn *= f.degree();
        if (dn > iterate_bound)
            throw Error(Errc::Config, "d^n exceeds the configured resultant bound");
    }

    auto [pn, qn] = f.iterate_components(n);
    BivarPoly a = pn - BivarPoly::var_x();
    BivarPoly b = qn - BivarPoly::var_y();
    KPoly r = resultant_x(a, b);

    FixedPointsResult out;
    if (r.degree() == 0) {
        out.residual_degree = 0;
        out.residual_text = residual_as_text(r.monic());
        return out;
    }

    KRoots kr = roots_in_k(r);
    KPoly residual = kr.residual;
    for (const auto& [y0, mult] : kr.roots) {
        KPoly ax = eval_at_y(a, y0);
        KPoly bx = eval_at_y(b, y0);
        KPoly g = ax.is_zero() ? bx : (bx.is_zero() ? ax : euclid_gcd(ax, bx));
        std::vector<RatFunc> xs;
        if (g.degree() >= 1) {
            KRoots gx = roots_in_k(g);
            for (const auto& [x0, m2] : gx.roots) {
                (void)m2;
                xs.push_back(x0);
            }
        }
        bool found = false;
        for (const RatFunc& x0 : xs) {
            PointK cand{x0, y0};
            if (f.iterate(cand, n) == cand) {
                out.points.push_back(cand);
                found = true;
            }
        }
        if (!found) {
            // rational y over a non-rational x: fold the factor back into the residual
            KPoly lin(std::vector<RatFunc>{-y0, RatFunc(1)});
            for (int i = 0; i < mult; ++i) residual = residual * lin;
        }
    }
    out.residual_degree = std::max(residual.degree(), 0);
    out.residual_text = residual_as_text(residual.monic());
    std::sort(out.points.begin(), out.points.end(),
              [](const PointK& p, const PointK& q) { return to_string(p) < to_string(q); });
    return out;
}

CycleData cycle_multiplier(const RegularFamily& f, std::vector<PointK> cycle) {
    if (cycle.empty()) throw Error(Errc::NotACycle, "empty cycle");
    for (size_t i = 0; i < cycle.size(); ++i) {
        const PointK& next = cycle[(i + 1) % cycle.size()];
        if (f.apply(cycle[i]) != next)
            throw Error(Errc::NotACycle, "applying the map does not follow the cycle");
    }
    Mat2 j{RatFunc(1), RatFunc(0), RatFunc(0), RatFunc(1)};
    for (const PointK& pt : cycle) j = f.jacobian(pt) * j;
    CycleData out;
    out.points = std::move(cycle);
    out.multiplier_trace = j.trace();
    out.jacobian_det = j.det();
    return out;
}

namespace {

using cd = std::complex<double>;

struct NumJet {
    cd m00{1}, m01{0}, m10{0}, m11{1};
};

// numeric Jacobian of the composed map along with the image point
std::pair<std::pair<cd, cd>, NumJet> numeric_step(const NumericMap& nm, cd x, cd y) {
    NumJet j;
    for (const auto& g : nm.factors()) {
        if (std::holds_alternative<NumericMap::NumHenon>(g)) {
            const auto& h = std::get<NumericMap::NumHenon>(g);
            cd dp = 0.0;
            for (size_t i = h.p.size(); i-- > 1;)
                dp = dp * y + h.p[i] * static_cast<double>(i);
            NumJet jg{0.0, h.a, 1.0, dp};
            NumJet nj;
            nj.m00 = jg.m00 * j.m00 + jg.m01 * j.m10;
            nj.m01 = jg.m00 * j.m01 + jg.m01 * j.m11;
            nj.m10 = jg.m10 * j.m00 + jg.m11 * j.m10;
            nj.m11 = jg.m10 * j.m01 + jg.m11 * j.m11;
            j = nj;
            cd py = h.p.back();
            for (size_t i = h.p.size() - 1; i-- > 0;) py = py * y + h.p[i];
            cd nx = h.a * y;
            y = x + py;
            x = nx;
        } else {
            const auto& m = std::get<NumericMap::NumAffine>(g);
            NumJet nj;
            nj.m00 = m.m00 * j.m00 + m.m01 * j.m10;
            nj.m01 = m.m00 * j.m01 + m.m01 * j.m11;
            nj.m10 = m.m10 * j.m00 + m.m11 * j.m10;
            nj.m11 = m.m10 * j.m01 + m.m11 * j.m11;
            j = nj;
            cd nx = m.m00 * x + m.m01 * y + m.t0;
            cd ny = m.m10 * x + m.m11 * y + m.t1;
            x = nx;
            y = ny;
        }
    }
    return {{x, y}, j};
}

// sorted multiplier traces of the numeric fixed points of f at one parameter
std::vector<cd> numeric_trace_spectrum(const RegularFamily& f, const KPoly& resultant_y,
                                       const BivarPoly& a, cd lambda, bool& ok) {
    ok = false;
    NumericMap nm;
    try {
        nm = f.specialize(lambda);
    } catch (const Error&) {
        return {};
    }
    std::vector<cd> rc;
    for (const auto& c : resultant_y.coeffs()) rc.push_back(c.eval(lambda));
    std::vector<cd> yroots = complex_roots(std::move(rc));
    std::vector<cd> traces;
    for (cd y0 : yroots) {
        // x-candidates from the eliminated equation
        auto ax = a.as_poly_in_x();
        std::vector<cd> xc;
        for (const auto& cy : ax.coeffs()) {
            cd acc = 0.0;
            for (size_t j = cy.coeffs().size(); j-- > 0;) acc = acc * y0 + cy.coeffs()[j].eval(lambda);
            xc.push_back(acc);
        }
        for (cd x0 : complex_roots(std::move(xc))) {
            auto [img, jac] = numeric_step(nm, x0, y0);
            if (std::abs(img.first - x0) > 1e-7 || std::abs(img.second - y0) > 1e-7) continue;
            traces.push_back(jac.m00 + jac.m11);
        }
    }
    std::sort(traces.begin(), traces.end(), [](cd p, cd q) {
        if (p.real() != q.real()) return p.real() < q.real();
        return p.imag() < q.imag();
    });
    // dedupe numerically coincident fixed points
    std::vector<cd> uniq;
    for (cd t : traces)
        if (uniq.empty() || std::abs(uniq.back() - t) > 1e-8) uniq.push_back(t);
    ok = !uniq.empty();
    return uniq;
}

}  // namespace

std::vector<CycleData> cycles_among(const RegularFamily& f, const std::vector<PointK>& points) {
    std::vector<CycleData> out;
    std::set<std::string> seen;
    for (const PointK& pt : points) {
        if (seen.count(to_string(pt))) continue;
        std::vector<PointK> cycle{pt};
        seen.insert(to_string(pt));
        PointK w = f.apply(pt);
        while (w != pt) {
            seen.insert(to_string(w));
            cycle.push_back(w);
            w = f.apply(w);
        }
        out.push_back(cycle_multiplier(f, std::move(cycle)));
    }
    return out;
}

NonIsoCertificate nonisotriviality_certificate(const RegularFamily& f) {
    NonIsoCertificate cert;
    std::set<std::string> seen;
    for (int n = 1; n <= 3; ++n) {
        long dn = 1;
        bool fits = true;
        for (int i = 0; i < n; ++i) {
            dn *= f.degree();
            if (dn > 16) fits = false;
        }
        if (!fits) break;
        FixedPointsResult fps = fixed_points(f, n);
        for (const CycleData& data : cycles_among(f, fps.points)) {
            if (seen.count(to_string(data.points.front()))) continue;
            for (const PointK& cp : data.points) seen.insert(to_string(cp));
            if (!data.multiplier_trace.is_constant()) {
                cert.certified = true;
                cert.method = "cycle-trace";
                cert.witness_trace = data.multiplier_trace;
                cert.witness_period = static_cast<int>(data.points.size());
                cert.detail = "non-constant multiplier trace " + data.multiplier_trace.str() +
                              " along a cycle of period " + std::to_string(data.points.size());
                return cert;
            }
        }
    }

    // Numeric fallback: compare fixed-point multiplier spectra at two
    // parameters; the spectrum is an affine-conjugation invariant.
    auto [p1, q1] = f.iterate_components(1);
    BivarPoly a = p1 - BivarPoly::var_x();
    BivarPoly b = q1 - BivarPoly::var_y();
    KPoly r;
    try {
        r = resultant_x(a, b);
    } catch (const Error&) {
        return cert;
    }
    static const double kSamples[] = {-1.0, -4.0, 2.0, 3.0, -2.0, 5.0, 7.0, -8.0};
    std::vector<std::pair<double, std::vector<cd>>> spectra;
    for (double s : kSamples) {
        bool ok = false;
        auto spec = numeric_trace_spectrum(f, r, a, cd(s, 0.0), ok);
        if (ok) spectra.emplace_back(s, std::move(spec));
        if (spectra.size() == 2) break;
    }
    if (spectra.size() == 2) {
        const auto& s1 = spectra[0].second;
        const auto& s2 = spectra[1].second;
        double dist = 0.0;
        if (s1.size() != s2.size()) {
            dist = 1.0;
        } else {
            for (size_t i = 0; i < s1.size(); ++i) dist = std::max(dist, std::abs(s1[i] - s2[i]));
        }
        if (dist > 1e-6) {
            cert.certified = true;
            cert.method = "numeric-multiplier-spectrum";
            cert.witness_period = 1;
            cert.detail = "fixed-point multiplier spectra differ between t = " +
                          std::to_string(spectra[0].first) + " and t = " +
                          std::to_string(spectra[1].first) +
                          " (max trace gap " + std::to_string(dist) + ")";
            return cert;
        }
    }
    cert.detail = "all computed multiplier data constant across the parameter";
    return cert;
}

}  // namespace hff
