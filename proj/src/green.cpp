#include "hff/green.hpp"

#include <algorithm>
#include <cmath>

#include "hff/wide_complex.hpp"

namespace hff {

using cd = std::complex<double>;

EscapeData escape_data(const NumericMap& m) {
    EscapeData out;
    double radius = 2.0, strict = 2.0, tail = 0.0, global_c = 1.0;
    for (const auto& g : m.factors()) {
        if (std::holds_alternative<NumericMap::NumHenon>(g)) {
            const auto& h = std::get<NumericMap::NumHenon>(g);
            int deg = static_cast<int>(h.p.size()) - 1;
            double lead = std::abs(h.p.back());
            double minor = 0.0;
            for (size_t i = 0; i + 1 < h.p.size(); ++i) minor += std::abs(h.p[i]);
            double aabs = std::abs(h.a);
            radius = std::max(radius, 1.0 + minor + aabs);
            // thresholds making the one-step dominance estimates valid:
            //   relative error <= 1/2, |y1| >= |x1| and |y1| >= R
            double s = minor + 1.0;
            strict = std::max({strict, 1.0 + minor + aabs, 2.0 * s / lead,
                               std::pow(2.0 * std::max(1.0, aabs) / lead, 1.0 / (deg - 1)),
                               std::pow(2.0 / lead, 1.0 / (deg - 1))});
            tail += std::abs(std::log(lead)) + M_LN2 + std::log1p(aabs);
            global_c = std::max(global_c, minor + lead + aabs);
        } else {
            const auto& a = std::get<NumericMap::NumAffine>(g);
            double nf = std::abs(a.m00) + std::abs(a.m01) + std::abs(a.m10) + std::abs(a.m11);
            double nt = std::abs(a.t0) + std::abs(a.t1);
            double ni = std::abs(a.i00) + std::abs(a.i01) + std::abs(a.i10) + std::abs(a.i11);
            tail += std::log((1.0 + nf + nt) * (1.0 + ni + nt));
            strict = std::max(strict, 2.0 * ni * (1.0 + nt));
            global_c = std::max(global_c, nf + nt + 1.0);
        }
    }
    out.radius = radius;
    out.strict_radius = strict;
    out.tail_constant = std::max(M_LN2, tail) * m.degree();
    out.global_slack = std::log(global_c) + m.degree() * M_LN2;
    return out;
}

double escape_radius(const RegularFamily& f, cd lambda0) {
    NumericMap m = f.specialize(lambda0);
    double radius = 2.0;
    for (const auto& g : m.factors()) {
        if (!std::holds_alternative<NumericMap::NumHenon>(g)) continue;
        const auto& h = std::get<NumericMap::NumHenon>(g);
        double minor = 0.0;
        for (size_t i = 0; i + 1 < h.p.size(); ++i) minor += std::abs(h.p[i]);
        radius = std::max(radius, 1.0 + minor + std::abs(h.a));
    }
    return radius;
}

GreenValue green_plus(const NumericMap& m, cd x, cd y, const EscapeParams& params) {
    EscapeData data = escape_data(m);
    const double tail = params.tail_constant > 0.0 ? params.tail_constant : data.tail_constant;
    const double d = static_cast<double>(m.degree());
    const double log_strict = std::log(data.strict_radius);

    WideComplex wx(x), wy(y);
    double dpow = 1.0;  // d^-n
    GreenValue out;
    for (int n = 0; n <= params.max_iter; ++n) {
        double lx = wx.is_zero() ? -1e300 : wx.log_abs();
        double ly = wy.is_zero() ? -1e300 : wy.log_abs();
        bool dominant = ly >= lx && ly >= log_strict;
        double tail_bound = tail * dpow / (d - 1.0);
        if (dominant && (tail_bound <= params.target_eps || n == params.max_iter ||
                         wy.e > (1L << 52))) {
            out.g = dpow * std::max(ly, 0.0);
            out.err = tail_bound + 1e-13 * (1.0 + std::abs(out.g));
            out.flag = CellFlag::Converged;
            return out;
        }
        if (n == params.max_iter) break;
        if (wx.e > (1L << 60) || wy.e > (1L << 60)) break;  // runaway without dominance
        auto [nx, ny] = m.apply(wx, wy);
        wx = nx;
        wy = ny;
        dpow /= d;
    }
    // Orbit not certified escaping within the budget: G(z) = d^-M G(f^M z)
    // and G <= log+ |.| + slack/(d-1) everywhere.
    double lmax = std::max({wx.is_zero() ? 0.0 : wx.log_abs(), wy.is_zero() ? 0.0 : wy.log_abs(), 0.0});
    out.g = 0.0;
    out.err = dpow * (std::max(lmax, std::log(data.strict_radius)) + data.global_slack / (d - 1.0));
    out.flag = CellFlag::Truncated;
    return out;
}

}  // namespace hff
