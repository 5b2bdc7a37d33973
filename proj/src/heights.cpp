#include "hff/heights.hpp"

#include <sstream>

#include "hff/periodic.hpp"

namespace hff {

OrbitDegrees orbit_degrees(const RegularFamily& f, const PointK& z, int n, Direction dir,
                           long degree_cap) {
    OrbitDegrees out;
    PointK w = z;
    out.degrees.push_back(naive_height(w));
    for (int k = 1; k <= n; ++k) {
        w = dir == Direction::Forward ? f.apply(w) : f.apply_inverse(w);
        long h = naive_height(w);
        out.degrees.push_back(h);
        if (h > degree_cap) {
            out.cap_exceeded_at = k;
            break;
        }
    }
    return out;
}

namespace {

// Look for h_{n+1} = d h_n + c holding over 2k consecutive transitions;
// returns the limit of d^{-n} h_n on success.
std::optional<BigRat> detect_affine_recursion(const std::vector<long>& h, int d, int k) {
    int need = 2 * k;
    for (size_t n0 = 0; n0 + static_cast<size_t>(need) < h.size(); ++n0) {
        long c = h[n0 + 1] - static_cast<long>(d) * h[n0];
        bool ok = true;
        for (int j = 1; j < need; ++j) {
            if (h[n0 + static_cast<size_t>(j) + 1] !=
                static_cast<long>(d) * h[n0 + static_cast<size_t>(j)] + c) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        // h_n = alpha d^n + beta for n >= n0, with beta the fixed point of the recursion
        BigRat beta = rat(c, 1 - d);
        BigRat dpow(1);
        for (size_t i = 0; i < n0; ++i) dpow *= d;
        BigRat alpha = (BigRat(h[n0]) - beta) / dpow;
        // a negative slope cannot persist (degrees are nonnegative), so this
        // window is a transient, not a certificate
        if (sgn(alpha) < 0) continue;
        return alpha;
    }
    return std::nullopt;
}

HeightValue canonical_height_directed(const RegularFamily& f, const PointK& z, Direction dir,
                                      const HeightParams& params) {
    const int d = f.degree();
    const int k = params.recursion_window;
    std::vector<long> h;
    PointK w = z;
    h.push_back(naive_height(w));
    BigRat dpow(1);

    for (int n = 1; n <= params.max_iters; ++n) {
        w = dir == Direction::Forward ? f.apply(w) : f.apply_inverse(w);
        long hn = naive_height(w);
        h.push_back(hn);
        dpow *= d;
        if (hn > params.degree_cap) {
            HeightValue v;
            v.kind = HeightValue::Kind::LowerBound;
            v.lo = BigRat(hn) / dpow;
            v.hi = v.lo;
            v.cert = Certificate::Empirical;
            return v;
        }
        if (auto alpha = detect_affine_recursion(h, d, k)) {
            HeightValue v;
            v.kind = HeightValue::Kind::Exact;
            v.lo = v.hi = *alpha;
            v.cert = Certificate::CertifiedEmpirical;
            return v;
        }
    }

    // Empirical interval around d^{-N} h_N with the geometric tail factor.
    HeightValue v;
    v.kind = HeightValue::Kind::Interval;
    size_t nlast = h.size() - 1;
    BigRat center = BigRat(h[nlast]) / dpow;
    BigRat prev = nlast >= 1 ? BigRat(h[nlast - 1]) / (dpow / d) : center;
    BigRat eps = center - prev;
    if (sgn(eps) < 0) eps = -eps;
    eps *= rat(d, d - 1);
    v.lo = center - eps;
    if (sgn(v.lo) < 0) v.lo = BigRat(0);
    v.hi = center + eps;
    v.cert = Certificate::Empirical;
    return v;
}

}  // namespace

HeightValue canonical_height_plus(const RegularFamily& f, const PointK& z,
                                  const HeightParams& params) {
    return canonical_height_directed(f, z, Direction::Forward, params);
}

HeightValue canonical_height_minus(const RegularFamily& f, const PointK& z,
                                   const HeightParams& params) {
    return canonical_height_directed(f, z, Direction::Backward, params);
}

HeightValue height_sum(const HeightValue& a, const HeightValue& b) {
    HeightValue v;
    v.lo = a.lo + b.lo;
    v.hi = a.hi + b.hi;
    if (a.kind == HeightValue::Kind::LowerBound || b.kind == HeightValue::Kind::LowerBound)
        v.kind = HeightValue::Kind::LowerBound;
    else if (a.kind == HeightValue::Kind::Exact && b.kind == HeightValue::Kind::Exact)
        v.kind = HeightValue::Kind::Exact;
    else
        v.kind = HeightValue::Kind::Interval;
    v.cert = (a.cert == Certificate::CertifiedEmpirical && b.cert == Certificate::CertifiedEmpirical)
                 ? Certificate::CertifiedEmpirical
                 : Certificate::Empirical;
    return v;
}

AlphaResult arithmetic_degree(const RegularFamily& f, const PointK& z,
                              const HeightParams& params) {
    AlphaResult r;
    HeightValue hp = canonical_height_plus(f, z, params);
    if (hp.positive()) {
        r.resolved = true;
        r.value = f.degree();
        r.note = hp.kind == HeightValue::Kind::LowerBound
                     ? "degree cap exceeded; forward height bounded away from zero"
                     : "positive forward canonical height";
        return r;
    }
    PeriodicityVerdict verdict = detect_periodic(f, z, default_guard(z));
    if (verdict.status == PeriodicityVerdict::Status::Periodic) {
        r.resolved = true;
        r.value = 1;
        r.note = "periodic with period " + std::to_string(verdict.period);
        return r;
    }
    if (verdict.status == PeriodicityVerdict::Status::NotPeriodic) {
        r.resolved = true;
        r.value = f.degree();
        r.note = "degree blow-up along the orbit";
        return r;
    }
    r.resolved = false;
    r.note = "height estimate straddles zero and no exact repeat within budget";
    return r;
}

BigRat height_gap(const RegularFamily& f, const PointK& z) {
    long hf = naive_height(f.apply(z));
    long hb = naive_height(f.apply_inverse(z));
    long h0 = naive_height(z);
    int d = f.degree();
    return BigRat(hf) + BigRat(hb) - (BigRat(d) + rat(1, d)) * BigRat(h0);
}

HeightReport height_report(const RegularFamily& f, const PointK& z, const HeightParams& params) {
    HeightReport rep;
    OrbitDegrees fwd = orbit_degrees(f, z, params.max_iters, Direction::Forward, params.degree_cap);
    OrbitDegrees bwd = orbit_degrees(f, z, params.max_iters, Direction::Backward, params.degree_cap);
    rep.degrees_forward = fwd.degrees;
    rep.degrees_backward = bwd.degrees;
    rep.cap_forward = fwd.cap_exceeded_at;
    rep.cap_backward = bwd.cap_exceeded_at;
    rep.h_plus = canonical_height_plus(f, z, params);
    rep.h_minus = canonical_height_minus(f, z, params);
    rep.h_total = height_sum(rep.h_plus, rep.h_minus);
    rep.alpha = arithmetic_degree(f, z, params);
    return rep;
}

PointK random_point(std::uint64_t seed, int max_height) {
    // splitmix64 stream; independent of library RNG choices elsewhere
    auto next = [&seed]() {
        seed += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = seed;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    auto coord = [&]() {
        int deg = static_cast<int>(next() % static_cast<std::uint64_t>(max_height + 1));
        std::vector<BigRat> c(static_cast<size_t>(deg) + 1);
        for (int i = 0; i <= deg; ++i) {
            long v = static_cast<long>(next() % 7) - 3;
            if (i == deg && v == 0) v = 1;
            c[static_cast<size_t>(i)] = BigRat(v);
        }
        return RatFunc(UniPoly(std::move(c)));
    };
    return {coord(), coord()};
}

GapProbeResult height_gap_probe(const RegularFamily& f, int samples, int max_height, unsigned seed,
                               const HeightParams& params) {
    GapProbeResult out;
    out.samples = samples;
    bool first = true;
    std::vector<PointK> pts;
    pts.reserve(static_cast<size_t>(samples));
    for (int i = 0; i < samples; ++i)
        pts.push_back(random_point((static_cast<std::uint64_t>(seed) << 20) + static_cast<std::uint64_t>(i), max_height));
    for (const PointK& z : pts) {
        BigRat gap = height_gap(f, z);
        if (first || gap < out.min_gap) out.min_gap = gap;
        first = false;
    }
    out.c_emp = sgn(out.min_gap) < 0 ? BigRat(-out.min_gap) : BigRat(0);
    for (const PointK& z : pts) {
        long h = naive_height(z);
        HeightValue total =
            height_sum(canonical_height_plus(f, z, params), canonical_height_minus(f, z, params));
        BigRat deficiency = BigRat(h) - total.lo;
        if (deficiency > out.worst_deficiency) out.worst_deficiency = deficiency;
        if (deficiency > out.c_emp) {
            out.height_bound_ok = false;
            ++out.height_bound_violations;
        }
    }
    return out;
}

std::string to_string(const HeightValue& v) {
    std::ostringstream out;
    switch (v.kind) {
        case HeightValue::Kind::Exact:
            out << v.lo.get_str();
            break;
        case HeightValue::Kind::Interval:
            out << "[" << v.lo.get_str() << ", " << v.hi.get_str() << "]";
            break;
        case HeightValue::Kind::LowerBound:
            out << ">= " << v.lo.get_str();
            break;
    }
    out << (v.cert == Certificate::CertifiedEmpirical ? " (certified-empirical)" : " (empirical)");
    return out.str();
}

}  // namespace hff
