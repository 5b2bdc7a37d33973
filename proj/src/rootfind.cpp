#include "hff/rootfind.hpp"

#include <algorithm>
#include <string>

namespace hff {

// ---------------------------------------------------------------------------
// Rational roots over Q.

namespace {

using ModInt = unsigned long;

std::vector<ModInt> mod_reduce(const IntPoly& p, ModInt m) {
    std::vector<ModInt> r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = mpz_fdiv_ui(p[i].get_mpz_t(), m);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

ModInt mod_eval(const std::vector<ModInt>& p, ModInt x, ModInt m) {
    unsigned long long acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = (acc * x + p[i]) % m;
    return static_cast<ModInt>(acc);
}

std::vector<ModInt> mod_derivative(const std::vector<ModInt>& p, ModInt m) {
    std::vector<ModInt> d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back((p[i] * (i % m)) % m);
    while (!d.empty() && d.back() == 0) d.pop_back();
    return d;
}

std::vector<ModInt> mod_rem(std::vector<ModInt> a, const std::vector<ModInt>& b, ModInt m) {
    auto inv = [&](ModInt v) {
        // Fermat inverse; m is prime.
        unsigned long long base = v, acc = 1;
        ModInt e = m - 2;
        while (e) {
            if (e & 1u) acc = acc * base % m;
            base = base * base % m;
            e >>= 1;
        }
        return static_cast<ModInt>(acc);
    };
    ModInt lb = inv(b.back());
    while (a.size() >= b.size()) {
        unsigned long long c = a.back() * static_cast<unsigned long long>(lb) % m;
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            unsigned long long sub = c * b[i] % m;
            a[off + i] = static_cast<ModInt>((a[off + i] + m - sub) % m);
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.empty()) break;
    }
    return a;
}

bool mod_coprime_with_derivative(const std::vector<ModInt>& p, ModInt m) {
    std::vector<ModInt> a = p, b = mod_derivative(p, m);
    while (!b.empty()) {
        auto r = mod_rem(a, b, m);
        a = std::move(b);
        b = std::move(r);
    }
    return a.size() == 1;  // nonzero constant
}

BigInt mpz_abs_of(const BigInt& v) {
    BigInt r;
    mpz_abs(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

// n/d from residue r mod m with |n| <= nb and 0 < d <= db (needs m > 2*nb*db).
bool rational_reconstruct(const BigInt& r, const BigInt& m, const BigInt& nb, const BigInt& db,
                          BigRat& out) {
    BigInt r0 = m, r1 = r, t0 = 0, t1 = 1;
    while (mpz_abs_of(r1) > nb) {
        if (sgn(r1) == 0) return false;
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (sgn(t1) == 0 || mpz_abs_of(t1) > db) return false;
    out = rat(r1, t1);
    return true;
}

}  // namespace

std::vector<BigRat> rational_roots(const UniPoly& p_in) {
    if (p_in.is_zero()) throw Error(Errc::Internal, "rational_roots of the zero polynomial");
    std::vector<BigRat> roots;
    if (p_in.degree() == 0) return roots;

    UniPoly sf = squarefree_part(p_in);
    auto [P, scale] = to_integer_primitive(sf);
    (void)scale;
    // strip the root at zero
    size_t shift = 0;
    while (shift < P.size() && sgn(P[shift]) == 0) ++shift;
    if (shift > 0) {
        roots.emplace_back(0);
        P.erase(P.begin(), P.begin() + static_cast<long>(shift));
    }
    int d = ipoly_degree(P);
    if (d <= 0) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    if (d == 1) {
        BigRat r = rat(-P[0], P[1]);
        if (is_zero(BigRat(p_in.eval(r)))) roots.push_back(r);
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    const BigInt nb = mpz_abs_of(P[0]);
    const BigInt db = mpz_abs_of(P[static_cast<size_t>(d)]);
    BigInt target = 2 * nb * db + 1;

    static const ModInt kPrimes[] = {524287ul, 786433ul, 999983ul, 1000003ul, 1000033ul, 1048573ul};
    std::vector<ModInt> pm;
    ModInt prime = 0;
    for (ModInt q : kPrimes) {
        if (mpz_fdiv_ui(P[static_cast<size_t>(d)].get_mpz_t(), q) == 0) continue;
        pm = mod_reduce(P, q);
        if (static_cast<int>(pm.size()) - 1 != d) continue;
        if (!mod_coprime_with_derivative(pm, q)) continue;
        prime = q;
        break;
    }
    if (prime == 0) throw Error(Errc::Internal, "no usable prime for rational root finding");

    std::vector<ModInt> base_roots;
    for (ModInt r = 0; r < prime; ++r) {
        if (mod_eval(pm, r, prime) == 0) {
            base_roots.push_back(r);
            if (static_cast<int>(base_roots.size()) == d) break;
        }
    }

    UniPoly fp = from_integer(P);
    UniPoly fpd = fp.derivative();
    for (ModInt r0 : base_roots) {
        BigInt modulus(static_cast<unsigned long>(prime));
        BigInt r(static_cast<unsigned long>(r0));
        while (modulus < target) {
            modulus *= modulus;
            // Newton step: r -= P(r)/P'(r) mod modulus
            BigRat val = fp.eval(BigRat(r));
            BigRat der = fpd.eval(BigRat(r));
            BigInt vnum = val.get_num();  // denominators are 1 on integer input
            BigInt dnum = der.get_num();
            BigInt dinv;
            if (mpz_invert(dinv.get_mpz_t(), dnum.get_mpz_t(), modulus.get_mpz_t()) == 0) break;
            r = (r - vnum * dinv) % modulus;
            if (sgn(r) < 0) r += modulus;
        }
        if (modulus < target) continue;
        BigRat cand;
        if (!rational_reconstruct(r, modulus, nb, db, cand)) continue;
        if (is_zero(BigRat(p_in.eval(cand)))) roots.push_back(cand);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// ---------------------------------------------------------------------------
// Roots in K = Q(t).

namespace {

// truncated power-series helpers over Q in the local variable u
UniPoly series_mul(const UniPoly& a, const UniPoly& b, int t) { return (a * b).truncated(t); }

UniPoly series_inv(const UniPoly& a, int t) {
    BigRat c0 = a[0];
    if (is_zero(c0)) throw Error(Errc::Internal, "series inverse of a non-unit");
    UniPoly x(BigRat(1) / c0);
    int prec = 1;
    while (prec < t) {
        prec = std::min(2 * prec, t);
        UniPoly two(BigRat(2));
        x = series_mul(x, two - series_mul(a.truncated(prec), x, prec), prec);
    }
    return x.truncated(t);
}

// evaluate sum_j c[j] * y^j truncated, coefficients and y being series
UniPoly series_poly_eval(const std::vector<UniPoly>& c, const UniPoly& y, int t) {
    UniPoly acc;
    for (size_t j = c.size(); j-- > 0;) acc = series_mul(acc, y, t) + c[j].truncated(t);
    return acc;
}

int multiplicity_and_deflate(KPoly& r, const RatFunc& root) {
    KPoly lin(std::vector<RatFunc>{-root, RatFunc(1)});
    int mult = 0;
    while (true) {
        auto [q, rem] = divmod(r, lin);
        if (!rem.is_zero()) break;
        r = q;
        ++mult;
    }
    return mult;
}

}  // namespace

KRoots roots_in_k(const KPoly& r_in) {
    if (r_in.is_zero()) throw Error(Errc::Internal, "roots_in_k of the zero polynomial");
    KRoots out;
    out.residual = r_in.monic();
    if (r_in.degree() <= 0) return out;

    // Fast path: a linear polynomial has its root in plain sight.
    if (r_in.degree() == 1) {
        RatFunc root = -(r_in[0] / r_in[1]);
        int mult = multiplicity_and_deflate(out.residual, root);
        out.roots.emplace_back(std::move(root), mult);
        return out;
    }

    KPoly sf = exact_div(r_in, euclid_gcd(r_in, r_in.derivative())).monic();

    // Clear t-denominators: R_j(t) in Q[t], jointly primitive.
    UniPoly den_lcm = UniPoly::one();
    for (const auto& c : sf.coeffs()) {
        UniPoly g = poly_gcd(den_lcm, c.den());
        den_lcm = den_lcm * exact_div(c.den(), g);
    }
    std::vector<UniPoly> rj(sf.coeffs().size());
    UniPoly content;
    for (size_t j = 0; j < rj.size(); ++j) {
        const RatFunc& c = sf.coeffs()[j];
        rj[j] = c.num() * exact_div(den_lcm, c.den());
        content = poly_gcd(content, rj[j]);
    }
    if (content.degree() > 0)
        for (auto& p : rj) p = exact_div(p, content);

    int dbound = 0;
    for (const auto& p : rj) dbound = std::max(dbound, p.degree());
    const int trunc = 2 * dbound + 3;

    // Base point: leading coefficient nonzero and squarefree specialization.
    BigRat base;
    UniPoly spec;
    for (long k = 0;; ++k) {
        long v = (k % 2 == 0) ? k / 2 : -(k / 2 + 1);
        base = rat(v);
        if (is_zero(BigRat(rj.back().eval(base)))) continue;
        std::vector<BigRat> cs(rj.size());
        for (size_t j = 0; j < rj.size(); ++j) cs[j] = rj[j].eval(base);
        spec = UniPoly(std::move(cs));
        if (poly_gcd(spec, spec.derivative()).degree() == 0) break;
        if (k > 400) throw Error(Errc::Internal, "no non-degenerate base point found");
    }

    std::vector<BigRat> cand = rational_roots(spec);

    // Taylor-shift coefficients to the local variable u = t - base.
    std::vector<UniPoly> shifted(rj.size()), shifted_d;
    for (size_t j = 0; j < rj.size(); ++j) shifted[j] = rj[j].shifted(base).truncated(trunc);
    shifted_d.resize(rj.size() > 0 ? rj.size() - 1 : 0);
    for (size_t j = 1; j < rj.size(); ++j) shifted_d[j - 1] = shifted[j] * BigRat(static_cast<long>(j));

    std::vector<RatFunc> verified;
    for (const BigRat& r0 : cand) {
        // Newton lifting in Q[[u]] with doubling precision.
        UniPoly y(r0);
        int prec = 1;
        while (prec < trunc) {
            prec = std::min(2 * prec, trunc);
            UniPoly num = series_poly_eval(shifted, y, prec);
            UniPoly den = series_poly_eval(shifted_d, y, prec);
            y = (y - series_mul(num, series_inv(den, prec), prec)).truncated(prec);
        }
        // Cut the series to a fraction of degree <= dbound (Cauchy/Pade).
        UniPoly q0 = UniPoly::monomial(BigRat(1), trunc), q1 = y;
        UniPoly t0, t1 = UniPoly::one();
        while (!q1.is_zero() && q1.degree() > dbound) {
            auto [q, rem] = divmod(q0, q1);
            UniPoly t2 = t0 - q * t1;
            q0 = q1;
            q1 = rem;
            t0 = t1;
            t1 = t2;
        }
        if (t1.is_zero() || t1.degree() > dbound || is_zero(t1[0])) continue;
        RatFunc root(q1.shifted(-base), t1.shifted(-base));
        // exact verification against the original polynomial
        RatFunc value;
        for (size_t j = r_in.coeffs().size(); j-- > 0;) value = value * root + r_in.coeffs()[j];
        if (value.is_zero()) verified.push_back(std::move(root));
    }

    std::sort(verified.begin(), verified.end(),
              [](const RatFunc& a, const RatFunc& b) { return a.str() < b.str(); });
    verified.erase(std::unique(verified.begin(), verified.end()), verified.end());
    for (const RatFunc& root : verified) {
        int mult = multiplicity_and_deflate(out.residual, root);
        if (mult > 0) out.roots.emplace_back(root, mult);
    }
    return out;
}

// ---------------------------------------------------------------------------

KPoly resultant_x(const BivarPoly& a, const BivarPoly& b) {
    auto pa = a.as_poly_in_x();
    auto pb = b.as_poly_in_x();
    if (pa.is_zero() || pb.is_zero()) throw Error(Errc::ResultantDegenerate, "zero polynomial in elimination");
    int m = pa.degree(), n = pb.degree();
    if (m == 0 && n == 0)
        throw Error(Errc::ResultantDegenerate, "both polynomials are constant in x");
    if (m == 0) return pa[0].pow(static_cast<unsigned>(n));
    if (n == 0) return pb[0].pow(static_cast<unsigned>(m));

    const size_t size = static_cast<size_t>(m + n);
    std::vector<std::vector<KPoly>> s(size, std::vector<KPoly>(size, KPoly()));
    for (int row = 0; row < n; ++row)
        for (int i = 0; i <= m; ++i)
            s[static_cast<size_t>(row)][static_cast<size_t>(row + i)] = pa[static_cast<size_t>(m - i)];
    for (int row = 0; row < m; ++row)
        for (int i = 0; i <= n; ++i)
            s[static_cast<size_t>(n + row)][static_cast<size_t>(row + i)] = pb[static_cast<size_t>(n - i)];
    KPoly det = bareiss_det(std::move(s));
    if (det.is_zero()) throw Error(Errc::ResultantDegenerate, "resultant vanishes identically");
    return det;
}

}  // namespace hff
