#include "hff/unipoly.hpp"

#include <sstream>

namespace hff {

int ipoly_degree(const IntPoly& a) {
    int d = static_cast<int>(a.size()) - 1;
    while (d >= 0 && sgn(a[static_cast<size_t>(d)]) == 0) --d;
    return d;
}

static void ipoly_trim(IntPoly& a) {
    a.resize(static_cast<size_t>(ipoly_degree(a) + 1));
}

std::pair<IntPoly, BigRat> to_integer_primitive(const UniPoly& a) {
    if (a.is_zero()) return {IntPoly{}, BigRat(0)};
    BigInt den(1);
    for (const auto& c : a.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    IntPoly z(a.coeffs().size());
    BigInt cont(0);
    for (size_t i = 0; i < z.size(); ++i) {
        z[i] = a.coeffs()[i].get_num() * (den / a.coeffs()[i].get_den());
        mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), z[i].get_mpz_t());
    }
    if (sgn(z[z.size() - 1]) < 0) cont = -cont;
    for (auto& c : z) c /= cont;
    return {z, rat(cont, den)};
}

UniPoly from_integer(const IntPoly& a) {
    std::vector<BigRat> c;
    c.reserve(a.size());
    for (const auto& z : a) c.emplace_back(z);
    return UniPoly(std::move(c));
}

IntPoly ipoly_primitive(const IntPoly& a) {
    int d = ipoly_degree(a);
    if (d < 0) return {};
    BigInt cont(0);
    for (const auto& c : a) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), c.get_mpz_t());
    if (sgn(a[static_cast<size_t>(d)]) < 0) cont = -cont;
    IntPoly r(a.begin(), a.begin() + d + 1);
    for (auto& c : r) c /= cont;
    return r;
}

// ---------------------------------------------------------------------------
// Multiplication. Kronecker substitution packs each factor into one big
// integer so GMP's subquadratic integer product does the work; coefficients
// are recovered as balanced base-2^s digits.

static size_t max_coeff_bits(const IntPoly& a) {
    size_t m = 1;
    for (const auto& c : a) m = std::max(m, mpz_sizeinbase(c.get_mpz_t(), 2));
    return m;
}

IntPoly ipoly_mul(const IntPoly& a, const IntPoly& b) {
    int da = ipoly_degree(a), db = ipoly_degree(b);
    if (da < 0 || db < 0) return {};
    size_t n = static_cast<size_t>(std::min(da, db)) + 1;
    size_t s = max_coeff_bits(a) + max_coeff_bits(b) + 2;
    size_t log2n = 0;
    while ((n >> log2n) > 0) ++log2n;
    s += log2n;

    auto pack = [&](const IntPoly& p, int d) {
        BigInt acc(0);
        for (int i = d; i >= 0; --i) {
            mpz_mul_2exp(acc.get_mpz_t(), acc.get_mpz_t(), s);
            acc += p[static_cast<size_t>(i)];
        }
        return acc;
    };
    BigInt prod = pack(a, da) * pack(b, db);

    IntPoly c(static_cast<size_t>(da + db) + 1);
    BigInt digit, half;
    mpz_ui_pow_ui(half.get_mpz_t(), 2, s - 1);
    for (size_t i = 0; i < c.size(); ++i) {
        mpz_fdiv_r_2exp(digit.get_mpz_t(), prod.get_mpz_t(), s);
        if (digit >= half) digit -= half * 2;  // balanced digit
        c[i] = digit;
        prod -= digit;
        mpz_fdiv_q_2exp(prod.get_mpz_t(), prod.get_mpz_t(), s);
    }
    ipoly_trim(c);
    return c;
}

UniPoly poly_mul_impl(const UniPoly& a, const UniPoly& b) {
    // Small products are cheaper without the packing detour.
    if (static_cast<long>(a.degree()) * b.degree() < 1024)
        return poly_mul_impl<BigRat>(a, b);
    auto [za, fa] = to_integer_primitive(a);
    auto [zb, fb] = to_integer_primitive(b);
    return from_integer(ipoly_mul(za, zb)) * (fa * fb);
}

// ---------------------------------------------------------------------------
// Subresultant gcd.

// prem(a, b) = lc(b)^(deg a - deg b + 1) * a  mod  b, the scaling the
// subresultant divisions rely on.
static IntPoly ipoly_pseudo_rem(const IntPoly& a, const IntPoly& b) {
    int da = ipoly_degree(a), db = ipoly_degree(b);
    const BigInt& lb = b[static_cast<size_t>(db)];
    IntPoly r = a;
    long scale = da - db + 1;
    while (true) {
        int dr = ipoly_degree(r);
        if (dr < db) break;
        BigInt top = r[static_cast<size_t>(dr)];
        for (auto& c : r) c *= lb;
        for (int i = 0; i <= db; ++i)
            r[static_cast<size_t>(dr - db + i)] -= top * b[static_cast<size_t>(i)];
        ipoly_trim(r);
        --scale;
    }
    for (long k = 0; k < scale; ++k)
        for (auto& c : r) c *= lb;
    ipoly_trim(r);
    return r;
}

IntPoly ipoly_gcd_subresultant(IntPoly a, IntPoly b) {
    ipoly_trim(a);
    ipoly_trim(b);
    if (ipoly_degree(a) < 0) return ipoly_primitive(b);
    if (ipoly_degree(b) < 0) return ipoly_primitive(a);
    if (ipoly_degree(a) < ipoly_degree(b)) std::swap(a, b);
    a = ipoly_primitive(a);
    b = ipoly_primitive(b);

    BigInt g(1), h(1);
    while (true) {
        int delta = ipoly_degree(a) - ipoly_degree(b);
        IntPoly r = ipoly_pseudo_rem(a, b);
        if (ipoly_degree(r) < 0) break;
        a = std::move(b);
        // divide by g*h^delta (exact, by the subresultant theory)
        BigInt div = g;
        for (int i = 0; i < delta; ++i) div *= h;
        for (auto& c : r) {
            BigInt q;
            mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), div.get_mpz_t());
            c = q;
        }
        b = std::move(r);
        ipoly_trim(b);
        g = a[static_cast<size_t>(ipoly_degree(a))];
        // h = h^{1-delta} * g^delta
        if (delta > 0) {
            BigInt gp(1);
            for (int i = 0; i < delta; ++i) gp *= g;
            BigInt hp(1);
            for (int i = 0; i < delta - 1; ++i) hp *= h;
            mpz_divexact(h.get_mpz_t(), gp.get_mpz_t(), hp.get_mpz_t());
        }
        if (ipoly_degree(b) == 0) {
            b = IntPoly{BigInt(1)};
            break;
        }
    }
    return ipoly_primitive(b);
}

// gcd degree cannot exceed its value modulo a prime that keeps both leading
// coefficients alive, so a constant gcd mod p proves coprimality over Q.
static bool coprime_mod_prime(const IntPoly& a, const IntPoly& b) {
    static const unsigned long kPrimes[] = {1000003ul, 999983ul, 524287ul};
    for (unsigned long p : kPrimes) {
        if (mpz_fdiv_ui(a.back().get_mpz_t(), p) == 0) continue;
        if (mpz_fdiv_ui(b.back().get_mpz_t(), p) == 0) continue;
        std::vector<unsigned long> ra(a.size()), rb(b.size());
        for (size_t i = 0; i < a.size(); ++i) ra[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
        for (size_t i = 0; i < b.size(); ++i) rb[i] = mpz_fdiv_ui(b[i].get_mpz_t(), p);
        auto inv = [p](unsigned long v) {
            unsigned long long base = v, acc = 1;
            unsigned long e = p - 2;
            while (e) {
                if (e & 1ul) acc = acc * base % p;
                base = base * base % p;
                e >>= 1;
            }
            return static_cast<unsigned long>(acc);
        };
        while (!rb.empty()) {
            unsigned long lb = inv(rb.back());
            while (ra.size() >= rb.size()) {
                unsigned long long c = ra.back() * static_cast<unsigned long long>(lb) % p;
                size_t off = ra.size() - rb.size();
                for (size_t i = 0; i < rb.size(); ++i) {
                    unsigned long long s = c * rb[i] % p;
                    ra[off + i] = static_cast<unsigned long>((ra[off + i] + p - s) % p);
                }
                while (!ra.empty() && ra.back() == 0) ra.pop_back();
                if (ra.empty()) break;
            }
            std::swap(ra, rb);
        }
        return ra.size() == 1;
    }
    return false;  // no usable prime; fall through to the exact path
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return UniPoly::one();
    auto [za, fa] = to_integer_primitive(a);
    auto [zb, fb] = to_integer_primitive(b);
    (void)fa;
    (void)fb;
    if (coprime_mod_prime(za, zb)) return UniPoly::one();
    return from_integer(ipoly_gcd_subresultant(za, zb)).monic();
}

UniPoly squarefree_part(const UniPoly& a) {
    if (a.is_zero() || a.degree() == 0) return a.monic();
    return exact_div(a, poly_gcd(a, a.derivative())).monic();
}

// ---------------------------------------------------------------------------

std::complex<double> eval_c(const UniPoly& p, std::complex<double> x) {
    std::complex<double> acc(0.0, 0.0);
    for (size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + to_complex(p.coeffs()[i]);
    return acc;
}

double eval_d(const UniPoly& p, double x) {
    double acc = 0.0;
    for (size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + to_double(p.coeffs()[i]);
    return acc;
}

std::string to_string(const UniPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const BigRat& c = p[static_cast<size_t>(i)];
        if (is_zero(c)) continue;
        BigRat abs = c < 0 ? BigRat(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool unit = abs == 1;
        if (i == 0 || !unit) out << abs.get_str();
        if (i > 0) {
            if (!unit) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace hff
