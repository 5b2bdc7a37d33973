#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hff/expr.hpp"
#include "hff/point.hpp"
#include "hff/rootfind.hpp"

using namespace hff;

namespace {

UniPoly up(std::initializer_list<long> coeffs) {
    std::vector<BigRat> c;
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly(std::move(c));
}

UniPoly random_poly(std::mt19937& rng, int max_deg, int coef_range = 5) {
    std::uniform_int_distribution<int> dd(0, max_deg), dc(-coef_range, coef_range);
    int deg = dd(rng);
    std::vector<BigRat> c(static_cast<size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) c[static_cast<size_t>(i)] = BigRat(dc(rng));
    if (is_zero(c.back())) c.back() = BigRat(1);
    return UniPoly(std::move(c));
}

RatFunc random_ratfunc(std::mt19937& rng, int max_deg) {
    UniPoly num = random_poly(rng, max_deg);
    UniPoly den = random_poly(rng, max_deg);
    if (den.is_zero()) den = UniPoly::one();
    return RatFunc(num, den);
}

// independent oracle: resultant as the Sylvester determinant over Q by
// fraction-free elimination on exact rationals
BigRat sylvester_resultant(const UniPoly& a, const UniPoly& b) {
    int m = a.degree(), n = b.degree();
    REQUIRE(m >= 0);
    REQUIRE(n >= 0);
    size_t size = static_cast<size_t>(m + n);
    std::vector<std::vector<BigRat>> s(size, std::vector<BigRat>(size, BigRat(0)));
    for (int row = 0; row < n; ++row)
        for (int i = 0; i <= m; ++i) s[row][static_cast<size_t>(row + i)] = a[static_cast<size_t>(m - i)];
    for (int row = 0; row < m; ++row)
        for (int i = 0; i <= n; ++i)
            s[static_cast<size_t>(n + row)][static_cast<size_t>(row + i)] = b[static_cast<size_t>(n - i)];
    // plain Gaussian elimination over the field Q
    BigRat det(1);
    for (size_t k = 0; k < size; ++k) {
        size_t pivot = k;
        while (pivot < size && is_zero(s[pivot][k])) ++pivot;
        if (pivot == size) return BigRat(0);
        if (pivot != k) {
            std::swap(s[pivot], s[k]);
            det = -det;
        }
        det *= s[k][k];
        for (size_t i = k + 1; i < size; ++i) {
            if (is_zero(s[i][k])) continue;
            BigRat factor = s[i][k] / s[k][k];
            for (size_t j = k; j < size; ++j) s[i][j] -= factor * s[k][j];
        }
    }
    return det;
}

}  // namespace

TEST_CASE("gcd of named examples") {
    UniPoly t2m1 = up({-1, 0, 1});  // t^2 - 1
    UniPoly tm1 = up({-1, 1});      // t - 1
    CHECK(poly_gcd(t2m1, tm1) == tm1);

    UniPoly p = up({2, 0, 6});  // 6t^2 + 2
    UniPoly monic_p = p.monic();
    CHECK(poly_gcd(UniPoly::zero(), p) == monic_p);
    CHECK(poly_gcd(p, UniPoly::zero()) == monic_p);

    UniPoly a = up({0, 2, 0, 1});  // t^3 + 2t
    UniPoly b = up({1, 0, 1});     // t^2 + 1
    CHECK(poly_gcd(a, b) == UniPoly::one());
    CHECK(sylvester_resultant(a, b) != 0);  // brute-force confirmation of coprimality
}

TEST_CASE("gcd divides both inputs and any common divisor divides it") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 1500; ++iter) {
        int big = iter % 10 == 0 ? 30 : 8;  // keep a slice of deep-degree cases
        UniPoly g = random_poly(rng, big / 3 + 1);
        UniPoly a = g * random_poly(rng, big);
        UniPoly b = g * random_poly(rng, big);
        UniPoly d = poly_gcd(a, b);
        if (a.is_zero() && b.is_zero()) {
            CHECK(d.is_zero());
            continue;
        }
        CHECK(!d.is_zero());
        CHECK(d.leading() == 1);
        if (!a.is_zero()) CHECK((exact_div(a, d) * d) == a);
        if (!b.is_zero()) CHECK((exact_div(b, d) * d) == b);
        if (!g.is_zero()) CHECK((exact_div(d, poly_gcd(d, g)) * poly_gcd(d, g)) == d);
        if (!g.is_zero()) CHECK(poly_gcd(d, g) == g.monic());
    }
}

TEST_CASE("subresultant gcd agrees with the Euclidean oracle") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 400; ++iter) {
        UniPoly a = random_poly(rng, 9), b = random_poly(rng, 9);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(poly_gcd(a, b) == euclid_gcd(a, b));
    }
}

TEST_CASE("kronecker product matches schoolbook") {
    std::mt19937 rng(13);
    for (int iter = 0; iter < 120; ++iter) {
        UniPoly a = random_poly(rng, 70, 50), b = random_poly(rng, 64, 50);
        CHECK(a * b == poly_mul_impl<BigRat>(a, b));
    }
}

TEST_CASE("rational function arithmetic is exact") {
    std::mt19937 rng(17);
    for (int iter = 0; iter < 1200; ++iter) {
        RatFunc a = random_ratfunc(rng, 4), b = random_ratfunc(rng, 4);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
    }
}

TEST_CASE("ratfunc keeps its canonical form") {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 400; ++iter) {
        RatFunc a = random_ratfunc(rng, 5);
        if (a.is_zero()) {
            CHECK(a.den() == UniPoly::one());
            continue;
        }
        CHECK(a.den().leading() == 1);
        CHECK(poly_gcd(a.num(), a.den()).degree() == 0);
    }
}

TEST_CASE("homogenize named examples") {
    PointK origin{RatFunc(0), RatFunc(0)};
    ProjPointK p0 = homogenize(origin);
    CHECK(p0.X.is_zero());
    CHECK(p0.Y.is_zero());
    CHECK(p0.W == UniPoly::one());

    RatFunc t = RatFunc::t();
    ProjPointK p1 = homogenize({t, t * t});
    CHECK(p1.X == up({0, 1}));
    CHECK(p1.Y == up({0, 0, 1}));
    CHECK(p1.W == UniPoly::one());

    ProjPointK p2 = homogenize({RatFunc(1) / t, t});
    CHECK(p2.X == UniPoly::one());
    CHECK(p2.Y == up({0, 0, 1}));
    CHECK(p2.W == up({0, 1}));
}

TEST_CASE("naive height examples and invariance") {
    RatFunc t = RatFunc::t();
    CHECK(naive_height({RatFunc(0), RatFunc(0)}) == 0);
    CHECK(naive_height({t, t * t}) == 2);

    // multiplying both coordinate representations by a common factor changes nothing
    std::mt19937 rng(29);
    for (int iter = 0; iter < 300; ++iter) {
        PointK z{random_ratfunc(rng, 3), random_ratfunc(rng, 3)};
        RatFunc c = random_ratfunc(rng, 2);
        if (c.is_zero()) continue;
        PointK scaled{(z.x * c) / c, (z.y * c) / c};
        CHECK(naive_height(z) == naive_height(scaled));
    }

    // height zero exactly for constant coordinates
    CHECK(naive_height({RatFunc(rat(3, 4)), RatFunc(-2)}) == 0);
    CHECK(naive_height({t, RatFunc(1)}) == 1);
    for (int iter = 0; iter < 200; ++iter) {
        PointK z{random_ratfunc(rng, 2), random_ratfunc(rng, 2)};
        bool constant = z.x.is_constant() && z.y.is_constant();
        CHECK((naive_height(z) == 0) == constant);
    }
}

TEST_CASE("expression parser round-trips and rejects junk") {
    BivarPoly p = parse_poly("y^2 + t");
    CHECK(p.deg_y() == 2);
    CHECK(p.coeff(0, 2) == RatFunc(1));
    CHECK(p.coeff(0, 0) == RatFunc::t());

    CHECK(parse_scalar("3/4 * t^2 - 1") ==
          RatFunc(UniPoly(std::vector<BigRat>{BigRat(-1), BigRat(0), rat(3, 4)})));

    CHECK_THROWS_AS(parse_poly("y^2 +"), Error);
    CHECK_THROWS_AS(parse_poly("t/2"), Error);            // '/' only in literals
    CHECK_THROWS_AS(parse_scalar("x + y"), Error);        // scalars reject plane variables
    CHECK_THROWS_AS(parse_poly("(y"), Error);

    try {
        parse_poly("y^2 @ t");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Parse);
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }

    std::mt19937 rng(31);
    for (int iter = 0; iter < 300; ++iter) {
        UniPoly q = random_poly(rng, 6);
        std::string text = to_string(q);
        CHECK(parse_scalar(text) == RatFunc(q));
    }
}

TEST_CASE("rational roots, exactly") {
    // (t - 2)(2t + 3)(t^2 + 1) t
    UniPoly p = up({-2, 1}) * up({3, 2}) * up({1, 0, 1}) * up({0, 1});
    auto roots = rational_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == rat(-3, 2));
    CHECK(roots[1] == 0);
    CHECK(roots[2] == 2);

    CHECK(rational_roots(up({1, 0, 1})).empty());
    CHECK(rational_roots(up({5})).empty());

    std::mt19937 rng(37);
    for (int iter = 0; iter < 60; ++iter) {
        std::uniform_int_distribution<long> dv(-9, 9), dq(1, 5);
        BigRat r1 = rat(dv(rng), dq(rng)), r2 = rat(dv(rng), dq(rng));
        // (q1 t - p1)(q2 t - p2) * irreducible
        UniPoly f1 = UniPoly(std::vector<BigRat>{-r1, BigRat(1)});
        UniPoly f2 = UniPoly(std::vector<BigRat>{-r2, BigRat(1)});
        UniPoly p2 = f1 * f2 * up({1, 1, 0, 0, 1});
        auto rs = rational_roots(p2);
        CHECK(std::find(rs.begin(), rs.end(), r1) != rs.end());
        CHECK(std::find(rs.begin(), rs.end(), r2) != rs.end());
        for (const BigRat& r : rs) CHECK(is_zero(BigRat(p2.eval(r))));
    }
}

TEST_CASE("roots in K with residual") {
    RatFunc t = RatFunc::t();
    // (y - t)(y + t) -> roots +-t
    KPoly p(std::vector<RatFunc>{-(t * t), RatFunc(0), RatFunc(1)});
    KRoots kr = roots_in_k(p);
    REQUIRE(kr.roots.size() == 2);
    CHECK(kr.residual.degree() == 0);

    // y^2 + t has no K-rational root
    KPoly q(std::vector<RatFunc>{t, RatFunc(0), RatFunc(1)});
    KRoots kq = roots_in_k(q);
    CHECK(kq.roots.empty());
    CHECK(kq.residual.degree() == 2);

    // a root with a denominator: (t*y - (t^2+1)) * (y^2 + 1)
    RatFunc root = RatFunc(up({1, 0, 1}), up({0, 1}));
    KPoly lin(std::vector<RatFunc>{-root, RatFunc(1)});
    KPoly irr(std::vector<RatFunc>{RatFunc(1), RatFunc(0), RatFunc(1)});
    KRoots kk = roots_in_k(lin * irr);
    REQUIRE(kk.roots.size() == 1);
    CHECK(kk.roots[0].first == root);
    CHECK(kk.roots[0].second == 1);
    CHECK(kk.residual.degree() == 2);

    // multiplicity is reported
    KRoots km = roots_in_k(lin * lin * irr);
    REQUIRE(km.roots.size() == 1);
    CHECK(km.roots[0].second == 2);
}

TEST_CASE("resultant elimination edge cases") {
    BivarPoly x = BivarPoly::var_x(), y = BivarPoly::var_y();
    // shared factor in x: the resultant vanishes identically
    BivarPoly a = x * y + x;  // x(y + 1)
    CHECK_THROWS_AS(resultant_x(a, a), Error);
    try {
        resultant_x(a, a);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ResultantDegenerate);
    }
    // one operand constant in x: power of the constant
    BivarPoly b = y * y + BivarPoly::constant(RatFunc(1));
    KPoly r = resultant_x(a, b);
    CHECK(!r.is_zero());
    CHECK_THROWS_AS(resultant_x(b, b), Error);  // both constant in x
}
