#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hff/family.hpp"
#include "hff/heights.hpp"

using namespace hff;

namespace {

RatFunc t() { return RatFunc::t(); }

HenonFactor henon(RatFunc a, std::vector<RatFunc> p) { return {std::move(a), std::move(p)}; }

RegularFamily fam_plus() {  // (y, x + y^2 + t)
    return RegularFamily::compose({henon(RatFunc(1), {t(), RatFunc(0), RatFunc(1)})});
}

RegularFamily fam_minus() {  // (y, x + y^2 - t^2)
    return RegularFamily::compose({henon(RatFunc(1), {-(t() * t()), RatFunc(0), RatFunc(1)})});
}

std::vector<Factor> random_factors(std::mt19937& rng) {
    std::uniform_int_distribution<int> nf(1, 3), deg(2, 3), coef(-3, 3), kind(0, 3);
    std::vector<Factor> fs;
    int count = nf(rng);
    for (int i = 0; i < count; ++i) {
        if (kind(rng) == 0 && !fs.empty()) {
            // triangular affine factor keeps the composition regular
            AffineFactor a;
            a.m00 = RatFunc(1);
            a.m01 = RatFunc(0);
            a.m10 = RatFunc(coef(rng));
            a.m11 = RatFunc(1);
            a.t0 = RatFunc(coef(rng));
            a.t1 = RatFunc(coef(rng));
            fs.emplace_back(a);
            continue;
        }
        int d = deg(rng);
        std::vector<RatFunc> p(static_cast<size_t>(d) + 1, RatFunc(0));
        for (int j = 0; j < d; ++j)
            if (coef(rng) > 0) p[static_cast<size_t>(j)] = j % 2 == 0 ? RatFunc(coef(rng)) : t() * RatFunc(coef(rng));
        p.back() = RatFunc(1);
        int a = coef(rng);
        fs.emplace_back(henon(RatFunc(a == 0 ? 1 : a), std::move(p)));
    }
    bool any_henon = false;
    for (const auto& g : fs) any_henon |= std::holds_alternative<HenonFactor>(g);
    if (!any_henon) fs.emplace_back(henon(RatFunc(1), {RatFunc(0), RatFunc(0), RatFunc(1)}));
    return fs;
}

PointK random_point_deg8(std::mt19937& rng) {
    return {random_point(rng(), 8).x, random_point(rng(), 8).y};
}

}  // namespace

TEST_CASE("compose single factor") {
    RegularFamily f = fam_plus();
    CHECK(f.degree() == 2);
    // f = (y, x + y^2 + t)
    CHECK(f.px() == BivarPoly::var_y());
    BivarPoly expect = BivarPoly::var_x() + BivarPoly::var_y() * BivarPoly::var_y() +
                       BivarPoly::constant(t());
    CHECK(f.qy() == expect);
}

TEST_CASE("degrees multiply under composition") {
    HenonFactor h2 = henon(RatFunc(1), {t(), RatFunc(0), RatFunc(1)});
    HenonFactor h3 = henon(RatFunc(1), {RatFunc(0), RatFunc(0), RatFunc(0), RatFunc(1)});
    RegularFamily f = RegularFamily::compose({h2, h3});
    CHECK(f.degree() == 6);
    CHECK(validate_regular(f).ok);
    CHECK(f.qy().total_degree() == 6);
}

TEST_CASE("affine-only compositions are rejected") {
    AffineFactor a;
    a.m00 = RatFunc(1);
    a.m01 = RatFunc(1);
    a.m10 = RatFunc(0);
    a.m11 = RatFunc(1);
    a.t0 = a.t1 = RatFunc(0);
    CHECK_THROWS_AS(RegularFamily::compose({a}), Error);
    try {
        RegularFamily::compose({a});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotRegular);
    }
}

TEST_CASE("validator accepts the normalized examples") {
    ValidationReport r1 = validate_regular(fam_plus());
    CHECK(r1.ok);
    CHECK(r1.degree == 2);
    ValidationReport r2 = validate_regular(fam_minus());
    CHECK(r2.ok);
    CHECK(r2.degree == 2);
}

TEST_CASE("validator rejects a normalization-breaking conjugation") {
    // swap x and y around a Henon factor: indeterminacy moves off [1:0:0]
    AffineFactor swap;
    swap.m00 = RatFunc(0);
    swap.m01 = RatFunc(1);
    swap.m10 = RatFunc(1);
    swap.m11 = RatFunc(0);
    swap.t0 = swap.t1 = RatFunc(0);
    RegularFamily f = RegularFamily::compose(
        {swap, henon(RatFunc(1), {t(), RatFunc(0), RatFunc(1)}), swap});
    ValidationReport rep = validate_regular(f);
    CHECK(!rep.ok);
    CHECK(!rep.violations.empty());
}

TEST_CASE("apply and inverse on the quadratic family") {
    RegularFamily f = fam_plus();
    PointK origin{RatFunc(0), RatFunc(0)};
    PointK img = f.apply(origin);
    CHECK(img.x == RatFunc(0));
    CHECK(img.y == t());

    PointK pre = f.apply_inverse(origin);
    CHECK(pre.x == -t());
    CHECK(pre.y == RatFunc(0));

    CHECK(f.apply(f.apply_inverse(origin)) == origin);
}

TEST_CASE("round trips on random factor lists") {
    std::mt19937 rng(101);
    for (int iter = 0; iter < 25; ++iter) {
        RegularFamily f = RegularFamily::compose(random_factors(rng));
        PointK z = random_point_deg8(rng);
        CHECK(f.apply_inverse(f.apply(z)) == z);
        CHECK(f.apply(f.apply_inverse(z)) == z);
    }
}

TEST_CASE("specialize matches exact evaluation") {
    std::mt19937 rng(103);
    RegularFamily f = fam_minus();
    NumericMap nm = f.specialize({1.5, 0.25});
    std::uniform_real_distribution<double> dx(-2.0, 2.0);
    for (int iter = 0; iter < 200; ++iter) {
        PointK z{RatFunc(rat(static_cast<long>(rng() % 9) - 4, 1 + rng() % 3)),
                 RatFunc(rat(static_cast<long>(rng() % 9) - 4, 1 + rng() % 3))};
        PointK exact = f.apply(z);
        auto [nx, ny] = nm.apply(z.x.eval({1.5, 0.25}), z.y.eval({1.5, 0.25}));
        std::complex<double> ex = exact.x.eval({1.5, 0.25}), ey = exact.y.eval({1.5, 0.25});
        CHECK(std::abs(nx - ex) <= 1e-10 * (1.0 + std::abs(ex)));
        CHECK(std::abs(ny - ey) <= 1e-10 * (1.0 + std::abs(ey)));
    }

    NumericMap nm0 = fam_plus().specialize({0.0, 0.0});
    auto [u, v] = nm0.apply(std::complex<double>(1.0, 0.0), std::complex<double>(1.0, 0.0));
    CHECK(std::abs(u - 1.0) < 1e-14);
    CHECK(std::abs(v - 2.0) < 1e-14);

    NumericMap nm1 = fam_plus().specialize({1.0, 0.0});
    auto [u1, v1] = nm1.apply(std::complex<double>(0.0, 0.0), std::complex<double>(0.0, 0.0));
    CHECK(std::abs(u1) < 1e-14);
    CHECK(std::abs(v1 - 1.0) < 1e-14);
}

TEST_CASE("numeric inverse undoes the numeric map") {
    std::mt19937 rng(107);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    AffineFactor aff;
    aff.m00 = RatFunc(2);
    aff.m01 = RatFunc(1);
    aff.m10 = RatFunc(0);
    aff.m11 = RatFunc(1);
    aff.t0 = RatFunc(1);
    aff.t1 = RatFunc(-2);
    RegularFamily f = RegularFamily::compose(
        {henon(RatFunc(rat(1, 2)), {t(), RatFunc(1), RatFunc(2)}), aff});
    NumericMap nm = f.specialize({0.7, -0.3});
    for (int i = 0; i < 200; ++i) {
        std::complex<double> x(u(rng), u(rng)), y(u(rng), u(rng));
        auto [fx, fy] = nm.apply(x, y);
        auto [bx, by] = nm.apply_inverse(fx, fy);
        CHECK(std::abs(bx - x) <= 1e-9 * (1.0 + std::abs(fx) + std::abs(fy)));
        CHECK(std::abs(by - y) <= 1e-9 * (1.0 + std::abs(fx) + std::abs(fy)));
    }
}

TEST_CASE("specialize rejects bad parameters") {
    // a(t) = t degenerates at t = 0
    RegularFamily f =
        RegularFamily::compose({henon(t(), {RatFunc(0), RatFunc(0), RatFunc(1)})});
    CHECK_THROWS_AS(f.specialize({0.0, 0.0}), Error);
    CHECK_THROWS_AS(f.specialize({1e-12, 0.0}), Error);
    CHECK_NOTHROW(f.specialize({0.5, 0.0}));
}
