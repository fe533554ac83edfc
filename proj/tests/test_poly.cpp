#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "matspace/binary_form.hpp"
#include "matspace/mpoly.hpp"
#include "matspace/rat.hpp"
#include "matspace/rng.hpp"

using namespace matspace;
using la::Rat;
using poly::BinaryForm;
using poly::MPoly;
using poly::UPoly;

namespace {

// independent determinant route for cross-checking det_poly: plain
// first-row cofactor recursion without memoization
MPoly<Rat> naive_det(const std::vector<std::vector<MPoly<Rat>>>& a) {
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];
    MPoly<Rat> acc(a[0][0].nvars(), Rat::Field{});
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<MPoly<Rat>>> sub;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<MPoly<Rat>> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(a[i][j]);
            sub.push_back(std::move(row));
        }
        auto term = a[0][c] * naive_det(sub);
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

MPoly<Rat> random_linear_form(Rng& rng, std::size_t nvars) {
    MPoly<Rat> p(nvars, Rat::Field{});
    for (std::size_t v = 0; v < nvars; ++v)
        p = p + MPoly<Rat>::variable(v, nvars, Rat::Field{}).scaled(Rat(rng.next_int(-3, 3)));
    return p;
}

UPoly upoly(const std::vector<long>& coeffs) {
    std::vector<Rat> c;
    for (long x : coeffs) c.emplace_back(x);
    return UPoly(std::move(c));
}

BinaryForm form(const std::vector<long>& coeffs) {
    std::vector<Rat> c;
    for (long x : coeffs) c.emplace_back(x);
    return BinaryForm(std::move(c));
}

} // namespace

TEST_CASE("multivariate arithmetic and evaluation") {
    Rat::Field f;
    auto x = MPoly<Rat>::variable(0, 2, f);
    auto y = MPoly<Rat>::variable(1, 2, f);
    auto p = (x + y) * (x - y);
    auto q = x * x - y * y;
    CHECK(p == q);
    CHECK(p.total_degree() == 2);
    CHECK(p.eval({Rat(3), Rat(2)}) == Rat(5));
    CHECK((p - q).is_zero());
    CHECK(p.is_homogeneous());
    CHECK_FALSE((p + MPoly<Rat>::constant(2, Rat(1))).is_homogeneous());
}

TEST_CASE("det_poly agrees with the naive cofactor expansion") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + rng.next_below(4);
        const std::size_t nvars = 1 + rng.next_below(3);
        std::vector<std::vector<MPoly<Rat>>> a(n);
        for (auto& row : a)
            for (std::size_t j = 0; j < n; ++j) row.push_back(random_linear_form(rng, nvars));
        CHECK(poly::det_poly(a) == naive_det(a));
    }
}

TEST_CASE("det_poly agrees with evaluation of the numeric determinant") {
    // eval(det) == det(eval) on a fixed 3x3 symbolic matrix
    Rng rng(11);
    const std::size_t nvars = 2;
    std::vector<std::vector<MPoly<Rat>>> a(3);
    for (auto& row : a)
        for (std::size_t j = 0; j < 3; ++j) row.push_back(random_linear_form(rng, nvars));
    auto det = poly::det_poly(a);
    for (long s = -2; s <= 2; ++s)
        for (long t = -2; t <= 2; ++t) {
            Rat m[3][3];
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) m[i][j] = a[i][j].eval({Rat(s), Rat(t)});
            Rat num = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                      m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                      m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
            CHECK(det.eval({Rat(s), Rat(t)}) == num);
        }
}

TEST_CASE("for_each_combination enumerates lexicographically") {
    std::vector<std::vector<std::size_t>> seen;
    poly::for_each_combination(4, 2, [&](const std::vector<std::size_t>& c) { seen.push_back(c); });
    const std::vector<std::vector<std::size_t>> expected = {{0, 1}, {0, 2}, {0, 3},
                                                            {1, 2}, {1, 3}, {2, 3}};
    CHECK(seen == expected);
}

TEST_CASE("univariate gcd") {
    // (x-1)(x+2) and (x-1)(x-3) share exactly x-1
    auto a = upoly({-2, 1, 1});
    auto b = upoly({3, -4, 1});
    auto g = UPoly::gcd(a, b);
    CHECK(g.degree() == 1);
    CHECK(g.eval(Rat(1)).is_zero());
    CHECK(UPoly::gcd(a, upoly({1})).degree() == 0);
    CHECK(UPoly::gcd(a, UPoly()).degree() == 2);
}

TEST_CASE("univariate rational roots") {
    // (3x-1)(2x-1) = 6x^2 -5x + 1; times (x-2): 6x^3 - 17x^2 + 11x - 2
    auto p = upoly({-2, 11, -17, 6});
    auto roots = p.rational_roots();
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == Rat(1, 3));
    CHECK(roots[1] == Rat(1, 2));
    CHECK(roots[2] == Rat(2));
    for (const auto& r : roots) CHECK(p.eval(r).is_zero());

    CHECK(upoly({1, 0, 1}).rational_roots().empty()); // x^2 + 1
    auto rz = upoly({0, 0, -1, 1}).rational_roots();  // x^2 (x - 1)
    REQUIRE(rz.size() == 2);
    CHECK(rz[0] == Rat(0));
    CHECK(rz[1] == Rat(1));
}

TEST_CASE("binary form gcd") {
    SUBCASE("st against powers") {
        auto st = form({0, 1, 0});
        auto s2 = form({1, 0, 0});
        auto t2 = form({0, 0, 1});
        auto g = BinaryForm::gcd(st, s2);
        CHECK(g.degree() == 1);
        CHECK(g.coeffs()[0] == Rat(1)); // the form s
        auto g3 = BinaryForm::gcd(BinaryForm::gcd(s2, st), t2);
        CHECK(g3.is_constant());
    }
    SUBCASE("common quadratic factor") {
        auto a = form({1, 0, 1, 0}); // (s^2 + t^2) s
        auto b = form({0, 1, 0, 1}); // (s^2 + t^2) t
        auto g = BinaryForm::gcd(a, b);
        CHECK(g.degree() == 2);
        CHECK(g.str() == "s^2 + t^2");
    }
    SUBCASE("zero form is the gcd identity") {
        auto g = BinaryForm::gcd(BinaryForm(), form({2, 4}));
        CHECK(g.degree() == 1);
        CHECK(g.coeffs()[0] == Rat(1)); // normalized
    }
}

TEST_CASE("binary form rational roots") {
    SUBCASE("s*t has the two coordinate roots") {
        auto roots = form({0, 1, 0}).rational_roots();
        REQUIRE(roots.size() == 2);
        CHECK(roots[0] == std::pair<Rat, Rat>{Rat(1), Rat(0)});
        CHECK(roots[1] == std::pair<Rat, Rat>{Rat(0), Rat(1)});
    }
    SUBCASE("s^2 + t^2 has none") {
        CHECK(form({1, 0, 1}).rational_roots().empty());
    }
    SUBCASE("affine roots") {
        // (t - 2s)(t + s) = -2s^2 - st + t^2
        auto f = form({-2, -1, 1});
        auto roots = f.rational_roots();
        REQUIRE(roots.size() == 2);
        for (const auto& [s, t] : roots) CHECK(f.eval(s, t).is_zero());
    }
}

TEST_CASE("binary form from homogeneous mpoly") {
    Rat::Field f;
    auto s = MPoly<Rat>::variable(0, 2, f);
    auto t = MPoly<Rat>::variable(1, 2, f);
    auto p = s * s - (t * t).scaled(Rat(2));
    auto bf = BinaryForm::from_mpoly(p);
    CHECK(bf.degree() == 2);
    CHECK(bf.eval(Rat(2), Rat(1)) == Rat(2));
    CHECK_THROWS_AS(BinaryForm::from_mpoly(s * s + t), std::invalid_argument);
}
