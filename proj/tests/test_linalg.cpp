#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "matspace/fp.hpp"
#include "matspace/mat.hpp"
#include "matspace/rat.hpp"
#include "matspace/rng.hpp"
#include "matspace/subspace.hpp"

using namespace matspace;
using la::Fp;
using la::Mat;
using la::Rat;
using la::Subspace;

namespace {

Mat<Rat> mat_q(std::size_t m, std::size_t n, const std::vector<long>& entries) {
    Mat<Rat> a(m, n, Rat::Field{});
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) = Rat(entries[i * n + j]);
    return a;
}

std::vector<Rat> vec_q(const std::vector<long>& entries) {
    std::vector<Rat> v;
    for (long e : entries) v.emplace_back(e);
    return v;
}

Mat<Rat> random_mat(Rng& rng, std::size_t m, std::size_t n) {
    Mat<Rat> a(m, n, Rat::Field{});
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) = Rat(rng.next_int(-4, 4));
    return a;
}

Subspace<Rat> random_subspace(Rng& rng, std::size_t ambient, std::size_t gens) {
    std::vector<std::vector<Rat>> v;
    for (std::size_t g = 0; g < gens; ++g) {
        std::vector<Rat> x(ambient, Rat());
        for (auto& c : x) c = Rat(rng.next_int(-3, 3));
        v.push_back(std::move(x));
    }
    return Subspace<Rat>::span(ambient, Rat::Field{}, std::move(v));
}

} // namespace

TEST_CASE("rational scalar arithmetic and parsing") {
    CHECK(Rat::parse("6/8") == Rat(3, 4));
    CHECK(Rat::parse("-2/4") == Rat(-1, 2));
    CHECK(Rat::parse("5").str() == "5");
    CHECK(Rat::parse("1/-2").str() == "-1/2");
    CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
    CHECK(Rat(2, 3).inv() == Rat(3, 2));
    CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("a"), std::invalid_argument);
    CHECK_THROWS_AS(Rat(1).operator/=(Rat(0)), std::domain_error);
}

TEST_CASE("prime field arithmetic") {
    Fp::Field f5(5);
    CHECK(f5.from_long(-3) == Fp(2, 5));
    CHECK((Fp(3, 5) * Fp(4, 5)) == Fp(2, 5));
    CHECK(Fp(3, 5).inv() == Fp(2, 5));
    CHECK(f5.parse("7 mod 5") == Fp(2, 5));
    CHECK(f5.parse("3") == Fp(3, 5));
    CHECK_THROWS_AS(f5.parse("3 mod 7"), std::invalid_argument);
    CHECK_THROWS_AS(Fp::Field(4), std::invalid_argument);
    CHECK_THROWS_AS(Fp::Field(2), std::invalid_argument);
    CHECK_THROWS_AS(Fp::Field(9), std::invalid_argument);
    CHECK_THROWS_AS(Fp(0, 5).inv(), std::domain_error);
    CHECK(la::is_odd_prime(101));
}

TEST_CASE("rank_factor basics") {
    Rat::Field f;

    SUBCASE("zero map") {
        auto rf = la::rank_factor(Mat<Rat>(3, 3, f));
        CHECK(rf.rank == 0);
        CHECK(rf.kernel == Subspace<Rat>::full(3, f));
        CHECK(rf.image.dim() == 0);
    }
    SUBCASE("identity") {
        auto rf = la::rank_factor(Mat<Rat>::identity(3, f));
        CHECK(rf.rank == 3);
        CHECK(rf.kernel.dim() == 0);
        CHECK(rf.image == Subspace<Rat>::full(3, f));
    }
    SUBCASE("skew basis element") {
        auto rf = la::rank_factor(mat_q(3, 3, {0, 1, 0, -1, 0, 0, 0, 0, 0}));
        CHECK(rf.rank == 2);
        CHECK(rf.kernel == Subspace<Rat>::span(3, f, {vec_q({0, 0, 1})}));
    }
}

TEST_CASE("rank equals transpose rank on random matrices") {
    Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = 1 + rng.next_below(5), n = 1 + rng.next_below(5);
        auto a = random_mat(rng, m, n);
        CHECK(la::rank_of(a) == la::rank_of(a.transpose()));
    }
}

TEST_CASE("subspace sum and intersection") {
    Rat::Field f;
    auto e1 = vec_q({1, 0, 0});
    auto e2 = vec_q({0, 1, 0});
    auto e3 = vec_q({0, 0, 1});

    SUBCASE("coordinate spans") {
        auto u = Subspace<Rat>::span(3, f, {e1});
        auto v = Subspace<Rat>::span(3, f, {e2});
        auto s = la::subspace_sum(u, v);
        CHECK(s.dim() == 2);
        CHECK(s == Subspace<Rat>::span(3, f, {e1, e2}));
        CHECK(la::subspace_sum(u, u) == u);
    }
    SUBCASE("echelon reduction of slanted lines") {
        auto u = Subspace<Rat>::span(3, f, {vec_q({1, 1, 0})});
        auto v = Subspace<Rat>::span(3, f, {vec_q({1, -1, 0})});
        CHECK(la::subspace_sum(u, v) == Subspace<Rat>::span(3, f, {e1, e2}));
    }
    SUBCASE("plane intersections") {
        auto p12 = Subspace<Rat>::span(3, f, {e1, e2});
        auto p23 = Subspace<Rat>::span(3, f, {e2, e3});
        CHECK(la::subspace_intersect(p12, p23) == Subspace<Rat>::span(3, f, {e2}));
        CHECK(la::subspace_intersect(p12, Subspace<Rat>(3, f)).dim() == 0);
        // the three coordinate planes meet pairwise in lines, jointly in 0
        auto p13 = Subspace<Rat>::span(3, f, {e1, e3});
        auto triple = la::subspace_intersect(la::subspace_intersect(p12, p23), p13);
        CHECK(triple.dim() == 0);
    }
    SUBCASE("ambient mismatch is rejected") {
        auto u = Subspace<Rat>::span(3, f, {e1});
        auto w = Subspace<Rat>::full(2, f);
        CHECK_THROWS_AS(la::subspace_sum(u, w), std::invalid_argument);
        CHECK_THROWS_AS(la::subspace_intersect(u, w), std::invalid_argument);
    }
}

TEST_CASE("Grassmann dimension identity on random subspaces") {
    Rng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t ambient = 2 + rng.next_below(4);
        auto u = random_subspace(rng, ambient, rng.next_below(4));
        auto v = random_subspace(rng, ambient, rng.next_below(4));
        const auto s = la::subspace_sum(u, v);
        const auto i = la::subspace_intersect(u, v);
        CHECK(s.dim() + i.dim() == u.dim() + v.dim());
        CHECK(s.contains(u));
        CHECK(u.contains(i));
    }
}

TEST_CASE("canonical form is idempotent") {
    Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        auto u = random_subspace(rng, 4, 3);
        CHECK(Subspace<Rat>::span(4, Rat::Field{}, u.basis()) == u);
    }
}

TEST_CASE("preimage subspace") {
    Rat::Field f;

    SUBCASE("identity pulls back to the subspace itself") {
        auto w = Subspace<Rat>::span(3, f, {vec_q({1, 2, 0})});
        CHECK(la::preimage_subspace(Mat<Rat>::identity(3, f), w) == w);
    }
    SUBCASE("full codomain pulls back to the full domain") {
        auto a = mat_q(2, 3, {1, 0, 0, 0, 1, 0});
        CHECK(la::preimage_subspace(a, Subspace<Rat>::full(2, f)) ==
              Subspace<Rat>::full(3, f));
    }
    SUBCASE("projection against a coordinate line") {
        auto a = mat_q(2, 2, {1, 0, 0, 0});
        auto w = Subspace<Rat>::span(2, f, {vec_q({0, 1})});
        CHECK(la::preimage_subspace(a, w) == Subspace<Rat>::span(2, f, {vec_q({0, 1})}));
    }
    SUBCASE("dimension mismatch is rejected") {
        auto a = mat_q(2, 2, {1, 0, 0, 0});
        CHECK_THROWS_AS(la::preimage_subspace(a, Subspace<Rat>::full(3, f)),
                        std::invalid_argument);
    }
}

TEST_CASE("preimage property on random data") {
    Rng rng(99);
    Rat::Field f;
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t m = 1 + rng.next_below(4), n = 1 + rng.next_below(4);
        auto a = random_mat(rng, m, n);
        auto w = random_subspace(rng, m, rng.next_below(3));
        auto pre = la::preimage_subspace(a, w);
        for (const auto& u : pre.basis()) CHECK(w.contains(a.apply(u)));
        CHECK(pre.contains(la::rank_factor(a).kernel));
        // random vectors: membership in the preimage is equivalent to
        // mapping into W
        for (int k = 0; k < 10; ++k) {
            std::vector<Rat> x(n, Rat());
            for (auto& c : x) c = Rat(rng.next_int(-3, 3));
            CHECK(pre.contains(x) == w.contains(a.apply(x)));
        }
    }
}

TEST_CASE("matrix inverse") {
    Rat::Field f;
    auto a = mat_q(2, 2, {2, 1, 1, 1});
    auto inv = la::inverse(a);
    REQUIRE(inv.has_value());
    CHECK(a.mul(*inv) == Mat<Rat>::identity(2, f));
    CHECK_FALSE(la::inverse(mat_q(2, 2, {1, 2, 2, 4})).has_value());
}

TEST_CASE("subspace operations over a prime field") {
    Fp::Field f(5);
    std::vector<Fp> e1{Fp(1, 5), Fp(0, 5), Fp(0, 5)};
    std::vector<Fp> e2{Fp(0, 5), Fp(1, 5), Fp(0, 5)};
    std::vector<Fp> v{Fp(2, 5), Fp(3, 5), Fp(0, 5)};
    auto u = Subspace<Fp>::span(3, f, {e1, v});
    CHECK(u.dim() == 2);
    CHECK(u == Subspace<Fp>::span(3, f, {e1, e2}));
    Mat<Fp> a(2, 3, f);
    a.at(0, 0) = Fp(1, 5);
    a.at(1, 2) = Fp(3, 5);
    CHECK(la::rank_of(a) == 2);
}
