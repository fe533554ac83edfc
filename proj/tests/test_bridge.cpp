#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "matspace/bridge.hpp"

using namespace matspace;
using namespace matspace::fixtures;
using la::Subspace;

TEST_CASE("dimension of the section space of O(n)") {
    CHECK(bridge::sections_dim_p1(2) == 3);
    CHECK(bridge::sections_dim_p1(0) == 1);
    CHECK(bridge::sections_dim_p1(-1) == 0);
    CHECK(bridge::sections_dim_p1(-7) == 0);
    // monomial count of degree-n binary forms, as an independent route
    for (long n = 0; n <= 12; ++n) {
        std::size_t monomials = 0;
        for (long i = 0; i <= n; ++i) ++monomials;
        CHECK(bridge::sections_dim_p1(n) == monomials);
    }
}

TEST_CASE("section algebras") {
    SUBCASE("n = 2 transports the T_2 bracket") {
        auto sa = bridge::build_section_algebra(2);
        CHECK(sa.algebra.dim() == 3);
        CHECK(sa.construction == "triangular-transport(T_2)");
        CHECK(sa.algebra == lie::upper_triangular_algebra(2).algebra);
    }
    SUBCASE("n = 0 is the one-dimensional abelian algebra") {
        auto sa = bridge::build_section_algebra(0);
        CHECK(sa.algebra.dim() == 1);
        CHECK(lie::derived_series(sa.algebra).solvable);
    }
    SUBCASE("n = 3 uses the scaling bracket with series [4, 3, 0]") {
        auto sa = bridge::build_section_algebra(3);
        CHECK(sa.algebra.dim() == 4);
        CHECK(sa.construction == "scaling");
        CHECK(lie::derived_series(sa.algebra).dims == std::vector<std::size_t>{4, 3, 0});
    }
    SUBCASE("n = 5 hits the T_3 transport") {
        auto sa = bridge::build_section_algebra(5);
        CHECK(sa.algebra.dim() == 6);
        CHECK(sa.construction == "triangular-transport(T_3)");
    }
    SUBCASE("every section algebra passes Jacobi and is solvable") {
        for (std::size_t n = 0; n <= 9; ++n) {
            auto sa = bridge::build_section_algebra(n);
            CHECK(lie::verify_lie_algebra(sa.algebra));
            CHECK(lie::derived_series(sa.algebra).solvable);
        }
    }
}

TEST_CASE("triviality iff irreducible pair") {
    auto zero = bridge::trivial_iff_irreducible_pair(0);
    CHECK(zero.trivial);
    CHECK(zero.dim_ve == 1);
    CHECK(zero.has_irreducible_pair);

    auto two = bridge::trivial_iff_irreducible_pair(2);
    CHECK_FALSE(two.trivial);
    CHECK(two.dim_ve == 3);
    CHECK_FALSE(two.has_irreducible_pair);

    auto five = bridge::trivial_iff_irreducible_pair(5);
    CHECK_FALSE(five.trivial);
    CHECK(five.dim_ve == 6);
    CHECK_FALSE(five.has_irreducible_pair);

    CHECK_THROWS_AS(bridge::trivial_iff_irreducible_pair(-1), std::invalid_argument);
}

TEST_CASE("theorem correspondence cases") {
    auto one_dim_rep = [] {
        auto sa = bridge::build_section_algebra(0);
        return lie::Representation(sa.algebra, {Mat<Rat>::identity(1, Rat::Field{})});
    };
    auto reducible_rep_for = [](long degree) {
        auto sa = bridge::build_section_algebra(static_cast<std::size_t>(degree));
        return lie::adjoint_representation(sa.algebra);
    };

    SUBCASE("all trivial") {
        auto r = bridge::theorem_correspondence_check({0, 0}, {one_dim_rep(), one_dim_rep()});
        CHECK(r.degree_case == bridge::DegreeCase::all_trivial);
        CHECK(r.consistent);
    }
    SUBCASE("all nontrivial") {
        std::vector<lie::Representation> reps{reducible_rep_for(2), reducible_rep_for(3)};
        auto r = bridge::theorem_correspondence_check({2, 3}, reps);
        CHECK(r.degree_case == bridge::DegreeCase::all_nontrivial);
        CHECK(r.consistent);
    }
    SUBCASE("mixed") {
        std::vector<lie::Representation> reps{one_dim_rep(), reducible_rep_for(2)};
        auto r = bridge::theorem_correspondence_check({0, 2}, reps);
        CHECK(r.degree_case == bridge::DegreeCase::mixed);
        CHECK(r.consistent);
    }
    SUBCASE("a reducible pairing at degree zero is inconsistent") {
        auto sa = bridge::build_section_algebra(0);
        lie::Representation split(sa.algebra, {mat_q(2, 2, {1, 0, 0, 2})});
        auto r = bridge::theorem_correspondence_check({0}, {split});
        CHECK(r.degree_case == bridge::DegreeCase::all_trivial);
        CHECK_FALSE(r.consistent);
    }
    SUBCASE("an irreducible pairing at a nonzero degree is inconsistent") {
        // a character of the T_2-bracket section algebra: one-dimensional,
        // hence absolutely irreducible
        auto sa = bridge::build_section_algebra(2);
        lie::Representation character(
            sa.algebra, {mat_q(1, 1, {1}), mat_q(1, 1, {0}), mat_q(1, 1, {0})});
        REQUIRE(lie::verify_representation(character));
        auto r = bridge::theorem_correspondence_check({2}, {character});
        CHECK_FALSE(r.consistent);
    }
    SUBCASE("shape violations are rejected") {
        CHECK_THROWS_AS(bridge::theorem_correspondence_check({0, 2}, {one_dim_rep()}),
                        std::invalid_argument);
        CHECK_THROWS_AS(bridge::theorem_correspondence_check({2}, {one_dim_rep()}),
                        std::invalid_argument);
    }
}

TEST_CASE("phi evaluation") {
    auto s = skew3();
    auto b = bridge::evaluate_phi(s, {Rat(1), Rat(0), Rat(0)});
    CHECK(b == s.basis()[0]);
    CHECK_THROWS_AS(bridge::evaluate_phi(s, {Rat(0), Rat(0), Rat(0)}), std::invalid_argument);
}

TEST_CASE("generation checks") {
    SUBCASE("skew3 over a prime field generates at every point") {
        auto s7 = spaces::reduce_mod_p(skew3(), Fp::Field(7));
        CHECK(bridge::generation_check(s7, 2));
        CHECK_FALSE(bridge::generation_check(s7, 3));
        auto s101 = spaces::reduce_mod_p(skew3(), Fp::Field(101));
        CHECK(bridge::generation_check(s101, 2));
    }
    SUBCASE("the diagonal pencil fails at the coordinate point") {
        std::vector<std::vector<Rat>> points{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}};
        CHECK_FALSE(bridge::generation_check(diag_pencil_space(), 2, points));
        std::vector<std::vector<Rat>> away{{Rat(1), Rat(1)}, {Rat(2), Rat(-3)}};
        CHECK(bridge::generation_check(diag_pencil_space(), 2, away));
    }
    SUBCASE("the L_2 pencil generates at rational sample points") {
        std::vector<std::vector<Rat>> points{
            {Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}, {Rat(2), Rat(-5)}};
        CHECK(bridge::generation_check(l2_pencil_space(), 2, points));
    }
}

TEST_CASE("rank-2 classification through the dictionary") {
    SUBCASE("skew3 is primitive with an empty representation view") {
        auto r = bridge::classify_rank2(skew3(), 0);
        CHECK(r.primitive);
        CHECK(r.rep_view.empty());
        CHECK_FALSE(r.certificate.has_value());
    }
    SUBCASE("bordered4 yields two trivial summands with irreducible characters") {
        auto r = bridge::classify_rank2(bordered4(), 0);
        CHECK_FALSE(r.primitive);
        REQUIRE(r.split.has_value());
        CHECK(*r.split == std::pair<std::size_t, std::size_t>{1, 1});
        CHECK(r.l_side_trivial == 1);
        CHECK(r.t_side_trivial == 1);
        REQUIRE(r.rep_view.size() == 2);
        CHECK(r.rep_view[0].side == 'L');
        CHECK(r.rep_view[1].side == 'T');
        for (const auto& e : r.rep_view) {
            CHECK(e.irreducible);
            CHECK(e.enveloping_dim == 1);
            CHECK(e.algebra.algebra.dim() == 1);
            CHECK(lie::verify_representation(e.rep));
        }
    }
    SUBCASE("the L_2 pencil classifies as (0,2) on the T side") {
        auto r = bridge::classify_rank2(l2_pencil_space(), 0);
        CHECK_FALSE(r.primitive);
        CHECK(*r.split == std::pair<std::size_t, std::size_t>{0, 2});
        REQUIRE(r.rep_view.size() == 2);
        CHECK(r.rep_view[0].side == 'T');
        CHECK(r.rep_view[1].side == 'T');
    }
}

TEST_CASE("classification is equivalence-invariant") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto skew_eq = spaces::random_equivalent(skew3(), seed);
        CHECK(bridge::classify_rank2(skew_eq, seed).primitive);
        auto bord_eq = spaces::random_equivalent(bordered4(), seed);
        auto r = bridge::classify_rank2(bord_eq, seed);
        CHECK_FALSE(r.primitive);
        CHECK(*r.split == std::pair<std::size_t, std::size_t>{1, 1});
    }
}

TEST_CASE("the certificate/rep-view biconditional holds on random spaces") {
    Rng rng(808);
    Fp::Field f(5);
    int tested = 0;
    while (tested < 30) {
        auto s = random_low_rank_space(rng, f);
        if (!s) continue;
        ++tested;
        auto r = bridge::classify_rank2(*s, 9);
        const bool all_irreducible =
            !r.rep_view.empty() &&
            std::all_of(r.rep_view.begin(), r.rep_view.end(),
                        [](const auto& e) { return e.irreducible; });
        CHECK(r.primitive != all_irreducible);
        CHECK(r.certificate.has_value() == !r.primitive);
        // agreement with the exhaustive search
        CHECK(r.certificate.has_value() == oracle_existence_rank2(*s));
    }
}
