#include <doctest.h>

#include "sejoin/catalog.hpp"
#include "sejoin/integral_model.hpp"
#include "sejoin/join.hpp"

using namespace sejoin;

namespace {

BettiVector bv(std::vector<int> xs) {
    return BettiVector(std::vector<Int>(xs.begin(), xs.end()));
}

std::optional<IntegralModel> model_of(const SeSpace& joined) {
    return integral_model(joined.leaf_list(), joined.betti);
}

}  // namespace

TEST_CASE("R2: S3 * S(p1,p2,p3) full table") {
    const SeSpace j = join(make_sphere(1), make_three_sasakian(1, 2, 3));
    const auto m = model_of(j);
    REQUIRE(m.has_value());
    CHECK(m->rule_id == "R2");
    CHECK(m->scope_full());
    CHECK(m->ring_iso);

    std::vector<GradedPiece> want(10);
    want[0] = {1, {}};
    want[2] = {2, {}};
    want[4] = {1, {Int(11)}};
    want[5] = {1, {}};
    want[6] = {0, {Int(11)}};
    want[7] = {2, {}};
    want[9] = {1, {}};
    CHECK(m->full_groups() == GradedGroup(9, want));
    REQUIRE(j.integral.has_value());
    CHECK(*j.integral == GradedGroup(9, want));
    CHECK(j.integral->free_betti() == j.betti);
    CHECK(j.integral->torsion_duality_ok());
}

TEST_CASE("R3: iterated sphere joins with S(p) speak only through degree 3") {
    const SeSpace s3 = make_sphere(1);
    const SeSpace j = n_fold_join({s3, s3, make_three_sasakian(1, 2, 3)});
    const auto m = model_of(j);
    REQUIRE(m.has_value());
    CHECK(m->rule_id == "R3");
    CHECK_FALSE(m->scope_full());
    CHECK(m->max_degree == 3);
    CHECK(m->groups[2].free_rank == 3);
    CHECK(m->groups[3].trivial());
    CHECK_FALSE(j.integral.has_value());
    CHECK(j.h3_zero == std::optional<bool>(true));
}

TEST_CASE("R4: S3 * Sk(k) has Z_2^k in degree 4") {
    const SeSpace j = join(make_sphere(1), make_del_pezzo_bundle(5));
    const auto m = model_of(j);
    REQUIRE(m.has_value());
    CHECK(m->rule_id == "R4");
    REQUIRE(j.integral.has_value());
    CHECK(j.integral->at(2).free_rank == 6);
    CHECK(j.integral->at(5).free_rank == 6);
    CHECK(j.integral->at(4).free_rank == 0);
    CHECK(j.integral->at(4).torsion == std::vector<Int>(5, Int(2)));
    CHECK(j.integral->torsion_duality_ok());
}

TEST_CASE("R5: joins with the cubic Fermat link") {
    SUBCASE("S3 * F(3,3) full groups") {
        const SeSpace j = join(make_sphere(1), make_fermat_link(3, 3));
        const auto m = model_of(j);
        REQUIRE(m.has_value());
        CHECK(m->rule_id == "R5");
        CHECK(m->scope_full());
        CHECK(j.integral.has_value());
        CHECK(j.betti == bv({1, 0, 1, 10, 0, 0, 10, 1, 0, 1}));
    }
    SUBCASE("F(3,3) * S(p) low degrees") {
        const SeSpace j = join(make_fermat_link(3, 3), make_three_sasakian(1, 2, 3));
        const auto m = model_of(j);
        REQUIRE(m.has_value());
        CHECK(m->rule_id == "R5");
        CHECK(m->max_degree == 3);
        CHECK(m->groups[2].free_rank == 2);
        CHECK(m->groups[3].free_rank == 10);
        CHECK_FALSE(j.integral.has_value());
    }
}

TEST_CASE("R6: Sk(k) * F(4,3) carries 60k classes in the middle") {
    const SeSpace j = join(make_del_pezzo_bundle(3), make_fermat_link(4, 3));
    const auto m = model_of(j);
    REQUIRE(m.has_value());
    CHECK(m->rule_id == "R6");
    REQUIRE(j.integral.has_value());
    CHECK(j.integral->at(3).free_rank == 60);
    CHECK(j.integral->at(5).free_rank == 180);
    CHECK(j.integral->at(6).free_rank == 180);
    CHECK(j.integral->at(8).free_rank == 60);
    CHECK(j.betti.b(5) == 180);
}

TEST_CASE("R7: Sk(k) * Sk(k')") {
    const SeSpace j = join(make_del_pezzo_bundle(3), make_del_pezzo_bundle(4));
    const auto m = model_of(j);
    REQUIRE(m.has_value());
    CHECK(m->rule_id == "R7");
    CHECK(j.betti.b(4) == 13);
    CHECK(j.betti.b(2) == 8);
    REQUIRE(j.integral.has_value());
    CHECK(j.integral->at(4).free_rank == 13);
    CHECK(j.integral->at(5).free_rank == 13);
}

TEST_CASE("R8: iterated sphere joins with F(3,3)") {
    const SeSpace s3 = make_sphere(1);
    SUBCASE("full groups without the extra factor") {
        const SeSpace j = n_fold_join({s3, s3, make_fermat_link(3, 3)});
        const auto m = model_of(j);
        REQUIRE(m.has_value());
        CHECK(m->rule_id == "R8");
        CHECK(m->scope_full());
        CHECK(m->ring_iso);
        // ring isomorphic to S2 x (S3 * F(3,3))
        CHECK(j.betti == kunneth_betti(bv({1, 0, 1}), bv({1, 0, 1, 10, 0, 0, 10, 1, 0, 1})));
    }
    SUBCASE("degrees <= 3 with a 7-manifold factor") {
        const SeSpace j =
            n_fold_join({s3, make_fermat_link(3, 3), make_toric_omega(2)});
        const auto m = model_of(j);
        REQUIRE(m.has_value());
        CHECK(m->rule_id == "R8");
        CHECK(m->max_degree == 3);
        CHECK(m->groups[2].free_rank == 2 + 1 + 1);
        CHECK(m->groups[3].free_rank == 10);
    }
}

TEST_CASE("R1: S3 against a generic index-2 7-manifold with H3 = 0") {
    const SeSpace j = join(make_sphere(1), make_toric_omega(4));
    const auto m = model_of(j);
    REQUIRE(m.has_value());
    CHECK(m->rule_id == "R1");
    CHECK(m->max_degree == 3);
    CHECK(m->groups[2].free_rank == 5);
    CHECK(m->groups[3].trivial());
    CHECK(j.h3_zero == std::optional<bool>(true));
}

TEST_CASE("shapes outside the table get no model") {
    CHECK_FALSE(model_of(join(make_sphere(2), make_three_sasakian(1, 2, 3))).has_value());
    CHECK_FALSE(model_of(join(make_del_pezzo_bundle(3), make_fermat_link(3, 3))).has_value());
    CHECK_FALSE(model_of(join(make_sphere(1), make_fermat_link(2, 3))).has_value());
    CHECK_FALSE(
        model_of(join(make_sphere(1), join(make_sphere(1), make_sphere(1)))).has_value());
}

TEST_CASE("every full model satisfies duality and matches the engine") {
    const SeSpace s3 = make_sphere(1);
    std::vector<SeSpace> joins{
        join(s3, make_three_sasakian(1, 1, 5)),
        join(s3, make_three_sasakian(2, 3, 5)),
        join(s3, make_del_pezzo_bundle(8)),
        join(s3, make_fermat_link(3, 3)),
        join(make_del_pezzo_bundle(6), make_fermat_link(4, 3)),
        join(make_del_pezzo_bundle(8), make_del_pezzo_bundle(8)),
        n_fold_join({s3, s3, s3, make_fermat_link(3, 3)}),
    };
    for (const SeSpace& j : joins) {
        const auto m = model_of(j);
        REQUIRE(m.has_value());
        if (!m->scope_full())
            continue;
        const GradedGroup g = m->full_groups();
        CHECK(g.free_betti() == j.betti);
        CHECK(g.torsion_duality_ok());
    }
}
