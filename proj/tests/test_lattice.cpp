#include <doctest.h>

#include "sejoin/catalog.hpp"
#include "sejoin/errors.hpp"
#include "sejoin/join.hpp"
#include "sejoin/lattice.hpp"

using namespace sejoin;

namespace {

BettiVector bv(std::vector<int> xs) {
    return BettiVector(std::vector<Int>(xs.begin(), xs.end()));
}

}  // namespace

TEST_CASE("scaling_solution") {
    SUBCASE("two 3-spheres") {
        const ScalingSolution s = scaling_solution(1, 1);
        CHECK(s.c1 == Rat(2, 3));
        CHECK(s.c2 == Rat(2, 3));
        CHECK(s.scalar_curvature == 24);
        CHECK(s.einstein_constant == 6);
    }
    SUBCASE("joining with the identity leaves the factor untouched") {
        const ScalingSolution s = scaling_solution(4, 0);
        CHECK(s.c1 == Rat(1));
        CHECK(s.scalar_curvature == 4 * 4 * 5);
    }
    SUBCASE("formula evaluation") {
        const ScalingSolution s = scaling_solution(2, 3);
        CHECK(s.scalar_curvature == 120);
        CHECK(s.einstein_constant == 12);
    }
    SUBCASE("exact identities over the full grid, derived independently") {
        // equal Einstein constants 2(n_i+1)/c_i force c_i = (n_i+1)/(N+1);
        // the total scalar curvature is sum 4 n_i (n_i+1) / c_i
        for (Int n1 = 0; n1 <= 10; ++n1) {
            for (Int n2 = 0; n2 <= 10; ++n2) {
                const Int N = n1 + n2;
                const ScalingSolution s = scaling_solution(n1, n2);
                CHECK(s.c1 == Rat(n1 + 1, N + 1));
                CHECK(s.c2 == Rat(n2 + 1, N + 1));
                const Rat total = Rat(4 * n1 * (n1 + 1)) / s.c1 + Rat(4 * n2 * (n2 + 1)) / s.c2;
                CHECK(total == Rat(4 * N * (N + 1)));
                CHECK(s.c1 * Int(N + 1) == Rat(n1 + 1));
            }
        }
    }
}

TEST_CASE("lattice_point classification") {
    const SeSpace s3 = make_sphere(1);
    const SeSpace s7 = make_sphere(3);
    const SeSpace t = make_three_sasakian(1, 2, 3);

    SUBCASE("the join sits at the relative indices") {
        const LatticePoint p = lattice_point(s3, t, 1, 1);
        CHECK(p.sasakian_einstein);
        CHECK(p.orb_simply_connected);
        REQUIRE(std::holds_alternative<BettiVector>(p.rational_cohomology));
        CHECK(std::get<BettiVector>(p.rational_cohomology) == join(s3, t).betti);
        REQUIRE(p.scaling.has_value());
        CHECK(p.scaling->scalar_curvature == 4 * 4 * 5);
    }
    SUBCASE("S3 * S7 is the (1,2) point") {
        const LatticePoint p = lattice_point(s3, s7, 1, 2);
        CHECK(p.l1 == 1);
        CHECK(p.l2 == 2);
        CHECK(p.sasakian_einstein);
        CHECK(lattice_point(s3, s7, 2, 4).sasakian_einstein);
        CHECK_FALSE(lattice_point(s3, s7, 1, 1).sasakian_einstein);
        CHECK_FALSE(lattice_point(s3, s7, 2, 1).sasakian_einstein);
    }
    SUBCASE("smoothness via the gcd test") {
        CHECK(lattice_point(s3, t, 1, 1).smooth == std::optional<bool>(true));
        // gcd(m1 k, m2 l) = gcd(2, 60) = 2: stored unknown, never false
        CHECK_FALSE(lattice_point(s3, t, 1, 2).smooth.has_value());
    }
    SUBCASE("boundary points are products") {
        const LatticePoint left = lattice_point(s3, t, 0, 1);
        REQUIRE(std::holds_alternative<ProductDescriptor>(left.rational_cohomology));
        CHECK(std::get<ProductDescriptor>(left.rational_cohomology).left == "Z(S3)");
        REQUIRE(left.advisory_betti.has_value());
        CHECK(*left.advisory_betti == kunneth_betti(bv({1, 0, 1}), t.betti));

        const LatticePoint right = lattice_point(s3, t, 2, 0);
        REQUIRE(std::holds_alternative<ProductDescriptor>(right.rational_cohomology));
        CHECK(std::get<ProductDescriptor>(right.rational_cohomology).right == "Z(T(1,2,3))");
    }
    SUBCASE("both parameters zero is rejected") {
        CHECK_THROWS_AS(lattice_point(s3, t, 0, 0), BothZero);
    }
}

TEST_CASE("lattice order, meet, join") {
    const SeSpace s3 = make_sphere(1);
    const SeSpace t = make_three_sasakian(1, 1, 5);

    const LatticePoint a = lattice_point(s3, t, 2, 3);
    const LatticePoint b = lattice_point(s3, t, 4, 5);
    const LatticePoint m = lattice_meet(a, b);
    const LatticePoint j = lattice_join(a, b);
    CHECK(m.l == 2);
    CHECK(m.k == 1);
    CHECK(j.l == 4);
    CHECK(j.k == 15);

    SUBCASE("mismatched lattices are rejected") {
        const LatticePoint other = lattice_point(s3, make_sphere(3), 1, 1);
        CHECK_THROWS_AS(lattice_meet(a, other), MismatchedFactors);
    }
    SUBCASE("lattice laws on a 6x6 box") {
        std::vector<LatticePoint> box;
        for (Int l = 1; l <= 6; ++l)
            for (Int k = 1; k <= 6; ++k)
                box.push_back(lattice_point(s3, t, l, k));
        for (const auto& p : box) {
            CHECK(lattice_meet(p, p).l == p.l);
            CHECK(lattice_join(p, p).k == p.k);
            for (const auto& q : box) {
                const LatticePoint pq = lattice_meet(p, q);
                CHECK(pq.l == lattice_meet(q, p).l);
                CHECK(pq.k == lattice_meet(q, p).k);
                // absorption
                const LatticePoint ab = lattice_meet(p, lattice_join(p, q));
                CHECK(ab.l == p.l);
                CHECK(ab.k == p.k);
                // leq is the meet-induced order
                CHECK(lattice_leq(p, q) == (pq.l == p.l && pq.k == p.k));
            }
        }
    }
    SUBCASE("interior points share one Betti vector") {
        const BettiVector want = join(s3, t).betti;
        for (Int l = 1; l <= 4; ++l)
            for (Int k = 1; k <= 4; ++k)
                CHECK(std::get<BettiVector>(
                          lattice_point(s3, t, l, k).rational_cohomology) == want);
    }
}

TEST_CASE("enumerate_smooth") {
    SUBCASE("regular factors make the whole box smooth") {
        const auto pts = enumerate_smooth(make_sphere(1), make_sphere(1), 3, 3);
        CHECK(pts.size() == 9);
        for (const auto& p : pts)
            CHECK(p.smooth == std::optional<bool>(true));
    }
    SUBCASE("smooth points exist although the SE point is not smooth") {
        const SeSpace s5 = make_sphere(2);  // S^{4n+1} with n = 1
        const SeSpace t = make_three_sasakian(1, 2, 3);  // even order 60
        const auto rel = relative_indices(s5, t);
        CHECK_FALSE(lattice_point(s5, t, rel.l1, rel.l2).smooth.has_value());
        const auto pts = enumerate_smooth(s5, t, 6, 6);
        CHECK(!pts.empty());
        bool se_found = false;
        for (const auto& p : pts) {
            const Int d = gcd2(p.l, p.k);
            CHECK(gcd2(p.k / d, Int(60) * (p.l / d)) == 1);
            CHECK(p.smooth == std::optional<bool>(true));
            se_found = se_found || p.sasakian_einstein;
        }
        CHECK_FALSE(se_found);
    }
    SUBCASE("k = 1 with a regular first factor is always smooth") {
        const auto pts = enumerate_smooth(make_del_pezzo_bundle(4),
                                          make_three_sasakian(1, 2, 3), 8, 1);
        CHECK(pts.size() == 8);
    }
    SUBCASE("unknown orders are rejected") {
        CHECK_THROWS_AS(enumerate_smooth(make_sphere(1), make_toric_omega(3), 3, 3),
                        IndeterminateOrder);
    }
}

TEST_CASE("cheeger_limit") {
    const SeSpace s3 = make_sphere(1);
    const SeSpace t = make_three_sasakian(1, 1, 5);
    SUBCASE("interior directions") {
        CHECK(cheeger_limit(s3, t, 1, 1, 7, 9).limit.l == 1);
        CHECK(cheeger_limit(s3, t, 2, 3, 5, 7).limit.k == 3);
    }
    SUBCASE("boundary direction gives the product") {
        const CheegerLimit lim = cheeger_limit(s3, t, 1, 0, 0, 1);
        CHECK(std::holds_alternative<ProductDescriptor>(lim.limit.rational_cohomology));
        CHECK(lim.sequence.find("1t+0") != std::string::npos);
    }
}

TEST_CASE("the SE ray is exactly the positive multiples of the relative indices") {
    const SeSpace s3 = make_sphere(1);
    const SeSpace s7 = make_sphere(3);
    for (Int l = 1; l <= 8; ++l)
        for (Int k = 1; k <= 8; ++k) {
            const bool expect = (k == 2 * l);
            CHECK(lattice_point(s3, s7, l, k).sasakian_einstein == expect);
        }
}
