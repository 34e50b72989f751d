#include <doctest.h>

#include "sejoin/catalog.hpp"
#include "sejoin/errors.hpp"
#include "sejoin/gysin.hpp"
#include "sejoin/join.hpp"

using namespace sejoin;

namespace {

BettiVector bv(std::vector<int> xs) {
    return BettiVector(std::vector<Int>(xs.begin(), xs.end()));
}

}  // namespace

TEST_CASE("relative_indices") {
    const SeSpace s3 = make_sphere(1);
    const SeSpace t = make_three_sasakian(1, 2, 3);
    const SeSpace sk = make_del_pezzo_bundle(4);

    auto r1 = relative_indices(s3, t);
    CHECK(r1.l1 == 1);
    CHECK(r1.l2 == 1);

    auto r2 = relative_indices(s3, sk);
    CHECK(r2.l1 == 2);
    CHECK(r2.l2 == 1);

    auto r3 = relative_indices(make_circle(), t);
    CHECK(r3.l1 == 0);
    CHECK(r3.l2 == 1);

    // gcd(l1, l2) = 1 always
    for (const SeSpace& a : default_catalog().spaces())
        for (const SeSpace& b : default_catalog().spaces()) {
            auto r = relative_indices(a, b);
            CHECK(gcd2(r.l1, r.l2) == 1);
        }
}

TEST_CASE("join of two 3-spheres is the Stiefel manifold") {
    const SeSpace v = join(make_sphere(1), make_sphere(1));
    CHECK(v.dim() == 5);
    CHECK(v.betti == bv({1, 0, 1, 1, 0, 1}));
    CHECK(v.smooth == std::optional<bool>(true));
    CHECK(v.homogeneous);
    CHECK(v.regular);
    CHECK(v.index == 2);
    CHECK(v.order.value == Int(1));
    CHECK(v.se_irreducible == std::optional<bool>(false));
}

TEST_CASE("the circle is the identity on every invariant field") {
    const SeSpace circle = make_circle();
    for (const SeSpace& s : default_catalog().spaces()) {
        CHECK(join(circle, s) == s);
        CHECK(join(s, circle) == s);
    }
}

TEST_CASE("S5 * S(1,2,3) is an orbifold with g = 2") {
    const SeSpace j = join(make_sphere(2), make_three_sasakian(1, 2, 3));
    const JoinCertificate cert =
        smoothness_certificate(make_sphere(2), make_three_sasakian(1, 2, 3));
    CHECK(cert.l1 == 3);
    CHECK(cert.l2 == 2);
    CHECK(cert.g == Int(2));
    CHECK(cert.verdict == Verdict::Orbifold);
    CHECK(j.smooth == std::optional<bool>(false));
    CHECK(j.index == 1);
}

TEST_CASE("smoothness_certificate") {
    SUBCASE("S3 against an odd supplied order is smooth") {
        const SeSpace omega = make_toric_omega(2, Int(15));
        CHECK(smoothness_certificate(make_sphere(1), omega).verdict == Verdict::Smooth);
    }
    SUBCASE("S * S is never smooth for non-regular S") {
        for (const SeSpace& s : default_catalog().spaces()) {
            if (!s.order.known() || *s.order.value == 1)
                continue;
            const JoinCertificate cert = smoothness_certificate(s, s);
            CHECK(cert.verdict == Verdict::Orbifold);
            CHECK(cert.g == s.order.value);
        }
    }
    SUBCASE("unknown order with a nonzero partner index is indeterminate") {
        const JoinCertificate cert =
            smoothness_certificate(make_del_pezzo_bundle(6), make_toric_omega(3));
        CHECK(cert.verdict == Verdict::Indeterminate);
        CHECK_FALSE(cert.g.has_value());
    }
    SUBCASE("swapping the arguments swaps the certificate") {
        const SeSpace a = make_sphere(2), b = make_three_sasakian(1, 2, 3);
        const JoinCertificate ab = smoothness_certificate(a, b);
        const JoinCertificate ba = smoothness_certificate(b, a);
        CHECK(ab.l1 == ba.l2);
        CHECK(ab.l2 == ba.l1);
        CHECK(ab.g == ba.g);
        CHECK(ab.verdict == ba.verdict);
    }
}

TEST_CASE("low_betti_lemma52") {
    SUBCASE("b2 of S3 * S3") {
        const LowBetti lb = low_betti_lemma52(make_sphere(1), make_sphere(1));
        REQUIRE(lb.b2.has_value());
        CHECK(*lb.b2 == 1);
        CHECK_FALSE(lb.b3.has_value());  // n_i = 1 < 3
    }
    SUBCASE("b4 of S9 * S9 cross-checked against the engine") {
        const SeSpace s9 = make_sphere(4);
        const LowBetti lb = low_betti_lemma52(s9, s9);
        REQUIRE(lb.b4.has_value());
        CHECK(*lb.b4 == 1);
        CHECK(*lb.b4 == join(s9, s9).betti.b(4));
    }
    SUBCASE("b3 adds for n_i >= 3") {
        const SeSpace f = make_fermat_link(3, 3);
        const SeSpace t = make_three_sasakian(1, 2, 3);
        const LowBetti lb = low_betti_lemma52(f, t);
        REQUIRE(lb.b3.has_value());
        CHECK(*lb.b3 == 10);
        CHECK(*lb.b3 == join(f, t).betti.b(3));
    }
    SUBCASE("out-of-range values are omitted, not guessed") {
        const LowBetti lb = low_betti_lemma52(make_circle(), make_sphere(3));
        CHECK_FALSE(lb.b2.has_value());
    }
}

TEST_CASE("n_fold_join") {
    const SeSpace s3 = make_sphere(1);
    SUBCASE("triple sphere join is a homogeneous 7-manifold") {
        const SeSpace j = n_fold_join({s3, s3, s3});
        CHECK(j.dim() == 7);
        CHECK(j.homogeneous);
        CHECK(j.index == 2);
        CHECK(j.smooth == std::optional<bool>(true));
    }
    SUBCASE("iterated sphere joins with an odd-order toric factor are smooth") {
        const SeSpace omega = make_toric_omega(4, Int(9));
        const SeSpace j = n_fold_join({s3, s3, omega});
        CHECK(j.smooth == std::optional<bool>(true));
        CHECK(j.betti.b(2) == 4 + 2);
    }
    SUBCASE("iterated sphere joins are smooth even with the order unknown") {
        const SeSpace j = n_fold_join({s3, s3, make_toric_omega(4)});
        CHECK(j.smooth == std::optional<bool>(true));
        CHECK(j.betti.b(2) == 4 + 2);
        CHECK_FALSE(j.order.known());
    }
    SUBCASE("identity inside a fold") {
        const SeSpace t = make_three_sasakian(1, 1, 5);
        CHECK(n_fold_join({make_circle(), t}) == t);
    }
}

TEST_CASE("monoid laws over catalog samples") {
    const auto& spaces = default_catalog().spaces();
    SUBCASE("commutativity on every field") {
        for (std::size_t i = 0; i < spaces.size(); ++i)
            for (std::size_t j = i; j < spaces.size(); ++j)
                CHECK(join(spaces[i], spaces[j]) == join(spaces[j], spaces[i]));
    }
    SUBCASE("associativity on every field, sampled triples") {
        for (std::size_t i = 0; i < spaces.size(); i += 2) {
            for (std::size_t j = 1; j < spaces.size(); j += 3) {
                const std::size_t k = (2 * i + 3 * j) % spaces.size();
                CHECK(join(join(spaces[i], spaces[j]), spaces[k]) ==
                      join(spaces[i], join(spaces[j], spaces[k])));
            }
        }
    }
    SUBCASE("index of the join divides both factors' indices") {
        for (std::size_t i = 0; i < spaces.size(); ++i) {
            for (std::size_t j = 0; j < spaces.size(); ++j) {
                const SeSpace out = join(spaces[i], spaces[j]);
                CHECK(out.index == gcd2(spaces[i].index, spaces[j].index));
                if (spaces[i].index > 0)
                    CHECK(spaces[i].index % out.index == 0);
            }
        }
    }
    SUBCASE("every join Betti vector is closed, symmetric, b1 = 0") {
        for (std::size_t i = 0; i < spaces.size(); ++i) {
            for (std::size_t j = 0; j < spaces.size(); ++j) {
                const SeSpace out = join(spaces[i], spaces[j]);
                CHECK(euler_characteristic(out.betti) == 0);
                CHECK(out.betti.poincare_symmetric());
                if (out.n >= 1)
                    CHECK(out.betti.b(1) == 0);
            }
        }
    }
}

TEST_CASE("join order propagation") {
    SUBCASE("known local orders give the exact lcm of products") {
        const SeSpace j = join(make_three_sasakian(1, 2, 3), make_three_sasakian(1, 1, 5));
        // locals {1,3,4,5} x {1,3,3}: products up to 15, lcm 180
        CHECK(j.order.value == Int(180));
        REQUIRE(j.local_orders.has_value());
        CHECK(lcm_all(*j.local_orders) == 180);
    }
    SUBCASE("order-only factors leave the bracket") {
        const SeSpace omega = make_toric_omega(2, Int(35));
        const SeSpace j = join(make_three_sasakian(1, 2, 3), omega);
        CHECK_FALSE(j.order.known());
        REQUIRE(j.order.bounds.has_value());
        CHECK(j.order.bounds->first == lcm2(60, 35));
        CHECK(j.order.bounds->second == 60 * 35);
    }
    SUBCASE("a regular factor collapses the bracket") {
        const SeSpace omega = make_toric_omega(2, Int(35));
        const SeSpace j = join(make_sphere(3), omega);
        CHECK(j.order.value == Int(35));
    }
    SUBCASE("unknown orders stay unknown") {
        CHECK_FALSE(join(make_sphere(1), make_toric_omega(2)).order.known());
    }
}

TEST_CASE("join rejects inputs without pi_1^orb = 0") {
    SeSpace bad = make_sphere(1);
    bad.simply_connected = false;
    bad.betti = bv({1, 0, 0, 1});
    CHECK_THROWS_AS(join(bad, make_sphere(1)), NotSimplyConnected);
}

TEST_CASE("ambiguity notes fire exactly on the S5 * (b2 = 1 index-2 7-space) shape") {
    const SeSpace s5 = make_sphere(2);
    const SeSpace t = make_three_sasakian(1, 2, 3);
    CHECK(ambiguity_notes(join(s5, t).leaf_list()).size() == 1);
    CHECK(ambiguity_notes(join(s5, make_toric_omega(1)).leaf_list()).size() == 1);
    CHECK(ambiguity_notes(join(s5, make_toric_omega(3)).leaf_list()).empty());
    CHECK(ambiguity_notes(join(make_sphere(1), t).leaf_list()).empty());
    CHECK(ambiguity_notes(join(make_sphere(3), t).leaf_list()).empty());
}
