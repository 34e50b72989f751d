#include "sejoin/search.hpp"

#include "sejoin/catalog.hpp"
#include "sejoin/errors.hpp"

#include <sstream>

namespace sejoin {

namespace {

void add(std::vector<Violation>& out, const SeSpace& s, const std::string& rule,
         const std::string& expected, const std::string& found) {
    out.push_back(Violation{s.name, rule, expected, found});
}

}  // namespace

std::vector<Violation> validate_space(const SeSpace& s) {
    std::vector<Violation> out;

    if (s.betti.dim() != s.dim())
        add(out, s, "betti_dim", "betti of dimension " + s.dim().str(),
            s.betti.dim().str());

    if (euler_characteristic(s.betti) != 0)
        add(out, s, "euler_char_zero", "0", euler_characteristic(s.betti).str());

    if (!s.betti.poincare_symmetric())
        add(out, s, "poincare_duality", "b_q = b_{dim-q}", s.betti.to_string());

    if (s.simply_connected && s.n >= 1 && s.betti.b(1) != 0)
        add(out, s, "b1_zero_simply_connected", "b_1 = 0", s.betti.b(1).str());

    if (s.regular && s.index > s.n + 1)
        add(out, s, "index_bound_regular", "Ind <= n+1 = " + (s.n + 1).str(),
            s.index.str());

    if (s.three_sasakian) {
        if ((s.dim() - 3) % 4 != 0) {
            add(out, s, "three_sasakian_dim", "dim = 4m+3", s.dim().str());
        } else {
            const Int m = (s.dim() - 3) / 4;
            if (s.index != m + 1 && s.index != 2 * m + 2)
                add(out, s, "three_sasakian_index",
                    (m + 1).str() + " or " + (2 * m + 2).str(), s.index.str());
        }
    }

    if (s.regular && s.dim() == 7 && s.betti.b(2) > 9)
        add(out, s, "b2_bound_regular_dim7", "b_2 <= 9", s.betti.b(2).str());

    if (s.regular && s.simply_connected && s.dim() == 5) {
        const Int b2 = s.betti.b(2);
        if (b2 == 2 || b2 > 8)
            add(out, s, "regular5_realizable", "b_2 in {0,1,3..8}", b2.str());
    }

    if (s.order.known() && *s.order.value == 1) {
        if (!s.regular)
            add(out, s, "order_one_regular_smooth", "regular", "non-regular");
        if (s.smooth && !*s.smooth)
            add(out, s, "order_one_regular_smooth", "smooth", "non-smooth");
    }

    if (s.integral) {
        if (s.integral->free_betti() != s.betti)
            add(out, s, "integral_free_rank_match", s.betti.to_string(),
                s.integral->free_betti().to_string());
        if (s.integral->dim() == s.dim() && s.dim() % 2 == 1 &&
            !s.integral->torsion_duality_ok())
            add(out, s, "torsion_duality", "torsion q = torsion dim+1-q",
                s.integral->to_string());
    }

    return out;
}

SearchResult cor418_triples(const Int& rmax) {
    if (rmax < 1)
        throw std::invalid_argument("cor418_triples: rmax must be >= 1");
    SearchResult res;
    res.query = "triples p_i = 4 r_i + 1, pairwise coprime, r_i <= " + rmax.str();
    res.exhaustiveness = "exhaustive over 0 <= r_i <= " + rmax.str();

    std::vector<SeSpace> sk;
    for (Int l = 3; l <= 8; ++l)
        sk.push_back(make_del_pezzo_bundle(l));

    for (Int r1 = 0; r1 <= rmax; ++r1) {
        for (Int r2 = 0; r2 <= rmax; ++r2) {
            for (Int r3 = 0; r3 <= rmax; ++r3) {
                const Int p1 = 4 * r1 + 1, p2 = 4 * r2 + 1, p3 = 4 * r3 + 1;
                if (!pairwise_coprime({p1, p2, p3}))
                    continue;
                Cor418Hit hit;
                hit.r = {r1, r2, r3};
                hit.p = {p1, p2, p3};
                hit.order = order_spq(p1, p2, p3);
                hit.order_odd = (hit.order % 2 != 0);
                const SeSpace t = make_three_sasakian(p1, p2, p3);
                for (const SeSpace& s : sk) {
                    hit.sk_join_verdicts.emplace_back(
                        s.family.params[0], smoothness_certificate(s, t).verdict);
                }
                res.hits.push_back(std::move(hit));
            }
        }
    }
    return res;
}

Regular5Status regular5_status(const Int& k) {
    if (k < 0)
        throw std::invalid_argument("regular5_status: k must be nonnegative");
    if (k == 2 || k >= 9)
        return {Regular5Kind::Empty, 0};
    if (k <= 4)
        return {Regular5Kind::Point, 0};
    return {Regular5Kind::FamilyDimAtLeast, k - 4};
}

Verdict smooth_sphere_join_predicate(const Int& m, const SeSpace& s) {
    if (m < 1)
        throw std::invalid_argument("smooth_sphere_join_predicate: m must be >= 1");
    if (s.dim() != 7 || s.index != 2)
        throw WrongShape("smooth_sphere_join_predicate: needs a dim-7 index-2 space, got " +
                         s.name);
    if (m % 2 == 1)
        return Verdict::Smooth;
    if (!s.order.known())
        return Verdict::Indeterminate;
    return (*s.order.value % 2 != 0) ? Verdict::Smooth : Verdict::Orbifold;
}

}  // namespace sejoin
