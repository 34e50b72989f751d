#include "sejoin/integral_model.hpp"

#include "sejoin/errors.hpp"

#include <algorithm>
#include <sstream>

namespace sejoin {

GradedGroup IntegralModel::full_groups() const {
    if (!scope_full())
        throw Error("IntegralModel: not a full-scope model");
    return GradedGroup(dim, groups);
}

std::string IntegralModel::scope_string() const {
    if (scope_full())
        return ring_iso ? "full groups, ring isomorphism" : "full groups";
    return "degrees 0.." + std::to_string(max_degree) + " only";
}

namespace {

bool is_s3(const SeSpace& s) { return s.family.family == Family::Sphere && s.n == 1; }
bool is_t(const SeSpace& s) { return s.family.family == Family::ThreeSasakian; }
bool is_sk(const SeSpace& s) { return s.family.family == Family::DelPezzoBundle; }
bool is_f33(const SeSpace& s) {
    return s.family.family == Family::FermatLink && s.family.params == std::vector<Int>{3, 3};
}
bool is_f43(const SeSpace& s) {
    return s.family.family == Family::FermatLink && s.family.params == std::vector<Int>{4, 3};
}
// generic factor for the low-degree rules: an index-2 dim-7 space with
// vanishing integral H^3
bool is_dim7_index2_h3zero(const SeSpace& s) {
    return s.n == 3 && s.index == 2 && s.h3_zero && *s.h3_zero;
}

std::vector<GradedPiece> free_pieces(const std::vector<Int>& ranks) {
    std::vector<GradedPiece> out;
    out.reserve(ranks.size());
    for (const Int& r : ranks)
        out.push_back(GradedPiece{r, {}});
    return out;
}

GradedGroup s2_power_groups(std::size_t r) {
    GradedGroup g = GradedGroup::from_betti(BettiVector(std::vector<Int>{1, 0, 1}));
    GradedGroup acc = g;
    for (std::size_t i = 1; i < r; ++i)
        acc = kunneth_integral_with_free(acc, g);
    return acc;
}

// groups of S^2 x S(p): the ring isomorphism realized by
// the torsion-free Kuenneth product.
GradedGroup s3_join_t_groups(const SeSpace& t) {
    return kunneth_integral_with_free(s2_power_groups(1), *t.integral);
}

// S3 * F(3,3), dim 9: torsion free with ranks (1,0,1,10,0,0,10,1,0,1)
GradedGroup s3_join_f33_groups() {
    return GradedGroup(
        9, free_pieces({1, 0, 1, 10, 0, 0, 10, 1, 0, 1}));
}

IntegralModel make_model(std::string rule, std::string desc, Int dim, int max_degree,
                         bool ring_iso, std::vector<GradedPiece> groups,
                         std::vector<std::string> relations = {}) {
    IntegralModel m;
    m.rule_id = std::move(rule);
    m.match_description = std::move(desc);
    m.dim = std::move(dim);
    m.max_degree = max_degree;
    m.ring_iso = ring_iso;
    m.groups = std::move(groups);
    m.ring_relations = std::move(relations);
    return m;
}

void check_against_rational(const IntegralModel& m, const BettiVector& rational) {
    for (int q = 0; q <= m.max_degree; ++q) {
        if (m.groups[static_cast<std::size_t>(q)].free_rank != rational.b(q))
            throw ModelRationalMismatch(
                "rule " + m.rule_id + " free rank at degree " + std::to_string(q) +
                " is " + m.groups[static_cast<std::size_t>(q)].free_rank.str() +
                " but the rational engine gives " + rational.b(q).str());
    }
}

std::vector<GradedPiece> truncate(const GradedGroup& g, int max_degree) {
    std::vector<GradedPiece> out;
    for (int q = 0; q <= max_degree; ++q)
        out.push_back(g.at(q));
    return out;
}

}  // namespace

std::optional<IntegralModel> integral_model(const std::vector<SeSpace>& leaves,
                                            const BettiVector& rational) {
    std::size_t n_s3 = 0;
    std::vector<const SeSpace*> t, sk, f33, f43, other;
    for (const SeSpace& leaf : leaves) {
        if (is_s3(leaf))
            ++n_s3;
        else if (is_t(leaf))
            t.push_back(&leaf);
        else if (is_sk(leaf))
            sk.push_back(&leaf);
        else if (is_f33(leaf))
            f33.push_back(&leaf);
        else if (is_f43(leaf))
            f43.push_back(&leaf);
        else
            other.push_back(&leaf);
    }
    const std::size_t rest = t.size() + sk.size() + f33.size() + f43.size() + other.size();
    const Int dim = rational.dim();

    std::optional<IntegralModel> model;

    if (n_s3 == 1 && rest == 1 && t.size() == 1) {
        // R2: sigma_2 torsion in degrees 4 and 6
        const SeSpace& s = *t[0];
        GradedGroup g = s3_join_t_groups(s);
        model = make_model("R2", "S3 * " + s.name + " (full table, sigma_2 torsion)",
                           dim, 9, true, truncate(g, 9),
                           {"H^*(S3 * " + s.name + ") = H^*(S2 x " + s.name + ")"});
    } else if (n_s3 >= 2 && rest == 1 && t.size() == 1) {
        // R3: iterated S3 joins with S(p1,p2,p3); only the low-degree part
        // of the iteration survives scrutiny (see notes in the test suite)
        const SeSpace& s = *t[0];
        GradedGroup g = kunneth_integral_with_free(s2_power_groups(n_s3), *s.integral);
        model = make_model("R3",
                           "S3^" + std::to_string(n_s3) + " * " + s.name +
                               " (iterated join, low degrees)",
                           dim, 3, false, truncate(g, 3));
    } else if (n_s3 == 1 && rest == 1 && sk.size() == 1) {
        // R4: Z_2^k torsion in degree 4
        const Int k = sk[0]->family.params[0];
        std::vector<GradedPiece> g = free_pieces({1, 0, k + 1, 0, 0, k + 1, 0, 1});
        for (Int i = 0; i < k; ++i)
            g[4].torsion.push_back(2);
        model = make_model("R4", "S3 * Sk(" + k.str() + ") (full table, Z_2^k torsion)",
                           dim, 7, false, std::move(g),
                           {"a_i.a_j = 0", "s^2 = 0", "2 a_i.s = 0"});
    } else if (n_s3 == 1 && rest == 1 && f33.size() == 1) {
        // R5, 9-manifold table
        model = make_model("R5", "S3 * F(3,3) (full table, torsion free)", dim, 9,
                           false, truncate(s3_join_f33_groups(), 9));
    } else if (n_s3 == 0 && f33.size() == 1 && rest == 2 &&
               (t.size() == 1 || (other.size() == 1 && is_dim7_index2_h3zero(*other[0])))) {
        // R5, 13-manifold low-degree groups
        const SeSpace& x = t.size() == 1 ? *t[0] : *other[0];
        if (is_dim7_index2_h3zero(x)) {
            const Int k = x.betti.b(2);
            model = make_model("R5", "F(3,3) * " + x.name + " (degrees <= 3)", dim, 3,
                               false, free_pieces({1, 0, k + 1, 10}));
        }
    } else if (sk.size() == 1 && f43.size() == 1 && rest == 2 && n_s3 == 0) {
        // R6: torsion free
        const Int k = sk[0]->family.params[0];
        model = make_model(
            "R6", "Sk(" + k.str() + ") * F(4,3) (full table, torsion free)", dim, 11,
            false,
            free_pieces({1, 0, k + 1, 60, 1, 60 * k, 60 * k, 1, 60, k + 1, 0, 1}),
            {"a_i.a_j = 0", "s^3 = 0", "a_i.s = 0", "u_a.u_b = 0", "s.u_a = 0"});
    } else if (sk.size() == 2 && rest == 2 && n_s3 == 0) {
        // R7: torsion free
        const Int k = sk[0]->family.params[0];
        const Int kp = sk[1]->family.params[0];
        model = make_model(
            "R7",
            "Sk(" + k.str() + ") * Sk(" + kp.str() + ") (full table, torsion free)",
            dim, 9, false,
            free_pieces({1, 0, k + kp + 1, 0, k * kp + 1, k * kp + 1, 0, k + kp + 1, 0, 1}),
            {"a_i.a_j = 0", "s^3 = 0", "a_i.s = 0", "a'_i.s = 0", "a'_i.a'_j = 0"});
    } else if (n_s3 == 2 && rest == 1 && f33.size() == 1) {
        // R8: S3 * S3 * F(3,3), ring isomorphic to S2 x (S3 * F(3,3)).
        // Only this step of the iteration holds in every degree; from three
        // copies on, the middle degrees drop below the product model.
        GradedGroup g = kunneth_integral_with_free(s2_power_groups(1), s3_join_f33_groups());
        model = make_model("R8", "S3^2 * F(3,3) (full groups)", dim,
                           static_cast<int>(dim), true,
                           truncate(g, static_cast<int>(dim)));
    } else if (n_s3 >= 3 && rest == 1 && f33.size() == 1) {
        // R8: longer iterations keep only the low-degree groups
        std::vector<GradedPiece> g = free_pieces({1, 0, Int(n_s3), 10});
        model = make_model("R8",
                           "S3^" + std::to_string(n_s3) + " * F(3,3) (degrees <= 3)",
                           dim, 3, false, std::move(g));
    } else if (n_s3 >= 1 && f33.size() == 1 && rest == 2 &&
               (t.size() == 1 || (other.size() == 1 && is_dim7_index2_h3zero(*other[0])))) {
        // R8: iterated joins with F(3,3) and a 7-manifold factor, q <= 3
        const SeSpace& x = t.size() == 1 ? *t[0] : *other[0];
        if (is_dim7_index2_h3zero(x)) {
            const Int k = x.betti.b(2);
            model = make_model("R8",
                               "S3^" + std::to_string(n_s3) + " * F(3,3) * " + x.name +
                                   " (degrees <= 3)",
                               dim, 3, false,
                               free_pieces({1, 0, k + Int(n_s3) + 1, 10}));
        }
    }

    if (!model && n_s3 == 1 && rest == 1 && other.size() == 1 &&
        is_dim7_index2_h3zero(*other[0])) {
        // R1: H^2 = Z^{k+1} and H^3 = 0
        const Int k = other[0]->betti.b(2);
        model = make_model("R1", "S3 * " + other[0]->name + " (degrees <= 3)", dim, 3,
                           false, free_pieces({1, 0, k + 1, 0}));
    }

    if (model)
        check_against_rational(*model, rational);
    return model;
}

}  // namespace sejoin
