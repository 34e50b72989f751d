#include "sejoin/join.hpp"

#include "sejoin/errors.hpp"
#include "sejoin/gysin.hpp"
#include "sejoin/integral_model.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace sejoin {

std::string verdict_to_string(Verdict v) {
    switch (v) {
        case Verdict::Smooth: return "smooth";
        case Verdict::Orbifold: return "orbifold";
        case Verdict::Indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

RelativeIndices relative_indices(const SeSpace& s1, const SeSpace& s2) {
    const Int g = gcd2(s1.index, s2.index);
    if (g == 0)
        return {0, 1};  // two identity factors
    return {s1.index / g, s2.index / g};
}

JoinCertificate smoothness_certificate(const SeSpace& s1, const SeSpace& s2) {
    JoinCertificate cert;
    const auto [l1, l2] = relative_indices(s1, s2);
    cert.l1 = l1;
    cert.l2 = l2;
    cert.m1 = s1.order.value;
    cert.m2 = s2.order.value;

    // term m*l is determined when the order is known or l = 0
    std::optional<Int> t1, t2;
    if (cert.m1)
        t1 = *cert.m1 * l2;
    else if (l2 == 0)
        t1 = 0;
    if (cert.m2)
        t2 = *cert.m2 * l1;
    else if (l1 == 0)
        t2 = 0;

    if (t1 && t2) {
        cert.g = gcd2(*t1, *t2);
    } else if ((t1 && *t1 == 1) || (t2 && *t2 == 1)) {
        // gcd with 1 needs no second factor
        cert.g = 1;
    }
    if (cert.g)
        cert.verdict = (*cert.g == 1) ? Verdict::Smooth : Verdict::Orbifold;
    else
        cert.verdict = Verdict::Indeterminate;
    return cert;
}

namespace {

// Ord of the join's leaf space Z1 x ... x Zn, computed over the flattened
// leaves so that every parenthesization agrees.  The local uniformizing
// groups of a product are products, so when every leaf's local-order
// multiset is known the order is the exact lcm of the products; when only
// the orders are known the bracket [lcm(m_i), prod(m_i)] remains.
OrderInfo join_order(const std::vector<SeSpace>& leaves,
                     std::optional<std::vector<Int>>& local_orders_out) {
    local_orders_out = std::nullopt;
    bool all_locals = true, all_orders = true;
    for (const SeSpace& leaf : leaves) {
        all_locals = all_locals && leaf.local_orders.has_value();
        all_orders = all_orders && leaf.order.known();
    }
    if (all_locals) {
        std::set<Int> products{1};
        for (const SeSpace& leaf : leaves) {
            std::set<Int> next;
            for (const Int& a : products)
                for (const Int& b : *leaf.local_orders)
                    next.insert(a * b);
            products = std::move(next);
        }
        local_orders_out = std::vector<Int>(products.begin(), products.end());
        return OrderInfo::exact(lcm_all(*local_orders_out));
    }
    if (all_orders) {
        Int lo = 1, hi = 1;
        for (const SeSpace& leaf : leaves) {
            lo = lcm2(lo, *leaf.order.value);
            hi *= *leaf.order.value;
        }
        if (lo == hi)
            return OrderInfo::exact(lo);
        return OrderInfo{std::nullopt, std::make_pair(lo, hi)};
    }
    return OrderInfo::unknown();
}

// Smoothness over the flattened leaves.  With relative indices
// l_i = Ind_i / gcd(Ind_1..Ind_n), the n-fold join is smooth iff
// gcd(m_i, l_i) = 1 for every leaf and gcd(m_i, m_j) = 1 for every pair;
// for n = 2 this is exactly the gcd(m1 l2, m2 l1) = 1 test.  Conditions
// that an unknown order cannot affect (l_i = 1, or a partner of order 1)
// still resolve, so an r-fold sphere join with an unknown-order factor
// correctly comes out smooth.
std::optional<bool> join_smooth(const std::vector<SeSpace>& leaves) {
    std::vector<Int> indices;
    indices.reserve(leaves.size());
    for (const SeSpace& leaf : leaves)
        indices.push_back(leaf.index);
    const Int g = gcd_all(indices);

    bool indeterminate = false;
    for (const SeSpace& leaf : leaves) {
        if (leaf.smooth && !*leaf.smooth)
            return false;
        if (!leaf.smooth)
            indeterminate = true;
    }
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        const Int li = leaves[i].index / g;
        const auto& mi = leaves[i].order.value;
        if (mi) {
            if (gcd2(*mi, li) != 1)
                return false;
        } else if (li != 1) {
            indeterminate = true;
        }
        for (std::size_t j = i + 1; j < leaves.size(); ++j) {
            const auto& mj = leaves[j].order.value;
            if (mi && mj) {
                if (gcd2(*mi, *mj) != 1)
                    return false;
            } else if ((!mi || *mi != 1) && (!mj || *mj != 1)) {
                indeterminate = true;
            }
        }
    }
    if (indeterminate)
        return std::nullopt;
    return true;
}

std::vector<SeSpace> merged_leaves(const SeSpace& s1, const SeSpace& s2) {
    std::vector<SeSpace> leaves = s1.leaf_list();
    const std::vector<SeSpace> right = s2.leaf_list();
    leaves.insert(leaves.end(), right.begin(), right.end());
    std::stable_sort(leaves.begin(), leaves.end(),
                     [](const SeSpace& a, const SeSpace& b) {
                         return a.family.sort_key() < b.family.sort_key();
                     });
    return leaves;
}

}  // namespace

SeSpace join(const SeSpace& s1, const SeSpace& s2) {
    if (!s1.simply_connected || !s2.simply_connected)
        throw NotSimplyConnected("join: both factors must have pi_1^orb = 0");
    // the identity circle: return the other factor unchanged
    if (s1.n == 0)
        return s2;
    if (s2.n == 0)
        return s1;

    SeSpace out;
    out.joined_leaves = merged_leaves(s1, s2);
    out.n = s1.n + s2.n;
    out.index = gcd2(s1.index, s2.index);
    out.order = join_order(out.joined_leaves, out.local_orders);
    out.regular = s1.regular && s2.regular;
    out.smooth = join_smooth(out.joined_leaves);
    out.simply_connected = true;
    out.three_sasakian = false;
    out.homogeneous = s1.homogeneous && s2.homogeneous;
    out.se_irreducible = false;
    out.ke_certified = s1.ke_certified && s2.ke_certified;
    out.moduli_dim_lower = std::max(s1.moduli_dim_lower, s2.moduli_dim_lower);

    const BaseProfile z1 = leaf_space_betti(s1.betti);
    const BaseProfile z2 = leaf_space_betti(s2.betti);
    const BettiVector product = kunneth_betti(z1.betti, z2.betti);
    out.betti = gysin_circle_betti(BaseProfile::from_betti(product, out.index));

    {
        std::ostringstream name;
        for (std::size_t i = 0; i < out.joined_leaves.size(); ++i)
            name << (i ? " * " : "") << out.joined_leaves[i].name;
        out.name = name.str();
    }
    out.family = FamilyParams{Family::Custom, {}, std::nullopt, out.name};
    out.provenance = "join";

    if (auto model = integral_model(out.joined_leaves, out.betti)) {
        if (model->scope_full())
            out.integral = model->full_groups();
        if (model->max_degree >= 3)
            out.h3_zero = model->groups[3].trivial();
    }
    if (!out.h3_zero && out.betti.b(3) > 0)
        out.h3_zero = false;
    return out;
}

SeSpace n_fold_join(const std::vector<SeSpace>& spaces) {
    if (spaces.empty())
        throw std::invalid_argument("n_fold_join: empty list");
    SeSpace left = spaces.front();
    for (std::size_t i = 1; i < spaces.size(); ++i)
        left = join(left, spaces[i]);
    SeSpace right = spaces.back();
    for (std::size_t i = spaces.size() - 1; i-- > 0;)
        right = join(spaces[i], right);
    if (left != right)
        throw Error("n_fold_join: fold order changed the result for " + left.name);
    return left;
}

LowBetti low_betti_lemma52(const SeSpace& s1, const SeSpace& s2) {
    LowBetti out;
    const Int n1 = s1.n, n2 = s2.n;
    const BettiVector& a = s1.betti;
    const BettiVector& b = s2.betti;
    if (n1 >= 1 && n2 >= 1)
        out.b2 = a.b(2) + b.b(2) + 1;
    if (n1 >= 3 && n2 >= 3)
        out.b3 = a.b(3) + b.b(3);
    if (n1 >= 4 && n2 >= 4)
        out.b4 = a.b(4) + b.b(4) + a.b(2) * b.b(2) + a.b(2) + b.b(2) + 1;
    return out;
}

std::vector<std::string> ambiguity_notes(const std::vector<SeSpace>& leaves) {
    std::vector<std::string> notes;
    if (leaves.size() != 2)
        return notes;
    for (int i = 0; i < 2; ++i) {
        const SeSpace& a = leaves[static_cast<std::size_t>(i)];
        const SeSpace& b = leaves[static_cast<std::size_t>(1 - i)];
        const bool a_is_s5 = a.family.family == Family::Sphere && a.n == 2;
        const bool b_shape = b.n == 3 && b.index == 2 && b.betti.b(2) == 1;
        if (a_is_s5 && b_shape) {
            notes.push_back(
                "S5 * " + b.name + " with b_2 = 1: the middle rational groups "
                "H^5, H^6 admit two outcomes; the engine reports the first "
                "(both zero), which hard Lefschetz on the orbifold base forces, "
                "but the classification leaves the second (both Q) open.");
            break;
        }
    }
    return notes;
}

}  // namespace sejoin
