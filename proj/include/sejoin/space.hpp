#pragma once

#include "sejoin/betti.hpp"
#include "sejoin/graded.hpp"
#include "sejoin/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sejoin {

enum class Family {
    Circle,
    Sphere,
    DelPezzoBundle,
    FermatLink,
    ThreeSasakian,
    ToricOmega,
    Custom,
};

std::string family_to_string(Family f);

// Identity of a catalog atom.  Joins keep the flattened list of their
// factors' params, sorted by sort_key, so that equal joins compare equal
// regardless of how they were parenthesized.
struct FamilyParams {
    Family family = Family::Custom;
    std::vector<Int> params;          // Sphere{n} DelPezzo{k} Fermat{d,n} ThreeSasakian{p1<=p2<=p3} Omega{k}
    std::optional<Int> omega_order;   // supplied order of S(Omega_k), if any
    std::string custom_name;

    std::string canonical_name() const;
    std::string sort_key() const;

    bool operator==(const FamilyParams& o) const {
        return family == o.family && params == o.params && omega_order == o.omega_order &&
               custom_name == o.custom_name;
    }
};

// Ord(S) = order of the leaf space as an orbifold.  Unknown is first class;
// joins may carry bounds when the exact value is not determined.
struct OrderInfo {
    std::optional<Int> value;
    std::optional<std::pair<Int, Int>> bounds;  // [lcm(m1,m2), m1*m2] when inexact

    bool known() const { return value.has_value(); }
    static OrderInfo exact(Int v) { return OrderInfo{std::move(v), std::nullopt}; }
    static OrderInfo unknown() { return OrderInfo{}; }

    bool operator==(const OrderInfo& o) const { return value == o.value && bounds == o.bounds; }
};

// A quasi-regular Sasakian-Einstein space, represented purely by its exact
// discrete invariants.  Real dimension is 2n+1; the n = 0 circle is the
// monoid identity and the only space with index 0.  simply_connected means
// pi_1^orb = 0, which holds for the identity circle by convention.
struct SeSpace {
    std::string name;
    Int n = 0;
    Int index = 0;
    OrderInfo order;
    std::optional<std::vector<Int>> local_orders;  // leaf holonomy orders, sorted, when known
    bool regular = false;
    std::optional<bool> smooth;  // nullopt = indeterminate (unknown order upstream)
    bool simply_connected = true;
    BettiVector betti;
    std::optional<GradedGroup> integral;
    bool three_sasakian = false;
    bool homogeneous = false;
    std::optional<bool> se_irreducible;
    std::optional<bool> h3_zero;  // H^3(S,Z) = 0, when known
    bool ke_certified = false;
    Int moduli_dim_lower = 0;
    std::string provenance;
    FamilyParams family;
    std::vector<SeSpace> joined_leaves;  // empty for atoms

    Int dim() const { return 2 * n + 1; }

    // Flattened atom list: the space itself for atoms, joined_leaves otherwise.
    std::vector<SeSpace> leaf_list() const;

    bool operator==(const SeSpace& o) const;
    bool operator!=(const SeSpace& o) const { return !(*this == o); }

    std::string summary() const;
};

}  // namespace sejoin
