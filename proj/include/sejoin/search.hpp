#pragma once

#include "sejoin/join.hpp"
#include "sejoin/space.hpp"

#include <array>
#include <string>
#include <vector>

namespace sejoin {

struct Violation {
    std::string space;
    std::string rule;
    std::string expected;
    std::string found;
};

// Classification validators, warnings-as-data.  Registry:
//   index_bound_regular        regular => Ind <= n+1
//   three_sasakian_dim         3-Sasakian => dim = 4m+3
//   three_sasakian_index       3-Sasakian of dim 4m+3 => Ind in {m+1, 2m+2}
//   b2_bound_regular_dim7      regular dim 7 => b_2 <= 9
//   regular5_realizable        regular simply connected dim 5 => b_2 not 2, <= 8
//   order_one_regular_smooth   Ord = 1 => regular and smooth
//   euler_char_zero            chi(betti) = 0
//   poincare_duality           b_q = b_{dim-q}
//   b1_zero_simply_connected   simply connected (n >= 1) => b_1 = 0
//   betti_dim                  betti length = dim+1
//   integral_free_rank_match   integral free ranks = betti
//   torsion_duality            integral torsion pairs q <-> dim+1-q
std::vector<Violation> validate_space(const SeSpace& s);

struct Cor418Hit {
    std::array<Int, 3> r;
    std::array<Int, 3> p;  // p_i = 4 r_i + 1
    Int order;
    bool order_odd = false;
    // smoothness of Sk(l) * S(p) for l = 3..8
    std::vector<std::pair<Int, Verdict>> sk_join_verdicts;
};

struct SearchResult {
    std::string query;
    std::string exhaustiveness;
    std::vector<Cor418Hit> hits;
};

// All ordered triples p_i = 4 r_i + 1 with 0 <= r_i <= rmax, pairwise
// coprime.  Every hit has odd order and a smooth join with each Sk(l).
SearchResult cor418_triples(const Int& rmax);

enum class Regular5Kind { Empty, Point, FamilyDimAtLeast };

struct Regular5Status {
    Regular5Kind kind;
    Int family_dim_lower;  // meaningful for FamilyDimAtLeast
};

Regular5Status regular5_status(const Int& k);

// Smoothness of S^{2m+1} * S for an index-2 dim-7 space S: smooth when m is
// odd, or when m is even and Ord(S) is odd.  Indeterminate when the order is
// unknown.  Must agree with the general certificate.
Verdict smooth_sphere_join_predicate(const Int& m, const SeSpace& s);

}  // namespace sejoin
