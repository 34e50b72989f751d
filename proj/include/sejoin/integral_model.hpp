#pragma once

#include "sejoin/graded.hpp"
#include "sejoin/space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sejoin {

// A table-driven integral cohomology model for a join, given by the first
// matching rule.  groups lists degrees 0..max_degree; max_degree = dim for
// full-scope rules and 3 for low-degree ones.  Free ranks are asserted
// against the rational engine (ModelRationalMismatch on any disagreement).
//
// Rules, matched on the flattened leaf multiset, most specific first:
//   R2  S3 * T(p1,p2,p3)                     full groups + ring iso
//   R3  S3^r * T(p1,p2,p3), r >= 2           degrees <= 3
//   R4  S3 * Sk(k)                           full groups
//   R5  S3 * F(3,3)                          full groups
//       F(3,3) * X  (X index-2 dim-7, H3=0)  degrees <= 3
//   R6  Sk(k) * F(4,3)                       full groups
//   R7  Sk(k) * Sk(k')                       full groups
//   R8  S3^r * F(3,3), r >= 2                full groups + ring iso
//       S3^r * F(3,3) * X, r >= 1            degrees <= 3
//   R1  S3 * X                               degrees <= 3
struct IntegralModel {
    std::string rule_id;
    std::string match_description;
    Int dim = 0;                      // dimension of the join
    int max_degree = 0;               // last degree groups[] speaks for
    bool ring_iso = false;
    std::vector<GradedPiece> groups;  // degrees 0..max_degree
    std::vector<std::string> ring_relations;

    bool scope_full() const { return Int(max_degree) == dim; }
    GradedGroup full_groups() const;  // requires scope_full()
    std::string scope_string() const;
};

std::optional<IntegralModel> integral_model(const std::vector<SeSpace>& leaves,
                                            const BettiVector& rational);

}  // namespace sejoin
