#pragma once

#include "sejoin/space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sejoin {

// Relative indices l_i = Ind(S_i) / gcd(Ind(S_1), Ind(S_2)), with
// gcd(0,m) = m so the index-0 identity yields (0,1).
struct RelativeIndices {
    Int l1;
    Int l2;
};

RelativeIndices relative_indices(const SeSpace& s1, const SeSpace& s2);

enum class Verdict { Smooth, Orbifold, Indeterminate };

std::string verdict_to_string(Verdict v);

// The gcd(m1 l2, m2 l1) smoothness test for the join of two smooth spaces.
// g is absent exactly when an unknown order leaves it undetermined (an
// unknown order times a nonzero index, with the known term not 1); the
// verdict is then Indeterminate.
struct JoinCertificate {
    Int l1;
    Int l2;
    std::optional<Int> m1;
    std::optional<Int> m2;
    std::optional<Int> g;
    Verdict verdict = Verdict::Indeterminate;
};

JoinCertificate smoothness_certificate(const SeSpace& s1, const SeSpace& s2);

// The join S1 * S2: dimension adds (as 2n+1 spaces), index is the gcd,
// Betti comes from the Gysin engine over the product of the leaf spaces.
// Joining with the identity circle returns the other factor unchanged.
// Both inputs must be simply connected (pi_1^orb = 0).
SeSpace join(const SeSpace& s1, const SeSpace& s2);

// Left fold of join; also evaluated right-folded and asserted equal.
SeSpace n_fold_join(const std::vector<SeSpace>& spaces);

// Low-degree Betti numbers of the join from the closed formulas.  Each
// value is emitted only inside its stated range (b2 for n_i >= 1, b3 for
// n_i >= 3, b4 for n_i >= 4) and omitted otherwise.
struct LowBetti {
    std::optional<Int> b2;
    std::optional<Int> b3;
    std::optional<Int> b4;
};

LowBetti low_betti_lemma52(const SeSpace& s1, const SeSpace& s2);

// Report-grade notes for shapes whose middle rational cohomology the
// generic engine resolves one way while two outcomes are conceivable
// (S^5 * S with S an index-2 dim-7 space of b_2 = 1).
std::vector<std::string> ambiguity_notes(const std::vector<SeSpace>& leaves);

}  // namespace sejoin
