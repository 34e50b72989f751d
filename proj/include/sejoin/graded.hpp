#pragma once

#include "sejoin/betti.hpp"
#include "sejoin/numeric.hpp"

#include <string>
#include <vector>

namespace sejoin {

// One degree of an integral cohomology group: Z^free_rank plus a multiset of
// cyclic summand orders.  Torsion is kept as given; comparisons canonicalize
// to invariant-factor form first.
struct GradedPiece {
    Int free_rank = 0;
    std::vector<Int> torsion;  // each >= 2

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    std::string to_string() const;
};

class GradedGroup {
public:
    GradedGroup() = default;
    GradedGroup(Int dim, std::vector<GradedPiece> pieces);

    static GradedGroup from_betti(const BettiVector& b);

    Int dim() const { return dim_; }
    const std::vector<GradedPiece>& pieces() const { return pieces_; }
    const GradedPiece& at(const Int& q) const;

    BettiVector free_betti() const;

    // Replaces each degree's torsion by its invariant factors.
    GradedGroup canonical() const;

    // Torsion in degree q must match torsion in degree dim+1-q (closed
    // oriented odd-dimensional spaces).
    bool torsion_duality_ok() const;

    bool operator==(const GradedGroup& other) const;
    bool operator!=(const GradedGroup& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    Int dim_ = 0;
    std::vector<GradedPiece> pieces_;  // degree 0 .. dim
};

// Integral Kuenneth product in the torsion-free case: at least one factor
// must be torsion-free in every degree, so there are no Tor terms.
GradedGroup kunneth_integral_with_free(const GradedGroup& a, const GradedGroup& b);

}  // namespace sejoin
