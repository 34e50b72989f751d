#pragma once

#include "sejoin/betti.hpp"
#include "sejoin/join.hpp"
#include "sejoin/space.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sejoin {

// Exact rescaling of the product of two Kaehler-Einstein leaf metrics:
// h' = (n1+1) h1 / (N+1) + (n2+1) h2 / (N+1) with N = n1 + n2.  After the
// rescale both factors share Einstein constant 2(N+1) and the product has
// scalar curvature 4N(N+1).
struct ScalingSolution {
    Int n1;
    Int n2;
    Rat c1;
    Rat c2;
    Int scalar_curvature;
    Int einstein_constant;
};

ScalingSolution scaling_solution(const Int& n1, const Int& n2);

// Boundary points of the lattice are honest products, named symbolically.
struct ProductDescriptor {
    std::string left;
    std::string right;
};

// One point M(S1,S2;l,k) of the two-parameter Einstein lattice, classified:
//   compact_orbifold        always true
//   orb_simply_connected    iff gcd(l,k) = 1
//   smooth                  true when gcd(m1 k', m2 l') = 1 for the reduced
//                           pair (l',k') = (l,k)/gcd(l,k); the underlying
//                           space only sees the ratio l : k.  A sufficient
//                           condition: stored unknown when the test fails
//                           or an order is unknown, never false from it.
//   einstein_metric_exists  always true
//   sasakian_einstein       iff (l,k) is a positive multiple of (l1,l2)
// Interior points carry the join's Betti vector; boundary points carry a
// product descriptor plus an advisory Kuenneth Betti vector.
struct LatticePoint {
    SeSpace s1;
    SeSpace s2;
    Int l;
    Int k;
    Int l1;
    Int l2;
    bool compact_orbifold = true;
    bool orb_simply_connected = false;
    std::optional<bool> smooth;
    bool einstein_metric_exists = true;
    bool sasakian_einstein = false;
    std::variant<BettiVector, ProductDescriptor> rational_cohomology;
    std::optional<BettiVector> advisory_betti;      // boundary only
    std::optional<ScalingSolution> scaling;         // SE points only
};

LatticePoint lattice_point(const SeSpace& s1, const SeSpace& s2, const Int& l, const Int& k);

// Componentwise divisibility order with lcm join and gcd meet (the order a
// gcd meet induces); both points must belong to the same (S1, S2) lattice.
bool lattice_leq(const LatticePoint& p, const LatticePoint& q);
LatticePoint lattice_meet(const LatticePoint& p, const LatticePoint& q);
LatticePoint lattice_join(const LatticePoint& p, const LatticePoint& q);

// All (l,k) in [1,lmax] x [1,kmax] with gcd(m1 k, m2 l) = 1, each tagged SE
// or not.  Requires both orders known.
std::vector<LatticePoint> enumerate_smooth(const SeSpace& s1, const SeSpace& s2,
                                           const Int& lmax, const Int& kmax);

// The Cheeger limit of M(S1,S2; l t + a, k t + b) as t grows is the point
// (l,k).
struct CheegerLimit {
    LatticePoint limit;
    std::string sequence;
};

CheegerLimit cheeger_limit(const SeSpace& s1, const SeSpace& s2, const Int& l,
                           const Int& k, const Int& a, const Int& b);

}  // namespace sejoin
