#pragma once

#include "sejoin/betti.hpp"

namespace sejoin {

// Rational profile of a compact Kaehler (Fano) base of complex dimension n.
// The Euler class of the circle bundle is never stored: the engine assumes
// it acts as a Kaehler class with full hard Lefschetz, which is what the
// admissibility certificate below checks for.
struct BaseProfile {
    Int n;              // complex dimension; betti has real dimension 2n
    BettiVector betti;
    Int fano_index = 1;
    bool lefschetz_ok = false;

    static BaseProfile from_betti(BettiVector b, Int fano_index = 1);
};

// Hard-Lefschetz admissibility of an even-dimensional Betti vector:
// b_0 = 1, b_1 = 0, Poincare symmetric, and each parity's ranks are
// nondecreasing up to the middle degree.
bool lefschetz_admissible(const BettiVector& b);

// Betti vector of the total space of the circle bundle over the base, via
// the Gysin sequence
//
//   ... -> H^{q-2}(Z) --e--> H^q(Z) -> H^q(S) -> H^{q-1}(Z) --e--> H^{q+1}(Z) -> ...
//
// Rationally H^q(S) = coker(e: H^{q-2} -> H^q) + ker(e: H^{q-1} -> H^{q+1}).
// Hard Lefschetz makes cup product with e injective below the middle degree
// and surjective above it, so rank(e: H^p -> H^{p+2}) = min(b_p, b_{p+2})
// for every p.  Hence
//
//   b_q(S) = [b_q - min(b_{q-2}, b_q)] + [b_{q-1} - min(b_{q-1}, b_{q+1})]
//
// with out-of-range ranks read as 0.  For q <= n this reduces to
// b_q(S) = b_q(Z) - b_{q-2}(Z), the harmonic-theory formula.
BettiVector gysin_circle_betti(const BaseProfile& base);

// Inverts the q <= n part of the Gysin formula: b_r(Z) = b_r(S) + b_{r-2}(Z)
// for 1 <= r <= n, upper half by Poincare duality.  The result is certified
// by a round trip through gysin_circle_betti.
BaseProfile leaf_space_betti(const BettiVector& s);

}  // namespace sejoin
