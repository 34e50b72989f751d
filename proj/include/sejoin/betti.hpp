#pragma once

#include "sejoin/numeric.hpp"

#include <string>
#include <vector>

namespace sejoin {

// Rational Betti numbers b_0..b_dim of a closed space of real dimension dim.
// Out-of-range degrees read as 0.
class BettiVector {
public:
    BettiVector() = default;
    explicit BettiVector(std::vector<Int> ranks);

    static BettiVector point();
    static BettiVector sphere(const Int& dim);

    Int dim() const { return Int(ranks_.size()) - 1; }
    const std::vector<Int>& ranks() const { return ranks_; }
    Int b(const Int& q) const;

    bool poincare_symmetric() const;
    bool b1_zero() const;

    bool operator==(const BettiVector& other) const { return ranks_ == other.ranks_; }
    bool operator!=(const BettiVector& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    std::vector<Int> ranks_;  // b_0 .. b_dim
};

// Degree-wise convolution c_q = sum_i a_i * b_{q-i}; dim adds.
BettiVector kunneth_betti(const BettiVector& a, const BettiVector& b);

Int euler_characteristic(const BettiVector& b);

}  // namespace sejoin
