#include "sejoin/betti.hpp"

#include <sstream>
#include <stdexcept>

namespace sejoin {

BettiVector::BettiVector(std::vector<Int> ranks) : ranks_(std::move(ranks)) {
    if (ranks_.empty())
        throw std::invalid_argument("BettiVector: empty rank list");
    if (ranks_.front() != 1)
        throw std::invalid_argument("BettiVector: b_0 must be 1 (connected space)");
    for (const Int& r : ranks_)
        if (r < 0)
            throw std::invalid_argument("BettiVector: negative rank");
}

BettiVector BettiVector::point() { return BettiVector(std::vector<Int>{1}); }

BettiVector BettiVector::sphere(const Int& dim) {
    if (dim < 1)
        throw std::invalid_argument("BettiVector::sphere: dim < 1");
    std::vector<Int> r(static_cast<std::size_t>(dim) + 1, 0);
    r.front() = 1;
    r.back() = 1;
    return BettiVector(std::move(r));
}

Int BettiVector::b(const Int& q) const {
    if (q < 0 || q > dim())
        return 0;
    return ranks_[static_cast<std::size_t>(q)];
}

bool BettiVector::poincare_symmetric() const {
    const std::size_t n = ranks_.size();
    for (std::size_t q = 0; q < n; ++q)
        if (ranks_[q] != ranks_[n - 1 - q])
            return false;
    return true;
}

bool BettiVector::b1_zero() const { return b(1) == 0; }

std::string BettiVector::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t q = 0; q < ranks_.size(); ++q)
        os << (q ? "," : "") << ranks_[q];
    os << ")";
    return os.str();
}

BettiVector kunneth_betti(const BettiVector& a, const BettiVector& b) {
    const auto& xa = a.ranks();
    const auto& xb = b.ranks();
    std::vector<Int> c(xa.size() + xb.size() - 1, 0);
    for (std::size_t i = 0; i < xa.size(); ++i)
        for (std::size_t j = 0; j < xb.size(); ++j)
            c[i + j] += xa[i] * xb[j];
    return BettiVector(std::move(c));
}

Int euler_characteristic(const BettiVector& b) {
    Int chi = 0;
    int sign = 1;
    for (const Int& r : b.ranks()) {
        chi += sign * r;
        sign = -sign;
    }
    return chi;
}

}  // namespace sejoin
