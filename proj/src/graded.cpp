#include "sejoin/graded.hpp"

#include "sejoin/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sejoin {

std::string GradedPiece::to_string() const {
    if (trivial())
        return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1)
            os << "^" << free_rank;
        first = false;
    }
    for (const Int& t : invariant_factors(torsion)) {
        os << (first ? "" : "+") << "Z_" << t;
        first = false;
    }
    return os.str();
}

GradedGroup::GradedGroup(Int dim, std::vector<GradedPiece> pieces)
    : dim_(std::move(dim)), pieces_(std::move(pieces)) {
    if (dim_ < 0 || pieces_.size() != static_cast<std::size_t>(dim_) + 1)
        throw std::invalid_argument("GradedGroup: piece count must be dim+1");
    for (auto& p : pieces_) {
        if (p.free_rank < 0)
            throw std::invalid_argument("GradedGroup: negative free rank");
        for (const Int& t : p.torsion)
            if (t < 2)
                throw std::invalid_argument("GradedGroup: cyclic order < 2");
    }
}

GradedGroup GradedGroup::from_betti(const BettiVector& b) {
    std::vector<GradedPiece> pieces;
    pieces.reserve(b.ranks().size());
    for (const Int& r : b.ranks())
        pieces.push_back(GradedPiece{r, {}});
    return GradedGroup(b.dim(), std::move(pieces));
}

const GradedPiece& GradedGroup::at(const Int& q) const {
    static const GradedPiece zero{};
    if (q < 0 || q > dim_)
        return zero;
    return pieces_[static_cast<std::size_t>(q)];
}

BettiVector GradedGroup::free_betti() const {
    std::vector<Int> r;
    r.reserve(pieces_.size());
    for (const auto& p : pieces_)
        r.push_back(p.free_rank);
    return BettiVector(std::move(r));
}

GradedGroup GradedGroup::canonical() const {
    GradedGroup g = *this;
    for (auto& p : g.pieces_)
        p.torsion = invariant_factors(p.torsion);
    return g;
}

bool GradedGroup::torsion_duality_ok() const {
    for (Int q = 0; q <= dim_; ++q) {
        const Int qdual = dim_ + 1 - q;
        const auto lhs = invariant_factors(at(q).torsion);
        const auto rhs = invariant_factors(at(qdual).torsion);
        if (lhs != rhs)
            return false;
    }
    return true;
}

bool GradedGroup::operator==(const GradedGroup& other) const {
    if (dim_ != other.dim_)
        return false;
    for (Int q = 0; q <= dim_; ++q) {
        if (at(q).free_rank != other.at(q).free_rank)
            return false;
        if (invariant_factors(at(q).torsion) != invariant_factors(other.at(q).torsion))
            return false;
    }
    return true;
}

std::string GradedGroup::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t q = 0; q < pieces_.size(); ++q)
        os << (q ? "," : "") << pieces_[q].to_string();
    os << ")";
    return os.str();
}

GradedGroup kunneth_integral_with_free(const GradedGroup& a, const GradedGroup& b) {
    auto torsion_free = [](const GradedGroup& g) {
        for (const auto& p : g.pieces())
            if (!p.torsion.empty())
                return false;
        return true;
    };
    const bool a_free = torsion_free(a);
    const bool b_free = torsion_free(b);
    if (!a_free && !b_free)
        throw BothFactorsHaveTorsion(
            "kunneth_integral_with_free: both factors carry torsion");
    // put the torsion-free factor first
    const GradedGroup& f = a_free ? a : b;
    const GradedGroup& g = a_free ? b : a;

    const Int dim = a.dim() + b.dim();
    std::vector<GradedPiece> out(static_cast<std::size_t>(dim) + 1);
    for (Int i = 0; i <= f.dim(); ++i) {
        const Int fr = f.at(i).free_rank;
        if (fr == 0)
            continue;
        for (Int j = 0; j <= g.dim(); ++j) {
            auto& piece = out[static_cast<std::size_t>(i + j)];
            piece.free_rank += fr * g.at(j).free_rank;
            for (const Int& t : g.at(j).torsion)
                for (Int c = 0; c < fr; ++c)
                    piece.torsion.push_back(t);
        }
    }
    return GradedGroup(dim, std::move(out));
}

}  // namespace sejoin
