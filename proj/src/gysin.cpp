#include "sejoin/gysin.hpp"

#include "sejoin/errors.hpp"

namespace sejoin {

bool lefschetz_admissible(const BettiVector& b) {
    const Int dim = b.dim();
    if (dim % 2 != 0)
        return false;
    if (b.b(0) != 1 || b.b(1) != 0)
        return false;
    if (!b.poincare_symmetric())
        return false;
    // nondecreasing up to the middle in each parity
    for (Int q = 2; q <= dim / 2; ++q)
        if (b.b(q) < b.b(q - 2))
            return false;
    return true;
}

BaseProfile BaseProfile::from_betti(BettiVector b, Int fano_index) {
    if (fano_index < 1)
        throw std::invalid_argument("BaseProfile: fano_index < 1");
    BaseProfile p;
    p.n = b.dim() / 2;
    p.lefschetz_ok = lefschetz_admissible(b);
    p.betti = std::move(b);
    p.fano_index = std::move(fano_index);
    return p;
}

BettiVector gysin_circle_betti(const BaseProfile& base) {
    if (!base.lefschetz_ok)
        throw LefschetzViolated("gysin_circle_betti: base profile " +
                                base.betti.to_string() +
                                " is not hard-Lefschetz admissible");
    const BettiVector& z = base.betti;
    const Int dim_s = 2 * base.n + 1;
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(dim_s) + 1);
    for (Int q = 0; q <= dim_s; ++q) {
        const Int coker = z.b(q) - std::min(z.b(q - 2), z.b(q));
        const Int ker = z.b(q - 1) - std::min(z.b(q - 1), z.b(q + 1));
        if (coker < 0 || ker < 0)
            throw Inconsistent("gysin_circle_betti: negative rank at degree " +
                               q.str());
        out.push_back(coker + ker);
    }
    return BettiVector(std::move(out));
}

BaseProfile leaf_space_betti(const BettiVector& s) {
    const Int dim_s = s.dim();
    if (dim_s % 2 != 1)
        throw Inconsistent("leaf_space_betti: input dimension must be odd");
    if (s.b(1) != 0)
        throw Inconsistent("leaf_space_betti: input must have b_1 = 0");
    const Int n = (dim_s - 1) / 2;

    std::vector<Int> z(static_cast<std::size_t>(2 * n) + 1, 0);
    z[0] = 1;
    for (Int r = 1; r <= n; ++r) {
        const Int prev = (r >= 2) ? z[static_cast<std::size_t>(r - 2)] : Int(0);
        const Int v = s.b(r) + prev;
        if (v < 0)
            throw Inconsistent("leaf_space_betti: negative rank at degree " + r.str());
        z[static_cast<std::size_t>(r)] = v;
    }
    for (Int r = n + 1; r <= 2 * n; ++r)
        z[static_cast<std::size_t>(r)] = z[static_cast<std::size_t>(2 * n - r)];

    BaseProfile profile = BaseProfile::from_betti(BettiVector(std::move(z)));
    if (!profile.lefschetz_ok)
        throw Inconsistent("leaf_space_betti: derived profile " +
                           profile.betti.to_string() + " is not admissible");
    if (gysin_circle_betti(profile) != s)
        throw Inconsistent("leaf_space_betti: round trip failed for " + s.to_string());
    return profile;
}

}  // namespace sejoin
