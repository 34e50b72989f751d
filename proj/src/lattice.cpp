#include "sejoin/lattice.hpp"

#include "sejoin/errors.hpp"
#include "sejoin/gysin.hpp"

#include <sstream>

namespace sejoin {

ScalingSolution scaling_solution(const Int& n1, const Int& n2) {
    if (n1 < 0 || n2 < 0)
        throw std::invalid_argument("scaling_solution: n_i must be nonnegative");
    const Int N = n1 + n2;
    ScalingSolution s;
    s.n1 = n1;
    s.n2 = n2;
    s.c1 = Rat(n1 + 1, N + 1);
    s.c2 = Rat(n2 + 1, N + 1);
    s.scalar_curvature = 4 * N * (N + 1);
    s.einstein_constant = 2 * (N + 1);

    // Scal(c h) = Scal(h) / c.  Factor i starts with Scal = 4 n_i (n_i + 1)
    // and Einstein constant 2(n_i + 1); after rescaling by c_i both factors
    // must share the constant 2(N+1) and the total scalar curvature must be
    // 4N(N+1), in exact arithmetic.
    Rat total = 0;
    for (const auto& [n, c] : {std::make_pair(n1, s.c1), std::make_pair(n2, s.c2)}) {
        const Rat scal = Rat(4 * n * (n + 1)) / c;
        total += scal;
        if (n >= 1) {
            const Rat constant = Rat(2 * (n + 1)) / c;
            if (constant != Rat(s.einstein_constant))
                throw Error("scaling_solution: unequal Einstein constants");
        }
    }
    if (total != Rat(s.scalar_curvature))
        throw Error("scaling_solution: scalar curvature identity failed");
    return s;
}

LatticePoint lattice_point(const SeSpace& s1, const SeSpace& s2, const Int& l,
                           const Int& k) {
    if (l < 0 || k < 0)
        throw std::invalid_argument("lattice_point: l, k must be nonnegative");
    if (l == 0 && k == 0)
        throw BothZero("lattice_point: (l,k) = (0,0) is not a lattice point");

    LatticePoint p;
    p.s1 = s1;
    p.s2 = s2;
    p.l = l;
    p.k = k;
    const auto [l1, l2] = relative_indices(s1, s2);
    p.l1 = l1;
    p.l2 = l2;
    p.orb_simply_connected = (gcd2(l, k) == 1);

    // The acting circle's image in the 2-torus depends only on the ratio
    // l : k, so M(dl,dk) and M(l,k) coincide as spaces and the order gcd
    // test applies to the reduced pair.  The test is sufficient,
    // one-directional: a failure leaves smoothness unknown, never false.
    // Non-smooth factors force false.
    if ((s1.smooth && !*s1.smooth) || (s2.smooth && !*s2.smooth)) {
        p.smooth = false;
    } else if (s1.order.known() && s2.order.known() && s1.smooth && s2.smooth) {
        const Int d = gcd2(l, k);
        const Int g = gcd2(*s1.order.value * (k / d), *s2.order.value * (l / d));
        p.smooth = (g == 1) ? std::optional<bool>(true) : std::nullopt;
    } else {
        p.smooth = std::nullopt;
    }

    // (l,k) = m (l1,l2) for a positive integer m
    p.sasakian_einstein = false;
    if (l1 == 0) {
        p.sasakian_einstein = (l == 0 && k > 0 && k % l2 == 0);
    } else if (l % l1 == 0) {
        const Int m = l / l1;
        p.sasakian_einstein = (m > 0 && k == m * l2);
    }

    if (l >= 1 && k >= 1) {
        p.rational_cohomology = join(s1, s2).betti;
    } else if (l == 0) {
        // M(S1,S2;0,k) = Z1 x S2
        p.rational_cohomology = ProductDescriptor{"Z(" + s1.name + ")", s2.name};
        p.advisory_betti = kunneth_betti(leaf_space_betti(s1.betti).betti, s2.betti);
    } else {
        // M(S1,S2;l,0) = S1 x Z2
        p.rational_cohomology = ProductDescriptor{s1.name, "Z(" + s2.name + ")"};
        p.advisory_betti = kunneth_betti(s1.betti, leaf_space_betti(s2.betti).betti);
    }

    if (p.sasakian_einstein)
        p.scaling = scaling_solution(s1.n, s2.n);
    return p;
}

namespace {

void require_same_lattice(const LatticePoint& p, const LatticePoint& q) {
    if (p.s1 != q.s1 || p.s2 != q.s2)
        throw MismatchedFactors("lattice operation on points of different lattices");
}

}  // namespace

bool lattice_leq(const LatticePoint& p, const LatticePoint& q) {
    require_same_lattice(p, q);
    // componentwise divisibility: the order induced by the gcd meet
    return (p.l == 0 ? q.l == 0 : q.l % p.l == 0) &&
           (p.k == 0 ? q.k == 0 : q.k % p.k == 0);
}

LatticePoint lattice_meet(const LatticePoint& p, const LatticePoint& q) {
    require_same_lattice(p, q);
    return lattice_point(p.s1, p.s2, gcd2(p.l, q.l), gcd2(p.k, q.k));
}

LatticePoint lattice_join(const LatticePoint& p, const LatticePoint& q) {
    require_same_lattice(p, q);
    return lattice_point(p.s1, p.s2, lcm2(p.l, q.l), lcm2(p.k, q.k));
}

std::vector<LatticePoint> enumerate_smooth(const SeSpace& s1, const SeSpace& s2,
                                           const Int& lmax, const Int& kmax) {
    if (!s1.order.known() || !s2.order.known())
        throw IndeterminateOrder("enumerate_smooth: both orders must be known");
    const Int m1 = *s1.order.value;
    const Int m2 = *s2.order.value;
    std::vector<LatticePoint> out;
    for (Int l = 1; l <= lmax; ++l) {
        for (Int k = 1; k <= kmax; ++k) {
            const Int d = gcd2(l, k);
            if (gcd2(m1 * (k / d), m2 * (l / d)) == 1)
                out.push_back(lattice_point(s1, s2, l, k));
        }
    }
    return out;
}

CheegerLimit cheeger_limit(const SeSpace& s1, const SeSpace& s2, const Int& l,
                           const Int& k, const Int& a, const Int& b) {
    if (a < 0 || b < 0)
        throw std::invalid_argument("cheeger_limit: a, b must be nonnegative");
    CheegerLimit out{lattice_point(s1, s2, l, k), {}};
    std::ostringstream os;
    os << "lim t->inf M(" << s1.name << ", " << s2.name << "; " << l << "t+" << a
       << ", " << k << "t+" << b << ")";
    out.sequence = os.str();
    return out;
}

}  // namespace sejoin
