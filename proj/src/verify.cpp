#include "sejoin/verify.hpp"

#include "sejoin/expr.hpp"
#include "sejoin/gysin.hpp"
#include "sejoin/integral_model.hpp"
#include "sejoin/join.hpp"
#include "sejoin/lattice.hpp"
#include "sejoin/search.hpp"

#include <array>
#include <functional>
#include <sstream>

namespace sejoin {

namespace {

struct Runner {
    std::vector<VerifyCheck> checks;

    void run(const std::string& name, const std::function<std::string()>& body) {
        try {
            std::string detail = body();
            checks.push_back({name, detail.empty(), detail});
        } catch (const std::exception& e) {
            checks.push_back({name, false, e.what()});
        }
    }
};

std::string check_catalog(const Catalog& catalog) {
    for (const SeSpace& s : catalog.spaces()) {
        const auto vs = validate_space(s);
        if (!vs.empty())
            return s.name + " violates " + vs.front().rule;
    }
    return {};
}

std::string check_sphere_join_table(const Catalog&) {
    for (const auto& p : {std::array<Int, 3>{1, 1, 1}, std::array<Int, 3>{1, 2, 3}}) {
        const SeSpace t = make_three_sasakian(p[0], p[1], p[2]);
        const SeSpace j = join(make_sphere(1), t);
        const Int sigma2 = p[0] * p[1] + p[0] * p[2] + p[1] * p[2];
        if (!j.integral)
            return "no integral model for S3 * " + t.name;
        std::vector<GradedPiece> want(10);
        want[0] = {1, {}};
        want[2] = {2, {}};
        want[4] = {1, {sigma2}};
        want[5] = {1, {}};
        want[6] = {0, {sigma2}};
        want[7] = {2, {}};
        want[9] = {1, {}};
        if (*j.integral != GradedGroup(9, want))
            return "table mismatch for S3 * " + t.name;
    }
    return {};
}

std::string check_del_pezzo_join_table(const Catalog&) {
    for (Int k = 3; k <= 8; ++k) {
        const SeSpace j = join(make_sphere(1), make_del_pezzo_bundle(k));
        if (!j.integral)
            return "no integral model for S3 * Sk(" + k.str() + ")";
        const auto& g = *j.integral;
        if (g.at(2).free_rank != k + 1 || g.at(5).free_rank != k + 1)
            return "H^2/H^5 rank mismatch at k=" + k.str();
        if (g.at(4).free_rank != 0 ||
            Int(g.at(4).torsion.size()) != k)
            return "H^4 torsion mismatch at k=" + k.str();
    }
    return {};
}

std::string check_sk_join_betti(const Catalog&) {
    const SeSpace f44 = make_fermat_link(4, 3);
    for (Int k = 3; k <= 8; ++k) {
        const SeSpace j = join(make_del_pezzo_bundle(k), f44);
        if (j.betti.b(3) != 60 || j.betti.b(5) != 60 * k)
            return "Sk(" + k.str() + ") * F(4,3) Betti mismatch";
        for (Int kp = 3; kp <= 8; ++kp) {
            const SeSpace jj = join(make_del_pezzo_bundle(k), make_del_pezzo_bundle(kp));
            if (jj.betti.b(2) != k + kp + 1 || jj.betti.b(4) != k * kp + 1)
                return "Sk*Sk Betti mismatch at (" + k.str() + "," + kp.str() + ")";
        }
    }
    return {};
}

std::string check_monoid(const Catalog& catalog) {
    const auto& spaces = catalog.spaces();
    const SeSpace circle = make_circle();
    for (const SeSpace& s : spaces) {
        if (join(circle, s) != s)
            return "identity failed for " + s.name;
    }
    // commutativity and a sample of associativity
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        for (std::size_t j = i; j < spaces.size(); ++j) {
            if (join(spaces[i], spaces[j]) != join(spaces[j], spaces[i]))
                return "commutativity failed for " + spaces[i].name + ", " + spaces[j].name;
        }
    }
    for (std::size_t i = 0; i < spaces.size(); i += 3) {
        for (std::size_t j = 1; j < spaces.size(); j += 4) {
            const std::size_t k = (i + j) % spaces.size();
            const SeSpace a = join(join(spaces[i], spaces[j]), spaces[k]);
            const SeSpace b = join(spaces[i], join(spaces[j], spaces[k]));
            if (a != b)
                return "associativity failed for " + spaces[i].name + ", " +
                       spaces[j].name + ", " + spaces[k].name;
        }
    }
    return {};
}

std::string check_structural(const Catalog& catalog) {
    for (const SeSpace& s : catalog.spaces()) {
        if (euler_characteristic(s.betti) != 0)
            return "chi != 0 for " + s.name;
        if (!s.betti.poincare_symmetric())
            return "duality failed for " + s.name;
        if (s.n >= 1) {
            const BaseProfile z = leaf_space_betti(s.betti);
            if (gysin_circle_betti(z) != s.betti)
                return "leaf/gysin round trip failed for " + s.name;
        }
    }
    return {};
}

std::string check_lemma52(const Catalog& catalog) {
    for (const SeSpace& a : catalog.spaces()) {
        for (const SeSpace& b : catalog.spaces()) {
            if (a.n < 1 || b.n < 1)
                continue;
            const SeSpace j = join(a, b);
            const LowBetti lb = low_betti_lemma52(a, b);
            if (lb.b2 && *lb.b2 != j.betti.b(2))
                return "b2 mismatch for " + a.name + " * " + b.name;
            if (lb.b3 && *lb.b3 != j.betti.b(3))
                return "b3 mismatch for " + a.name + " * " + b.name;
            if (lb.b4 && *lb.b4 != j.betti.b(4))
                return "b4 mismatch for " + a.name + " * " + b.name;
        }
    }
    return {};
}

std::string check_scaling(const Catalog&) {
    for (Int n1 = 0; n1 <= 10; ++n1)
        for (Int n2 = 0; n2 <= 10; ++n2)
            scaling_solution(n1, n2);  // throws on any identity failure
    return {};
}

}  // namespace

std::vector<VerifyCheck> run_verify(const Catalog& catalog) {
    Runner r;
    r.run("catalog validates", [&] { return check_catalog(catalog); });
    r.run("Betti structure and leaf round trip", [&] { return check_structural(catalog); });
    r.run("S3 * S(p1,p2,p3) integral table", [&] { return check_sphere_join_table(catalog); });
    r.run("S3 * Sk(k) integral table", [&] { return check_del_pezzo_join_table(catalog); });
    r.run("Sk joins Betti tables", [&] { return check_sk_join_betti(catalog); });
    r.run("monoid laws over the catalog", [&] { return check_monoid(catalog); });
    r.run("low-degree Betti formulas", [&] { return check_lemma52(catalog); });
    r.run("scaling identities", [&] { return check_scaling(catalog); });
    return r.checks;
}

}  // namespace sejoin
