#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sejoin/catalog.hpp"
#include "sejoin/errors.hpp"
#include "sejoin/expr.hpp"
#include "sejoin/gysin.hpp"
#include "sejoin/integral_model.hpp"
#include "sejoin/join.hpp"
#include "sejoin/lattice.hpp"
#include "sejoin/report.hpp"
#include "sejoin/search.hpp"
#include "sejoin/verify.hpp"

namespace py = pybind11;

namespace pybind11 {
namespace detail {

// arbitrary-precision integers cross the boundary as python ints
template <>
struct type_caster<sejoin::Int> {
    PYBIND11_TYPE_CASTER(sejoin::Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr()))
            return false;
        value = sejoin::Int(py::str(src).cast<std::string>());
        return true;
    }

    static handle cast(const sejoin::Int& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

}  // namespace detail
}  // namespace pybind11

namespace {

using namespace sejoin;

py::object rat_to_fraction(const Rat& r) {
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(Int(numerator(r)), Int(denominator(r)));
}

py::object groups_to_py(const std::optional<GradedGroup>& g) {
    if (!g)
        return py::none();
    py::list out;
    for (const auto& piece : g->pieces()) {
        py::dict d;
        d["free"] = piece.free_rank;
        d["torsion"] = piece.torsion.empty() ? std::vector<Int>{}
                                             : invariant_factors(piece.torsion);
        out.append(std::move(d));
    }
    return out;
}

py::object tri_to_py(const std::optional<bool>& v) {
    if (!v)
        return py::none();
    return py::bool_(*v);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact invariants of Sasakian-Einstein joins";

    py::register_exception<Error>(m, "SejoinError");

    py::class_<SeSpace>(m, "Space")
        .def_readonly("name", &SeSpace::name)
        .def_readonly("n", &SeSpace::n)
        .def_property_readonly("dim", &SeSpace::dim)
        .def_readonly("index", &SeSpace::index)
        .def_property_readonly("order",
                               [](const SeSpace& s) -> py::object {
                                   if (!s.order.value)
                                       return py::none();
                                   return py::cast(*s.order.value);
                               })
        .def_property_readonly("order_bounds",
                               [](const SeSpace& s) -> py::object {
                                   if (!s.order.bounds)
                                       return py::none();
                                   return py::make_tuple(s.order.bounds->first,
                                                         s.order.bounds->second);
                               })
        .def_property_readonly("local_orders",
                               [](const SeSpace& s) -> py::object {
                                   if (!s.local_orders)
                                       return py::none();
                                   return py::cast(*s.local_orders);
                               })
        .def_readonly("regular", &SeSpace::regular)
        .def_property_readonly("smooth", [](const SeSpace& s) { return tri_to_py(s.smooth); })
        .def_readonly("simply_connected", &SeSpace::simply_connected)
        .def_property_readonly("betti",
                               [](const SeSpace& s) { return s.betti.ranks(); })
        .def_property_readonly("integral",
                               [](const SeSpace& s) { return groups_to_py(s.integral); })
        .def_readonly("three_sasakian", &SeSpace::three_sasakian)
        .def_readonly("homogeneous", &SeSpace::homogeneous)
        .def_property_readonly(
            "se_irreducible",
            [](const SeSpace& s) { return tri_to_py(s.se_irreducible); })
        .def_property_readonly("h3_zero",
                               [](const SeSpace& s) { return tri_to_py(s.h3_zero); })
        .def_readonly("ke_certified", &SeSpace::ke_certified)
        .def_readonly("moduli_dim_lower", &SeSpace::moduli_dim_lower)
        .def_readonly("provenance", &SeSpace::provenance)
        .def_property_readonly("leaves",
                               [](const SeSpace& s) {
                                   std::vector<std::string> names;
                                   for (const auto& leaf : s.leaf_list())
                                       names.push_back(leaf.name);
                                   return names;
                               })
        .def("__eq__", [](const SeSpace& a, const SeSpace& b) { return a == b; })
        .def("__repr__", [](const SeSpace& s) { return "<Space " + s.summary() + ">"; });

    py::class_<JoinCertificate>(m, "JoinCertificate")
        .def_readonly("l1", &JoinCertificate::l1)
        .def_readonly("l2", &JoinCertificate::l2)
        .def_property_readonly("m1",
                               [](const JoinCertificate& c) -> py::object {
                                   return c.m1 ? py::cast(*c.m1) : py::none();
                               })
        .def_property_readonly("m2",
                               [](const JoinCertificate& c) -> py::object {
                                   return c.m2 ? py::cast(*c.m2) : py::none();
                               })
        .def_property_readonly("g",
                               [](const JoinCertificate& c) -> py::object {
                                   return c.g ? py::cast(*c.g) : py::none();
                               })
        .def_property_readonly(
            "verdict", [](const JoinCertificate& c) { return verdict_to_string(c.verdict); })
        .def("__repr__", [](const JoinCertificate& c) {
            return "<JoinCertificate " + verdict_to_string(c.verdict) + ">";
        });

    py::class_<IntegralModel>(m, "IntegralModel")
        .def_readonly("rule_id", &IntegralModel::rule_id)
        .def_readonly("match_description", &IntegralModel::match_description)
        .def_readonly("max_degree", &IntegralModel::max_degree)
        .def_readonly("ring_iso", &IntegralModel::ring_iso)
        .def_readonly("ring_relations", &IntegralModel::ring_relations)
        .def_property_readonly("full", &IntegralModel::scope_full)
        .def_property_readonly("groups",
                               [](const IntegralModel& mm) {
                                   py::list out;
                                   for (const auto& piece : mm.groups) {
                                       py::dict d;
                                       d["free"] = piece.free_rank;
                                       d["torsion"] = piece.torsion.empty()
                                                          ? std::vector<Int>{}
                                                          : invariant_factors(piece.torsion);
                                       out.append(std::move(d));
                                   }
                                   return out;
                               })
        .def("__repr__",
             [](const IntegralModel& mm) { return "<IntegralModel " + mm.rule_id + ">"; });

    py::class_<ScalingSolution>(m, "ScalingSolution")
        .def_readonly("n1", &ScalingSolution::n1)
        .def_readonly("n2", &ScalingSolution::n2)
        .def_property_readonly("c1",
                               [](const ScalingSolution& s) { return rat_to_fraction(s.c1); })
        .def_property_readonly("c2",
                               [](const ScalingSolution& s) { return rat_to_fraction(s.c2); })
        .def_readonly("scalar_curvature", &ScalingSolution::scalar_curvature)
        .def_readonly("einstein_constant", &ScalingSolution::einstein_constant);

    py::class_<LatticePoint>(m, "LatticePoint")
        .def_readonly("l", &LatticePoint::l)
        .def_readonly("k", &LatticePoint::k)
        .def_readonly("l1", &LatticePoint::l1)
        .def_readonly("l2", &LatticePoint::l2)
        .def_readonly("compact_orbifold", &LatticePoint::compact_orbifold)
        .def_readonly("orb_simply_connected", &LatticePoint::orb_simply_connected)
        .def_property_readonly("smooth",
                               [](const LatticePoint& p) { return tri_to_py(p.smooth); })
        .def_readonly("einstein_metric_exists", &LatticePoint::einstein_metric_exists)
        .def_readonly("sasakian_einstein", &LatticePoint::sasakian_einstein)
        .def_property_readonly("rational_cohomology",
                               [](const LatticePoint& p) -> py::object {
                                   if (std::holds_alternative<BettiVector>(p.rational_cohomology))
                                       return py::cast(
                                           std::get<BettiVector>(p.rational_cohomology).ranks());
                                   const auto& d =
                                       std::get<ProductDescriptor>(p.rational_cohomology);
                                   return py::str(d.left + " x " + d.right);
                               })
        .def_property_readonly("advisory_betti",
                               [](const LatticePoint& p) -> py::object {
                                   if (!p.advisory_betti)
                                       return py::none();
                                   return py::cast(p.advisory_betti->ranks());
                               })
        .def_property_readonly("scaling",
                               [](const LatticePoint& p) -> py::object {
                                   if (!p.scaling)
                                       return py::none();
                                   return py::cast(*p.scaling);
                               })
        .def("__repr__", [](const LatticePoint& p) {
            return "<LatticePoint (" + p.l.str() + "," + p.k.str() + ")>";
        });

    py::class_<Violation>(m, "Violation")
        .def_readonly("space", &Violation::space)
        .def_readonly("rule", &Violation::rule)
        .def_readonly("expected", &Violation::expected)
        .def_readonly("found", &Violation::found)
        .def("__repr__",
             [](const Violation& v) { return "<Violation " + v.rule + " in " + v.space + ">"; });

    // catalog constructors
    m.def("circle", &make_circle);
    m.def("sphere", &make_sphere, py::arg("n"));
    m.def("del_pezzo_bundle", &make_del_pezzo_bundle, py::arg("k"));
    m.def("fermat_link", &make_fermat_link, py::arg("d"), py::arg("n"));
    m.def("order_spq", &order_spq, py::arg("p1"), py::arg("p2"), py::arg("p3"));
    m.def("three_sasakian", &make_three_sasakian, py::arg("p1"), py::arg("p2"), py::arg("p3"));
    m.def("toric_omega", &make_toric_omega, py::arg("k"),
          py::arg("order") = std::nullopt);

    // core algebra on raw Betti vectors (lists of nonnegative ints)
    m.def("kunneth_betti", [](const std::vector<Int>& a, const std::vector<Int>& b) {
        return kunneth_betti(BettiVector(a), BettiVector(b)).ranks();
    });
    m.def("euler_characteristic",
          [](const std::vector<Int>& b) { return euler_characteristic(BettiVector(b)); });
    m.def("gysin_circle_betti", [](const std::vector<Int>& z) {
        return gysin_circle_betti(BaseProfile::from_betti(BettiVector(z))).ranks();
    });
    m.def("leaf_space_betti", [](const std::vector<Int>& s) {
        return leaf_space_betti(BettiVector(s)).betti.ranks();
    });

    // the join calculus
    m.def("join", &join, py::arg("s1"), py::arg("s2"));
    m.def("n_fold_join", &n_fold_join, py::arg("spaces"));
    m.def("relative_indices", [](const SeSpace& a, const SeSpace& b) {
        const auto r = relative_indices(a, b);
        return py::make_tuple(r.l1, r.l2);
    });
    m.def("smoothness_certificate", &smoothness_certificate, py::arg("s1"), py::arg("s2"));
    m.def("low_betti_lemma52", [](const SeSpace& a, const SeSpace& b) {
        const LowBetti lb = low_betti_lemma52(a, b);
        py::dict d;
        d["b2"] = lb.b2 ? py::cast(*lb.b2) : py::none();
        d["b3"] = lb.b3 ? py::cast(*lb.b3) : py::none();
        d["b4"] = lb.b4 ? py::cast(*lb.b4) : py::none();
        return d;
    });
    m.def("integral_model", [](const SeSpace& s) -> py::object {
        auto mm = integral_model(s.leaf_list(), s.betti);
        if (!mm)
            return py::none();
        return py::cast(*mm);
    });

    // einstein lattice
    m.def("lattice_point", &lattice_point, py::arg("s1"), py::arg("s2"), py::arg("l"),
          py::arg("k"));
    m.def("lattice_leq", &lattice_leq);
    m.def("lattice_meet", &lattice_meet);
    m.def("lattice_join", &lattice_join);
    m.def("enumerate_smooth", &enumerate_smooth, py::arg("s1"), py::arg("s2"),
          py::arg("lmax"), py::arg("kmax"));
    m.def("cheeger_limit", [](const SeSpace& s1, const SeSpace& s2, const Int& l,
                              const Int& k, const Int& a, const Int& b) {
        const CheegerLimit lim = cheeger_limit(s1, s2, l, k, a, b);
        return py::make_tuple(lim.limit, lim.sequence);
    });
    m.def("scaling_solution", &scaling_solution, py::arg("n1"), py::arg("n2"));

    // search and validation
    m.def("validate_space", &validate_space);
    m.def("cor418_triples", [](const Int& rmax) {
        py::list out;
        for (const auto& h : cor418_triples(rmax).hits) {
            py::dict d;
            d["r"] = std::vector<Int>(h.r.begin(), h.r.end());
            d["p"] = std::vector<Int>(h.p.begin(), h.p.end());
            d["order"] = h.order;
            d["order_odd"] = h.order_odd;
            py::dict verdicts;
            for (const auto& [l, v] : h.sk_join_verdicts)
                verdicts[py::cast(l)] = verdict_to_string(v);
            d["sk_joins"] = std::move(verdicts);
            out.append(std::move(d));
        }
        return out;
    });
    m.def("regular5_status", [](const Int& k) {
        const Regular5Status st = regular5_status(k);
        switch (st.kind) {
            case Regular5Kind::Empty: return py::make_tuple("empty", py::none());
            case Regular5Kind::Point: return py::make_tuple("point", py::none());
            case Regular5Kind::FamilyDimAtLeast:
                return py::make_tuple("family", py::cast(st.family_dim_lower));
        }
        return py::make_tuple("empty", py::none());
    });
    m.def("smooth_sphere_join_predicate", [](const Int& mm, const SeSpace& s) {
        return verdict_to_string(smooth_sphere_join_predicate(mm, s));
    });

    // expressions, catalog, reports
    m.def("eval_expr",
          [](const std::string& text) { return evaluate(parse_expr(text)); });
    m.def("report_json", [](const std::string& text) {
        const JoinExpr expr = parse_expr(text);
        const auto leaves = expr.normalized();
        std::vector<JoinCertificate> certs;
        std::vector<std::pair<std::string, std::string>> factors;
        SeSpace acc = leaves.front();
        for (std::size_t i = 1; i < leaves.size(); ++i) {
            certs.push_back(smoothness_certificate(acc, leaves[i]));
            factors.emplace_back(acc.name, leaves[i].name);
            acc = join(acc, leaves[i]);
        }
        return eval_report(text, acc, certs, factors).dump(2);
    });
    m.def("catalog_names", [] {
        std::vector<std::string> names;
        for (const auto& s : default_catalog().spaces())
            names.push_back(s.name);
        return names;
    });
    m.def("catalog_get", [](const std::string& name) -> py::object {
        const SeSpace* s = default_catalog().find(name);
        if (!s)
            return py::none();
        return py::cast(*s);
    });
    m.def("load_catalog", [](const std::string& path) {
        std::vector<SeSpace> out;
        for (const auto& s : load_catalog(path).spaces())
            out.push_back(s);
        return out;
    });
    m.def("verify", [] {
        py::list out;
        for (const auto& c : run_verify(default_catalog()))
            out.append(py::make_tuple(c.name, c.passed, c.detail));
        return out;
    });
}
