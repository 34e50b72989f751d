#include "sejoin/report.hpp"

#include "sejoin/errors.hpp"

#include <limits>
#include <sstream>

namespace sejoin {

namespace {

// Integers go out as JSON numbers when they fit in 64 bits, as decimal
// strings otherwise (Fermat middle Betti numbers can exceed any fixed
// width).
Json int_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

Json int_list_json(const std::vector<Int>& xs) {
    Json arr = Json::array();
    for (const Int& x : xs)
        arr.push_back(int_json(x));
    return arr;
}

Json betti_json(const BettiVector& b) { return int_list_json(b.ranks()); }

Json opt_bool_json(const std::optional<bool>& v) {
    if (!v)
        return Json("unknown");
    return Json(*v);
}

Json groups_json(const std::vector<GradedPiece>& pieces) {
    Json arr = Json::array();
    for (std::size_t q = 0; q < pieces.size(); ++q) {
        Json piece;
        piece["q"] = q;
        piece["free"] = int_json(pieces[q].free_rank);
        piece["torsion"] = pieces[q].torsion.empty()
                               ? Json::array()
                               : int_list_json(invariant_factors(pieces[q].torsion));
        piece["group"] = GradedPiece{pieces[q].free_rank,
                                     pieces[q].torsion.empty()
                                         ? std::vector<Int>{}
                                         : invariant_factors(pieces[q].torsion)}
                             .to_string();
        arr.push_back(std::move(piece));
    }
    return arr;
}

}  // namespace

Format format_from_string(const std::string& name) {
    if (name == "table")
        return Format::Table;
    if (name == "json")
        return Format::Jsn;
    if (name == "tsv")
        return Format::Tsv;
    throw Error("unknown format '" + name + "' (expected table, json, or tsv)");
}

Json space_to_json(const SeSpace& s) {
    Json j;
    j["name"] = s.name;
    j["dim"] = int_json(s.dim());
    j["n"] = int_json(s.n);
    j["index"] = int_json(s.index);
    j["order"] = s.order.known() ? int_json(*s.order.value) : Json("unknown");
    if (s.order.bounds) {
        j["order_bounds"] =
            Json::array({int_json(s.order.bounds->first), int_json(s.order.bounds->second)});
    }
    j["local_orders"] = s.local_orders ? int_list_json(*s.local_orders) : Json("unknown");
    j["regular"] = s.regular;
    j["smooth"] = opt_bool_json(s.smooth);
    j["simply_connected"] = s.simply_connected;
    j["three_sasakian"] = s.three_sasakian;
    j["homogeneous"] = s.homogeneous;
    j["se_irreducible"] = opt_bool_json(s.se_irreducible);
    j["ke_certified"] = s.ke_certified;
    j["moduli_dim_lower"] = int_json(s.moduli_dim_lower);
    j["betti"] = betti_json(s.betti);
    j["euler_characteristic"] = int_json(euler_characteristic(s.betti));
    j["h3_zero"] = opt_bool_json(s.h3_zero);
    j["integral"] = s.integral ? groups_json(s.integral->pieces()) : Json("unknown");
    Json leaves = Json::array();
    for (const SeSpace& leaf : s.leaf_list())
        leaves.push_back(leaf.name);
    j["leaves"] = std::move(leaves);
    j["provenance"] = s.provenance;
    return j;
}

Json certificate_to_json(const JoinCertificate& c, const std::string& left,
                         const std::string& right) {
    Json j;
    j["factors"] = Json::array({left, right});
    j["l"] = Json::array({int_json(c.l1), int_json(c.l2)});
    j["m"] = Json::array({c.m1 ? int_json(*c.m1) : Json("unknown"),
                          c.m2 ? int_json(*c.m2) : Json("unknown")});
    j["g"] = c.g ? int_json(*c.g) : Json("unknown");
    j["verdict"] = verdict_to_string(c.verdict);
    return j;
}

Json model_to_json(const IntegralModel& m) {
    Json j;
    j["rule"] = m.rule_id;
    j["description"] = m.match_description;
    j["scope"] = m.scope_string();
    j["max_degree"] = m.max_degree;
    j["ring_iso"] = m.ring_iso;
    j["groups"] = groups_json(m.groups);
    j["ring_relations"] = m.ring_relations;
    return j;
}

Json violations_to_json(const std::vector<Violation>& vs) {
    Json arr = Json::array();
    for (const auto& v : vs) {
        Json j;
        j["space"] = v.space;
        j["rule"] = v.rule;
        j["expected"] = v.expected;
        j["found"] = v.found;
        arr.push_back(std::move(j));
    }
    return arr;
}

Json scaling_to_json(const ScalingSolution& s) {
    Json j;
    j["n"] = Json::array({int_json(s.n1), int_json(s.n2)});
    j["c1"] = Json::array({int_json(numerator(s.c1)), int_json(denominator(s.c1))});
    j["c2"] = Json::array({int_json(numerator(s.c2)), int_json(denominator(s.c2))});
    j["scalar_curvature"] = int_json(s.scalar_curvature);
    j["einstein_constant"] = int_json(s.einstein_constant);
    return j;
}

Json lattice_point_to_json(const LatticePoint& p) {
    Json j;
    j["l"] = int_json(p.l);
    j["k"] = int_json(p.k);
    j["relative_indices"] = Json::array({int_json(p.l1), int_json(p.l2)});
    j["compact_orbifold"] = p.compact_orbifold;
    j["orb_simply_connected"] = p.orb_simply_connected;
    j["smooth"] = opt_bool_json(p.smooth);
    j["einstein_metric_exists"] = p.einstein_metric_exists;
    j["sasakian_einstein"] = p.sasakian_einstein;
    if (std::holds_alternative<BettiVector>(p.rational_cohomology)) {
        j["rational_cohomology"] = betti_json(std::get<BettiVector>(p.rational_cohomology));
    } else {
        const auto& d = std::get<ProductDescriptor>(p.rational_cohomology);
        j["rational_cohomology"] = "product " + d.left + " x " + d.right;
        if (p.advisory_betti)
            j["advisory_betti"] = betti_json(*p.advisory_betti);
    }
    if (p.scaling)
        j["scaling"] = scaling_to_json(*p.scaling);
    return j;
}

Json eval_report(const std::string& expression, const SeSpace& space,
                 const std::vector<JoinCertificate>& certs,
                 const std::vector<std::pair<std::string, std::string>>& cert_factors) {
    Json j;
    j["schema"] = "sejoin/1";
    j["kind"] = "eval";
    j["expression"] = expression;
    j["space"] = space_to_json(space);
    Json cert_arr = Json::array();
    for (std::size_t i = 0; i < certs.size(); ++i)
        cert_arr.push_back(
            certificate_to_json(certs[i], cert_factors[i].first, cert_factors[i].second));
    j["certificates"] = std::move(cert_arr);

    const auto leaves = space.leaf_list();
    if (auto model = integral_model(leaves, space.betti))
        j["integral_model"] = model_to_json(*model);
    else
        j["integral_model"] = "rational only";
    j["ambiguity_notes"] = ambiguity_notes(leaves);
    j["violations"] = violations_to_json(validate_space(space));
    return j;
}

bool report_has_unknown(const Json& report) {
    if (report.is_string())
        return report.get<std::string>() == "unknown" ||
               report.get<std::string>() == "indeterminate";
    if (report.is_object() || report.is_array()) {
        for (const auto& item : report)
            if (report_has_unknown(item))
                return true;
    }
    return false;
}

namespace {

void render_table(const Json& v, const std::string& prefix, std::ostringstream& os) {
    if (v.is_object()) {
        for (const auto& [key, value] : v.items()) {
            if (value.is_object() || (value.is_array() && !value.empty() &&
                                      (value.front().is_object() || value.front().is_array()))) {
                os << prefix << key << ":\n";
                render_table(value, prefix + "  ", os);
            } else {
                os << prefix << key << ": " << (value.is_string() ? value.get<std::string>()
                                                                  : value.dump())
                   << "\n";
            }
        }
    } else if (v.is_array()) {
        std::size_t i = 0;
        for (const auto& item : v) {
            if (item.is_object() || item.is_array()) {
                os << prefix << "- [" << i << "]\n";
                render_table(item, prefix + "  ", os);
            } else {
                os << prefix << "- "
                   << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
            }
            ++i;
        }
    } else {
        os << prefix << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

void render_tsv(const Json& v, const std::string& path, std::ostringstream& os) {
    if (v.is_object()) {
        for (const auto& [key, value] : v.items())
            render_tsv(value, path.empty() ? key : path + "." + key, os);
    } else if (v.is_array()) {
        bool scalar = true;
        for (const auto& item : v)
            if (item.is_object() || item.is_array())
                scalar = false;
        if (scalar) {
            os << path << "\t" << v.dump() << "\n";
        } else {
            std::size_t i = 0;
            for (const auto& item : v)
                render_tsv(item, path + "[" + std::to_string(i++) + "]", os);
        }
    } else {
        os << path << "\t" << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

}  // namespace

std::string render(const Json& report, Format format) {
    switch (format) {
        case Format::Jsn:
            return report.dump(2) + "\n";
        case Format::Table: {
            std::ostringstream os;
            render_table(report, "", os);
            return os.str();
        }
        case Format::Tsv: {
            std::ostringstream os;
            render_tsv(report, "", os);
            return os.str();
        }
    }
    return {};
}

}  // namespace sejoin
