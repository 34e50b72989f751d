#include "sejoin/catalog.hpp"

#include "sejoin/errors.hpp"
#include "sejoin/search.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace sejoin {

namespace {

GradedGroup torsion_free_groups(const BettiVector& b) { return GradedGroup::from_betti(b); }

}  // namespace

SeSpace make_circle() {
    SeSpace s;
    s.name = "S1";
    s.n = 0;
    s.index = 0;
    s.order = OrderInfo::exact(1);
    s.local_orders = std::vector<Int>{1};
    s.regular = true;
    s.smooth = true;
    s.simply_connected = true;  // pi_1^orb = 0 in the monoid-membership sense
    s.betti = BettiVector(std::vector<Int>{1, 1});
    s.integral = torsion_free_groups(s.betti);
    s.homogeneous = true;
    s.ke_certified = true;
    s.h3_zero = true;
    s.provenance = "monoid identity";
    s.family = FamilyParams{Family::Circle, {}, std::nullopt, {}};
    return s;
}

SeSpace make_sphere(const Int& n) {
    if (n < 1)
        throw std::invalid_argument("make_sphere: n must be >= 1");
    SeSpace s;
    s.family = FamilyParams{Family::Sphere, {n}, std::nullopt, {}};
    s.name = s.family.canonical_name();
    s.n = n;
    s.index = n + 1;
    s.order = OrderInfo::exact(1);
    s.local_orders = std::vector<Int>{1};
    s.regular = true;
    s.smooth = true;
    s.simply_connected = true;
    s.betti = BettiVector::sphere(2 * n + 1);
    s.integral = torsion_free_groups(s.betti);
    s.three_sasakian = (n % 2 == 1);  // dim 4m+3
    s.homogeneous = true;
    s.ke_certified = true;
    s.h3_zero = (n != 1);
    s.provenance = "round sphere";
    return s;
}

SeSpace make_del_pezzo_bundle(const Int& k) {
    if (k < 3 || k > 8)
        throw OutsideDelPezzoRange("make_del_pezzo_bundle: k = " + k.str() +
                                   " outside 3..8 (R_5(k) empty for k=2 and k>=9; "
                                   "k=0,1 are S^5 and the Stiefel manifold)");
    SeSpace s;
    s.family = FamilyParams{Family::DelPezzoBundle, {k}, std::nullopt, {}};
    s.name = s.family.canonical_name();
    s.n = 2;
    s.index = 1;
    s.order = OrderInfo::exact(1);
    s.local_orders = std::vector<Int>{1};
    s.regular = true;
    s.smooth = true;
    s.simply_connected = true;
    s.betti = BettiVector(std::vector<Int>{1, 0, k, k, 0, 1});
    s.integral = torsion_free_groups(s.betti);  // Smale: S^5 # k(S^2 x S^3)
    s.ke_certified = true;
    s.moduli_dim_lower = k > 4 ? k - 4 : Int(0);
    s.h3_zero = false;
    s.provenance = "circle bundle over del Pezzo surface P_" + k.str();
    return s;
}

SeSpace make_fermat_link(const Int& d, const Int& n) {
    if (n < 1 || d < 1)
        throw std::invalid_argument("make_fermat_link: d, n must be >= 1");
    if (d > n + 1)
        throw NotFano("make_fermat_link: degree " + d.str() + " > n+1 = " +
                      Int(n + 1).str() + ", hypersurface is not Fano");
    // b_n = (-1)^n (1 + ((1-d)^{n+2} - 1)/d)
    Int pw = 1;
    for (Int i = 0; i < n + 2; ++i)
        pw *= (1 - d);
    Int bn = 1 + (pw - 1) / d;
    if (n % 2 == 1)
        bn = -bn;

    SeSpace s;
    s.family = FamilyParams{Family::FermatLink, {d, n}, std::nullopt, {}};
    s.name = s.family.canonical_name();
    s.n = n;
    s.index = n + 2 - d;
    s.order = OrderInfo::exact(1);
    s.local_orders = std::vector<Int>{1};
    s.regular = true;
    s.smooth = true;
    s.simply_connected = true;
    std::vector<Int> ranks(static_cast<std::size_t>(2 * n + 1) + 1, 0);
    ranks.front() = 1;
    ranks.back() = 1;
    ranks[static_cast<std::size_t>(n)] += bn;
    ranks[static_cast<std::size_t>(n + 1)] += bn;
    s.betti = BettiVector(std::move(ranks));
    // homology of the hypersurface is torsion free, but the link's integral
    // middle cohomology is not pinned down here; only the groups we know
    s.integral = std::nullopt;
    s.homogeneous = (d <= 2);  // hyperplane and quadric cases
    s.ke_certified = (2 * d >= n + 1);  // Nadel's range (n+1)/2 <= d <= n+1
    s.h3_zero = (n == 3) ? std::optional<bool>(bn == 0) : std::nullopt;
    if (n != 3 && s.betti.b(3) > 0)
        s.h3_zero = false;
    s.provenance = "link of the Fermat hypersurface of degree " + d.str() +
                   " in P^" + Int(n + 1).str();
    return s;
}

Int order_spq(const Int& p1, const Int& p2, const Int& p3) {
    std::vector<Int> p{p1, p2, p3};
    for (const Int& v : p)
        if (v < 1)
            throw std::invalid_argument("order_spq: p_i must be positive");
    if (!pairwise_coprime(p))
        throw NotPairwiseCoprime("order_spq: (" + p1.str() + "," + p2.str() + "," +
                                 p3.str() + ") not pairwise coprime");
    const bool all_odd = (p1 % 2 != 0) && (p2 % 2 != 0) && (p3 % 2 != 0);
    std::vector<Int> terms{p1 + p2, p1 + p3, p2 + p3};
    if (all_odd)
        for (Int& t : terms)
            t /= 2;
    return lcm_all(terms);
}

SeSpace make_three_sasakian(const Int& p1, const Int& p2, const Int& p3) {
    const Int order = order_spq(p1, p2, p3);  // also checks coprimality
    std::vector<Int> p{p1, p2, p3};
    std::sort(p.begin(), p.end());

    SeSpace s;
    s.family = FamilyParams{Family::ThreeSasakian, p, std::nullopt, {}};
    s.name = s.family.canonical_name();
    s.n = 3;
    s.index = 2;
    s.order = OrderInfo::exact(order);
    const bool all_odd = (p1 % 2 != 0) && (p2 % 2 != 0) && (p3 % 2 != 0);
    std::vector<Int> locals{1, p[0] + p[1], p[0] + p[2], p[1] + p[2]};
    if (all_odd)
        for (std::size_t i = 1; i < locals.size(); ++i)
            locals[i] /= 2;
    std::sort(locals.begin(), locals.end());
    s.local_orders = std::move(locals);
    s.regular = (order == 1);
    s.smooth = true;
    s.simply_connected = true;
    s.betti = BettiVector(std::vector<Int>{1, 0, 1, 0, 0, 1, 0, 1});
    const Int sigma2 = p1 * p2 + p1 * p3 + p2 * p3;
    std::vector<GradedPiece> g(8);
    g[0] = {1, {}};
    g[2] = {1, {}};
    g[5] = {1, {}};
    g[7] = {1, {}};
    if (sigma2 > 1)
        g[4] = {0, {sigma2}};
    s.integral = GradedGroup(7, std::move(g));
    s.three_sasakian = true;
    s.homogeneous = (p[0] == 1 && p[1] == 1 && p[2] == 1);
    s.ke_certified = true;
    s.h3_zero = true;
    s.provenance = "3-Sasakian 7-manifold S(p1,p2,p3), sigma_2 = " + sigma2.str();
    return s;
}

SeSpace make_toric_omega(const Int& k, const std::optional<Int>& order) {
    if (k < 1)
        throw std::invalid_argument("make_toric_omega: k must be >= 1");
    if (order && *order < 1)
        throw std::invalid_argument("make_toric_omega: order must be positive");
    SeSpace s;
    s.family = FamilyParams{Family::ToricOmega, {k}, order, {}};
    s.name = s.family.canonical_name();
    s.n = 3;
    s.index = 2;
    s.order = order ? OrderInfo::exact(*order) : OrderInfo::unknown();
    s.local_orders = std::nullopt;
    s.regular = (order && *order == 1);
    s.smooth = true;
    s.simply_connected = true;
    s.betti = BettiVector(std::vector<Int>{1, 0, k, 0, 0, k, 0, 1});
    s.integral = std::nullopt;  // H^4 torsion unknown for k > 1
    s.three_sasakian = true;
    s.homogeneous = false;
    s.ke_certified = true;
    s.h3_zero = true;
    s.provenance = "toric 3-Sasakian 7-manifold S(Omega_k), b_2 = " + k.str();
    return s;
}

// ---------------------------------------------------------------------------
// catalog file parsing
// ---------------------------------------------------------------------------

namespace {

const std::vector<std::string> kKnownFields = {
    "name", "family", "params", "n", "index", "order",
    "betti", "torsion", "flags", "provenance",
};

std::vector<Int> parse_int_list(const std::string& text, const std::string& field) {
    std::vector<Int> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty())
            throw ParseError("empty element in field '" + field + "'");
        try {
            out.push_back(Int(item));
        } catch (const std::exception&) {
            throw ParseError("bad integer '" + item + "' in field '" + field + "'");
        }
    }
    return out;
}

struct RawRecord {
    std::map<std::string, std::string> fields;
    bool has(const std::string& f) const { return fields.count(f) > 0; }
    const std::string& get(const std::string& f) const { return fields.at(f); }
};

RawRecord to_raw(const CatalogRecord& record) {
    RawRecord raw;
    for (const auto& [key, value] : record) {
        if (std::find(kKnownFields.begin(), kKnownFields.end(), key) == kKnownFields.end())
            throw ParseError("unknown field '" + key + "' in catalog record");
        if (!raw.fields.emplace(key, value).second)
            throw ParseError("duplicate field '" + key + "' in catalog record");
    }
    if (!raw.has("name"))
        throw ParseError("catalog record without a name");
    if (!raw.has("family"))
        throw ParseError("catalog record '" + raw.get("name") + "' without a family");
    return raw;
}

struct FlagSet {
    bool regular = false, smooth = false, simply_connected = false;
    bool three_sasakian = false, homogeneous = false, ke = false;
};

FlagSet parse_flags(const std::string& text) {
    FlagSet f;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty())
            continue;
        if (item == "regular") f.regular = true;
        else if (item == "smooth") f.smooth = true;
        else if (item == "simply_connected") f.simply_connected = true;
        else if (item == "three_sasakian") f.three_sasakian = true;
        else if (item == "homogeneous") f.homogeneous = true;
        else if (item == "ke") f.ke = true;
        else if (item == "none") continue;
        else throw ParseError("unknown flag '" + item + "'");
    }
    return f;
}

// Torsion syntax: 'none' or a comma list of degree:order entries.  Free
// ranks come from the Betti vector.
GradedGroup parse_torsion_groups(const std::string& text, const BettiVector& betti) {
    std::vector<GradedPiece> pieces(static_cast<std::size_t>(betti.dim()) + 1);
    for (Int q = 0; q <= betti.dim(); ++q)
        pieces[static_cast<std::size_t>(q)].free_rank = betti.b(q);
    if (text != "none") {
        std::istringstream is(text);
        std::string item;
        while (std::getline(is, item, ',')) {
            item.erase(0, item.find_first_not_of(" \t"));
            item.erase(item.find_last_not_of(" \t") + 1);
            const auto colon = item.find(':');
            if (colon == std::string::npos)
                throw ParseError("torsion entries must be degree:order, got '" + item + "'");
            Int q, ord;
            try {
                q = Int(item.substr(0, colon));
                ord = Int(item.substr(colon + 1));
            } catch (const std::exception&) {
                throw ParseError("bad torsion entry '" + item + "'");
            }
            if (q < 0 || q > betti.dim())
                throw ParseError("torsion degree out of range in '" + item + "'");
            pieces[static_cast<std::size_t>(q)].torsion.push_back(ord);
        }
    }
    return GradedGroup(betti.dim(), std::move(pieces));
}

SeSpace build_from_family(const RawRecord& raw) {
    const std::string fam = raw.get("family");
    std::vector<Int> params;
    if (raw.has("params"))
        params = parse_int_list(raw.get("params"), "params");
    std::optional<Int> order;
    if (raw.has("order") && raw.get("order") != "unknown") {
        try {
            order = Int(raw.get("order"));
        } catch (const std::exception&) {
            throw ParseError("bad order '" + raw.get("order") + "'");
        }
    }

    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw ParseError("family '" + fam + "' expects " + std::to_string(count) +
                             " params, got " + std::to_string(params.size()));
    };
    if (fam == "circle") {
        need(0);
        return make_circle();
    }
    if (fam == "sphere") {
        need(1);
        return make_sphere(params[0]);
    }
    if (fam == "del_pezzo_bundle") {
        need(1);
        return make_del_pezzo_bundle(params[0]);
    }
    if (fam == "fermat_link") {
        need(2);
        return make_fermat_link(params[0], params[1]);
    }
    if (fam == "three_sasakian") {
        need(3);
        return make_three_sasakian(params[0], params[1], params[2]);
    }
    if (fam == "toric_omega") {
        need(1);
        return make_toric_omega(params[0], order);
    }
    throw ParseError("unknown family '" + fam + "'");
}

void cross_check(const SeSpace& built, const RawRecord& raw) {
    auto fail = [&](const std::string& field, const std::string& expected,
                    const std::string& found) {
        throw InvariantViolation("record '" + raw.get("name") + "': field '" + field +
                                 "' disagrees with family data (expected " + expected +
                                 ", found " + found + ")");
    };
    if (raw.has("n")) {
        Int n(raw.get("n"));
        if (n != built.n)
            fail("n", built.n.str(), n.str());
    }
    if (raw.has("index")) {
        Int idx(raw.get("index"));
        if (idx != built.index)
            fail("index", built.index.str(), idx.str());
    }
    if (raw.has("order")) {
        const std::string& o = raw.get("order");
        if (o == "unknown") {
            if (built.order.known())
                fail("order", built.order.value->str(), "unknown");
        } else if (!built.order.known() || *built.order.value != Int(o)) {
            fail("order", built.order.known() ? built.order.value->str() : "unknown", o);
        }
    }
    if (raw.has("betti")) {
        BettiVector b(parse_int_list(raw.get("betti"), "betti"));
        if (b != built.betti)
            fail("betti", built.betti.to_string(), b.to_string());
    }
    if (raw.has("torsion")) {
        if (!built.integral)
            fail("torsion", "no integral data for this family", raw.get("torsion"));
        GradedGroup given = parse_torsion_groups(raw.get("torsion"), built.betti);
        if (given != *built.integral)
            fail("torsion", built.integral->to_string(), given.to_string());
    }
    if (raw.has("flags")) {
        FlagSet f = parse_flags(raw.get("flags"));
        if (f.regular != built.regular)
            fail("flags.regular", built.regular ? "set" : "clear", f.regular ? "set" : "clear");
        if (built.smooth && f.smooth != *built.smooth)
            fail("flags.smooth", *built.smooth ? "set" : "clear", f.smooth ? "set" : "clear");
        if (f.simply_connected != built.simply_connected)
            fail("flags.simply_connected", built.simply_connected ? "set" : "clear",
                 f.simply_connected ? "set" : "clear");
        if (f.three_sasakian != built.three_sasakian)
            fail("flags.three_sasakian", built.three_sasakian ? "set" : "clear",
                 f.three_sasakian ? "set" : "clear");
        if (f.homogeneous != built.homogeneous)
            fail("flags.homogeneous", built.homogeneous ? "set" : "clear",
                 f.homogeneous ? "set" : "clear");
        if (f.ke != built.ke_certified)
            fail("flags.ke", built.ke_certified ? "set" : "clear", f.ke ? "set" : "clear");
    }
}

SeSpace build_custom(const RawRecord& raw) {
    for (const char* required : {"n", "index", "order", "betti", "flags"})
        if (!raw.has(required))
            throw ParseError("custom record '" + raw.get("name") + "' missing field '" +
                             std::string(required) + "'");
    SeSpace s;
    s.name = raw.get("name");
    s.family = FamilyParams{Family::Custom, {}, std::nullopt, s.name};
    s.n = Int(raw.get("n"));
    s.index = Int(raw.get("index"));
    if (raw.get("order") == "unknown")
        s.order = OrderInfo::unknown();
    else
        s.order = OrderInfo::exact(Int(raw.get("order")));
    s.betti = BettiVector(parse_int_list(raw.get("betti"), "betti"));
    FlagSet f = parse_flags(raw.get("flags"));
    s.regular = f.regular;
    s.smooth = f.smooth;
    s.simply_connected = f.simply_connected;
    s.three_sasakian = f.three_sasakian;
    s.homogeneous = f.homogeneous;
    s.ke_certified = f.ke;
    if (raw.has("torsion")) {
        // torsion given (possibly 'none') means the integral groups are known
        s.integral = parse_torsion_groups(raw.get("torsion"), s.betti);
        s.h3_zero = s.integral->at(3).trivial();
    } else if (s.betti.b(3) > 0) {
        s.h3_zero = false;
    }
    if (raw.has("provenance"))
        s.provenance = raw.get("provenance");
    return s;
}

}  // namespace

SeSpace parse_space(const CatalogRecord& record) {
    RawRecord raw = to_raw(record);
    SeSpace s;
    if (raw.get("family") == "custom") {
        s = build_custom(raw);
    } else {
        s = build_from_family(raw);
        cross_check(s, raw);
        s.name = raw.get("name");
        if (raw.has("provenance"))
            s.provenance = raw.get("provenance");
    }
    const auto violations = validate_space(s);
    if (!violations.empty()) {
        std::string msg = "record '" + s.name + "' violates:";
        for (const auto& v : violations)
            msg += " [" + v.rule + ": expected " + v.expected + ", found " + v.found + "]";
        throw InvariantViolation(msg);
    }
    return s;
}

Catalog::Catalog(std::vector<SeSpace> spaces) : spaces_(std::move(spaces)) {
    for (std::size_t i = 0; i < spaces_.size(); ++i) {
        if (!by_name_.emplace(spaces_[i].name, i).second)
            throw ParseError("duplicate catalog name '" + spaces_[i].name + "'");
    }
}

const SeSpace* Catalog::find(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? nullptr : &spaces_[it->second];
}

Catalog load_catalog_text(const std::string& text) {
    std::vector<SeSpace> spaces;
    CatalogRecord current;
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    auto flush = [&] {
        if (!current.empty()) {
            spaces.push_back(parse_space(current));
            current.clear();
        }
    };
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line.erase(0, line.find_first_not_of(" \t"));
        line.erase(line.find_last_not_of(" \t\r") + 1);
        if (line.empty()) {
            flush();
            continue;
        }
        const auto space = line.find_first_of(" \t");
        if (space == std::string::npos)
            throw ParseError("expected 'field value'", lineno);
        std::string key = line.substr(0, space);
        std::string value = line.substr(space + 1);
        value.erase(0, value.find_first_not_of(" \t"));
        current.emplace_back(std::move(key), std::move(value));
    }
    flush();
    return Catalog(std::move(spaces));
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open catalog file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_catalog_text(buf.str());
}

const Catalog& default_catalog() {
    static const Catalog catalog = load_catalog_text(default_catalog_text());
    return catalog;
}

}  // namespace sejoin
