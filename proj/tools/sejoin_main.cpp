#include "sejoin/catalog.hpp"
#include "sejoin/errors.hpp"
#include "sejoin/expr.hpp"
#include "sejoin/lattice.hpp"
#include "sejoin/report.hpp"
#include "sejoin/search.hpp"
#include "sejoin/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

using namespace sejoin;

// exit codes: 0 ok, 1 parse error, 2 invariant violation in inputs,
// 3 indeterminate result under --strict
constexpr int kExitParse = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitIndeterminate = 3;

const Catalog& active_catalog() {
    static const Catalog catalog = [] {
        if (const char* path = std::getenv("SEJOIN_CATALOG"))
            return load_catalog(path);
        return default_catalog();
    }();
    return catalog;
}

int finish(const Json& report, const std::string& format, bool strict) {
    std::cout << render(report, format_from_string(format));
    if (strict && report_has_unknown(report))
        return kExitIndeterminate;
    return 0;
}

int cmd_eval(const std::string& expression, const std::string& format, bool strict) {
    const JoinExpr expr = parse_expr(expression, active_catalog());
    const auto leaves = expr.normalized();

    // certificates for the left fold over the normalized leaves
    std::vector<JoinCertificate> certs;
    std::vector<std::pair<std::string, std::string>> factors;
    SeSpace acc = leaves.front();
    for (std::size_t i = 1; i < leaves.size(); ++i) {
        certs.push_back(smoothness_certificate(acc, leaves[i]));
        factors.emplace_back(acc.name, leaves[i].name);
        acc = join(acc, leaves[i]);
    }
    return finish(eval_report(expression, acc, certs, factors), format, strict);
}

int cmd_lattice(const std::string& e1, const std::string& e2, const std::string& box,
                bool smooth_only, const std::vector<Int>& point,
                const std::vector<Int>& cheeger, const std::string& format, bool strict) {
    const SeSpace s1 = evaluate(parse_expr(e1, active_catalog()));
    const SeSpace s2 = evaluate(parse_expr(e2, active_catalog()));

    Json j;
    j["schema"] = "sejoin/1";
    j["kind"] = "lattice";
    j["factors"] = Json::array({e1, e2});

    if (!point.empty()) {
        j["point"] = lattice_point_to_json(lattice_point(s1, s2, point[0], point[1]));
        return finish(j, format, strict);
    }
    if (!cheeger.empty()) {
        const CheegerLimit lim =
            cheeger_limit(s1, s2, cheeger[0], cheeger[1], cheeger[2], cheeger[3]);
        j["sequence"] = lim.sequence;
        j["limit"] = lattice_point_to_json(lim.limit);
        return finish(j, format, strict);
    }

    const auto x = box.find('x');
    if (x == std::string::npos)
        throw Error("--box expects LxK, e.g. 5x5");
    const Int lmax(box.substr(0, x));
    const Int kmax(box.substr(x + 1));
    Json points = Json::array();
    for (Int l = 1; l <= lmax; ++l) {
        for (Int k = 1; k <= kmax; ++k) {
            const LatticePoint p = lattice_point(s1, s2, l, k);
            if (smooth_only && !(p.smooth && *p.smooth))
                continue;
            points.push_back(lattice_point_to_json(p));
        }
    }
    j["box"] = box;
    j["smooth_only"] = smooth_only;
    j["points"] = std::move(points);
    return finish(j, format, strict);
}

int cmd_search_cor418(const Int& rmax, const std::string& format, bool strict) {
    const SearchResult res = cor418_triples(rmax);
    Json j;
    j["schema"] = "sejoin/1";
    j["kind"] = "search";
    j["query"] = res.query;
    j["exhaustiveness"] = res.exhaustiveness;
    Json hits = Json::array();
    for (const auto& h : res.hits) {
        Json hit;
        hit["r"] = Json::array({h.r[0].str(), h.r[1].str(), h.r[2].str()});
        hit["p"] = Json::array({h.p[0].str(), h.p[1].str(), h.p[2].str()});
        hit["order"] = h.order.str();
        hit["order_odd"] = h.order_odd;
        Json verdicts;
        for (const auto& [l, v] : h.sk_join_verdicts)
            verdicts["Sk(" + l.str() + ")"] = verdict_to_string(v);
        hit["sk_joins"] = std::move(verdicts);
        hits.push_back(std::move(hit));
    }
    j["hits"] = std::move(hits);
    return finish(j, format, strict);
}

int cmd_verify_all() {
    const auto checks = run_verify(active_catalog());
    bool ok = true;
    for (const auto& c : checks) {
        std::cout << (c.passed ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.passed)
            std::cout << "  (" << c.detail << ")";
        std::cout << "\n";
        ok = ok && c.passed;
    }
    return ok ? 0 : kExitInvariant;
}

int cmd_catalog(const std::string& format) {
    Json j;
    j["schema"] = "sejoin/1";
    j["kind"] = "catalog";
    Json spaces = Json::array();
    for (const SeSpace& s : active_catalog().spaces())
        spaces.push_back(space_to_json(s));
    j["spaces"] = std::move(spaces);
    std::cout << render(j, format_from_string(format));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of Sasakian-Einstein joins"};
    app.require_subcommand(1);

    std::string format = "table";
    bool strict = false;

    auto* eval = app.add_subcommand("eval", "evaluate a join expression");
    std::string expression;
    eval->add_option("expression", expression, "e.g. \"S3 * T(1,2,3)\"")->required();
    eval->add_option("--format", format, "table|json|tsv");
    eval->add_flag("--strict", strict, "exit 3 on any indeterminate result");

    auto* lattice = app.add_subcommand("lattice", "classify lattice points M(S1,S2;l,k)");
    std::string e1, e2, box = "5x5";
    bool smooth_only = false;
    std::vector<std::string> point_arg, cheeger_arg;
    lattice->add_option("S1", e1, "first factor expression")->required();
    lattice->add_option("S2", e2, "second factor expression")->required();
    lattice->add_option("--box", box, "box LxK to enumerate (default 5x5)");
    lattice->add_flag("--smooth-only", smooth_only, "keep only certified smooth points");
    lattice->add_option("--point", point_arg, "classify a single point l k")->expected(2);
    lattice->add_option("--cheeger", cheeger_arg, "limit of (l t+a, k t+b): l k a b")
        ->expected(4);
    lattice->add_option("--format", format, "table|json|tsv");
    lattice->add_flag("--strict", strict, "exit 3 on any indeterminate result");

    auto* search = app.add_subcommand("search", "enumerations from the classification");
    std::string what;
    std::string rmax = "5";
    search->add_option("what", what, "cor418")->required();
    search->add_option("--rmax", rmax, "bound on the r_i (default 5)");
    search->add_option("--format", format, "table|json|tsv");
    search->add_flag("--strict", strict, "exit 3 on any indeterminate result");

    auto* verify = app.add_subcommand("verify", "run the regression gate");
    (void)verify;

    auto* catalog = app.add_subcommand("catalog", "list the active catalog");
    catalog->add_option("--format", format, "table|json|tsv");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed())
            return cmd_eval(expression, format, strict);
        if (lattice->parsed()) {
            std::vector<sejoin::Int> point, cheeger;
            for (const auto& s : point_arg)
                point.emplace_back(s);
            for (const auto& s : cheeger_arg)
                cheeger.emplace_back(s);
            return cmd_lattice(e1, e2, box, smooth_only, point, cheeger, format, strict);
        }
        if (search->parsed()) {
            if (what != "cor418")
                throw sejoin::Error("unknown search '" + what + "' (expected cor418)");
            return cmd_search_cor418(sejoin::Int(rmax), format, strict);
        }
        if (verify->parsed())
            return cmd_verify_all();
        if (catalog->parsed())
            return cmd_catalog(format);
    } catch (const sejoin::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const sejoin::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    }
    return 0;
}
