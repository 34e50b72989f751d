#include <doctest.h>

#include "sejoin/errors.hpp"
#include "sejoin/expr.hpp"
#include "sejoin/report.hpp"

using namespace sejoin;

TEST_CASE("parse_expr atoms") {
    CHECK(evaluate(parse_expr("S3")).dim() == 3);
    CHECK(evaluate(parse_expr("S1")).n == 0);
    CHECK(evaluate(parse_expr("Sk(5)")).betti.b(2) == 5);
    CHECK(evaluate(parse_expr("F(4,3)")).betti.b(3) == 60);
    CHECK(evaluate(parse_expr("T(1,2,3)")).order.value == Int(60));
    CHECK(evaluate(parse_expr("Omega(3)")).order.known() == false);
    CHECK(evaluate(parse_expr("Omega(3,order=7)")).order.value == Int(7));
    CHECK(evaluate(parse_expr("@T(1,1,5)")).order.value == Int(3));
}

TEST_CASE("parse_expr joins") {
    const JoinExpr e = parse_expr("S3 * T(1,2,3)");
    CHECK(e.normalized().size() == 2);
    CHECK_FALSE(e.root().is_leaf());

    const JoinExpr triple = parse_expr("S3 * S3 * S3");
    CHECK(triple.normalized().size() == 3);
    CHECK(evaluate(triple).dim() == 7);

    // whitespace and tight forms parse the same
    CHECK(evaluate(parse_expr("S3*T(1,2,3)")) == evaluate(parse_expr("S3  *  T(1,2,3)")));
    // commutative through normalization
    CHECK(evaluate(parse_expr("T(1,2,3) * S3")) == evaluate(parse_expr("S3 * T(1,2,3)")));
}

TEST_CASE("parse_expr errors carry a position") {
    CHECK_THROWS_AS(parse_expr("S3 ** T(1,2,3)"), ParseError);
    CHECK_THROWS_AS(parse_expr("S4"), ParseError);
    CHECK_THROWS_AS(parse_expr("Q7"), ParseError);
    CHECK_THROWS_AS(parse_expr("@nope"), ParseError);
    CHECK_THROWS_AS(parse_expr("T(1,2)"), ParseError);
    CHECK_THROWS_AS(parse_expr(""), ParseError);
    try {
        parse_expr("S3 * * S5");
    } catch (const ParseError& e) {
        CHECK(e.pos > 0);
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
    // family preconditions surface as their own errors, not parse errors
    CHECK_THROWS_AS(parse_expr("Sk(2)"), OutsideDelPezzoRange);
    CHECK_THROWS_AS(parse_expr("T(2,4,6)"), NotPairwiseCoprime);
}

namespace {

Json make_report(const std::string& text) {
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
    return eval_report(text, acc, certs, factors);
}

}  // namespace

TEST_CASE("eval reports") {
    const Json r = make_report("S3 * T(1,2,3)");
    CHECK(r["schema"] == "sejoin/1");
    CHECK(r["space"]["dim"] == 9);
    CHECK(r["space"]["order"] == 60);
    CHECK(r["integral_model"]["rule"] == "R2");
    CHECK(r["violations"].empty());
    CHECK(r["certificates"][0]["verdict"] == "smooth");

    SUBCASE("serialization is deterministic") {
        CHECK(make_report("S3 * T(1,2,3)").dump() == r.dump());
    }
    SUBCASE("JSON round-trips to identical canonical data") {
        const std::string once = r.dump(2);
        CHECK(Json::parse(once).dump(2) == once);
    }
    SUBCASE("unknowns render as explicit tokens") {
        const Json u = make_report("Sk(3) * Omega(2)");
        CHECK(u["space"]["order"] == "unknown");
        CHECK(u["space"]["smooth"] == "unknown");
        CHECK(u["certificates"][0]["verdict"] == "indeterminate");
        CHECK(report_has_unknown(u));
        CHECK_FALSE(report_has_unknown(r));
    }
    SUBCASE("the S5 ambiguity note is attached") {
        const Json a = make_report("S5 * T(1,2,3)");
        CHECK(a["ambiguity_notes"].size() == 1);
        CHECK(make_report("S3 * T(1,2,3)")["ambiguity_notes"].empty());
    }
    SUBCASE("rational-only joins say so") {
        CHECK(make_report("S5 * S5")["integral_model"] == "rational only");
    }
}

TEST_CASE("render formats") {
    const Json r = make_report("S3 * Sk(4)");
    const std::string table = render(r, Format::Table);
    CHECK(table.find("dim: 7") != std::string::npos);
    const std::string tsv = render(r, Format::Tsv);
    CHECK(tsv.find("space.dim\t7") != std::string::npos);
    const std::string js = render(r, Format::Jsn);
    CHECK(Json::parse(js) == r);
    CHECK_THROWS_AS(format_from_string("yaml"), Error);
}
