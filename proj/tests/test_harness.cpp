#include <doctest.h>

#include <json.hpp>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "monreg/checks.hpp"
#include "monreg/corpus.hpp"
#include "monreg/errors.hpp"
#include "monreg/ideal_io.hpp"
#include "monreg/report.hpp"

using namespace monreg;
using test::make_ideal;
using test::mono;

namespace {

const MonomialIdeal kDiag = make_ideal(2, {{2, 0}, {0, 2}});
const MonomialIdeal kTriangle =
    make_ideal(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});

}  // namespace

TEST_CASE("radical comparison bound is sharp on (x^2, y^2)") {
    const CheckReport report = check_rrad(kDiag);
    CHECK(report.holds);
    CHECK_FALSE(report.skipped);
    CHECK(report.slack == 0);
    CHECK(report.lhs == 3);
    CHECK(report.rhs == 3);
    CHECK(report.quantities.at("reg_ideal") == Regularity::of(3));
    CHECK(report.quantities.at("reg_radical") == Regularity::of(1));
    CHECK(report.quantities.at("gamma") == Regularity::of(2));
    CHECK(report.quantities.at("height") == Regularity::of(2));
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->value == 3);
}

TEST_CASE("symbolic power comparisons") {
    const CheckReport report = check_sym(kTriangle, 2, 1, 1);
    CHECK(report.holds);
    CHECK(report.params.at("m") == 2);
    CHECK(report.params.at("k") == 1);
    CHECK(report.params.at("j") == 1);

    CHECK_THROWS_AS(check_sym(kDiag, 2, 1, 1), DomainError);
    CHECK_THROWS_AS(check_sym(kTriangle, 0, 1, 0), DomainError);
    CHECK_THROWS_AS(check_sym(kTriangle, 2, 1, 3), DomainError);

    CHECK(check_corsym(kTriangle, 2, 2).holds);
    CHECK(check_corsym_ii(kTriangle).holds);
    CHECK(check_base_mv(kTriangle, 2).holds);
}

TEST_CASE("closure comparisons") {
    // reg(closure((x^2,y^2)^2)) = 4 = reg(closure) + gamma = 2 + 2: sharp.
    const CheckReport rint = check_rint(kDiag, 1, 2);
    CHECK(rint.holds);
    CHECK(rint.slack == 0);

    const CheckReport rnormal = check_rnormal1(kDiag, 2);
    CHECK(rnormal.holds);
    CHECK(rnormal.quantities.at("s_used") == Regularity::of(2));

    // (x^2, y^2) is not integrally closed, so the closed-power bound
    // does not apply to it.
    CHECK_THROWS_AS(check_rintc(kDiag, 2), DomainError);
    const CheckReport rintc = check_rintc(power(make_ideal(2, {{1, 0}, {0, 1}}), 2), 2);
    CHECK(rintc.holds);
    CHECK(rintc.lhs == 4);
    CHECK(rintc.rhs == 3);
}

TEST_CASE("stability and identity cells") {
    CHECK(check_delta_stab(kDiag, 1, mono({1, 0}), false).holds);
    CHECK(check_delta_stab(kDiag, 2, mono({1, 1}), true).holds);
    CHECK_THROWS_AS(check_delta_stab(kDiag, 1, mono({2, 0}), false),
                    DomainError);

    const CheckReport identity = check_identity_sym(kTriangle, 2, 1, 1,
                                                    mono({1, 1, 0}));
    CHECK(identity.holds);
    CHECK(identity.lhs == 1);
    CHECK(identity.rhs == 1);
    CHECK(identity.params.at("variant") == 1);
    CHECK_THROWS_AS(check_identity_sym(kTriangle, 2, 1, 1, mono({1, 0, 0})),
                    DomainError);

    CHECK(check_identity_closure(kDiag, 2, mono({1, 1})).holds);
    CHECK_THROWS_AS(check_identity_closure(kDiag, 2, mono({1, 0})),
                    DomainError);
    CHECK(check_identity_closure_powers(kDiag, 1, 2, mono({1, 1})).holds);
}

TEST_CASE("resource exhaustion turns into explained skips") {
    CheckConfig tight;
    tight.mu_cap = 1;
    const CheckReport report = check_sym(kTriangle, 2, 1, 1, tight);
    CHECK(report.skipped);
    CHECK(report.holds);
    CHECK_FALSE(report.skip_reason.empty());
    CHECK(report.lhs == 0);
    CHECK(report.rhs == 0);
    CHECK(report.slack == 0);
    CHECK_FALSE(report.witness.has_value());
}

TEST_CASE("checks reject degenerate ideals") {
    CHECK_THROWS_AS(check_rrad(MonomialIdeal::zero(2)), DomainError);
    CHECK_THROWS_AS(check_rrad(MonomialIdeal::unit(2)), DomainError);
}

TEST_CASE("suite parsing") {
    CHECK(parse_suite("all").size() == 10);
    CHECK(parse_suite("rrad") == std::set<TheoremId>{TheoremId::RRAD});
    CHECK(parse_suite("corsym") ==
          std::set<TheoremId>{TheoremId::CORSYM_I, TheoremId::CORSYM_II});
    CHECK(parse_suite("rrad,delta,proof") ==
          std::set<TheoremId>{TheoremId::RRAD, TheoremId::DELTA_STAB,
                              TheoremId::PROOF_IDENTITY});
    CHECK_THROWS_AS(parse_suite("nonsense"), DomainError);
    CHECK_THROWS_AS(parse_suite(""), DomainError);
}

TEST_CASE("corpus families") {
    const std::vector<CorpusItem> sqfree = exhaustive_squarefree(3);
    CHECK(sqfree.size() == 8);
    std::set<std::string> strs;
    for (const CorpusItem& item : sqfree) strs.insert(item.ideal.str());
    CHECK(strs.count("(x*y, x*z, y*z)") == 1);
    CHECK(strs.count("(x, y, z)") == 1);
    CHECK(strs.count("(x*y*z)") == 1);
    CHECK_THROWS_AS(exhaustive_squarefree(5), DomainError);

    const std::vector<CorpusItem> named = named_families();
    std::set<std::string> labels;
    for (const CorpusItem& item : named) labels.insert(item.label);
    CHECK(labels.count("path-4") == 1);
    CHECK(labels.count("cycle-5") == 1);
    CHECK(labels.count("complete-5") == 1);
    CHECK(labels.count("maxpow-n2-d3") == 1);
    CHECK(labels.count("diagonal-2") == 1);
    CHECK(labels.size() == named.size());

    const std::vector<CorpusItem> random_a = random_monomial_corpus(3, 3, 4, 20, 5);
    const std::vector<CorpusItem> random_b = random_monomial_corpus(3, 3, 4, 20, 5);
    const std::vector<CorpusItem> random_c = random_monomial_corpus(3, 3, 4, 20, 6);
    CHECK(random_a.size() == 20);
    REQUIRE(random_a.size() == random_b.size());
    bool all_equal = true, any_differs = false;
    for (std::size_t i = 0; i < random_a.size(); ++i) {
        all_equal &= random_a[i].ideal == random_b[i].ideal;
        any_differs |= random_a[i].ideal != random_c[i].ideal;
    }
    CHECK(all_equal);
    CHECK(any_differs);
    // Random items are always usable by the checkers.
    for (const CorpusItem& item : random_a) {
        CHECK_FALSE(item.ideal.is_zero());
        CHECK(item.ideal.is_proper());
    }

    CHECK(acceptance_corpus(42).size() == 128);
}

TEST_CASE("run_corpus is deterministic and ordered") {
    const std::vector<CorpusItem> corpus = exhaustive_squarefree(3);
    const std::set<TheoremId> suite = parse_suite("rrad,base");
    const std::vector<CheckReport> serial = run_corpus(corpus, suite, {}, {}, 1);
    const std::vector<CheckReport> parallel = run_corpus(corpus, suite, {}, {}, 4);

    REQUIRE(serial.size() == parallel.size());
    const ReportHeader header{"test", 0, CoefficientField::rationals(), ""};
    CHECK(reports_to_json(header, serial) == reports_to_json(header, parallel));

    for (std::size_t i = 1; i < serial.size(); ++i)
        CHECK_FALSE(report_order(serial[i], serial[i - 1]));
    for (const CheckReport& report : serial) {
        CHECK(report.holds);
        CHECK_FALSE(report.skipped);
    }
}

TEST_CASE("report JSON document shape") {
    const std::vector<CorpusItem> corpus = exhaustive_squarefree(3);
    const std::vector<CheckReport> reports =
        run_corpus(corpus, parse_suite("rrad"), {}, {}, 1);
    const ReportHeader header{"monreg test", 7, CoefficientField::rationals(),
                              "suite=rrad"};
    const std::string text = reports_to_json(header, reports);
    CHECK(text.back() == '\n');

    const nlohmann::json doc = nlohmann::json::parse(text);
    CHECK(doc.at("header").at("tool_version") == "monreg test");
    CHECK(doc.at("header").at("seed") == 7);
    CHECK(doc.at("header").at("field") == "q");
    CHECK(doc.at("header").at("flags") == "suite=rrad");
    CHECK(doc.at("summary").at("total") == 8);
    CHECK(doc.at("summary").at("passed") == 8);
    CHECK(doc.at("summary").at("failed") == 0);
    CHECK(doc.at("summary").at("skipped") == 0);
    REQUIRE(doc.at("reports").size() == 8);
    const nlohmann::json& first = doc.at("reports").at(0);
    CHECK(first.at("theorem_id") == "RRAD");
    CHECK(first.at("ideal_index") == 0);
    CHECK(first.at("runtime_ms") == 0);
    CHECK(first.at("holds") == true);
    CHECK(first.contains("witness"));
    CHECK(first.at("quantities").contains("reg_ideal"));

    // Minus-infinity regularities render as the string "-inf".
    CheckReport synthetic;
    synthetic.ideal = "(0)";
    synthetic.quantities.emplace("reg_ideal", Regularity::minus_infinity());
    synthetic.quantities.emplace("reg_radical", Regularity::of(4));
    synthetic.holds = true;
    const nlohmann::json round =
        nlohmann::json::parse(reports_to_json(header, {synthetic}));
    CHECK(round.at("reports").at(0).at("quantities").at("reg_ideal") == "-inf");
    CHECK(round.at("reports").at(0).at("quantities").at("reg_radical") == 4);
    CHECK(round.at("reports").at(0).at("witness").is_null());
}

TEST_CASE("ideal file parsing") {
    const ParsedIdeal parsed = parse_ideal_text("2\n2 0\n0 2\n");
    CHECK(parsed.ideal == kDiag);
    CHECK(parsed.warnings.empty());

    const ParsedIdeal commented = parse_ideal_text(
        "# a comment\n\n3\n1 1 0\n\n# more\n0 1 1\n1 0 1\n");
    CHECK(commented.ideal == kTriangle);

    const ParsedIdeal duplicated = parse_ideal_text("2\n1 0\n1 0\n2 1\n");
    CHECK(duplicated.ideal == make_ideal(2, {{1, 0}}));
    CHECK(duplicated.warnings.size() == 1);

    const ParsedIdeal empty = parse_ideal_text("3\n");
    CHECK(empty.ideal == MonomialIdeal::zero(3));

    CHECK_THROWS_AS(parse_ideal_text(""), ParseError);
    CHECK_THROWS_AS(parse_ideal_text("two\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_ideal_text("2\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_ideal_text("2\n1 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_ideal_text("2\n1 -1\n"), ParseError);
    CHECK_THROWS_AS(parse_ideal_text("0\n"), ParseError);
    CHECK_THROWS_AS(parse_ideal_text("2 2\n1 1\n"), ParseError);

    try {
        parse_ideal_text("2\n2 0\nbad token\n");
        FAIL("expected ParseError");
    } catch (const ParseError& error) {
        CHECK(error.line() == 3);
    }
}

TEST_CASE("ideal files round trip") {
    for (const MonomialIdeal& ideal :
         {kDiag, kTriangle, MonomialIdeal::zero(4),
          make_ideal(1, {{3}})}) {
        const std::string text = format_ideal_file(ideal);
        CHECK(parse_ideal_text(text).ideal == ideal);
    }
}
