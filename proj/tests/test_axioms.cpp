#include "helpers.hpp"
#include "pbord/axioms.hpp"

#include <doctest.h>

using namespace pbtest;

namespace {

const MatrixCell& cell_for(Axiom axiom, RuleFamily family, ParamClass param) {
    for (const MatrixCell& cell : compliance_matrix())
        if (cell.axiom == axiom && cell.family == family && cell.param == param) return cell;
    REQUIRE(false);
    return compliance_matrix().front();
}

} // namespace

TEST_CASE("axiom names round-trip") {
    for (Axiom axiom : kAllAxioms) {
        const auto back = axiom_from_name(axiom_name(axiom));
        REQUIRE(back.has_value());
        CHECK(*back == axiom);
    }
    CHECK_FALSE(axiom_from_name("no-such-axiom").has_value());
    CHECK(axiom_name(Axiom::CandidateMonotonicity) == "candidate-mono");
    CHECK(axiom_name(Axiom::ProAffordability) == "pro-affordability");
    CHECK(axiom_name(Axiom::InclusionMaximality) == "inclusion-max");
}

TEST_CASE("every built-in fixture violates its axiom") {
    const auto& fixtures = paper_fixtures();
    CHECK(fixtures.size() == 33);
    for (const PaperFixture& fixture : fixtures) {
        const CheckReport report = check_axiom(fixture.instance, fixture.rule, fixture.axiom);
        CHECK_MESSAGE(report.verdict == Verdict::Violated, fixture.name);
        CHECK_FALSE(report.detail.empty());
        if (fixture.axiom != Axiom::ProAffordability)
            CHECK_MESSAGE(report.counterexample.has_value(), fixture.name);
    }
}

TEST_CASE("fixture instances are valid documents") {
    for (const PaperFixture& fixture : paper_fixtures()) {
        const std::string text = serialize_instance(fixture.instance);
        CHECK(serialize_instance(parse_instance(text)) == text);
    }
}

TEST_CASE("fixture lookup by name") {
    const PaperFixture* fixture = find_fixture("limit_need_mid");
    REQUIRE(fixture != nullptr);
    CHECK(fixture->axiom == Axiom::LimitMonotonicity);
    CHECK(fixture->family == RuleFamily::Need);
    CHECK(fixture->param == ParamClass::NeedMid);
    CHECK(find_fixture("definitely_not_a_fixture") == nullptr);
}

TEST_CASE("the compliance matrix has the documented shape") {
    const auto& matrix = compliance_matrix();
    CHECK(matrix.size() == 95);

    std::size_t holds = 0, fails = 0;
    for (const MatrixCell& cell : matrix) {
        if (cell.holds) {
            ++holds;
            CHECK(cell.fixture == nullptr);
        } else {
            ++fails;
            REQUIRE(cell.fixture != nullptr);
            const PaperFixture* fixture = find_fixture(cell.fixture);
            REQUIRE_MESSAGE(fixture != nullptr, cell.fixture);
            CHECK(fixture->axiom == cell.axiom);
            CHECK(fixture->family == cell.family);
            CHECK(fixture->param == cell.param);
        }
        CHECK_FALSE(cell_label(cell).empty());
    }
    CHECK(holds == 63);
    CHECK(fails == 32);
}

TEST_CASE("limit monotonicity is not applicable at a cost cliff") {
    const Instance inst = parse_instance(
        "pbinstance 1\nbudget 3\nproject a 4\nproject b 1\nagent a > b\n");
    const AnyRule rule = RuleSpec{LayerKind::Greedy, Objective::Cardinality, {}};
    const CheckReport report = check_axiom(inst, rule, Axiom::LimitMonotonicity);
    CHECK(report.verdict == Verdict::NotApplicable);
}

TEST_CASE("satisfied verdicts on the walkthrough instances") {
    const AnyRule greedy_card = RuleSpec{LayerKind::Greedy, Objective::Cardinality, {}};
    const Instance layered = layered_example();
    CHECK(check_axiom(layered, greedy_card, Axiom::CandidateMonotonicity).verdict ==
          Verdict::Satisfied);
    CHECK(check_axiom(layered, greedy_card, Axiom::Neutrality).verdict ==
          Verdict::Satisfied);
    CHECK(check_axiom(layered, greedy_card, Axiom::InclusionMaximality).verdict ==
          Verdict::Satisfied);

    const Instance need = need_example();
    const AnyRule seven = NeedParameter{7, 1};
    CHECK(check_axiom(need, seven, Axiom::Anonymity).verdict == Verdict::Satisfied);
    CHECK(check_axiom(need, seven, Axiom::Consistency).verdict == Verdict::Satisfied);
    CHECK(check_axiom(need, seven, Axiom::Splitting).verdict == Verdict::Satisfied);
}

TEST_CASE("enumerate_optima handles both rule kinds") {
    const Instance inst = need_example();
    const Outcome need = enumerate_optima(inst, NeedParameter{7, 1});
    CHECK(need.optimal_value == 3);
    CHECK_FALSE(need.non_enumerating);

    const Outcome card =
        enumerate_optima(layered_example(),
                         RuleSpec{LayerKind::Greedy, Objective::Cardinality, {}});
    CHECK(card.optimal_value == 4);
    CHECK_FALSE(card.non_enumerating);
}

TEST_CASE("trial caps are honored") {
    CheckOptions options;
    options.max_trials = 1;
    const CheckReport report =
        check_axiom(layered_example(),
                    RuleSpec{LayerKind::Greedy, Objective::Cardinality, {}},
                    Axiom::CandidateMonotonicity, options);
    CHECK(report.trials <= 1);
}

TEST_CASE("regime-specific worth vectors respect their regime") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const Money budget = 2 + trial % 9;
        const std::uint32_t m = 2 + trial % 5;
        WorthVector alpha = random_worth_vector_for(rng, m, budget, ParamClass::AlphaConstant);
        CHECK(pad_worth_vector(alpha, m).entries.front() ==
              pad_worth_vector(alpha, m).entries.back());

        alpha = random_worth_vector_for(rng, m, budget, ParamClass::AlphaNonConstant);
        CHECK(pad_worth_vector(alpha, m).entries.front() !=
              pad_worth_vector(alpha, m).entries.back());

        alpha = random_worth_vector_for(rng, m, budget, ParamClass::AlphaWideGap);
        auto padded = pad_worth_vector(alpha, m).entries;
        CHECK(padded.front() >= padded.back() + 2);

        alpha = random_worth_vector_for(rng, m, budget, ParamClass::AlphaNarrowGap);
        padded = pad_worth_vector(alpha, m).entries;
        CHECK(padded.front() < padded.back() + 2);

        alpha = random_worth_vector_for(rng, m, budget, ParamClass::AlphaUnitTop);
        CHECK(pad_worth_vector(alpha, m).entries.front() <= 1);

        alpha = random_worth_vector_for(rng, m, budget, ParamClass::AlphaRichTop);
        CHECK(pad_worth_vector(alpha, m).entries.front() > 1);

        for (ParamClass param :
             {ParamClass::AlphaConstant, ParamClass::AlphaNonConstant,
              ParamClass::AlphaNarrowGap, ParamClass::AlphaWideGap, ParamClass::AlphaUnitTop,
              ParamClass::AlphaRichTop}) {
            for (Money entry : random_worth_vector_for(rng, m, budget, param).entries) {
                CHECK(entry >= 0);
                CHECK(entry <= budget);
            }
        }
    }
}

TEST_CASE("matrix cells run their fixtures and their random trials") {
    CellCheckConfig config;
    config.min_trials = 60;
    config.seed = 99;

    const CellResult ok = check_matrix_cell(
        cell_for(Axiom::NonCrossingMonotonicity, RuleFamily::GreedyCard, ParamClass::None),
        config);
    CHECK(ok.passed);
    CHECK_FALSE(ok.violated);
    CHECK(ok.trials >= 60);

    const CellResult no = check_matrix_cell(
        cell_for(Axiom::DiscountMonotonicity, RuleFamily::GreedyCard, ParamClass::None),
        config);
    CHECK(no.passed);
    CHECK(no.violated);

    const CellResult again = check_matrix_cell(
        cell_for(Axiom::NonCrossingMonotonicity, RuleFamily::GreedyCard, ParamClass::None),
        config);
    CHECK(again.trials == ok.trials);
}

TEST_CASE("counterexample search stays quiet on a cell that holds") {
    CellCheckConfig config;
    config.min_trials = 400;
    const SearchResult result = search_counterexample(
        Axiom::Anonymity, RuleFamily::GreedyCard, ParamClass::None, config);
    CHECK(result.verdict == Verdict::Satisfied);
    CHECK(result.trials >= 400);
}
