#include "pbord/axioms.hpp"

#include <algorithm>
#include <map>

namespace pbord {

namespace {

using IdClasses = std::vector<std::vector<std::string>>;

IdClasses strict(std::vector<std::string> order) {
    IdClasses classes;
    for (std::string& id : order) classes.push_back({std::move(id)});
    return classes;
}

Instance build(std::vector<Project> projects, Money budget, std::vector<IdClasses> rankings) {
    std::sort(projects.begin(), projects.end(),
              [](const Project& a, const Project& b) { return a.id < b.id; });
    std::map<std::string, std::uint32_t> index;
    for (std::uint32_t p = 0; p < projects.size(); ++p) index[projects[p].id] = p;
    std::vector<WeakRanking> built;
    for (const IdClasses& classes : rankings) {
        WeakRanking ranking;
        for (const auto& cls : classes) {
            std::vector<std::uint32_t> members;
            for (const std::string& id : cls) members.push_back(index.at(id));
            std::sort(members.begin(), members.end());
            ranking.classes.push_back(std::move(members));
        }
        built.push_back(std::move(ranking));
    }
    return Instance(std::move(projects), budget, std::move(built));
}

RuleSpec greedy(Objective f) { return RuleSpec{LayerKind::Greedy, f, {}}; }

RuleSpec worthy(Objective f, std::vector<Money> alpha) {
    return RuleSpec{LayerKind::CostWorthy, f, WorthVector{std::move(alpha)}};
}

NeedParameter need(Money num) { return NeedParameter{num, 1}; }

std::vector<PaperFixture> build_fixtures() {
    using enum Axiom;
    using enum RuleFamily;
    using enum ParamClass;
    std::vector<PaperFixture> fx;
    auto add = [&](std::string name, Axiom axiom, RuleFamily family, ParamClass param,
                   Instance instance, AnyRule rule) {
        fx.push_back(PaperFixture{std::move(name), axiom, family, param, std::move(instance),
                                  std::move(rule)});
    };

    // Shared shape of the candidate fixtures: promoting x one rank for the
    // first agent pushes y below that agent's affordability cut, so every
    // optimal set through x loses y's support and the rival {w} wins alone.
    add("candidate_greedy_card", CandidateMonotonicity, GreedyCard, None,
        build({{"v", 2}, {"w", 4}, {"x", 3}, {"y", 1}}, 4,
              {strict({"v", "y", "x", "w"}), {{"x"}, {"v"}, {"w", "y"}},
               {{"w"}, {"v", "x", "y"}}, {{"w"}, {"v", "x", "y"}}}),
        greedy(Objective::Cardinality));
    add("candidate_greedy_cost", CandidateMonotonicity, GreedyCost, None,
        build({{"v", 2}, {"w", 4}, {"x", 3}, {"y", 1}}, 4,
              {strict({"v", "y", "x", "w"}), {{"x", "y"}, {"v"}, {"w"}},
               {{"x"}, {"w"}, {"v", "y"}}, {{"w"}, {"v", "x", "y"}},
               {{"w"}, {"v", "x", "y"}}}),
        greedy(Objective::Cost));
    add("candidate_greedy_cover", CandidateMonotonicity, GreedyCover, None,
        build({{"v", 2}, {"w", 4}, {"x", 3}, {"y", 1}}, 4,
              {strict({"v", "y", "x", "w"}), {{"x", "y"}, {"v"}, {"w"}},
               {{"w"}, {"v", "x", "y"}}, {{"w"}, {"v", "x", "y"}}}),
        greedy(Objective::Coverage));
    add("candidate_costworthy_card", CandidateMonotonicity, WorthyCard, None,
        build({{"j", 7}, {"w", 6}, {"x", 3}, {"y", 4}}, 7,
              {strict({"y", "x", "w", "j"}), {{"w", "y"}, {"j"}, {"x"}},
               {{"w"}, {"j"}, {"x", "y"}}, {{"w"}, {"j"}, {"x", "y"}}}),
        worthy(Objective::Cardinality, {6, 3, 0}));
    add("candidate_costworthy_cost", CandidateMonotonicity, WorthyCost, None,
        build({{"j", 6}, {"w", 5}, {"x", 2}, {"y", 4}}, 6,
              {strict({"y", "x", "w", "j"}), {{"w", "y"}, {"j"}, {"x"}},
               {{"w"}, {"j"}, {"x", "y"}}}),
        worthy(Objective::Cost, {5, 2, 0}));
    add("candidate_costworthy_cover", CandidateMonotonicity, WorthyCover, None,
        build({{"v", 7}, {"w", 6}, {"x", 5}, {"y", 4}}, 9,
              {strict({"v", "y", "x", "w"}), {{"x", "y"}, {"v"}, {"w"}},
               {{"w"}, {"v"}, {"x", "y"}}, {{"w"}, {"v"}, {"x", "y"}}}),
        worthy(Objective::Coverage, {6, 4, 3}));

    add("noncross_greedy_cover", NonCrossingMonotonicity, GreedyCover, None,
        build({{"a1", 1}, {"a2", 2}, {"a3", 2}, {"a4", 3}, {"a5", 1}, {"a6", 3}}, 3,
              {strict({"a1", "a2", "a3", "a4", "a5", "a6"}),
               strict({"a3", "a6", "a1", "a2", "a4", "a5"}),
               strict({"a5", "a4", "a1", "a2", "a3", "a6"})}),
        greedy(Objective::Coverage));

    add("noncross_costworthy_cover_nonconst", NonCrossingMonotonicity, WorthyCover,
        AlphaNonConstant,
        build({{"a1", 1}, {"a2", 2}, {"a3", 2}, {"a4", 1}, {"a5", 4}}, 3,
              {strict({"a1", "a2", "a3", "a4", "a5"}), strict({"a4", "a2", "a3", "a5", "a1"}),
               strict({"a3", "a5", "a2", "a1", "a4"})}),
        worthy(Objective::Coverage, {3, 2, 1, 0, 0}));

    auto discount_greedy = [] {
        return build({{"a1", 2}, {"a2", 3}, {"a3", 2}, {"a4", 1}, {"a5", 4}}, 4,
                     {strict({"a1", "a2", "a3", "a4", "a5"}),
                      strict({"a2", "a3", "a1", "a4", "a5"}),
                      strict({"a4", "a5", "a1", "a2", "a3"}),
                      strict({"a4", "a5", "a1", "a2", "a3"})});
    };
    add("discount_greedy_card", DiscountMonotonicity, GreedyCard, None, discount_greedy(),
        greedy(Objective::Cardinality));
    add("discount_greedy_cover", DiscountMonotonicity, GreedyCover, None, discount_greedy(),
        greedy(Objective::Coverage));
    add("discount_greedy_cost", DiscountMonotonicity, GreedyCost, None,
        build({{"a1", 4}, {"a2", 4}}, 4, {strict({"a1", "a2"}), strict({"a2", "a1"})}),
        greedy(Objective::Cost));
    add("discount_costworthy_cost", DiscountMonotonicity, WorthyCost, None,
        build({{"a1", 2}, {"a2", 2}}, 2, {strict({"a1", "a2"}), strict({"a2", "a1"})}),
        worthy(Objective::Cost, {2, 2}));

    auto limit_greedy = [] {
        return build({{"a1", 2}, {"a2", 3}, {"a3", 3}, {"a4", 1}, {"a5", 4}}, 4,
                     {strict({"a1", "a2", "a3", "a4", "a5"}),
                      strict({"a2", "a3", "a1", "a4", "a5"}),
                      strict({"a4", "a5", "a3", "a1", "a2"}),
                      strict({"a4", "a5", "a3", "a2", "a1"})});
    };
    add("limit_greedy_card", LimitMonotonicity, GreedyCard, None, limit_greedy(),
        greedy(Objective::Cardinality));
    add("limit_greedy_cover", LimitMonotonicity, GreedyCover, None, limit_greedy(),
        greedy(Objective::Coverage));
    add("limit_greedy_cost", LimitMonotonicity, GreedyCost, None,
        build({{"a1", 2}, {"a2", 4}, {"a3", 2}, {"a4", 5}}, 5,
              {strict({"a1", "a2", "a3", "a4"}), strict({"a3", "a4", "a1", "a2"}),
               strict({"a3", "a4", "a2", "a1"})}),
        greedy(Objective::Cost));
    // With a flat worth vector every project is approved, so the rule is a
    // count-maximising knapsack; one extra unit of budget lets four cheap
    // projects displace every optimal set containing p1.
    add("limit_costworthy_card_narrowgap", LimitMonotonicity, WorthyCard, AlphaNarrowGap,
        build({{"p1", 3}, {"p2", 2}, {"p3", 2}, {"p4", 2}, {"p5", 2}}, 7,
              {{{"p1", "p2", "p3", "p4", "p5"}}}),
        worthy(Objective::Cardinality, {3}));
    add("limit_costworthy_card_widegap", LimitMonotonicity, WorthyCard, AlphaWideGap,
        build({{"a1", 2}, {"a2", 1}, {"a3", 1}, {"a4", 1}}, 2,
              {strict({"a1", "a2", "a3", "a4"}), strict({"a1", "a2", "a4", "a3"})}),
        worthy(Objective::Cardinality, {2, 1, 0, 0}));
    add("limit_costworthy_cost_above1", LimitMonotonicity, WorthyCost, AlphaRichTop,
        build({{"a1", 3}, {"a2", 2}, {"a3", 1}}, 4, {{{"a1", "a2", "a3"}}}),
        worthy(Objective::Cost, {3, 0, 0}));
    add("limit_costworthy_cover_widegap", LimitMonotonicity, WorthyCover, AlphaWideGap,
        build({{"a1", 1}, {"a2", 2}, {"a3", 2}}, 3,
              {strict({"a1", "a2", "a3"}), strict({"a2", "a3", "a1"}),
               strict({"a2", "a3", "a1"}), strict({"a3", "a2", "a1"}),
               strict({"a3", "a2", "a1"}), strict({"a3", "a2", "a1"})}),
        worthy(Objective::Coverage, {2, 0, 0}));

    add("proafford_greedy_cost", ProAffordability, GreedyCost, None,
        build({{"a1", 1}, {"a2", 4}, {"a3", 1}, {"a4", 5}}, 5,
              {strict({"a1", "a2", "a3", "a4"}), strict({"a3", "a4", "a1", "a2"}),
               strict({"a3", "a4", "a1", "a2"})}),
        greedy(Objective::Cost));
    add("proafford_costworthy_cost_above1", ProAffordability, WorthyCost, AlphaRichTop,
        build({{"a1", 1}, {"a2", 2}}, 2, {{{"a1", "a2"}}}), worthy(Objective::Cost, {2, 0}));

    add("candidate_need_mid", CandidateMonotonicity, Need, NeedMid,
        build({{"a1", 4}, {"a2", 3}, {"a3", 1}}, 4,
              {strict({"a1", "a2", "a3"}), strict({"a2", "a1", "a3"})}),
        need(2));

    add("noncross_need_low", NonCrossingMonotonicity, Need, NeedLow,
        build({{"a", 1},
               {"b", 1},
               {"c", 1},
               {"d", 1},
               {"x1", 1},
               {"x2", 1},
               {"x3", 1},
               {"x4", 1},
               {"x5", 1},
               {"x6", 1}},
              2,
              {strict({"a", "x1", "c", "b", "d", "x2", "x3", "x4", "x5", "x6"}),
               strict({"a", "x2", "d", "b", "c", "x1", "x3", "x4", "x5", "x6"}),
               strict({"b", "x3", "a", "c", "d", "x1", "x2", "x4", "x5", "x6"}),
               strict({"b", "x4", "d", "c", "a", "x1", "x2", "x3", "x5", "x6"}),
               strict({"c", "x5", "a", "b", "d", "x1", "x2", "x3", "x4", "x6"}),
               strict({"c", "x6", "d", "b", "a", "x1", "x2", "x3", "x4", "x5"})}),
        need(1));
    add("noncross_need_mid_a", NonCrossingMonotonicity, Need, NeedMid,
        build({{"a", 3}, {"b", 2}, {"x1", 2}, {"x2", 8}, {"x3", 8}}, 6,
              {strict({"a", "b", "x2", "x1", "x3"}), strict({"x1", "b", "x2", "x3", "a"})}),
        need(3));
    add("noncross_need_mid_b", NonCrossingMonotonicity, Need, NeedMid,
        build({{"a", 2}, {"b", 2}, {"x1", 2}, {"x2", 7}}, 5,
              {strict({"b", "x2", "x1", "a"}), strict({"x1", "a", "b", "x2"})}),
        need(3));
    add("noncross_need_high", NonCrossingMonotonicity, Need, NeedHigh,
        build({{"a", 1}, {"b", 3}, {"x1", 2}, {"x2", 7}, {"x3", 2}}, 5,
              {strict({"a", "b", "x2", "x1", "x3"}), strict({"x1", "a", "x3", "b", "x2"})}),
        need(5));

    add("discount_need_mid", DiscountMonotonicity, Need, NeedMid,
        build({{"a1", 2}, {"a2", 3}}, 3, {strict({"a1", "a2"})}), need(2));
    add("discount_need_high", DiscountMonotonicity, Need, NeedHigh,
        build({{"a1", 2}, {"a2", 2}}, 2, {strict({"a1", "a2"})}), need(2));

    add("limit_need_low", LimitMonotonicity, Need, NeedLow,
        build({{"a1", 1}, {"a2", 5}, {"a3", 5}}, 5,
              {strict({"a1", "a2", "a3"}), strict({"a3", "a2", "a1"})}),
        need(1));
    add("limit_need_mid", LimitMonotonicity, Need, NeedMid,
        build({{"a1", 2}, {"a2", 3}, {"a3", 2}}, 3,
              {strict({"a1", "a2", "a3"}), strict({"a3", "a2", "a1"})}),
        need(2));
    add("limit_need_high", LimitMonotonicity, Need, NeedHigh,
        build({{"a1", 4}, {"a2", 2}, {"a3", 1}}, 5, {strict({"a1", "a2", "a3"})}), need(5));

    add("proafford_need_mid", ProAffordability, Need, NeedMid,
        build({{"a1", 1}, {"a2", 3}, {"a3", 3}}, 3, {strict({"a1", "a2", "a3"})}), need(2));
    add("proafford_need_high", ProAffordability, Need, NeedHigh,
        build({{"a1", 1}, {"a2", 2}, {"a3", 2}}, 2, {strict({"a1", "a2", "a3"})}), need(2));

    return fx;
}

} // namespace

const std::vector<PaperFixture>& paper_fixtures() {
    static const std::vector<PaperFixture> fixtures = build_fixtures();
    return fixtures;
}

const PaperFixture* find_fixture(std::string_view name) {
    for (const PaperFixture& fixture : paper_fixtures())
        if (fixture.name == name) return &fixture;
    return nullptr;
}

} // namespace pbord
