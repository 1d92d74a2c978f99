#include "pbord/reductions.hpp"

#include <algorithm>
#include <numeric>

namespace pbord {

namespace {

std::string padded(const char* prefix, std::uint32_t index, std::uint32_t total) {
    std::string digits = std::to_string(index + 1);
    std::string width = std::to_string(total);
    return prefix + std::string(width.size() - digits.size(), '0') + digits;
}

} // namespace

bool decide(const DecisionInstance& decision, const SolveLimits& limits) {
    Money value;
    if (const auto* spec = std::get_if<RuleSpec>(&decision.rule))
        value = evaluate_rule(decision.instance, *spec, Strategy::Auto, limits).optimal_value;
    else
        value = solve_need(decision.instance, std::get<NeedParameter>(decision.rule), limits)
                    .optimal_value;
    return decision.sense == Sense::AtLeast ? value >= decision.threshold
                                            : value <= decision.threshold;
}

DecisionInstance from_subset_sum(const SubsetSumInput& input, LayerKind layer) {
    if (input.values.empty()) throw ValidationError("subset sum needs at least one value");
    if (input.target < 1) throw ValidationError("subset sum target must be positive");
    Money sum = 0;
    for (std::size_t i = 0; i < input.values.size(); ++i) {
        if (input.values[i] < 1) throw ValidationError("subset sum values must be positive");
        if (i > 0 && input.values[i] < input.values[i - 1])
            throw ValidationError("subset sum values must be sorted non-decreasing");
        sum = checked_add(sum, input.values[i]);
    }

    const auto n = static_cast<std::uint32_t>(input.values.size());
    std::vector<Project> projects;
    for (std::uint32_t i = 0; i < n; ++i)
        projects.push_back(Project{padded("p", i, n), input.values[i]});

    if (layer == LayerKind::CostWorthy) {
        WeakRanking ranking;
        std::vector<std::uint32_t> everything(n);
        std::iota(everything.begin(), everything.end(), 0);
        ranking.classes.push_back(std::move(everything));
        Instance instance(std::move(projects), input.target, {std::move(ranking)});
        return DecisionInstance{
            std::move(instance),
            RuleSpec{LayerKind::CostWorthy, Objective::Cost, WorthVector{{input.target}}},
            input.target, Sense::AtLeast};
    }

    // One agent per value, its own project first, then a blocker that fills
    // the whole budget; the blocker never fits next to anything, so each
    // agent approves exactly its own project.
    const std::uint32_t blocker = n;
    projects.push_back(Project{"z", input.target});
    std::vector<WeakRanking> rankings;
    for (std::uint32_t i = 0; i < n; ++i) {
        WeakRanking ranking;
        ranking.classes.push_back({i});
        ranking.classes.push_back({blocker});
        for (std::uint32_t j = 0; j < n; ++j)
            if (j != i) ranking.classes.push_back({j});
        rankings.push_back(std::move(ranking));
    }
    Instance instance(std::move(projects), input.target, std::move(rankings));
    return DecisionInstance{std::move(instance),
                            RuleSpec{LayerKind::Greedy, Objective::Cost, {}},
                            input.target, Sense::AtLeast};
}

DecisionInstance from_vertex_cover(const VertexCoverInput& input, LayerKind layer) {
    if (input.vertices < 2) throw ValidationError("vertex cover needs at least two vertices");
    if (input.edges.empty()) throw ValidationError("vertex cover needs at least one edge");
    if (input.k < 1) throw ValidationError("cover size must be positive");
    for (auto [u, v] : input.edges)
        if (u == v || u >= input.vertices || v >= input.vertices)
            throw ValidationError("edge endpoints must be distinct vertices");

    std::vector<Project> projects;
    for (std::uint32_t v = 0; v < input.vertices; ++v)
        projects.push_back(Project{padded("v", v, input.vertices), 1});
    const Money budget = input.k;
    const auto edge_count = static_cast<Money>(input.edges.size());

    if (layer == LayerKind::CostWorthy) {
        std::vector<WeakRanking> rankings;
        for (auto [u, v] : input.edges) {
            WeakRanking ranking;
            std::vector<std::uint32_t> endpoints = {std::min(u, v), std::max(u, v)};
            std::vector<std::uint32_t> rest;
            for (std::uint32_t w = 0; w < input.vertices; ++w)
                if (w != u && w != v) rest.push_back(w);
            ranking.classes.push_back(std::move(endpoints));
            if (!rest.empty()) ranking.classes.push_back(std::move(rest));
            rankings.push_back(std::move(ranking));
        }
        Instance instance(std::move(projects), budget, std::move(rankings));
        return DecisionInstance{
            std::move(instance),
            RuleSpec{LayerKind::CostWorthy, Objective::Coverage, WorthVector{{1, 0}}},
            edge_count, Sense::AtLeast};
    }

    // Greedy encoding: both endpoints fit, then a filler of cost k-1 bursts
    // the budget and is itself too big for the leftover, so each edge agent
    // approves exactly its endpoints. Needs k >= 3 so the filler outgrows
    // the leftover.
    if (input.k < 3) throw ValidationError("the greedy encoding needs a cover size of at least 3");
    const std::uint32_t filler = input.vertices;
    projects.push_back(Project{"z", budget - 1});
    std::vector<WeakRanking> rankings;
    for (auto [u, v] : input.edges) {
        WeakRanking ranking;
        ranking.classes.push_back({u});
        ranking.classes.push_back({v});
        ranking.classes.push_back({filler});
        for (std::uint32_t w = 0; w < input.vertices; ++w)
            if (w != u && w != v) ranking.classes.push_back({w});
        rankings.push_back(std::move(ranking));
    }
    Instance instance(std::move(projects), budget, std::move(rankings));
    return DecisionInstance{std::move(instance),
                            RuleSpec{LayerKind::Greedy, Objective::Coverage, {}},
                            edge_count, Sense::AtLeast};
}

DecisionInstance from_committee_selection(const CommitteeInput& input) {
    if (input.candidates < 1) throw ValidationError("committee selection needs candidates");
    if (input.voter_rankings.empty()) throw ValidationError("committee selection needs voters");
    if (input.committee_size < 1) throw ValidationError("committee size must be positive");
    if (input.committee_size > input.candidates)
        throw ValidationError("committee size cannot exceed the number of candidates");

    std::vector<Project> projects;
    for (std::uint32_t c = 0; c < input.candidates; ++c)
        projects.push_back(Project{padded("c", c, input.candidates), 1});

    std::vector<WeakRanking> rankings;
    for (const auto& order : input.voter_rankings) {
        if (order.size() != input.candidates)
            throw ValidationError("every voter must rank every candidate");
        WeakRanking ranking;
        for (std::uint32_t c : order) ranking.classes.push_back({c});
        rankings.push_back(std::move(ranking));
    }

    Instance instance(std::move(projects), input.committee_size, std::move(rankings));
    return DecisionInstance{std::move(instance), NeedParameter{1, 1}, input.misrepresentation,
                            Sense::AtMost};
}

} // namespace pbord
