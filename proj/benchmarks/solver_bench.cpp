#include "pbord/axioms.hpp"
#include "pbord/reductions.hpp"

#include <benchmark/benchmark.h>

using namespace pbord;

namespace {

Instance sized_instance(std::uint32_t projects, std::uint32_t agents, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    GenConfig config;
    config.min_projects = projects;
    config.max_projects = projects;
    config.min_agents = agents;
    config.max_agents = agents;
    return random_instance(rng, config);
}

void exhaustive_cardinality(benchmark::State& state) {
    const auto m = static_cast<std::uint32_t>(state.range(0));
    const Instance inst = sized_instance(m, 5, 11 + m);
    const ApprovalProfile profile = greedy_truncation_layer(inst);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_exhaustive(inst, profile, Objective::Cardinality));
}

void exhaustive_coverage(benchmark::State& state) {
    const auto m = static_cast<std::uint32_t>(state.range(0));
    const Instance inst = sized_instance(m, 5, 23 + m);
    const ApprovalProfile profile = greedy_truncation_layer(inst);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_exhaustive(inst, profile, Objective::Coverage));
}

void dp_cardinality(benchmark::State& state) {
    const auto m = static_cast<std::uint32_t>(state.range(0));
    const Instance inst = sized_instance(m, 5, 37 + m);
    const ApprovalProfile profile = greedy_truncation_layer(inst);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_dp_cardinality(inst, profile));
}

void need_solver(benchmark::State& state) {
    const auto m = static_cast<std::uint32_t>(state.range(0));
    const Instance inst = sized_instance(m, 5, 51 + m);
    const NeedParameter lambda{1, 1};
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_need(inst, lambda));
}

void greedy_layering(benchmark::State& state) {
    const Instance inst = sized_instance(24, 8, 67);
    for (auto _ : state)
        benchmark::DoNotOptimize(greedy_truncation_layer(inst));
}

void cost_worthy_layering(benchmark::State& state) {
    const Instance inst = sized_instance(24, 8, 71);
    std::mt19937_64 rng(72);
    const WorthVector alpha = random_worth_vector(rng, 24, inst.budget());
    for (auto _ : state)
        benchmark::DoNotOptimize(cost_worthy_layer(inst, alpha));
}

void weak_ranking_sampler(benchmark::State& state) {
    std::mt19937_64 rng(83);
    const auto m = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(random_weak_ranking(rng, m));
}

void axiom_candidate_check(benchmark::State& state) {
    const Instance inst = sized_instance(8, 4, 97);
    const AnyRule rule = RuleSpec{LayerKind::Greedy, Objective::Cardinality, {}};
    for (auto _ : state)
        benchmark::DoNotOptimize(check_axiom(inst, rule, Axiom::CandidateMonotonicity));
}

void axiom_neutrality_check(benchmark::State& state) {
    const Instance inst = sized_instance(6, 4, 101);
    const AnyRule rule = RuleSpec{LayerKind::Greedy, Objective::Cardinality, {}};
    for (auto _ : state)
        benchmark::DoNotOptimize(check_axiom(inst, rule, Axiom::Neutrality));
}

void subset_sum_decision(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<Money> values;
    for (std::size_t i = 0; i < n; ++i) values.push_back(static_cast<Money>(2 * i + 3));
    Money total = 0;
    for (Money v : values) total += v;
    const DecisionInstance d = from_subset_sum({values, total / 2}, LayerKind::Greedy);
    for (auto _ : state)
        benchmark::DoNotOptimize(decide(d));
}

BENCHMARK(exhaustive_cardinality)->Arg(10)->Arg(14)->Arg(18);
BENCHMARK(exhaustive_coverage)->Arg(10)->Arg(14)->Arg(18);
BENCHMARK(dp_cardinality)->Arg(10)->Arg(18)->Arg(26);
BENCHMARK(need_solver)->Arg(10)->Arg(14)->Arg(18);
BENCHMARK(greedy_layering);
BENCHMARK(cost_worthy_layering);
BENCHMARK(weak_ranking_sampler)->Arg(10)->Arg(30);
BENCHMARK(axiom_candidate_check);
BENCHMARK(axiom_neutrality_check);
BENCHMARK(subset_sum_decision)->Arg(10)->Arg(16);

} // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
