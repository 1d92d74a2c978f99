#pragma once

#include "pbord/layers.hpp"

namespace pbord {

enum class LayerKind { Greedy, CostWorthy };
enum class Objective { Cardinality, Cost, Coverage };
enum class Strategy { Auto, Exhaustive, Dp };

// A layered rule: how approvals are derived from the rankings, and which
// objective is maximized over feasible sets. `alpha` is the worth pattern
// for CostWorthy and is ignored for Greedy.
struct RuleSpec {
    LayerKind layer = LayerKind::Greedy;
    Objective objective = Objective::Cardinality;
    WorthVector alpha;
};

// Exact need threshold num/den with den >= 1. Kept rational so thresholds
// like 5/2 never go through floating point.
struct NeedParameter {
    Money num = 1;
    Money den = 1;
};

void validate_need_parameter(const NeedParameter& lambda, const Instance& instance);

struct SolveLimits {
    std::uint32_t max_projects = 22;
    std::size_t max_optimal_sets = std::size_t{1} << 20;
    long long max_dp_cells = 50'000'000;
};

// Result of an optimization. `optimal_sets` holds feasible optimizers as
// sorted index vectors, in lexicographic order. Exhaustive solvers list
// every optimizer; the dynamic programs return a single witness and set
// `non_enumerating`.
struct Outcome {
    Money optimal_value = 0;
    std::vector<ApprovalSet> optimal_sets;
    bool non_enumerating = false;
};

// Union of all optimal sets, sorted.
ApprovalSet winners(const Outcome& outcome);

ApprovalProfile build_layer(const Instance& instance, const RuleSpec& rule);

// Tries every feasible subset. Throws CapacityError beyond
// limits.max_projects projects or when the tie class outgrows
// limits.max_optimal_sets.
Outcome solve_exhaustive(const Instance& instance, const ApprovalProfile& profile,
                         Objective objective, const SolveLimits& limits = {});

// Knapsack over exact objective scores: row per project, column per
// attainable score, cell holds the cheapest cost reaching that score.
// The witness is the lexicographically first among the cheapest optimizers.
Outcome solve_dp_cardinality(const Instance& instance, const ApprovalProfile& profile,
                             const SolveLimits& limits = {});
Outcome solve_dp_cost(const Instance& instance, const ApprovalProfile& profile,
                      const SolveLimits& limits = {});

// Builds the layer and solves. Auto picks a dynamic program for the
// cardinality objective and for CostWorthy with the cost objective, and
// enumerates exhaustively otherwise.
Outcome evaluate_rule(const Instance& instance, const RuleSpec& rule,
                      Strategy strategy = Strategy::Auto, const SolveLimits& limits = {});

// Depth of the first prefix whose funded cost reaches lambda, or one more
// than the number of projects when even the whole funded set falls short.
std::uint32_t need_depth(const Instance& instance, std::uint32_t agent,
                         const NeedParameter& lambda, const ApprovalSet& funded);
Money need_disutility(const Instance& instance, const NeedParameter& lambda,
                      const ApprovalSet& funded);

// Minimizes total need depth over feasible sets, enumerating exhaustively.
Outcome solve_need(const Instance& instance, const NeedParameter& lambda,
                   const SolveLimits& limits = {});

} // namespace pbord
