#include "pbord/rules.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace pbord {

namespace {

constexpr Money kInf = std::numeric_limits<Money>::max();

void validate_profile(const Instance& instance, const ApprovalProfile& profile) {
    if (profile.size() != instance.agent_count())
        throw ValidationError("approval profile has " + std::to_string(profile.size()) +
                              " agents, instance has " + std::to_string(instance.agent_count()));
}

// How much one funded project contributes to the objective, summed over
// agents: its approval count for Cardinality, approval count times cost for
// Cost. Coverage has no such per-project weight.
std::vector<Money> project_weights(const Instance& instance, const ApprovalProfile& profile,
                                   Objective objective) {
    std::vector<Money> weights(instance.project_count(), 0);
    for (const ApprovalSet& approved : profile)
        for (std::uint32_t p : approved) weights[p] += 1;
    if (objective == Objective::Cost)
        for (std::uint32_t p = 0; p < weights.size(); ++p)
            weights[p] = checked_mul(weights[p], instance.cost(p));
    return weights;
}

ApprovalSet mask_to_set(std::uint64_t mask) {
    ApprovalSet set;
    for (std::uint32_t p = 0; mask; ++p, mask >>= 1)
        if (mask & 1) set.push_back(p);
    return set;
}

struct MaskEnumerator {
    explicit MaskEnumerator(const Instance& instance, const SolveLimits& limits) {
        const std::uint32_t m = instance.project_count();
        if (m > limits.max_projects)
            throw CapacityError("exhaustive search over " + std::to_string(m) +
                                " projects exceeds the cap of " +
                                std::to_string(limits.max_projects));
        cost.assign(std::uint64_t{1} << m, 0);
        for (std::uint64_t mask = 1; mask < cost.size(); ++mask) {
            std::uint32_t low = static_cast<std::uint32_t>(std::countr_zero(mask));
            cost[mask] = cost[mask & (mask - 1)] + instance.cost(low);
        }
    }
    std::vector<Money> cost;
};

template <typename Value>
void record_tie(std::vector<std::uint64_t>& arg, std::uint64_t mask, Value value, Value& best,
                bool maximize, const SolveLimits& limits) {
    if (!arg.empty()) {
        if (value == best) {
            arg.push_back(mask);
        } else if (maximize ? value > best : value < best) {
            best = value;
            arg.assign(1, mask);
        } else {
            return;
        }
    } else {
        best = value;
        arg.push_back(mask);
    }
    if (arg.size() > limits.max_optimal_sets)
        throw CapacityError("more than " + std::to_string(limits.max_optimal_sets) +
                            " optimal sets");
}

Outcome finish_enumeration(std::vector<std::uint64_t>& arg, Money best) {
    Outcome outcome;
    outcome.optimal_value = best;
    outcome.optimal_sets.reserve(arg.size());
    for (std::uint64_t mask : arg) outcome.optimal_sets.push_back(mask_to_set(mask));
    std::sort(outcome.optimal_sets.begin(), outcome.optimal_sets.end());
    return outcome;
}

Outcome dp_over_weights(const Instance& instance, const std::vector<Money>& weights,
                        const SolveLimits& limits) {
    const std::uint32_t m = instance.project_count();
    Money total = 0;
    for (Money w : weights) total = checked_add(total, w);
    const std::uint64_t columns = static_cast<std::uint64_t>(total) + 1;
    if (static_cast<long long>((m + 1) * columns) > limits.max_dp_cells)
        throw CapacityError("dynamic program needs " + std::to_string((m + 1) * columns) +
                            " cells, cap is " + std::to_string(limits.max_dp_cells));

    // suffix[i][j]: cheapest way for projects i.. to contribute exactly j.
    std::vector<std::vector<Money>> suffix(m + 1, std::vector<Money>(columns, kInf));
    suffix[m][0] = 0;
    for (std::uint32_t i = m; i-- > 0;) {
        const Money w = weights[i];
        const Money c = instance.cost(i);
        for (std::uint64_t j = 0; j < columns; ++j) {
            Money cheapest = suffix[i + 1][j];
            if (static_cast<Money>(j) >= w && suffix[i + 1][j - w] != kInf)
                cheapest = std::min(cheapest, suffix[i + 1][j - w] + c);
            suffix[i][j] = cheapest;
        }
    }

    Money best = 0;
    for (std::uint64_t j = columns; j-- > 0;)
        if (suffix[0][j] <= instance.budget()) {
            best = static_cast<Money>(j);
            break;
        }

    // Walk forward, funding a project whenever that still reaches the
    // optimum at the same cheapest cost; this lands on the lexicographically
    // first of the cheapest optimizers.
    Outcome outcome;
    outcome.optimal_value = best;
    outcome.non_enumerating = true;
    ApprovalSet witness;
    std::uint64_t j = static_cast<std::uint64_t>(best);
    for (std::uint32_t i = 0; i < m; ++i) {
        const Money w = weights[i];
        if (static_cast<Money>(j) >= w && suffix[i + 1][j - w] != kInf &&
            suffix[i + 1][j - w] + instance.cost(i) == suffix[i][j]) {
            witness.push_back(i);
            j -= static_cast<std::uint64_t>(w);
        }
    }
    outcome.optimal_sets.push_back(std::move(witness));
    return outcome;
}

} // namespace

ApprovalSet winners(const Outcome& outcome) {
    ApprovalSet all;
    for (const ApprovalSet& set : outcome.optimal_sets)
        all.insert(all.end(), set.begin(), set.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

ApprovalProfile build_layer(const Instance& instance, const RuleSpec& rule) {
    if (rule.layer == LayerKind::Greedy) return greedy_truncation_layer(instance);
    return cost_worthy_layer(instance, rule.alpha);
}

Outcome solve_exhaustive(const Instance& instance, const ApprovalProfile& profile,
                         Objective objective, const SolveLimits& limits) {
    validate_profile(instance, profile);
    MaskEnumerator masks(instance, limits);
    const Money budget = instance.budget();

    std::vector<std::uint64_t> arg;
    Money best = 0;

    if (objective == Objective::Coverage) {
        std::vector<std::uint64_t> agent_mask(profile.size(), 0);
        for (std::size_t i = 0; i < profile.size(); ++i)
            for (std::uint32_t p : profile[i]) agent_mask[i] |= std::uint64_t{1} << p;
        for (std::uint64_t mask = 0; mask < masks.cost.size(); ++mask) {
            if (masks.cost[mask] > budget) continue;
            Money covered = 0;
            for (std::uint64_t am : agent_mask) covered += (am & mask) != 0;
            record_tie(arg, mask, covered, best, true, limits);
        }
        return finish_enumeration(arg, best);
    }

    const std::vector<Money> weights = project_weights(instance, profile, objective);
    Money sum = 0;
    for (Money w : weights) sum = checked_add(sum, w);
    std::vector<Money> score(masks.cost.size(), 0);
    for (std::uint64_t mask = 1; mask < score.size(); ++mask) {
        std::uint32_t low = static_cast<std::uint32_t>(std::countr_zero(mask));
        score[mask] = score[mask & (mask - 1)] + weights[low];
    }
    for (std::uint64_t mask = 0; mask < masks.cost.size(); ++mask) {
        if (masks.cost[mask] > budget) continue;
        record_tie(arg, mask, score[mask], best, true, limits);
    }
    return finish_enumeration(arg, best);
}

Outcome solve_dp_cardinality(const Instance& instance, const ApprovalProfile& profile,
                             const SolveLimits& limits) {
    validate_profile(instance, profile);
    return dp_over_weights(instance, project_weights(instance, profile, Objective::Cardinality),
                           limits);
}

Outcome solve_dp_cost(const Instance& instance, const ApprovalProfile& profile,
                      const SolveLimits& limits) {
    validate_profile(instance, profile);
    return dp_over_weights(instance, project_weights(instance, profile, Objective::Cost), limits);
}

Outcome evaluate_rule(const Instance& instance, const RuleSpec& rule, Strategy strategy,
                      const SolveLimits& limits) {
    const ApprovalProfile profile = build_layer(instance, rule);
    const bool dp_available =
        rule.objective == Objective::Cardinality ||
        (rule.layer == LayerKind::CostWorthy && rule.objective == Objective::Cost);
    if (strategy == Strategy::Exhaustive || (strategy == Strategy::Auto && !dp_available))
        return solve_exhaustive(instance, profile, rule.objective, limits);
    if (!dp_available)
        throw ValidationError("no dynamic program for this rule; use the exhaustive strategy");
    if (rule.objective == Objective::Cardinality)
        return solve_dp_cardinality(instance, profile, limits);
    return solve_dp_cost(instance, profile, limits);
}

void validate_need_parameter(const NeedParameter& lambda, const Instance& instance) {
    if (lambda.den <= 0) throw ValidationError("need threshold denominator must be positive");
    if (lambda.num <= 0) throw ValidationError("need threshold must be positive");
    if (lambda.num > checked_mul(lambda.den, instance.budget()))
        throw ValidationError("need threshold exceeds the budget");
}

std::uint32_t need_depth(const Instance& instance, std::uint32_t agent,
                         const NeedParameter& lambda, const ApprovalSet& funded) {
    const auto& classes = instance.rankings()[agent].classes;
    Money funded_prefix = 0;
    for (std::size_t depth = 0; depth < classes.size(); ++depth) {
        for (std::uint32_t p : classes[depth])
            if (std::binary_search(funded.begin(), funded.end(), p))
                funded_prefix = checked_add(funded_prefix, instance.cost(p));
        if (checked_mul(funded_prefix, lambda.den) >= lambda.num)
            return static_cast<std::uint32_t>(depth) + 1;
    }
    return instance.project_count() + 1;
}

Money need_disutility(const Instance& instance, const NeedParameter& lambda,
                      const ApprovalSet& funded) {
    Money total = 0;
    for (std::uint32_t i = 0; i < instance.agent_count(); ++i)
        total += need_depth(instance, i, lambda, funded);
    return total;
}

Outcome solve_need(const Instance& instance, const NeedParameter& lambda,
                   const SolveLimits& limits) {
    validate_need_parameter(lambda, instance);
    MaskEnumerator masks(instance, limits);
    const Money budget = instance.budget();
    const std::uint32_t unmet = instance.project_count() + 1;

    std::vector<std::uint64_t> arg;
    Money best = 0;
    for (std::uint64_t mask = 0; mask < masks.cost.size(); ++mask) {
        if (masks.cost[mask] > budget) continue;
        Money total = 0;
        for (const WeakRanking& ranking : instance.rankings()) {
            Money funded_prefix = 0;
            std::uint32_t depth_reached = unmet;
            for (std::size_t depth = 0; depth < ranking.classes.size(); ++depth) {
                for (std::uint32_t p : ranking.classes[depth])
                    if (mask >> p & 1)
                        funded_prefix = checked_add(funded_prefix, instance.cost(p));
                if (checked_mul(funded_prefix, lambda.den) >= lambda.num) {
                    depth_reached = static_cast<std::uint32_t>(depth) + 1;
                    break;
                }
            }
            total += depth_reached;
        }
        record_tie(arg, mask, total, best, false, limits);
    }
    return finish_enumeration(arg, best);
}

} // namespace pbord
