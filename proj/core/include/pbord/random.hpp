#pragma once

#include "pbord/layers.hpp"
#include "pbord/rules.hpp"

#include <random>

namespace pbord {

struct GenConfig {
    std::uint32_t min_projects = 1;
    std::uint32_t max_projects = 8;
    std::uint32_t min_agents = 1;
    std::uint32_t max_agents = 5;
    Money max_cost = 10;
    bool unit_costs = false;
    bool strict_rankings = false;
    Money min_budget = 1;
    Money max_budget = 0;   // 0: use the total project cost
};

// Uniform over all ordered partitions of m projects into nonempty classes,
// via the recurrence a(m) = sum_j C(m,j) a(m-j) by first-class size.
WeakRanking random_weak_ranking(std::mt19937_64& rng, std::uint32_t m);
WeakRanking random_strict_ranking(std::mt19937_64& rng, std::uint32_t m);

Instance random_instance(std::mt19937_64& rng, const GenConfig& config = {});

// Uniform non-increasing worth vector with entries in [0, budget].
WorthVector random_worth_vector(std::mt19937_64& rng, std::uint32_t m, Money budget);

enum class NeedRange { Low, Mid, High };   // (0,1], (1,L-1], (L-1,L]

// Uniform-ish rational threshold in the range, with small denominators.
// Mid needs a budget of at least 3 to be nonempty.
NeedParameter random_need_parameter(std::mt19937_64& rng, Money budget, NeedRange range);

} // namespace pbord
