#include "pbord/random.hpp"

#include <algorithm>
#include <numeric>

namespace pbord {

namespace {

using u128 = unsigned __int128;

u128 uniform_u128(std::mt19937_64& rng, u128 bound) {
    const u128 max = ~u128{0};
    const u128 bucket = max / bound;
    const u128 accept_below = bucket * bound;
    while (true) {
        u128 x = (u128{rng()} << 64) | rng();
        if (x < accept_below) return x / bucket;
    }
}

// counts[k] is the number of ordered partitions of k items; m <= 30 keeps
// the 128-bit recurrence exact.
struct PartitionCounts {
    explicit PartitionCounts(std::uint32_t m) : choose(m + 1), counts(m + 1) {
        for (std::uint32_t k = 0; k <= m; ++k) {
            choose[k].assign(k + 1, 1);
            for (std::uint32_t j = 1; j < k; ++j)
                choose[k][j] = choose[k - 1][j - 1] + choose[k - 1][j];
        }
        counts[0] = 1;
        for (std::uint32_t k = 1; k <= m; ++k) {
            counts[k] = 0;
            for (std::uint32_t j = 1; j <= k; ++j) counts[k] += choose[k][j] * counts[k - j];
        }
    }
    std::vector<std::vector<u128>> choose;
    std::vector<u128> counts;
};

std::string padded_id(std::uint32_t index, std::uint32_t m) {
    std::string digits = std::to_string(index + 1);
    std::string width = std::to_string(m);
    return "p" + std::string(width.size() - digits.size(), '0') + digits;
}

Money draw_money(std::mt19937_64& rng, Money lo, Money hi) {
    return std::uniform_int_distribution<Money>(lo, hi)(rng);
}

} // namespace

WeakRanking random_weak_ranking(std::mt19937_64& rng, std::uint32_t m) {
    if (m == 0) throw ValidationError("cannot rank zero projects");
    if (m > 30) throw CapacityError("weak ranking sampler supports at most 30 projects");
    const PartitionCounts table(m);

    std::vector<std::uint32_t> remaining(m);
    std::iota(remaining.begin(), remaining.end(), 0);
    WeakRanking ranking;
    std::uint32_t left = m;
    while (left > 0) {
        const u128 draw = uniform_u128(rng, table.counts[left]);
        std::uint32_t size = left;
        u128 acc = 0;
        for (std::uint32_t j = 1; j <= left; ++j) {
            acc += table.choose[left][j] * table.counts[left - j];
            if (draw < acc) {
                size = j;
                break;
            }
        }
        std::vector<std::uint32_t> block;
        std::sample(remaining.begin(), remaining.end(), std::back_inserter(block), size, rng);
        std::vector<std::uint32_t> rest;
        std::set_difference(remaining.begin(), remaining.end(), block.begin(), block.end(),
                            std::back_inserter(rest));
        remaining = std::move(rest);
        ranking.classes.push_back(std::move(block));
        left -= size;
    }
    return ranking;
}

WeakRanking random_strict_ranking(std::mt19937_64& rng, std::uint32_t m) {
    if (m == 0) throw ValidationError("cannot rank zero projects");
    std::vector<std::uint32_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    WeakRanking ranking;
    for (std::uint32_t p : order) ranking.classes.push_back({p});
    return ranking;
}

Instance random_instance(std::mt19937_64& rng, const GenConfig& config) {
    if (config.min_projects < 1 || config.min_projects > config.max_projects)
        throw ValidationError("bad project count range");
    if (config.min_agents < 1 || config.min_agents > config.max_agents)
        throw ValidationError("bad agent count range");
    if (config.max_cost < 1) throw ValidationError("max_cost must be positive");

    const std::uint32_t m = std::uniform_int_distribution<std::uint32_t>(
        config.min_projects, config.max_projects)(rng);
    const std::uint32_t n = std::uniform_int_distribution<std::uint32_t>(
        config.min_agents, config.max_agents)(rng);

    std::vector<Project> projects;
    Money total = 0;
    for (std::uint32_t p = 0; p < m; ++p) {
        Money cost = config.unit_costs ? 1 : draw_money(rng, 1, config.max_cost);
        total = checked_add(total, cost);
        projects.push_back(Project{padded_id(p, m), cost});
    }

    Money hi = config.max_budget > 0 ? config.max_budget : total;
    Money lo = std::min(config.min_budget, hi);
    const Money budget = draw_money(rng, lo, hi);

    std::vector<WeakRanking> rankings;
    for (std::uint32_t i = 0; i < n; ++i)
        rankings.push_back(config.strict_rankings ? random_strict_ranking(rng, m)
                                                  : random_weak_ranking(rng, m));
    return Instance(std::move(projects), budget, std::move(rankings));
}

WorthVector random_worth_vector(std::mt19937_64& rng, std::uint32_t m, Money budget) {
    if (m == 0) throw ValidationError("worth vector needs at least one rank");
    WorthVector alpha;
    for (std::uint32_t j = 0; j < m; ++j) alpha.entries.push_back(draw_money(rng, 0, budget));
    std::sort(alpha.entries.rbegin(), alpha.entries.rend());
    return alpha;
}

NeedParameter random_need_parameter(std::mt19937_64& rng, Money budget, NeedRange range) {
    if (budget < 1) throw ValidationError("need thresholds require a positive budget");
    switch (range) {
        case NeedRange::Low: {
            Money den = draw_money(rng, 1, 6);
            return NeedParameter{draw_money(rng, 1, den), den};
        }
        case NeedRange::Mid: {
            if (budget < 3)
                throw ValidationError("mid-range need thresholds require a budget of at least 3");
            Money den = draw_money(rng, 1, 4);
            return NeedParameter{draw_money(rng, den + 1, den * (budget - 1)), den};
        }
        case NeedRange::High: {
            Money den = draw_money(rng, 1, 4);
            return NeedParameter{draw_money(rng, checked_mul(den, budget - 1) + 1,
                                            checked_mul(den, budget)),
                                 den};
        }
    }
    throw ValidationError("unknown need range");
}

} // namespace pbord
