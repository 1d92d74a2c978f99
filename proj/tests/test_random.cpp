#include "helpers.hpp"
#include "pbord/random.hpp"

#include <doctest.h>

#include <map>

using namespace pbtest;

TEST_CASE("weak rankings partition the projects") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint32_t m = 1 + rng() % 12;
        const WeakRanking ranking = random_weak_ranking(rng, m);
        std::vector<bool> seen(m, false);
        for (const auto& cls : ranking.classes) {
            CHECK_FALSE(cls.empty());
            for (std::uint32_t p : cls) {
                REQUIRE(p < m);
                CHECK_FALSE(seen[p]);
                seen[p] = true;
            }
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
    }
}

TEST_CASE("weak rankings are drawn near-uniformly over ordered partitions") {
    std::mt19937_64 rng(67);
    std::map<std::string, int> counts;
    const int draws = 13000;
    for (int i = 0; i < draws; ++i) {
        const WeakRanking ranking = random_weak_ranking(rng, 3);
        std::string key;
        for (const auto& cls : ranking.classes) {
            for (std::uint32_t p : cls) key += static_cast<char>('a' + p);
            key += '|';
        }
        ++counts[key];
    }
    CHECK(counts.size() == 13);
    for (const auto& [key, count] : counts) {
        CHECK(count > 700);
        CHECK(count < 1300);
    }
}

TEST_CASE("strict rankings are permutations of singletons") {
    std::mt19937_64 rng(12);
    const WeakRanking ranking = random_strict_ranking(rng, 6);
    CHECK(ranking.classes.size() == 6);
    for (const auto& cls : ranking.classes) CHECK(cls.size() == 1);
}

TEST_CASE("the ranking sampler rejects out-of-range sizes") {
    std::mt19937_64 rng(1);
    CHECK_THROWS_AS((void)random_weak_ranking(rng, 0), ValidationError);
    CHECK_THROWS_AS((void)random_weak_ranking(rng, 31), CapacityError);
    CHECK_NOTHROW((void)random_weak_ranking(rng, 30));
}

TEST_CASE("random instances respect their configuration") {
    std::mt19937_64 rng(2024);
    GenConfig config;
    config.min_projects = 2;
    config.max_projects = 6;
    config.min_agents = 2;
    config.max_agents = 3;
    config.max_cost = 7;
    config.min_budget = 2;
    config.max_budget = 15;
    for (int trial = 0; trial < 200; ++trial) {
        const Instance inst = random_instance(rng, config);
        CHECK(inst.project_count() >= 2);
        CHECK(inst.project_count() <= 6);
        CHECK(inst.agent_count() >= 2);
        CHECK(inst.agent_count() <= 3);
        CHECK(inst.budget() >= 2);
        CHECK(inst.budget() <= 15);
        for (const Project& p : inst.projects()) {
            CHECK(p.cost >= 1);
            CHECK(p.cost <= 7);
        }
        for (std::uint32_t p = 1; p < inst.project_count(); ++p)
            CHECK(inst.projects()[p - 1].id < inst.projects()[p].id);
    }
}

TEST_CASE("unit-cost and strict-ranking flags hold") {
    std::mt19937_64 rng(9);
    GenConfig config;
    config.unit_costs = true;
    config.strict_rankings = true;
    for (int trial = 0; trial < 50; ++trial) {
        const Instance inst = random_instance(rng, config);
        for (const Project& p : inst.projects()) CHECK(p.cost == 1);
        for (const WeakRanking& r : inst.rankings())
            for (const auto& cls : r.classes) CHECK(cls.size() == 1);
    }
}

TEST_CASE("instance generation is reproducible from the seed") {
    std::mt19937_64 a(777), b(777);
    for (int trial = 0; trial < 20; ++trial)
        CHECK(serialize_instance(random_instance(a)) ==
              serialize_instance(random_instance(b)));
}

TEST_CASE("generator configs are validated") {
    std::mt19937_64 rng(3);
    GenConfig bad;
    bad.min_projects = 5;
    bad.max_projects = 2;
    CHECK_THROWS_AS((void)random_instance(rng, bad), ValidationError);
    bad = {};
    bad.min_agents = 0;
    CHECK_THROWS_AS((void)random_instance(rng, bad), ValidationError);
    bad = {};
    bad.max_cost = 0;
    CHECK_THROWS_AS((void)random_instance(rng, bad), ValidationError);
}

TEST_CASE("worth vectors are non-increasing within the budget") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint32_t m = 1 + rng() % 8;
        const Money budget = 1 + rng() % 12;
        const WorthVector alpha = random_worth_vector(rng, m, budget);
        REQUIRE(alpha.entries.size() == m);
        for (std::size_t j = 0; j < m; ++j) {
            CHECK(alpha.entries[j] >= 0);
            CHECK(alpha.entries[j] <= budget);
            if (j > 0) CHECK(alpha.entries[j - 1] >= alpha.entries[j]);
        }
    }
}

TEST_CASE("need thresholds land in their ranges") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const Money budget = 3 + rng() % 10;

        NeedParameter low = random_need_parameter(rng, budget, NeedRange::Low);
        CHECK(low.num >= 1);
        CHECK(low.num <= low.den);

        NeedParameter mid = random_need_parameter(rng, budget, NeedRange::Mid);
        CHECK(mid.num > mid.den);
        CHECK(mid.num <= mid.den * (budget - 1));

        NeedParameter high = random_need_parameter(rng, budget, NeedRange::High);
        CHECK(high.num > high.den * (budget - 1));
        CHECK(high.num <= high.den * budget);
    }
    CHECK_THROWS_AS((void)random_need_parameter(rng, 2, NeedRange::Mid), ValidationError);
    CHECK_THROWS_AS((void)random_need_parameter(rng, 0, NeedRange::Low), ValidationError);
}
