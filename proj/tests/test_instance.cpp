#include "helpers.hpp"

#include <doctest.h>

using namespace pbtest;

namespace {

Instance tiny() {
    return Instance({{"a", 2}, {"b", 3}, {"c", 1}}, 4,
                    {WeakRanking{{{1}, {0, 2}}}, WeakRanking{{{2}, {1}, {0}}}});
}

} // namespace

TEST_CASE("instance exposes ranks, prefixes, and costs") {
    const Instance inst = tiny();
    CHECK(inst.project_count() == 3);
    CHECK(inst.agent_count() == 2);
    CHECK(inst.budget() == 4);
    CHECK(inst.total_cost() == 6);

    CHECK(inst.rank_of(0, 1) == 1);
    CHECK(inst.rank_of(0, 0) == 2);
    CHECK(inst.rank_of(0, 2) == 2);
    CHECK(inst.rank_of(1, 2) == 1);
    CHECK(inst.rank_of(1, 0) == 3);

    CHECK(inst.prefix_set(0, 1) == ApprovalSet{1});
    CHECK(inst.prefix_set(0, 2) == ApprovalSet{0, 1, 2});
    CHECK(inst.prefix_set(1, 2) == ApprovalSet{1, 2});
    CHECK(inst.prefix_set(1, 99) == ApprovalSet{0, 1, 2});

    const ApprovalSet ab{0, 1};
    CHECK(inst.cost_of(ab) == 5);
    CHECK_FALSE(inst.is_feasible(ab));
    CHECK(inst.is_feasible(ApprovalSet{0, 2}));
    CHECK(inst.is_feasible(ApprovalSet{}));

    CHECK(inst.index_of("b") == 1);
    CHECK_THROWS_AS((void)inst.index_of("zz"), ValidationError);
}

TEST_CASE("instance construction validates its input") {
    const std::vector<WeakRanking> one = {WeakRanking{{{0}}}};

    CHECK_THROWS_AS(Instance({}, 1, one), ValidationError);
    CHECK_THROWS_AS(Instance({{"a", 1}}, 1, {}), ValidationError);
    CHECK_THROWS_AS(Instance({{"a", 1}}, -1, one), ValidationError);
    CHECK_THROWS_AS(Instance({{"a", 0}}, 1, one), ValidationError);
    CHECK_THROWS_AS(Instance({{"a", -2}}, 1, one), ValidationError);
    CHECK_THROWS_AS(Instance({{"", 1}}, 1, one), ValidationError);

    CHECK_THROWS_AS(Instance({{"b", 1}, {"a", 1}}, 1, {WeakRanking{{{0, 1}}}}),
                    ValidationError);
    CHECK_THROWS_AS(Instance({{"a", 1}, {"a", 1}}, 1, {WeakRanking{{{0, 1}}}}),
                    ValidationError);

    CHECK_THROWS_AS(Instance({{"a", 1}}, 1, {WeakRanking{{}}}), ValidationError);
    CHECK_THROWS_AS(Instance({{"a", 1}}, 1, {WeakRanking{{{}}}}), ValidationError);
    CHECK_THROWS_AS(Instance({{"a", 1}}, 1, {WeakRanking{{{0}, {0}}}}), ValidationError);
    CHECK_THROWS_AS(Instance({{"a", 1}}, 1, {WeakRanking{{{1}}}}), ValidationError);
    CHECK_THROWS_AS(Instance({{"a", 1}, {"b", 1}}, 1, {WeakRanking{{{0}}}}),
                    ValidationError);

    CHECK_NOTHROW(Instance({{"a", 1}}, 0, one));
}

TEST_CASE("checked arithmetic rejects 64-bit overflow") {
    const Money big = std::numeric_limits<Money>::max();
    CHECK(checked_add(big - 1, 1) == big);
    CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
    CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), OverflowError);
    CHECK(checked_mul(1'000'000, 1'000'000) == 1'000'000'000'000);
    CHECK_THROWS_AS(checked_add(std::numeric_limits<Money>::min(), -1), OverflowError);
}

TEST_CASE("overflow surfaces as a validation error") {
    const Money big = std::numeric_limits<Money>::max();
    bool caught = false;
    try {
        checked_add(big, big);
    } catch (const ValidationError&) {
        caught = true;
    }
    CHECK(caught);
}

TEST_CASE("total cost overflow is rejected at construction") {
    const Money big = std::numeric_limits<Money>::max();
    CHECK_THROWS_AS(Instance({{"a", big}, {"b", big}}, 1, {WeakRanking{{{0, 1}}}}),
                    OverflowError);
}
