#include "helpers.hpp"
#include "pbord/random.hpp"

#include <doctest.h>

using namespace pbtest;

TEST_CASE("greedy truncation on the walkthrough profile") {
    const Instance inst = layered_example();
    const ApprovalProfile profile = greedy_truncation_layer(inst);
    REQUIRE(profile.size() == 2);
    CHECK(names_of(inst, profile[0]) == std::vector<std::string>{"a1", "a3", "a4"});
    CHECK(names_of(inst, profile[1]) == std::vector<std::string>{"a1", "a3"});
}

TEST_CASE("greedy truncation freezes the leftover at the boundary class") {
    const Instance inst = parse_instance(
        "pbinstance 1\n"
        "budget 5\n"
        "project a 2\n"
        "project b 2\n"
        "project c 3\n"
        "project d 1\n"
        "agent a > {b,c} > d\n");
    const ApprovalSet approved = greedy_truncation_approvals(inst, 0);
    CHECK(names_of(inst, approved) == std::vector<std::string>{"a", "b", "c"});
    CHECK(inst.cost_of(approved) == 7);
    CHECK(inst.cost_of(approved) > inst.budget());
}

TEST_CASE("greedy truncation stops below the boundary class") {
    const Instance inst = parse_instance(
        "pbinstance 1\n"
        "budget 3\n"
        "project a 2\n"
        "project b 9\n"
        "project c 1\n"
        "agent a > b > c\n");
    CHECK(names_of(inst, greedy_truncation_approvals(inst, 0)) ==
          std::vector<std::string>{"a"});
}

TEST_CASE("greedy truncation with a tight or zero budget") {
    const Instance exact = parse_instance(
        "pbinstance 1\nbudget 4\nproject a 2\nproject b 2\nagent {a,b}\n");
    CHECK(greedy_truncation_approvals(exact, 0).size() == 2);

    const Instance zero = parse_instance(
        "pbinstance 1\nbudget 0\nproject a 1\nproject b 1\nagent {a,b}\n");
    CHECK(greedy_truncation_approvals(zero, 0).empty());
}

TEST_CASE("worth vector validation") {
    CHECK_NOTHROW(validate_worth_vector(WorthVector{{5, 5, 2, 0}}));
    CHECK_NOTHROW(validate_worth_vector(WorthVector{{0}}));
    CHECK_THROWS_AS(validate_worth_vector(WorthVector{{}}), ValidationError);
    CHECK_THROWS_AS(validate_worth_vector(WorthVector{{1, 2}}), ValidationError);
    CHECK_THROWS_AS(validate_worth_vector(WorthVector{{2, -1}}), ValidationError);

    const Instance inst = parse_instance(
        "pbinstance 1\nbudget 3\nproject a 1\nagent a\n");
    CHECK_NOTHROW(validate_worth_vector(WorthVector{{3}}, inst));
    CHECK_THROWS_AS(validate_worth_vector(WorthVector{{4}}, inst), ValidationError);
}

TEST_CASE("worth patterns pad with their last value") {
    const WorthVector padded = pad_worth_vector(WorthVector{{7, 3}}, 5);
    CHECK(padded.entries == std::vector<Money>{7, 3, 3, 3, 3});
    CHECK(pad_worth_vector(WorthVector{{2}}, 3).entries == std::vector<Money>{2, 2, 2});
    CHECK(pad_worth_vector(WorthVector{{3, 2, 1}}, 3).entries ==
          std::vector<Money>{3, 2, 1});
    CHECK_THROWS_AS(pad_worth_vector(WorthVector{{3, 2, 1}}, 2), ValidationError);
}

TEST_CASE("cost-worthy approvals compare cost against the worth of the rank") {
    const Instance inst = parse_instance(
        "pbinstance 1\n"
        "budget 10\n"
        "project a 3\n"
        "project b 2\n"
        "project c 2\n"
        "project d 1\n"
        "agent a > {b,c} > d\n");
    const ApprovalProfile profile = cost_worthy_layer(inst, WorthVector{{3, 2, 0}});
    CHECK(names_of(inst, profile[0]) == std::vector<std::string>{"a", "b", "c"});

    const ApprovalProfile stingy = cost_worthy_layer(inst, WorthVector{{2}});
    CHECK(names_of(inst, stingy[0]) == std::vector<std::string>{"b", "c", "d"});

    const ApprovalProfile none = cost_worthy_layer(inst, WorthVector{{0}});
    CHECK(none[0].empty());
}

TEST_CASE("cost-worthy approvals on the district instance") {
    const Instance inst = district_example();
    const ApprovalProfile profile =
        cost_worthy_layer(inst, WorthVector{{100, 80, 60, 60, 60}});
    REQUIRE(profile.size() == 6);
    for (const ApprovalSet& set : profile)
        CHECK(names_of(inst, set) == std::vector<std::string>{"A", "C", "D", "E"});
}

TEST_CASE("fuzzed cost-worthy membership matches the pointwise definition") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        const Instance inst = random_instance(rng);
        const WorthVector alpha =
            random_worth_vector(rng, inst.project_count(), inst.budget());
        const WorthVector padded = pad_worth_vector(alpha, inst.project_count());
        const ApprovalProfile profile = cost_worthy_layer(inst, alpha);
        for (std::uint32_t i = 0; i < inst.agent_count(); ++i) {
            for (std::uint32_t p = 0; p < inst.project_count(); ++p) {
                const bool approved =
                    std::binary_search(profile[i].begin(), profile[i].end(), p);
                const bool worthy =
                    inst.cost(p) <= padded.entries[inst.rank_of(i, p) - 1];
                CHECK(approved == worthy);
            }
        }
    }
}
