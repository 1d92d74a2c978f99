#pragma once

#include "pbord/axioms.hpp"

namespace pbord {

// Encodings of three classic decision problems as budgeting instances. Each
// carries the instance, the rule to run, and the decision threshold on the
// rule's optimal value.

enum class Sense { AtLeast, AtMost };

struct DecisionInstance {
    Instance instance;
    AnyRule rule;
    Money threshold;
    Sense sense;
};

bool decide(const DecisionInstance& decision, const SolveLimits& limits = {});

// Subset sum: values must be positive and sorted non-decreasing. One project
// per value plus a blocker costing the whole budget; the cost objective hits
// the target exactly iff some subset of values does. `layer` picks the
// greedy encoding (one agent per value) or the single-agent worthy one.
struct SubsetSumInput {
    std::vector<Money> values;
    Money target;
};

DecisionInstance from_subset_sum(const SubsetSumInput& input, LayerKind layer);

// Vertex cover: unit-cost vertex projects, budget k, one agent per edge;
// coverage reaches the edge count iff the graph has a vertex cover of size
// at most k. The greedy encoding needs k >= 3 and adds a filler project the
// edge agents rank below both endpoints.
struct VertexCoverInput {
    std::uint32_t vertices = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::uint32_t k = 0;
};

DecisionInstance from_vertex_cover(const VertexCoverInput& input, LayerKind layer);

// Rank-misrepresentation committee selection: strict voter rankings over
// unit-cost candidates, budget k, threshold 1. The need disutility is the
// sum over voters of the rank of their best funded candidate, so it stays
// at or below s iff a committee of size at most k does.
struct CommitteeInput {
    std::uint32_t candidates = 0;
    std::vector<std::vector<std::uint32_t>> voter_rankings;   // permutations
    std::uint32_t committee_size = 0;
    Money misrepresentation = 0;
};

DecisionInstance from_committee_selection(const CommitteeInput& input);

} // namespace pbord
