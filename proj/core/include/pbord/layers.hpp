#pragma once

#include "pbord/instance.hpp"

namespace pbord {

// Per-agent approval set (sorted project indices) and the whole profile.
using ApprovalSet = std::vector<std::uint32_t>;
using ApprovalProfile = std::vector<ApprovalSet>;

// Non-increasing worth per rank: alpha.entries[j-1] is the largest cost a
// project at rank j deserves. Stored as a pattern that may be shorter than
// the number of ranks; pad_worth_vector() extends it with its last value.
struct WorthVector {
    std::vector<Money> entries;
};

// Throws ValidationError unless entries are non-increasing, non-negative,
// and (when an instance is given) no larger than its budget.
void validate_worth_vector(const WorthVector& alpha);
void validate_worth_vector(const WorthVector& alpha, const Instance& instance);

// Right-pads a pattern with its last value to length m. A pattern longer
// than m is rejected.
WorthVector pad_worth_vector(const WorthVector& pattern, std::uint32_t m);

// Walks an agent's classes from the top, taking whole classes while they fit
// within the budget. The first class that does not fit is scanned one project
// at a time (in project-id order): a member is taken when its own cost fits
// into what the fully taken classes left over, and the leftover is *not*
// reduced by such individual additions. Nothing below that class is
// considered. The approved total may therefore exceed the budget.
ApprovalSet greedy_truncation_approvals(const Instance& instance, std::uint32_t agent);
ApprovalProfile greedy_truncation_layer(const Instance& instance);

// Approves exactly the projects whose cost is at most the worth of their
// rank. `alpha` must already have one entry per rank in use (pad first).
ApprovalSet cost_worthy_approvals(const Instance& instance, std::uint32_t agent,
                                  const WorthVector& alpha);
// Pads and validates the pattern, then applies it to every agent.
ApprovalProfile cost_worthy_layer(const Instance& instance, const WorthVector& alpha_pattern);

} // namespace pbord
