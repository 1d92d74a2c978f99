#include "pbord/layers.hpp"

#include <algorithm>

namespace pbord {

void validate_worth_vector(const WorthVector& alpha) {
    if (alpha.entries.empty())
        throw ValidationError("worth vector must have at least one entry");
    for (std::size_t i = 0; i < alpha.entries.size(); ++i) {
        if (alpha.entries[i] < 0)
            throw ValidationError("worth vector entry " + std::to_string(i + 1) +
                                  " is negative");
        if (i > 0 && alpha.entries[i] > alpha.entries[i - 1])
            throw ValidationError("worth vector must be non-increasing (entry " +
                                  std::to_string(i + 1) + " exceeds entry " +
                                  std::to_string(i) + ")");
    }
}

void validate_worth_vector(const WorthVector& alpha, const Instance& instance) {
    validate_worth_vector(alpha);
    if (alpha.entries.front() > instance.budget())
        throw ValidationError("worth vector entry exceeds the budget");
}

WorthVector pad_worth_vector(const WorthVector& pattern, std::uint32_t m) {
    validate_worth_vector(pattern);
    if (pattern.entries.size() > m)
        throw ValidationError("worth vector has more entries than there are ranks");
    WorthVector padded = pattern;
    padded.entries.resize(m, pattern.entries.back());
    return padded;
}

ApprovalSet greedy_truncation_approvals(const Instance& instance, std::uint32_t agent) {
    const auto& classes = instance.rankings()[agent].classes;
    const Money budget = instance.budget();
    ApprovalSet approved;
    Money taken = 0;
    for (const auto& cls : classes) {
        Money class_cost = 0;
        for (std::uint32_t p : cls) class_cost = checked_add(class_cost, instance.cost(p));
        if (checked_add(taken, class_cost) <= budget) {
            approved.insert(approved.end(), cls.begin(), cls.end());
            taken = checked_add(taken, class_cost);
            continue;
        }
        ApprovalSet boundary(cls.begin(), cls.end());
        std::sort(boundary.begin(), boundary.end());
        const Money leftover = budget - taken;
        for (std::uint32_t p : boundary)
            if (instance.cost(p) <= leftover) approved.push_back(p);
        break;
    }
    std::sort(approved.begin(), approved.end());
    return approved;
}

ApprovalProfile greedy_truncation_layer(const Instance& instance) {
    ApprovalProfile profile;
    profile.reserve(instance.agent_count());
    for (std::uint32_t i = 0; i < instance.agent_count(); ++i)
        profile.push_back(greedy_truncation_approvals(instance, i));
    return profile;
}

ApprovalSet cost_worthy_approvals(const Instance& instance, std::uint32_t agent,
                                  const WorthVector& alpha) {
    const auto& classes = instance.rankings()[agent].classes;
    if (alpha.entries.size() < classes.size())
        throw ValidationError("worth vector has fewer entries than ranks in use");
    ApprovalSet approved;
    for (std::size_t depth = 0; depth < classes.size(); ++depth) {
        const Money worth = alpha.entries[depth];
        for (std::uint32_t p : classes[depth])
            if (instance.cost(p) <= worth) approved.push_back(p);
    }
    std::sort(approved.begin(), approved.end());
    return approved;
}

ApprovalProfile cost_worthy_layer(const Instance& instance, const WorthVector& alpha_pattern) {
    validate_worth_vector(alpha_pattern, instance);
    const WorthVector alpha = pad_worth_vector(alpha_pattern, instance.project_count());
    ApprovalProfile profile;
    profile.reserve(instance.agent_count());
    for (std::uint32_t i = 0; i < instance.agent_count(); ++i)
        profile.push_back(cost_worthy_approvals(instance, i, alpha));
    return profile;
}

} // namespace pbord
