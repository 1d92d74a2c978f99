#include "pbord/instance.hpp"

#include <algorithm>
#include <unordered_map>

namespace pbord {

Money checked_add(Money a, Money b) {
    Money r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("64-bit overflow in addition");
    return r;
}

Money checked_mul(Money a, Money b) {
    Money r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("64-bit overflow in multiplication");
    return r;
}

Instance::Instance(std::vector<Project> projects, Money budget,
                   std::vector<WeakRanking> rankings)
    : projects_(std::move(projects)), budget_(budget), rankings_(std::move(rankings)) {
    if (projects_.empty())
        throw ValidationError("instance needs at least one project");
    if (rankings_.empty())
        throw ValidationError("instance needs at least one agent");
    if (budget_ < 0)
        throw ValidationError("budget must be non-negative");

    for (std::size_t i = 0; i < projects_.size(); ++i) {
        const Project& p = projects_[i];
        if (p.id.empty())
            throw ValidationError("project id must be non-empty");
        if (p.cost <= 0)
            throw ValidationError("project '" + p.id + "' must have positive cost");
        if (i > 0) {
            if (projects_[i - 1].id == p.id)
                throw ValidationError("duplicate project id '" + p.id + "'");
            if (projects_[i - 1].id > p.id)
                throw ValidationError("projects must be sorted by id ('" +
                                      projects_[i - 1].id + "' before '" + p.id + "')");
        }
        total_cost_ = checked_add(total_cost_, p.cost);
    }

    const std::uint32_t m = project_count();
    rank_table_.reserve(rankings_.size());
    for (const WeakRanking& r : rankings_) {
        std::vector<std::uint32_t> ranks(m, 0);
        std::uint32_t seen = 0;
        for (std::size_t cls = 0; cls < r.classes.size(); ++cls) {
            if (r.classes[cls].empty())
                throw ValidationError("ranking contains an empty class");
            for (std::uint32_t p : r.classes[cls]) {
                if (p >= m)
                    throw ValidationError("ranking references project index out of range");
                if (ranks[p] != 0)
                    throw ValidationError("project '" + projects_[p].id +
                                          "' appears twice in one ranking");
                ranks[p] = static_cast<std::uint32_t>(cls + 1);
                ++seen;
            }
        }
        if (seen != m)
            throw ValidationError("ranking does not cover every project");
        rank_table_.push_back(std::move(ranks));
    }
}

std::vector<std::uint32_t> Instance::prefix_set(std::uint32_t agent, std::uint32_t depth) const {
    std::vector<std::uint32_t> out;
    const WeakRanking& r = rankings_[agent];
    const std::uint32_t take = std::min<std::uint32_t>(depth, static_cast<std::uint32_t>(r.classes.size()));
    for (std::uint32_t cls = 0; cls < take; ++cls)
        out.insert(out.end(), r.classes[cls].begin(), r.classes[cls].end());
    std::sort(out.begin(), out.end());
    return out;
}

Money Instance::cost_of(std::span<const std::uint32_t> set) const {
    Money total = 0;
    for (std::uint32_t p : set)
        total = checked_add(total, projects_[p].cost);
    return total;
}

bool Instance::is_feasible(std::span<const std::uint32_t> set) const {
    return cost_of(set) <= budget_;
}

std::uint32_t Instance::index_of(const std::string& id) const {
    auto it = std::lower_bound(projects_.begin(), projects_.end(), id,
                               [](const Project& p, const std::string& s) { return p.id < s; });
    if (it == projects_.end() || it->id != id)
        throw ValidationError("unknown project id '" + id + "'");
    return static_cast<std::uint32_t>(it - projects_.begin());
}

} // namespace pbord
