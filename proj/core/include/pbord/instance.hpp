#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pbord {

using Money = std::int64_t;

// Input or parameter data that fails a precondition.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Arithmetic that would leave the 64-bit range. Treated as a validation
// failure: the data is out of the supported range, not the algorithm.
class OverflowError : public ValidationError {
public:
    explicit OverflowError(const std::string& what) : ValidationError(what) {}
};

// A request that exceeds a configured enumeration cap.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

Money checked_add(Money a, Money b);
Money checked_mul(Money a, Money b);

struct Project {
    std::string id;
    Money cost = 0;
};

// A complete weak order: an ordered partition of all project indices.
// classes.front() holds the most preferred projects.
struct WeakRanking {
    std::vector<std::vector<std::uint32_t>> classes;
};

// An election: projects (kept sorted by id so that serialization and set
// orderings are canonical), a budget, and one weak ranking per agent.
// Instances are immutable after construction; every transformation in this
// library builds a fresh instance.
class Instance {
public:
    Instance(std::vector<Project> projects, Money budget,
             std::vector<WeakRanking> rankings);

    const std::vector<Project>& projects() const { return projects_; }
    Money budget() const { return budget_; }
    const std::vector<WeakRanking>& rankings() const { return rankings_; }

    std::uint32_t project_count() const { return static_cast<std::uint32_t>(projects_.size()); }
    std::uint32_t agent_count() const { return static_cast<std::uint32_t>(rankings_.size()); }

    Money cost(std::uint32_t project) const { return projects_[project].cost; }
    const std::string& id(std::uint32_t project) const { return projects_[project].id; }

    // 1-based rank of a project in an agent's weak ranking.
    std::uint32_t rank_of(std::uint32_t agent, std::uint32_t project) const {
        return rank_table_[agent][project];
    }

    // Union of the first `depth` classes of an agent's ranking, sorted.
    std::vector<std::uint32_t> prefix_set(std::uint32_t agent, std::uint32_t depth) const;

    Money cost_of(std::span<const std::uint32_t> set) const;
    bool is_feasible(std::span<const std::uint32_t> set) const;

    // Index of the project with this id; throws ValidationError if absent.
    std::uint32_t index_of(const std::string& id) const;

    Money total_cost() const { return total_cost_; }

private:
    std::vector<Project> projects_;
    Money budget_ = 0;
    std::vector<WeakRanking> rankings_;
    std::vector<std::vector<std::uint32_t>> rank_table_;
    Money total_cost_ = 0;
};

} // namespace pbord
