#pragma once

#include "pbord/random.hpp"
#include "pbord/rules.hpp"

#include <array>
#include <optional>
#include <variant>

namespace pbord {

enum class Axiom {
    CandidateMonotonicity,
    NonCrossingMonotonicity,
    DiscountMonotonicity,
    LimitMonotonicity,
    ProAffordability,
    InclusionMaximality,
    Anonymity,
    Neutrality,
    Consistency,
    Splitting,
};

constexpr std::array<Axiom, 10> kAllAxioms = {
    Axiom::CandidateMonotonicity, Axiom::NonCrossingMonotonicity, Axiom::DiscountMonotonicity,
    Axiom::LimitMonotonicity,     Axiom::ProAffordability,        Axiom::InclusionMaximality,
    Axiom::Anonymity,             Axiom::Neutrality,              Axiom::Consistency,
    Axiom::Splitting,
};

std::string axiom_name(Axiom axiom);
std::optional<Axiom> axiom_from_name(std::string_view name);

// A rule under test: a layered rule or a need threshold.
using AnyRule = std::variant<RuleSpec, NeedParameter>;

// Full enumeration of the optimal sets, regardless of rule kind.
Outcome enumerate_optima(const Instance& instance, const AnyRule& rule,
                         const SolveLimits& limits = {});

enum class Verdict { Satisfied, Violated, NotApplicable };

struct CheckReport {
    Verdict verdict = Verdict::Satisfied;
    std::uint64_t trials = 0;   // admissible perturbations examined
    std::string detail;
    std::optional<Instance> counterexample;
};

struct CheckOptions {
    std::uint64_t max_trials = UINT64_MAX;
    std::uint64_t seed = 1;   // drives sampled permutations on larger instances
    SolveLimits limits;
};

// Tries every admissible perturbation of the instance (up to max_trials) and
// reports the first violation found. Rank shifts swap a project's class with
// the class above it and are only admissible where both are singletons.
CheckReport check_axiom(const Instance& instance, const AnyRule& rule, Axiom axiom,
                        const CheckOptions& options = {});

// Rows and columns of the compliance tables. Layered families pair a layer
// with an objective; Need covers the threshold rule across its ranges.
enum class RuleFamily {
    GreedyCard,
    GreedyCost,
    GreedyCover,
    WorthyCard,
    WorthyCost,
    WorthyCover,
    Need,
};

std::string family_name(RuleFamily family);

// Parameter regime a table cell is conditioned on. None means the verdict
// does not depend on the worth vector or threshold beyond validity.
enum class ParamClass {
    None,
    AlphaConstant,      // alpha(1) == alpha(m)
    AlphaNonConstant,   // alpha(1) != alpha(m)
    AlphaNarrowGap,     // alpha(1) <  alpha(m) + 2
    AlphaWideGap,       // alpha(1) >= alpha(m) + 2
    AlphaUnitTop,       // alpha(1) <= 1
    AlphaRichTop,       // alpha(1) >  1
    NeedLow,            // lambda in (0, 1]
    NeedMid,            // lambda in (1, L-1]
    NeedHigh,           // lambda in (L-1, L]
};

std::string param_name(ParamClass param);

struct MatrixCell {
    Axiom axiom;
    RuleFamily family;
    ParamClass param;
    bool holds;             // expected verdict
    const char* fixture;    // violating fixture name when !holds
};

// Every cell of both compliance tables, in table order.
const std::vector<MatrixCell>& compliance_matrix();
std::string cell_label(const MatrixCell& cell);

// A hand-built instance on which the named rule violates the named axiom.
struct PaperFixture {
    std::string name;
    Axiom axiom;
    RuleFamily family;
    ParamClass param;
    Instance instance;
    AnyRule rule;
};

const std::vector<PaperFixture>& paper_fixtures();
const PaperFixture* find_fixture(std::string_view name);

// Draws a worth vector consistent with the given regime; entries stay
// within [0, budget].
WorthVector random_worth_vector_for(std::mt19937_64& rng, std::uint32_t m, Money budget,
                                    ParamClass param);

struct CellCheckConfig {
    std::uint64_t min_trials = 1000;
    std::uint64_t max_trials_per_instance = 250;
    std::uint64_t seed = 1;
    GenConfig gen;
    std::uint64_t max_instances = 200000;
};

struct CellResult {
    bool passed = false;
    bool violated = false;
    std::uint64_t trials = 0;
    std::string detail;
};

// For a cell expected to hold: fresh random instances (and rule parameters
// drawn from the cell's regime) until min_trials perturbations pass.
// For a cell expected to fail: runs its fixture and demands a violation.
CellResult check_matrix_cell(const MatrixCell& cell, const CellCheckConfig& config = {});

// Randomized falsification: samples instances and regime-consistent rule
// parameters, hunting for a violation. Satisfied here only means none was
// found within the trial budget.
struct SearchResult {
    Verdict verdict = Verdict::Satisfied;
    std::uint64_t trials = 0;
    std::string detail;
};

SearchResult search_counterexample(Axiom axiom, RuleFamily family, ParamClass param,
                                   const CellCheckConfig& config = {});

} // namespace pbord
