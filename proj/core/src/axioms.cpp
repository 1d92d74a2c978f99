#include "pbord/axioms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pbord {

namespace {

bool contains(const ApprovalSet& sorted_set, std::uint32_t p) {
    return std::binary_search(sorted_set.begin(), sorted_set.end(), p);
}

bool contains_set(const std::vector<ApprovalSet>& sorted_sets, const ApprovalSet& s) {
    return std::binary_search(sorted_sets.begin(), sorted_sets.end(), s);
}

std::string set_text(const Instance& instance, const ApprovalSet& s) {
    std::string out = "{";
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k) out += ",";
        out += instance.id(s[k]);
    }
    return out + "}";
}

// ---- single-field perturbations ----

Instance with_budget(const Instance& in, Money budget) {
    return Instance(std::vector<Project>(in.projects()), budget,
                    std::vector<WeakRanking>(in.rankings()));
}

Instance with_cost(const Instance& in, std::uint32_t p, Money cost) {
    std::vector<Project> projects(in.projects());
    projects[p].cost = cost;
    return Instance(std::move(projects), in.budget(), std::vector<WeakRanking>(in.rankings()));
}

Instance with_shift(const Instance& in, std::uint32_t agent, std::size_t depth) {
    std::vector<WeakRanking> rankings(in.rankings());
    std::swap(rankings[agent].classes[depth - 1], rankings[agent].classes[depth]);
    return Instance(std::vector<Project>(in.projects()), in.budget(), std::move(rankings));
}

Instance with_agent_order(const Instance& in, const std::vector<std::uint32_t>& order) {
    std::vector<WeakRanking> rankings;
    rankings.reserve(order.size());
    for (std::uint32_t i : order) rankings.push_back(in.rankings()[i]);
    return Instance(std::vector<Project>(in.projects()), in.budget(), std::move(rankings));
}

// Moves each project a to index relabel[a]; ids keep their positions, so
// this renames the projects while costs and ranking slots travel with them.
Instance with_project_relabel(const Instance& in, const std::vector<std::uint32_t>& relabel) {
    std::vector<Project> projects(in.projects());
    for (std::uint32_t a = 0; a < in.project_count(); ++a)
        projects[relabel[a]].cost = in.cost(a);
    std::vector<WeakRanking> rankings(in.rankings());
    for (WeakRanking& ranking : rankings)
        for (auto& cls : ranking.classes) {
            for (auto& a : cls) a = relabel[a];
            std::sort(cls.begin(), cls.end());
        }
    return Instance(std::move(projects), in.budget(), std::move(rankings));
}

// Replaces project p with one part per entry of `parts` (costs summing to
// c(p)), all tied inside p's former class. Returns the new indices of the
// parts through `part_indices`.
Instance with_split(const Instance& in, std::uint32_t p, const std::vector<Money>& parts,
                    std::vector<std::uint32_t>& part_indices) {
    std::string stem = in.id(p);
    auto taken = [&](const std::string& id) {
        for (const Project& q : in.projects())
            if (q.id == id) return true;
        return false;
    };
    std::vector<std::string> part_ids;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        std::string id = stem + "." + std::to_string(k + 1);
        while (taken(id)) id += "x";
        part_ids.push_back(std::move(id));
    }

    std::vector<Project> projects;
    for (std::uint32_t a = 0; a < in.project_count(); ++a)
        if (a != p) projects.push_back(in.projects()[a]);
    for (std::size_t k = 0; k < parts.size(); ++k)
        projects.push_back(Project{part_ids[k], parts[k]});
    std::sort(projects.begin(), projects.end(),
              [](const Project& a, const Project& b) { return a.id < b.id; });

    auto new_index = [&](const std::string& id) {
        for (std::uint32_t j = 0; j < projects.size(); ++j)
            if (projects[j].id == id) return j;
        throw ValidationError("lost project '" + id + "' while splitting");
    };
    part_indices.clear();
    for (const std::string& id : part_ids) part_indices.push_back(new_index(id));

    std::vector<WeakRanking> rankings;
    for (const WeakRanking& old : in.rankings()) {
        WeakRanking ranking;
        for (const auto& cls : old.classes) {
            std::vector<std::uint32_t> mapped;
            for (std::uint32_t a : cls) {
                if (a == p)
                    mapped.insert(mapped.end(), part_indices.begin(), part_indices.end());
                else
                    mapped.push_back(new_index(in.id(a)));
            }
            std::sort(mapped.begin(), mapped.end());
            ranking.classes.push_back(std::move(mapped));
        }
        rankings.push_back(std::move(ranking));
    }
    return Instance(std::move(projects), in.budget(), std::move(rankings));
}

// ---- shift admissibility ----

struct Shift {
    std::uint32_t agent;
    std::size_t depth;      // the class being moved up
    std::uint32_t project;
    std::uint32_t displaced;
};

// Rank shifts are only applied where the project's class and the class
// right above it are both singletons, so exactly two projects swap ranks.
std::vector<Shift> singleton_boundary_shifts(const Instance& in) {
    std::vector<Shift> shifts;
    for (std::uint32_t i = 0; i < in.agent_count(); ++i) {
        const auto& classes = in.rankings()[i].classes;
        for (std::size_t j = 1; j < classes.size(); ++j)
            if (classes[j].size() == 1 && classes[j - 1].size() == 1)
                shifts.push_back(Shift{i, j, classes[j][0], classes[j - 1][0]});
    }
    return shifts;
}

// ---- the ten checkers ----

struct Context {
    const Instance& instance;
    const AnyRule& rule;
    const CheckOptions& options;
    CheckReport report;

    Outcome optima(const Instance& inst) const {
        return enumerate_optima(inst, rule, options.limits);
    }
    bool spent() const { return report.trials >= options.max_trials; }
    void violation(std::string detail, std::optional<Instance> counterexample = std::nullopt) {
        report.verdict = Verdict::Violated;
        report.detail = std::move(detail);
        report.counterexample = std::move(counterexample);
    }
};

void check_candidate(Context& ctx) {
    const Instance& in = ctx.instance;
    const ApprovalSet win0 = winners(ctx.optima(in));
    for (const Shift& s : singleton_boundary_shifts(in)) {
        if (!contains(win0, s.project)) continue;
        if (ctx.spent()) return;
        ++ctx.report.trials;
        Instance shifted = with_shift(in, s.agent, s.depth);
        if (!contains(winners(ctx.optima(shifted)), s.project)) {
            ctx.violation("winner '" + in.id(s.project) + "' drops out after agent " +
                              std::to_string(s.agent + 1) + " moves it up one rank",
                          std::move(shifted));
            return;
        }
    }
}

void check_noncrossing(Context& ctx) {
    const Instance& in = ctx.instance;
    const Outcome base = ctx.optima(in);
    const auto shifts = singleton_boundary_shifts(in);
    for (const ApprovalSet& S : base.optimal_sets) {
        for (const Shift& s : shifts) {
            if (!contains(S, s.project) || contains(S, s.displaced)) continue;
            if (ctx.spent()) return;
            ++ctx.report.trials;
            Instance shifted = with_shift(in, s.agent, s.depth);
            if (!contains_set(ctx.optima(shifted).optimal_sets, S)) {
                ctx.violation("optimal " + set_text(in, S) + " stops being optimal after agent " +
                                  std::to_string(s.agent + 1) + " lifts '" + in.id(s.project) +
                                  "' over '" + in.id(s.displaced) + "'",
                              std::move(shifted));
                return;
            }
        }
    }
}

void check_discount(Context& ctx) {
    const Instance& in = ctx.instance;
    const ApprovalSet win0 = winners(ctx.optima(in));
    for (std::uint32_t x : win0) {
        if (in.cost(x) < 2) continue;
        if (ctx.spent()) return;
        ++ctx.report.trials;
        Instance cheaper = with_cost(in, x, in.cost(x) - 1);
        if (!contains(winners(ctx.optima(cheaper)), x)) {
            ctx.violation("winner '" + in.id(x) + "' drops out after its cost falls from " +
                              std::to_string(in.cost(x)) + " to " + std::to_string(in.cost(x) - 1),
                          std::move(cheaper));
            return;
        }
    }
}

void check_limit(Context& ctx) {
    const Instance& in = ctx.instance;
    const Money raised = checked_add(in.budget(), 1);
    for (const Project& p : in.projects())
        if (p.cost == raised) {
            ctx.report.verdict = Verdict::NotApplicable;
            ctx.report.detail = "a project costs exactly budget+1";
            return;
        }
    if (ctx.spent()) return;
    ++ctx.report.trials;
    const ApprovalSet win0 = winners(ctx.optima(in));
    Instance richer = with_budget(in, raised);
    const ApprovalSet win1 = winners(ctx.optima(richer));
    ApprovalSet dropped;
    std::set_difference(win0.begin(), win0.end(), win1.begin(), win1.end(),
                        std::back_inserter(dropped));
    if (!dropped.empty())
        ctx.violation("raising the budget to " + std::to_string(raised) + " drops " +
                          set_text(in, dropped) + " from the winners",
                      std::move(richer));
}

void check_proafford(Context& ctx) {
    const Instance& in = ctx.instance;
    const ApprovalSet win0 = winners(ctx.optima(in));
    for (std::uint32_t x : win0) {
        for (std::uint32_t other = 0; other < in.project_count(); ++other) {
            if (other == x || in.cost(other) >= in.cost(x)) continue;
            bool weakly_preferred = true;
            for (std::uint32_t i = 0; i < in.agent_count() && weakly_preferred; ++i)
                weakly_preferred = in.rank_of(i, other) <= in.rank_of(i, x);
            if (!weakly_preferred) continue;
            if (ctx.spent()) return;
            ++ctx.report.trials;
            if (!contains(win0, other)) {
                ctx.violation("'" + in.id(other) + "' is cheaper than winner '" + in.id(x) +
                              "' and weakly preferred by every agent, yet never wins");
                return;
            }
        }
    }
}

void check_inclusion(Context& ctx) {
    const Instance& in = ctx.instance;
    const Outcome base = ctx.optima(in);
    for (const ApprovalSet& S : base.optimal_sets) {
        const Money used = in.cost_of(S);
        for (std::uint32_t a = 0; a < in.project_count(); ++a) {
            if (contains(S, a) || checked_add(used, in.cost(a)) > in.budget()) continue;
            if (ctx.spent()) return;
            ++ctx.report.trials;
            ApprovalSet grown = S;
            grown.insert(std::upper_bound(grown.begin(), grown.end(), a), a);
            if (!contains_set(base.optimal_sets, grown)) {
                ctx.violation("optimal " + set_text(in, S) + " can still afford '" + in.id(a) +
                              "' but " + set_text(in, grown) + " is not optimal");
                return;
            }
        }
    }
}

bool same_outcome(const Outcome& a, const Outcome& b) {
    return a.optimal_value == b.optimal_value && a.optimal_sets == b.optimal_sets;
}

void check_anonymity(Context& ctx) {
    const Instance& in = ctx.instance;
    const std::uint32_t n = in.agent_count();
    if (n < 2) return;
    const Outcome base = ctx.optima(in);

    auto try_order = [&](const std::vector<std::uint32_t>& order) {
        if (ctx.spent()) return false;
        ++ctx.report.trials;
        Instance renamed = with_agent_order(in, order);
        if (!same_outcome(ctx.optima(renamed), base)) {
            ctx.violation("reordering the agents changes the outcome", std::move(renamed));
            return false;
        }
        return true;
    };

    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (n <= 6) {
        while (std::next_permutation(order.begin(), order.end()))
            if (!try_order(order)) return;
    } else {
        std::mt19937_64 rng(ctx.options.seed);
        for (int round = 0; round < 100; ++round) {
            std::shuffle(order.begin(), order.end(), rng);
            if (std::is_sorted(order.begin(), order.end())) continue;
            if (!try_order(order)) return;
        }
    }
}

void check_neutrality(Context& ctx) {
    const Instance& in = ctx.instance;
    const std::uint32_t m = in.project_count();
    if (m < 2) return;
    const Outcome base = ctx.optima(in);

    auto try_relabel = [&](const std::vector<std::uint32_t>& relabel) {
        if (ctx.spent()) return false;
        ++ctx.report.trials;
        Instance renamed = with_project_relabel(in, relabel);
        Outcome expected;
        expected.optimal_value = base.optimal_value;
        for (const ApprovalSet& S : base.optimal_sets) {
            ApprovalSet mapped;
            for (std::uint32_t a : S) mapped.push_back(relabel[a]);
            std::sort(mapped.begin(), mapped.end());
            expected.optimal_sets.push_back(std::move(mapped));
        }
        std::sort(expected.optimal_sets.begin(), expected.optimal_sets.end());
        if (!same_outcome(ctx.optima(renamed), expected)) {
            ctx.violation("renaming the projects changes the outcome", std::move(renamed));
            return false;
        }
        return true;
    };

    std::vector<std::uint32_t> relabel(m);
    std::iota(relabel.begin(), relabel.end(), 0);
    if (m <= 6) {
        while (std::next_permutation(relabel.begin(), relabel.end()))
            if (!try_relabel(relabel)) return;
    } else {
        std::mt19937_64 rng(ctx.options.seed);
        for (int round = 0; round < 100; ++round) {
            std::shuffle(relabel.begin(), relabel.end(), rng);
            if (std::is_sorted(relabel.begin(), relabel.end())) continue;
            if (!try_relabel(relabel)) return;
        }
    }
}

void check_consistency(Context& ctx) {
    const Instance& in = ctx.instance;
    const std::uint32_t n = in.agent_count();
    if (n < 2) return;
    const Outcome base = ctx.optima(in);

    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        if (!(mask & 1)) continue;   // fix agent 1 on one side; the rest is symmetric
        std::vector<std::uint32_t> left, right;
        for (std::uint32_t i = 0; i < n; ++i) (mask >> i & 1 ? left : right).push_back(i);
        const Outcome a = ctx.optima(with_agent_order(in, left));
        const Outcome b = ctx.optima(with_agent_order(in, right));
        std::vector<ApprovalSet> common;
        std::set_intersection(a.optimal_sets.begin(), a.optimal_sets.end(),
                              b.optimal_sets.begin(), b.optimal_sets.end(),
                              std::back_inserter(common));
        if (common.empty()) continue;
        if (ctx.spent()) return;
        ++ctx.report.trials;
        if (base.optimal_sets != common) {
            ctx.violation("agents {" + std::to_string(left.front() + 1) +
                          ",..} and the rest agree on an optimal set, but the joint outcome "
                          "is not exactly the sets they share");
            return;
        }
    }
}

void check_splitting(Context& ctx) {
    const Instance& in = ctx.instance;
    const ApprovalSet win0 = winners(ctx.optima(in));

    auto try_split = [&](std::uint32_t x, const std::vector<Money>& parts) {
        if (ctx.spent()) return false;
        ++ctx.report.trials;
        std::vector<std::uint32_t> part_indices;
        Instance split = with_split(in, x, parts, part_indices);
        const ApprovalSet win1 = winners(ctx.optima(split));
        for (std::uint32_t q : part_indices)
            if (contains(win1, q)) return true;
        std::string sizes;
        for (std::size_t k = 0; k < parts.size(); ++k)
            sizes += (k ? "+" : "") + std::to_string(parts[k]);
        ctx.violation("splitting winner '" + in.id(x) + "' into costs " + sizes +
                          " leaves every part out of the winners",
                      std::move(split));
        return false;
    };

    for (std::uint32_t x : win0) {
        const Money c = in.cost(x);
        for (Money first = 1; first * 2 <= c; ++first)
            if (!try_split(x, {first, c - first})) return;
        if (c >= 3) {
            const Money p1 = c / 3;
            const Money p2 = (c - p1) / 2;
            if (!try_split(x, {p1, p2, c - p1 - p2})) return;
        }
    }
}

} // namespace

std::string axiom_name(Axiom axiom) {
    switch (axiom) {
        case Axiom::CandidateMonotonicity: return "candidate-mono";
        case Axiom::NonCrossingMonotonicity: return "noncross-mono";
        case Axiom::DiscountMonotonicity: return "discount-mono";
        case Axiom::LimitMonotonicity: return "limit-mono";
        case Axiom::ProAffordability: return "pro-affordability";
        case Axiom::InclusionMaximality: return "inclusion-max";
        case Axiom::Anonymity: return "anonymity";
        case Axiom::Neutrality: return "neutrality";
        case Axiom::Consistency: return "consistency";
        case Axiom::Splitting: return "splitting";
    }
    return "?";
}

std::optional<Axiom> axiom_from_name(std::string_view name) {
    for (Axiom axiom : kAllAxioms)
        if (axiom_name(axiom) == name) return axiom;
    return std::nullopt;
}

std::string family_name(RuleFamily family) {
    switch (family) {
        case RuleFamily::GreedyCard: return "greedy-card";
        case RuleFamily::GreedyCost: return "greedy-cost";
        case RuleFamily::GreedyCover: return "greedy-cover";
        case RuleFamily::WorthyCard: return "costworthy-card";
        case RuleFamily::WorthyCost: return "costworthy-cost";
        case RuleFamily::WorthyCover: return "costworthy-cover";
        case RuleFamily::Need: return "need";
    }
    return "?";
}

std::string param_name(ParamClass param) {
    switch (param) {
        case ParamClass::None: return "";
        case ParamClass::AlphaConstant: return "alpha(1)=alpha(m)";
        case ParamClass::AlphaNonConstant: return "alpha(1)!=alpha(m)";
        case ParamClass::AlphaNarrowGap: return "alpha(1)<alpha(m)+2";
        case ParamClass::AlphaWideGap: return "alpha(1)>=alpha(m)+2";
        case ParamClass::AlphaUnitTop: return "alpha(1)<=1";
        case ParamClass::AlphaRichTop: return "alpha(1)>1";
        case ParamClass::NeedLow: return "lambda in (0,1]";
        case ParamClass::NeedMid: return "lambda in (1,L-1]";
        case ParamClass::NeedHigh: return "lambda in (L-1,L]";
    }
    return "?";
}

Outcome enumerate_optima(const Instance& instance, const AnyRule& rule,
                         const SolveLimits& limits) {
    if (const auto* spec = std::get_if<RuleSpec>(&rule))
        return solve_exhaustive(instance, build_layer(instance, *spec), spec->objective, limits);
    return solve_need(instance, std::get<NeedParameter>(rule), limits);
}

CheckReport check_axiom(const Instance& instance, const AnyRule& rule, Axiom axiom,
                        const CheckOptions& options) {
    Context ctx{instance, rule, options, {}};
    switch (axiom) {
        case Axiom::CandidateMonotonicity: check_candidate(ctx); break;
        case Axiom::NonCrossingMonotonicity: check_noncrossing(ctx); break;
        case Axiom::DiscountMonotonicity: check_discount(ctx); break;
        case Axiom::LimitMonotonicity: check_limit(ctx); break;
        case Axiom::ProAffordability: check_proafford(ctx); break;
        case Axiom::InclusionMaximality: check_inclusion(ctx); break;
        case Axiom::Anonymity: check_anonymity(ctx); break;
        case Axiom::Neutrality: check_neutrality(ctx); break;
        case Axiom::Consistency: check_consistency(ctx); break;
        case Axiom::Splitting: check_splitting(ctx); break;
    }
    return std::move(ctx.report);
}

const std::vector<MatrixCell>& compliance_matrix() {
    static const std::vector<MatrixCell> cells = [] {
        using enum Axiom;
        using enum RuleFamily;
        using enum ParamClass;
        std::vector<MatrixCell> v;
        auto ok = [&](Axiom a, RuleFamily f, ParamClass p = None) {
            v.push_back(MatrixCell{a, f, p, true, nullptr});
        };
        auto no = [&](Axiom a, RuleFamily f, ParamClass p, const char* fixture) {
            v.push_back(MatrixCell{a, f, p, false, fixture});
        };
        constexpr std::array layered = {GreedyCard, GreedyCost, GreedyCover,
                                        WorthyCard, WorthyCost, WorthyCover};

        no(CandidateMonotonicity, GreedyCard, None, "candidate_greedy_card");
        no(CandidateMonotonicity, GreedyCost, None, "candidate_greedy_cost");
        no(CandidateMonotonicity, GreedyCover, None, "candidate_greedy_cover");
        no(CandidateMonotonicity, WorthyCard, None, "candidate_costworthy_card");
        no(CandidateMonotonicity, WorthyCost, None, "candidate_costworthy_cost");
        no(CandidateMonotonicity, WorthyCover, None, "candidate_costworthy_cover");

        ok(NonCrossingMonotonicity, GreedyCard);
        ok(NonCrossingMonotonicity, GreedyCost);
        no(NonCrossingMonotonicity, GreedyCover, None, "noncross_greedy_cover");
        ok(NonCrossingMonotonicity, WorthyCard);
        ok(NonCrossingMonotonicity, WorthyCost);
        ok(NonCrossingMonotonicity, WorthyCover, AlphaConstant);
        no(NonCrossingMonotonicity, WorthyCover, AlphaNonConstant,
           "noncross_costworthy_cover_nonconst");

        no(DiscountMonotonicity, GreedyCard, None, "discount_greedy_card");
        no(DiscountMonotonicity, GreedyCost, None, "discount_greedy_cost");
        no(DiscountMonotonicity, GreedyCover, None, "discount_greedy_cover");
        ok(DiscountMonotonicity, WorthyCard);
        no(DiscountMonotonicity, WorthyCost, None, "discount_costworthy_cost");
        ok(DiscountMonotonicity, WorthyCover);

        no(LimitMonotonicity, GreedyCard, None, "limit_greedy_card");
        no(LimitMonotonicity, GreedyCost, None, "limit_greedy_cost");
        no(LimitMonotonicity, GreedyCover, None, "limit_greedy_cover");
        no(LimitMonotonicity, WorthyCard, AlphaNarrowGap, "limit_costworthy_card_narrowgap");
        no(LimitMonotonicity, WorthyCard, AlphaWideGap, "limit_costworthy_card_widegap");
        ok(LimitMonotonicity, WorthyCost, AlphaUnitTop);
        no(LimitMonotonicity, WorthyCost, AlphaRichTop, "limit_costworthy_cost_above1");
        ok(LimitMonotonicity, WorthyCover, AlphaNarrowGap);
        no(LimitMonotonicity, WorthyCover, AlphaWideGap, "limit_costworthy_cover_widegap");

        ok(ProAffordability, GreedyCard);
        no(ProAffordability, GreedyCost, None, "proafford_greedy_cost");
        ok(ProAffordability, GreedyCover);
        ok(ProAffordability, WorthyCard);
        ok(ProAffordability, WorthyCost, AlphaUnitTop);
        no(ProAffordability, WorthyCost, AlphaRichTop, "proafford_costworthy_cost_above1");
        ok(ProAffordability, WorthyCover);

        for (Axiom a : {InclusionMaximality, Anonymity, Neutrality, Consistency, Splitting})
            for (RuleFamily f : layered) ok(a, f);

        ok(CandidateMonotonicity, Need, NeedLow);
        no(CandidateMonotonicity, Need, NeedMid, "candidate_need_mid");
        ok(CandidateMonotonicity, Need, NeedHigh);
        no(NonCrossingMonotonicity, Need, NeedLow, "noncross_need_low");
        no(NonCrossingMonotonicity, Need, NeedMid, "noncross_need_mid_a");
        no(NonCrossingMonotonicity, Need, NeedHigh, "noncross_need_high");
        ok(DiscountMonotonicity, Need, NeedLow);
        no(DiscountMonotonicity, Need, NeedMid, "discount_need_mid");
        no(DiscountMonotonicity, Need, NeedHigh, "discount_need_high");
        no(LimitMonotonicity, Need, NeedLow, "limit_need_low");
        no(LimitMonotonicity, Need, NeedMid, "limit_need_mid");
        no(LimitMonotonicity, Need, NeedHigh, "limit_need_high");
        ok(ProAffordability, Need, NeedLow);
        no(ProAffordability, Need, NeedMid, "proafford_need_mid");
        no(ProAffordability, Need, NeedHigh, "proafford_need_high");
        for (Axiom a : {InclusionMaximality, Anonymity, Neutrality, Consistency, Splitting})
            for (ParamClass p : {NeedLow, NeedMid, NeedHigh}) ok(a, Need, p);
        return v;
    }();
    return cells;
}

std::string cell_label(const MatrixCell& cell) {
    std::string label = axiom_name(cell.axiom) + " x " + family_name(cell.family);
    if (cell.param != ParamClass::None) label += " [" + param_name(cell.param) + "]";
    return label;
}

WorthVector random_worth_vector_for(std::mt19937_64& rng, std::uint32_t m, Money budget,
                                    ParamClass param) {
    auto draw = [&](Money lo, Money hi) {
        return std::uniform_int_distribution<Money>(lo, hi)(rng);
    };
    auto spread = [&](Money top, Money bottom) {
        WorthVector alpha;
        alpha.entries.push_back(top);
        for (std::uint32_t j = 2; j < m; ++j) alpha.entries.push_back(draw(bottom, top));
        if (m > 1) alpha.entries.push_back(bottom);
        std::sort(alpha.entries.rbegin(), alpha.entries.rend());
        return alpha;
    };
    switch (param) {
        case ParamClass::None:
            return random_worth_vector(rng, m, budget);
        case ParamClass::AlphaConstant:
            return WorthVector{{draw(0, budget)}};
        case ParamClass::AlphaNonConstant: {
            if (m < 2 || budget < 1)
                throw ValidationError("no non-constant worth vector fits this instance");
            Money bottom = draw(0, budget - 1);
            return spread(draw(bottom + 1, budget), bottom);
        }
        case ParamClass::AlphaNarrowGap: {
            Money bottom = draw(0, budget);
            Money top = std::min(budget, bottom + draw(0, 1));
            return spread(top, bottom);
        }
        case ParamClass::AlphaWideGap: {
            if (m < 2 || budget < 2)
                throw ValidationError("no wide-gap worth vector fits this instance");
            Money bottom = draw(0, budget - 2);
            return spread(draw(bottom + 2, budget), bottom);
        }
        case ParamClass::AlphaUnitTop:
            return spread(draw(0, std::min<Money>(1, budget)), 0);
        case ParamClass::AlphaRichTop: {
            if (budget < 2) throw ValidationError("alpha(1)>1 requires a budget of at least 2");
            return spread(draw(2, budget), 0);
        }
        default:
            throw ValidationError("not a worth-vector regime");
    }
}

CellResult check_matrix_cell(const MatrixCell& cell, const CellCheckConfig& config) {
    CellResult result;
    if (!cell.holds) {
        const PaperFixture* fixture = find_fixture(cell.fixture);
        if (!fixture) {
            result.detail = cell_label(cell) + ": fixture '" + std::string(cell.fixture) +
                            "' is missing";
            return result;
        }
        CheckReport report = check_axiom(fixture->instance, fixture->rule, cell.axiom);
        result.trials = report.trials;
        result.violated = report.verdict == Verdict::Violated;
        result.passed = result.violated;
        result.detail = result.passed
                            ? report.detail
                            : cell_label(cell) + ": expected a violation, found none";
        return result;
    }

    const std::uint64_t salt =
        (static_cast<std::uint64_t>(cell.axiom) << 16) ^
        (static_cast<std::uint64_t>(cell.family) << 8) ^ static_cast<std::uint64_t>(cell.param);
    std::mt19937_64 rng(config.seed ^ (salt * 0x9e3779b97f4a7c15ULL));

    for (std::uint64_t round = 0;
         round < config.max_instances && result.trials < config.min_trials; ++round) {
        Instance instance = random_instance(rng, config.gen);

        AnyRule rule;
        switch (cell.family) {
            case RuleFamily::GreedyCard:
                rule = RuleSpec{LayerKind::Greedy, Objective::Cardinality, {}};
                break;
            case RuleFamily::GreedyCost:
                rule = RuleSpec{LayerKind::Greedy, Objective::Cost, {}};
                break;
            case RuleFamily::GreedyCover:
                rule = RuleSpec{LayerKind::Greedy, Objective::Coverage, {}};
                break;
            case RuleFamily::WorthyCard:
            case RuleFamily::WorthyCost:
            case RuleFamily::WorthyCover: {
                if ((cell.param == ParamClass::AlphaNonConstant ||
                     cell.param == ParamClass::AlphaWideGap) &&
                    instance.project_count() < 2)
                    continue;
                if (cell.param == ParamClass::AlphaWideGap && instance.budget() < 2) continue;
                Objective objective = cell.family == RuleFamily::WorthyCard ? Objective::Cardinality
                                      : cell.family == RuleFamily::WorthyCost ? Objective::Cost
                                                                              : Objective::Coverage;
                rule = RuleSpec{LayerKind::CostWorthy, objective,
                                random_worth_vector_for(rng, instance.project_count(),
                                                        instance.budget(), cell.param)};
                break;
            }
            case RuleFamily::Need: {
                NeedRange range = cell.param == ParamClass::NeedLow   ? NeedRange::Low
                                  : cell.param == ParamClass::NeedMid ? NeedRange::Mid
                                                                      : NeedRange::High;
                if (range == NeedRange::Mid && instance.budget() < 3) continue;
                rule = random_need_parameter(rng, instance.budget(), range);
                break;
            }
        }

        CheckOptions options;
        options.max_trials = std::min<std::uint64_t>(config.max_trials_per_instance,
                                                     config.min_trials - result.trials);
        options.seed = rng();
        CheckReport report = check_axiom(instance, rule, cell.axiom, options);
        result.trials += report.trials;
        if (report.verdict == Verdict::Violated) {
            result.passed = false;
            result.violated = true;
            result.detail = cell_label(cell) + ": " + report.detail;
            return result;
        }
    }

    result.passed = result.trials >= config.min_trials;
    if (!result.passed)
        result.detail = cell_label(cell) + ": only " + std::to_string(result.trials) +
                        " perturbations after " + std::to_string(config.max_instances) +
                        " instances";
    return result;
}

SearchResult search_counterexample(Axiom axiom, RuleFamily family, ParamClass param,
                                   const CellCheckConfig& config) {
    MatrixCell cell{axiom, family, param, true, nullptr};
    CellResult result = check_matrix_cell(cell, config);
    return SearchResult{result.violated ? Verdict::Violated : Verdict::Satisfied, result.trials,
                        result.detail};
}

} // namespace pbord
