#include "pbord/axioms.hpp"
#include "pbord/io.hpp"
#include "pbord/reductions.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>

using json = nlohmann::json;
using namespace pbord;

namespace {

Money parse_int(const std::string& token, const char* what) {
    Money value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ValidationError(std::string("malformed ") + what + ": '" + token + "'");
    return value;
}

std::vector<Money> parse_int_list(const std::string& text, const char* what) {
    std::vector<Money> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string token =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        values.push_back(parse_int(token, what));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return values;
}

NeedParameter parse_lambda(const std::string& text) {
    std::size_t slash = text.find('/');
    if (slash == std::string::npos) return NeedParameter{parse_int(text, "--lambda"), 1};
    NeedParameter lambda{parse_int(text.substr(0, slash), "--lambda"),
                         parse_int(text.substr(slash + 1), "--lambda")};
    if (lambda.den <= 0) throw ValidationError("--lambda denominator must be positive");
    return lambda;
}

Objective parse_objective(const std::string& f) {
    if (f == "card") return Objective::Cardinality;
    if (f == "cost") return Objective::Cost;
    if (f == "cover") return Objective::Coverage;
    throw ValidationError("--f must be card, cost, or cover");
}

struct RuleArgs {
    std::string rule;
    std::string f;
    std::string alpha;
    std::string lambda;
};

AnyRule make_rule(const RuleArgs& args) {
    if (args.rule == "needbased") {
        if (!args.f.empty())
            throw ValidationError("--f does not apply to the need-based rule");
        if (!args.alpha.empty())
            throw ValidationError("--alpha does not apply to the need-based rule");
        if (args.lambda.empty()) throw ValidationError("the need-based rule requires --lambda");
        return parse_lambda(args.lambda);
    }
    if (!args.lambda.empty())
        throw ValidationError("--lambda only applies to the need-based rule");
    if (args.f.empty()) throw ValidationError("--f is required for layered rules");
    const Objective objective = parse_objective(args.f);
    if (args.rule == "greedy") {
        if (!args.alpha.empty())
            throw ValidationError("--alpha only applies to the cost-worthy layer");
        return RuleSpec{LayerKind::Greedy, objective, {}};
    }
    if (args.rule == "costworthy") {
        if (args.alpha.empty()) throw ValidationError("the cost-worthy layer requires --alpha");
        return RuleSpec{LayerKind::CostWorthy, objective,
                        WorthVector{parse_int_list(args.alpha, "--alpha")}};
    }
    throw ValidationError("--rule must be greedy, costworthy, or needbased");
}

std::string set_text(const Instance& instance, const ApprovalSet& set) {
    std::string out = "{";
    for (std::size_t k = 0; k < set.size(); ++k) {
        if (k) out += ",";
        out += instance.id(set[k]);
    }
    return out + "}";
}

json set_json(const Instance& instance, const ApprovalSet& set) {
    json out = json::array();
    for (std::uint32_t p : set) out.push_back(instance.id(p));
    return out;
}

int run_solve(const std::string& file, const RuleArgs& args, const std::string& strategy,
              bool as_json) {
    const Instance instance = load_instance(file);
    const AnyRule rule = make_rule(args);

    Outcome outcome;
    if (const auto* spec = std::get_if<RuleSpec>(&rule)) {
        Strategy chosen = Strategy::Auto;
        if (strategy == "exhaustive") chosen = Strategy::Exhaustive;
        else if (strategy == "dp") chosen = Strategy::Dp;
        else if (!strategy.empty())
            throw ValidationError("--strategy must be exhaustive or dp");
        outcome = evaluate_rule(instance, *spec, chosen);
    } else {
        if (strategy == "dp")
            throw ValidationError("no dynamic program for the need-based rule");
        outcome = solve_need(instance, std::get<NeedParameter>(rule));
    }

    if (as_json) {
        json out;
        out["optimal_value"] = outcome.optimal_value;
        out["optimal_sets"] = json::array();
        for (const ApprovalSet& set : outcome.optimal_sets)
            out["optimal_sets"].push_back(set_json(instance, set));
        out["winners"] = set_json(instance, winners(outcome));
        out["flags"]["non_enumerating"] = outcome.non_enumerating;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "optimal_value: " << outcome.optimal_value << "\n";
    for (const ApprovalSet& set : outcome.optimal_sets)
        std::cout << "optimal_set: " << set_text(instance, set) << "\n";
    std::cout << "winners: " << set_text(instance, winners(outcome)) << "\n";
    if (outcome.non_enumerating) std::cout << "non_enumerating: true\n";
    return 0;
}

int run_layer(const std::string& file, const std::string& kind, const std::string& alpha,
              bool as_json) {
    const Instance instance = load_instance(file);
    ApprovalProfile profile;
    if (kind == "greedy") {
        if (!alpha.empty())
            throw ValidationError("--alpha only applies to the cost-worthy layer");
        profile = greedy_truncation_layer(instance);
    } else if (kind == "costworthy") {
        if (alpha.empty()) throw ValidationError("the cost-worthy layer requires --alpha");
        profile = cost_worthy_layer(instance, WorthVector{parse_int_list(alpha, "--alpha")});
    } else {
        throw ValidationError("--kind must be greedy or costworthy");
    }

    if (as_json) {
        json out;
        out["approvals"] = json::array();
        for (const ApprovalSet& set : profile) out["approvals"].push_back(set_json(instance, set));
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (std::size_t i = 0; i < profile.size(); ++i)
        std::cout << "agent " << i + 1 << ": " << set_text(instance, profile[i]) << "\n";
    return 0;
}

bool family_matches(RuleFamily family, const RuleArgs& args) {
    if (args.rule.empty()) return true;
    if (args.rule == "needbased") return family == RuleFamily::Need;
    const bool is_greedy = family == RuleFamily::GreedyCard || family == RuleFamily::GreedyCost ||
                           family == RuleFamily::GreedyCover;
    const bool is_worthy = family == RuleFamily::WorthyCard || family == RuleFamily::WorthyCost ||
                           family == RuleFamily::WorthyCover;
    if (args.rule == "greedy" && !is_greedy) return false;
    if (args.rule == "costworthy" && !is_worthy) return false;
    if (args.rule != "greedy" && args.rule != "costworthy")
        throw ValidationError("--rule must be greedy, costworthy, or needbased");
    if (args.f.empty()) return true;
    const Objective objective = parse_objective(args.f);
    switch (family) {
        case RuleFamily::GreedyCard:
        case RuleFamily::WorthyCard: return objective == Objective::Cardinality;
        case RuleFamily::GreedyCost:
        case RuleFamily::WorthyCost: return objective == Objective::Cost;
        case RuleFamily::GreedyCover:
        case RuleFamily::WorthyCover: return objective == Objective::Coverage;
        case RuleFamily::Need: return false;
    }
    return false;
}

const char* verdict_name(Verdict verdict) {
    switch (verdict) {
        case Verdict::Satisfied: return "satisfied";
        case Verdict::Violated: return "VIOLATED";
        case Verdict::NotApplicable: return "not-applicable";
    }
    return "?";
}

int run_check_axiom(const std::string& file, bool fixtures_mode, const std::string& one_fixture,
                    const std::string& axiom_arg, const RuleArgs& args, std::uint64_t trials,
                    std::uint64_t seed, bool as_json) {
    const auto axiom = axiom_from_name(axiom_arg);
    if (!axiom) {
        std::string names;
        for (Axiom a : kAllAxioms) names += (names.empty() ? "" : ", ") + axiom_name(a);
        throw ValidationError("unknown axiom '" + axiom_arg + "' (expected one of: " + names + ")");
    }

    CheckOptions options;
    if (trials > 0) options.max_trials = trials;
    options.seed = seed;

    if (fixtures_mode || !one_fixture.empty()) {
        std::vector<const PaperFixture*> selected;
        for (const PaperFixture& fixture : paper_fixtures()) {
            if (!one_fixture.empty() && fixture.name != one_fixture) continue;
            if (one_fixture.empty() &&
                (fixture.axiom != *axiom || !family_matches(fixture.family, args)))
                continue;
            selected.push_back(&fixture);
        }
        if (selected.empty())
            throw ValidationError(one_fixture.empty()
                                      ? "no fixtures for this axiom and rule"
                                      : "unknown fixture '" + one_fixture + "'");
        bool violated = false;
        json out = json::array();
        for (const PaperFixture* fixture : selected) {
            const CheckReport report =
                check_axiom(fixture->instance, fixture->rule, fixture->axiom, options);
            violated |= report.verdict == Verdict::Violated;
            if (as_json) {
                json row;
                row["fixture"] = fixture->name;
                row["axiom"] = axiom_name(fixture->axiom);
                row["verdict"] = verdict_name(report.verdict);
                row["trials"] = report.trials;
                if (!report.detail.empty()) row["detail"] = report.detail;
                out.push_back(std::move(row));
            } else {
                std::cout << fixture->name << ": " << verdict_name(report.verdict);
                if (!report.detail.empty()) std::cout << " — " << report.detail;
                std::cout << "\n";
            }
        }
        if (as_json) std::cout << out.dump(2) << "\n";
        return violated ? 4 : 0;
    }

    if (file.empty()) throw ValidationError("check-axiom needs an instance file or --fixtures");
    const Instance instance = load_instance(file);
    const AnyRule rule = make_rule(args);
    const CheckReport report = check_axiom(instance, rule, *axiom, options);

    if (as_json) {
        json out;
        out["axiom"] = axiom_name(*axiom);
        out["verdict"] = verdict_name(report.verdict);
        out["trials"] = report.trials;
        if (!report.detail.empty()) out["detail"] = report.detail;
        if (report.counterexample)
            out["counterexample"] = serialize_instance(*report.counterexample);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << verdict_name(report.verdict) << " (" << report.trials << " perturbations)";
        if (!report.detail.empty()) std::cout << ": " << report.detail;
        std::cout << "\n";
        if (report.counterexample)
            std::cout << "counterexample:\n" << serialize_instance(*report.counterexample);
    }
    return report.verdict == Verdict::Violated ? 4 : 0;
}

std::string rule_text(const AnyRule& rule) {
    if (const auto* need = std::get_if<NeedParameter>(&rule)) {
        std::string lambda = std::to_string(need->num);
        if (need->den != 1) lambda += "/" + std::to_string(need->den);
        return "--rule needbased --lambda " + lambda;
    }
    const auto& spec = std::get<RuleSpec>(rule);
    std::string f = spec.objective == Objective::Cardinality ? "card"
                    : spec.objective == Objective::Cost      ? "cost"
                                                             : "cover";
    if (spec.layer == LayerKind::Greedy) return "--rule greedy --f " + f;
    std::string alpha;
    for (std::size_t k = 0; k < spec.alpha.entries.size(); ++k)
        alpha += (k ? "," : "") + std::to_string(spec.alpha.entries[k]);
    return "--rule costworthy --f " + f + " --alpha " + alpha;
}

int run_gen(const std::string& from, const std::string& values, Money target,
            const std::string& variant, std::uint32_t vertices, const std::string& edges,
            std::uint32_t k, const std::string& profile, Money s, const std::string& output,
            bool decide_now, bool as_json) {
    const LayerKind layer =
        variant == "costworthy" ? LayerKind::CostWorthy : LayerKind::Greedy;
    if (variant != "greedy" && variant != "costworthy")
        throw ValidationError("--variant must be greedy or costworthy");

    std::optional<DecisionInstance> decision;
    if (from == "subsetsum") {
        if (values.empty()) throw ValidationError("subsetsum needs --values");
        decision = from_subset_sum(SubsetSumInput{parse_int_list(values, "--values"), target},
                                   layer);
    } else if (from == "vertexcover") {
        if (edges.empty()) throw ValidationError("vertexcover needs --edges");
        VertexCoverInput input;
        input.vertices = vertices;
        input.k = k;
        std::size_t start = 0;
        while (start <= edges.size()) {
            std::size_t comma = edges.find(',', start);
            std::string pair = edges.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            std::size_t dash = pair.find('-');
            if (dash == std::string::npos)
                throw ValidationError("--edges entries look like u-v");
            input.edges.emplace_back(
                static_cast<std::uint32_t>(parse_int(pair.substr(0, dash), "--edges")),
                static_cast<std::uint32_t>(parse_int(pair.substr(dash + 1), "--edges")));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        decision = from_vertex_cover(input, layer);
    } else if (from == "betacc") {
        if (profile.empty()) throw ValidationError("betacc needs --profile");
        CommitteeInput input;
        std::size_t start = 0;
        while (start <= profile.size()) {
            std::size_t semi = profile.find(';', start);
            std::string voter = profile.substr(
                start, semi == std::string::npos ? std::string::npos : semi - start);
            std::vector<std::uint32_t> order;
            for (Money c : parse_int_list(voter, "--profile"))
                order.push_back(static_cast<std::uint32_t>(c));
            input.voter_rankings.push_back(std::move(order));
            if (semi == std::string::npos) break;
            start = semi + 1;
        }
        input.candidates = static_cast<std::uint32_t>(input.voter_rankings.front().size());
        input.committee_size = k;
        input.misrepresentation = s;
        decision = from_committee_selection(input);
    } else {
        throw ValidationError("--from must be subsetsum, vertexcover, or betacc");
    }

    const char* sense = decision->sense == Sense::AtLeast ? ">=" : "<=";
    std::string header = "# decision: solve " + rule_text(decision->rule) + "; YES iff " +
                         "optimal_value " + sense + " " + std::to_string(decision->threshold) +
                         "\n";
    std::string document = header + serialize_instance(decision->instance);

    std::optional<bool> answer;
    if (decide_now) answer = decide(*decision);

    if (!output.empty()) {
        std::ofstream out(output);
        if (!out) throw ValidationError("cannot open '" + output + "' for writing");
        out << document;
    }
    if (as_json) {
        json out;
        out["instance"] = serialize_instance(decision->instance);
        out["rule"] = rule_text(decision->rule);
        out["threshold"] = decision->threshold;
        out["sense"] = decision->sense == Sense::AtLeast ? "at_least" : "at_most";
        if (answer) out["decision"] = *answer;
        std::cout << out.dump(2) << "\n";
    } else {
        if (output.empty()) std::cout << document;
        if (answer) std::cout << "decision: " << (*answer ? "YES" : "NO") << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rules for indivisible budgeting under weak rankings"};
    app.require_subcommand(1);
    int exit_code = 0;

    RuleArgs rule_args;
    std::string file, strategy, kind, alpha;
    bool as_json = false;

    auto add_rule_flags = [&](CLI::App* cmd) {
        cmd->add_option("--rule", rule_args.rule, "greedy, costworthy, or needbased");
        cmd->add_option("--f", rule_args.f, "objective: card, cost, or cover");
        cmd->add_option("--alpha", rule_args.alpha, "worth vector, e.g. 3,2,0");
        cmd->add_option("--lambda", rule_args.lambda, "need threshold, integer or p/q");
        cmd->add_flag("--json", as_json, "machine-readable output");
    };

    auto* solve = app.add_subcommand("solve", "compute the optimal feasible sets");
    add_rule_flags(solve);
    solve->add_option("--strategy", strategy, "exhaustive or dp (default: automatic)");
    solve->add_option("file", file, "instance file")->required();
    solve->callback([&] {
        if (rule_args.rule.empty()) throw ValidationError("solve requires --rule");
        exit_code = run_solve(file, rule_args, strategy, as_json);
    });

    auto* layer = app.add_subcommand("layer", "derive approval votes from the rankings");
    layer->add_option("--kind", kind, "greedy or costworthy")->required();
    layer->add_option("--alpha", alpha, "worth vector for the cost-worthy layer");
    layer->add_flag("--json", as_json, "machine-readable output");
    layer->add_option("file", file, "instance file")->required();
    layer->callback([&] { exit_code = run_layer(file, kind, alpha, as_json); });

    std::string axiom_arg, one_fixture;
    bool fixtures_mode = false;
    std::uint64_t trials = 0, seed = 1;
    auto* check = app.add_subcommand("check-axiom", "test an axiom on an instance or fixtures");
    check->add_option("--axiom", axiom_arg, "axiom name, e.g. candidate-mono")->required();
    add_rule_flags(check);
    check->add_option("--trials", trials, "cap on perturbations examined");
    check->add_option("--seed", seed, "seed for sampled permutations");
    check->add_flag("--fixtures", fixtures_mode, "run the built-in violating fixtures");
    check->add_option("--fixture", one_fixture, "run a single fixture by name");
    check->add_option("file", file, "instance file");
    check->callback([&] {
        exit_code = run_check_axiom(file, fixtures_mode, one_fixture, axiom_arg, rule_args,
                                    trials, seed, as_json);
    });

    std::string from, values, variant = "greedy", edges, profile, output;
    Money target = 0, s = 0;
    std::uint32_t vertices = 0, k = 0;
    auto* gen = app.add_subcommand("gen", "encode a decision problem as an instance");
    gen->add_option("--from", from, "subsetsum, vertexcover, or betacc")->required();
    gen->add_option("--values", values, "subset-sum values, e.g. 1,2,3");
    gen->add_option("--target", target, "subset-sum target");
    gen->add_option("--variant", variant, "layer to encode for: greedy or costworthy");
    gen->add_option("--vertices", vertices, "number of vertices");
    gen->add_option("--edges", edges, "edge list, e.g. 0-1,1-2");
    gen->add_option("--k", k, "cover or committee size");
    gen->add_option("--s", s, "misrepresentation threshold");
    gen->add_option("--profile", profile, "voter rankings, e.g. 0,1,2;2,1,0");
    gen->add_option("-o,--output", output, "write the instance file here");
    bool decide_now = false;
    gen->add_flag("--decide", decide_now, "also solve and print YES or NO");
    gen->add_flag("--json", as_json, "machine-readable output");
    gen->callback([&] {
        exit_code = run_gen(from, values, target, variant, vertices, edges, k, profile, s,
                            output, decide_now, as_json);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
