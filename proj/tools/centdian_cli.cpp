// Command-line surface for the exact network-design toolkit: solve the
// equity/efficiency criteria, export Pareto sets and lambda intervals,
// enumerate feasible designs, build p-facility reductions, and evaluate
// the walk-access model.  All machine output is deterministic JSON or CSV;
// exact rationals are the source of truth and decimals are renderings.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "centdian/parse.hpp"
#include "centdian/report.hpp"

namespace {

using centdian::AccessParams;
using centdian::AccessRule;
using centdian::Criterion;
using centdian::criterion_name;
using centdian::CriterionKind;
using centdian::Domain;
using centdian::domain_name;
using centdian::Instance;
using centdian::Rat;
using centdian::Subgraph;
using centdian::SolveOptions;
using centdian::ThresholdRule;
using centdian::ValidationError;
using nlohmann::ordered_json;

Rat parse_cli_amount(const std::string& text, const std::string& flag) {
    auto value = Rat::parse(text);
    if (!value)
        throw ValidationError("malformed value '" + text + "' for " + flag);
    return *value;
}

Domain parse_domain(const std::string& text) {
    if (text == "all-feasible") return Domain::all_feasible;
    if (text == "pareto-served") return Domain::pareto_served;
    if (text == "pareto-objective") return Domain::pareto_objective;
    throw ValidationError("unknown domain '" + text +
                          "' (expected all-feasible, pareto-served or "
                          "pareto-objective)");
}

Subgraph parse_edge_list(const std::string& text, const Instance& inst) {
    Subgraph edges;
    if (text.empty() || text == "-") return edges;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        size_t used = 0;
        int ei = -1;
        try {
            ei = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw ValidationError("malformed edge id '" + token + "'");
        }
        if (used != token.size())
            throw ValidationError("malformed edge id '" + token + "'");
        if (ei < 0 || static_cast<size_t>(ei) >= inst.edges.size())
            throw ValidationError("unknown edge id " + std::to_string(ei));
        edges.push_back(ei);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw ValidationError("duplicate edge id in subgraph list");
    return edges;
}

struct AccessFlags {
    std::string model = "core";
    std::string k, beta = "1";
    std::string access_rule = "best", threshold_rule = "penalized";

    void register_on(CLI::App* cmd) {
        cmd->add_option("--model", model, "evaluation model: core or access");
        cmd->add_option("--k", k, "walk tolerance (access model)");
        cmd->add_option("--beta", beta, "walk penalty multiplier, >= 1");
        cmd->add_option("--access-rule", access_rule, "best or nearest");
        cmd->add_option("--threshold-rule", threshold_rule,
                        "penalized (beta*walk <= k) or raw (walk <= k)");
    }

    AccessParams build() const {
        AccessParams params;
        if (k.empty())
            throw ValidationError("the access model requires --k");
        params.k = parse_cli_amount(k, "--k");
        params.beta = parse_cli_amount(beta, "--beta");
        if (access_rule == "best")
            params.access_rule = AccessRule::best;
        else if (access_rule == "nearest")
            params.access_rule = AccessRule::nearest;
        else
            throw ValidationError("unknown access rule '" + access_rule + "'");
        if (threshold_rule == "penalized")
            params.threshold_rule = ThresholdRule::penalized;
        else if (threshold_rule == "raw")
            params.threshold_rule = ThresholdRule::raw;
        else
            throw ValidationError("unknown threshold rule '" + threshold_rule +
                                  "'");
        params.validate();
        return params;
    }

    ordered_json echo(const AccessParams& params) const {
        return ordered_json{
            {"k", centdian::rat_json(params.k)},
            {"beta", centdian::rat_json(params.beta)},
            {"access_rule",
             params.access_rule == AccessRule::best ? "best" : "nearest"},
            {"threshold_rule", params.threshold_rule == ThresholdRule::penalized
                                   ? "penalized"
                                   : "raw"}};
    }
};

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver toolkit for budget-constrained network design "
                 "under center/median equity-efficiency criteria"};
    app.require_subcommand(1);

    std::string instance_path;
    int workers = 1;
    int cap = 24;
    bool force = false;
    app.add_option("--instance", instance_path, "instance JSON file");
    app.add_option("--workers", workers, "parallel enumeration shards");
    app.add_option("--cap", cap, "edge-count cap for exhaustive search");
    app.add_flag("--force", force, "search past the cap");

    // solve
    CLI::App* cmd_solve = app.add_subcommand("solve", "optimize one criterion");
    cmd_solve->fallthrough();
    std::string criterion_text, lambda_text, delta_text, domain_text;
    bool unrestricted = false;
    cmd_solve->add_option("--criterion", criterion_text, "criterion name")
        ->required();
    cmd_solve->add_option("--lambda", lambda_text, "blend weight");
    cmd_solve->add_option("--delta", delta_text,
                          "efficiency slack: keep mean within (1+delta) of "
                          "the best mean");
    CLI::Option* domain_opt =
        cmd_solve->add_option("--domain", domain_text, "candidate domain");
    cmd_solve
        ->add_flag("--unrestricted", unrestricted,
                   "shorthand for --domain all-feasible")
        ->excludes(domain_opt);
    AccessFlags solve_access;
    solve_access.register_on(cmd_solve);

    // frontier / pareto / intervals / enumerate
    CLI::App* cmd_frontier =
        app.add_subcommand("frontier", "export all objective points as CSV");
    cmd_frontier->fallthrough();
    CLI::App* cmd_pareto =
        app.add_subcommand("pareto", "compute a Pareto set");
    cmd_pareto->fallthrough();
    std::string pareto_kind;
    cmd_pareto->add_option("kind", pareto_kind, "po (served vectors) or po2")
        ->required();
    CLI::App* cmd_intervals = app.add_subcommand(
        "intervals", "objective frontier with exact lambda intervals");
    cmd_intervals->fallthrough();
    CLI::App* cmd_enumerate = app.add_subcommand(
        "enumerate", "list every feasible design in canonical order");
    cmd_enumerate->fallthrough();

    // reduce
    CLI::App* cmd_reduce = app.add_subcommand(
        "reduce", "build a network-design instance from a p-facility input");
    cmd_reduce->fallthrough();
    std::string reduce_input, reduce_kind = "median";
    cmd_reduce->add_option("--input", reduce_input, "p-facility JSON file")
        ->required();
    cmd_reduce->add_option("--kind", reduce_kind, "median or center");

    // access
    CLI::App* cmd_access = app.add_subcommand(
        "access", "evaluate one design under the walk-access model");
    cmd_access->fallthrough();
    std::string access_edges;
    cmd_access->add_option("--edges", access_edges,
                           "comma-separated edge ids of the built design");
    AccessFlags access_flags;
    access_flags.register_on(cmd_access);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto start = std::chrono::steady_clock::now();
    try {
        SolveOptions opts;
        opts.cap = cap;
        opts.force = force;
        opts.workers = workers;

        auto need_instance = [&]() -> Instance {
            if (instance_path.empty())
                throw ValidationError("--instance is required");
            return centdian::load_instance(instance_path);
        };

        if (cmd_solve->parsed()) {
            Instance inst = need_instance();
            auto kind = centdian::criterion_from_name(criterion_text);
            if (!kind)
                throw ValidationError("unknown criterion '" + criterion_text +
                                      "'");
            Criterion crit;
            crit.kind = *kind;
            bool wants_lambda = crit.kind == CriterionKind::centdian ||
                                crit.kind == CriterionKind::max_centdian;
            if (wants_lambda && lambda_text.empty())
                throw ValidationError(std::string("criterion ") +
                                      criterion_name(crit.kind) +
                                      " requires --lambda");
            if (!wants_lambda && !lambda_text.empty())
                throw ValidationError(std::string("criterion ") +
                                      criterion_name(crit.kind) +
                                      " does not take --lambda");
            if (wants_lambda)
                crit.lambda = parse_cli_amount(lambda_text, "--lambda");
            if (unrestricted)
                crit.domain = Domain::all_feasible;
            else if (!domain_text.empty())
                crit.domain = parse_domain(domain_text);

            if (solve_access.model == "access")
                opts.access = solve_access.build();
            else if (solve_access.model != "core")
                throw ValidationError("unknown model '" + solve_access.model +
                                      "'");

            ordered_json params{{"criterion", criterion_name(crit.kind)}};
            if (wants_lambda) params["lambda"] = centdian::rat_json(crit.lambda);
            params["domain"] = domain_name(crit.domain);
            params["model"] = opts.access ? "access" : "core";
            if (opts.access) params["access"] = solve_access.echo(*opts.access);
            params["cap"] = opts.cap;
            params["force"] = opts.force;
            params["workers"] = opts.workers;

            centdian::Solution sol;
            if (!delta_text.empty()) {
                Rat delta = parse_cli_amount(delta_text, "--delta");
                params["delta"] = centdian::rat_json(delta);
                sol = centdian::solve_with_efficiency(inst, crit, delta, opts);
            } else {
                sol = centdian::solve(inst, crit, opts);
            }
            std::cout << centdian::run_report("solve", inst, params,
                                              centdian::solution_json(sol),
                                              elapsed_ms(start))
                             .dump(2)
                      << "\n";
            return 0;
        }

        if (cmd_frontier->parsed()) {
            Instance inst = need_instance();
            std::cout << centdian::export_frontier(inst, opts);
            return 0;
        }

        if (cmd_pareto->parsed()) {
            Instance inst = need_instance();
            ordered_json params{{"kind", pareto_kind},
                                {"cap", opts.cap},
                                {"force", opts.force},
                                {"workers", opts.workers}};
            ordered_json result;
            if (pareto_kind == "po")
                result = centdian::served_pareto_json(
                    centdian::compute_po(inst, opts));
            else if (pareto_kind == "po2")
                result = centdian::frontier_json(
                    centdian::compute_po2(inst, opts), false);
            else
                throw ValidationError("unknown pareto kind '" + pareto_kind +
                                      "' (expected po or po2)");
            std::cout << centdian::run_report("pareto", inst, params, result,
                                              elapsed_ms(start))
                             .dump(2)
                      << "\n";
            return 0;
        }

        if (cmd_intervals->parsed()) {
            Instance inst = need_instance();
            ordered_json params{{"cap", opts.cap},
                                {"force", opts.force},
                                {"workers", opts.workers}};
            ordered_json result = centdian::frontier_json(
                centdian::max_centdian_intervals(inst, opts), true);
            std::cout << centdian::run_report("intervals", inst, params, result,
                                              elapsed_ms(start))
                             .dump(2)
                      << "\n";
            return 0;
        }

        if (cmd_enumerate->parsed()) {
            Instance inst = need_instance();
            ordered_json designs = ordered_json::array();
            long long count = centdian::enumerate_feasible(
                inst, opts.cap, opts.force,
                [&](const Subgraph& s, const Rat& cost) {
                    designs.push_back(
                        ordered_json{{"edges", centdian::subgraph_json(s)},
                                     {"cost", centdian::rat_json(cost)}});
                });
            ordered_json params{{"cap", opts.cap}, {"force", opts.force}};
            ordered_json result{{"count", count}, {"designs", designs}};
            std::cout << centdian::run_report("enumerate", inst, params, result,
                                              elapsed_ms(start))
                             .dump(2)
                      << "\n";
            return 0;
        }

        if (cmd_reduce->parsed()) {
            centdian::PFacilityInput input =
                centdian::load_pfacility(reduce_input);
            Instance reduced;
            if (reduce_kind == "median")
                reduced = centdian::p_median_to_instance(input);
            else if (reduce_kind == "center")
                reduced = centdian::p_center_to_instance(input);
            else
                throw ValidationError("unknown reduction kind '" + reduce_kind +
                                      "' (expected median or center)");
            std::cout << centdian::instance_to_json(reduced).dump(2) << "\n";
            return 0;
        }

        if (cmd_access->parsed()) {
            Instance inst = need_instance();
            AccessParams params = access_flags.build();
            Subgraph edges = parse_edge_list(access_edges, inst);
            ordered_json echo = access_flags.echo(params);
            echo["edges"] = centdian::subgraph_json(edges);
            std::cout << centdian::run_report(
                             "access", inst, echo,
                             centdian::access_report_json(inst, edges, params),
                             elapsed_ms(start))
                             .dump(2)
                      << "\n";
            return 0;
        }

        throw ValidationError("no command given");
    } catch (const centdian::CapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
