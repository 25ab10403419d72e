#include "centdian/report.hpp"

namespace centdian {

using nlohmann::ordered_json;

ordered_json rat_json(const Rat& value) {
    return ordered_json{{"num", value.num_str()},
                        {"den", value.den_str()},
                        {"dec", value.decimal()}};
}

ordered_json length_json(const Length& value) {
    if (value.is_unreachable()) return ordered_json{{"unreachable", true}};
    return rat_json(value.value());
}

ordered_json subgraph_json(const Subgraph& s) {
    ordered_json out = ordered_json::array();
    for (int ei : s) out.push_back(ei);
    return out;
}

ordered_json objectives_json(const ObjectiveVector& obj) {
    return ordered_json{{"worst", rat_json(obj.worst)},
                        {"mean", rat_json(obj.mean)},
                        {"weighted_worst", rat_json(obj.weighted_worst)},
                        {"weighted_worst_pair", obj.weighted_worst_pair}};
}

ordered_json solution_json(const Solution& sol) {
    ordered_json out;
    out["edges"] = subgraph_json(sol.edges);
    out["objectives"] = objectives_json(sol.objectives);
    out["value"] = rat_json(sol.value);
    if (sol.secondary) out["secondary"] = rat_json(*sol.secondary);
    out["domain"] = domain_name(sol.domain);
    out["mode"] = sol.mode == SearchMode::exhaustive ? "exhaustive"
                                                     : "branch-and-bound";
    out["candidates"] = sol.candidates;
    return out;
}

ordered_json served_pareto_json(const ServedParetoSet& set) {
    ordered_json entries = ordered_json::array();
    for (const ServedParetoEntry& e : set.entries) {
        ordered_json served = ordered_json::array();
        for (const Rat& ell : e.served) served.push_back(rat_json(ell));
        ordered_json designs = ordered_json::array();
        for (const Subgraph& d : e.designs) designs.push_back(subgraph_json(d));
        entries.push_back(
            ordered_json{{"served", served}, {"designs", designs}});
    }
    return ordered_json{{"kind", "pareto-served"},
                        {"entries", entries},
                        {"candidates", set.candidates}};
}

ordered_json interval_json(const LambdaInterval& interval) {
    return ordered_json{{"lo", rat_json(interval.lo)},
                        {"lo_closed", interval.lo_closed},
                        {"hi", rat_json(interval.hi)},
                        {"hi_closed", interval.hi_closed}};
}

ordered_json frontier_json(const ObjectiveFrontier& front, bool with_intervals) {
    ordered_json points = ordered_json::array();
    for (const FrontierPoint& p : front.points) {
        ordered_json designs = ordered_json::array();
        for (const Subgraph& d : p.designs) designs.push_back(subgraph_json(d));
        ordered_json point{{"worst", rat_json(p.worst)},
                           {"mean", rat_json(p.mean)},
                           {"designs", designs}};
        if (with_intervals && p.interval)
            point["interval"] = interval_json(*p.interval);
        points.push_back(point);
    }
    return ordered_json{{"kind", "pareto-objective"},
                        {"points", points},
                        {"candidates", front.candidates}};
}

ordered_json instance_digest_json(const Instance& inst) {
    ordered_json digest{{"nodes", inst.nodes.size()},
                        {"edges", inst.edges.size()},
                        {"pairs", inst.pairs.size()},
                        {"budget", rat_json(inst.budget)}};
    if (inst.budget_from_fraction)
        digest["alpha"] = rat_json(inst.budget_fraction);
    return digest;
}

ordered_json access_report_json(const Instance& inst, const Subgraph& s,
                                const AccessParams& params) {
    ordered_json rows = ordered_json::array();
    for (size_t i = 0; i < inst.pairs.size(); ++i) {
        Length d = extended_distance(inst, s, static_cast<int>(i), params);
        AccessServed served =
            access_served_length(inst, s, static_cast<int>(i), params);
        rows.push_back(ordered_json{{"s", inst.pairs[i].s},
                                    {"t", inst.pairs[i].t},
                                    {"extended", length_json(d)},
                                    {"served", rat_json(served.served)},
                                    {"covered", served.covered}});
    }
    ObjectiveVector obj = eval_access_objectives(inst, s, params);
    return ordered_json{{"edges", subgraph_json(s)},
                        {"pairs", rows},
                        {"objectives", objectives_json(obj)}};
}

ordered_json run_report(const std::string& command, const Instance& inst,
                        ordered_json parameters, ordered_json result,
                        long long wall_ms) {
    ordered_json report;
    report["command"] = command;
    report["instance"] = instance_digest_json(inst);
    report["parameters"] = std::move(parameters);
    report["result"] = std::move(result);
    report["wall_ms"] = wall_ms;
    return report;
}

}  // namespace centdian
