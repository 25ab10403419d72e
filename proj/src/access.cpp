#include "centdian/access.hpp"

#include <map>

#include "centdian/graph.hpp"

namespace centdian {

void AccessParams::validate() const {
    if (k.sign() < 0) throw ValidationError("walk tolerance k must be nonnegative");
    if (beta < Rat(1)) throw ValidationError("walk penalty beta must be at least 1");
}

namespace {

/// Shared shortest-path state for evaluating one design: exact distances on
/// the built network and walking distances on the full underlying network,
/// both computed lazily per source.
struct AccessContext {
    const Instance& inst;
    const AccessParams& params;
    SubnetworkView built;
    SubnetworkView walkable;
    std::map<int, std::vector<Length>> built_dist;
    std::map<int, std::vector<Length>> walk_dist;

    AccessContext(const Instance& inst, const Subgraph& s,
                  const AccessParams& params)
        : inst(inst),
          params(params),
          built(inst, s),
          walkable(SubnetworkView::full_network(inst)) {}

    const std::vector<Length>& on_built(int src) {
        auto it = built_dist.find(src);
        if (it == built_dist.end())
            it = built_dist.emplace(src, built.distances_from(src)).first;
        return it->second;
    }

    const std::vector<Length>& walking(int src) {
        auto it = walk_dist.find(src);
        if (it == walk_dist.end())
            it = walk_dist.emplace(src, walkable.distances_from(src)).first;
        return it->second;
    }

    bool passes_threshold(const Length& walk) const {
        if (walk.is_unreachable()) return false;
        Rat measured = params.threshold_rule == ThresholdRule::penalized
                           ? params.beta * walk.value()
                           : walk.value();
        return measured <= params.k;
    }

    /// Walk-closest active station for an off-network endpoint, or -1 when
    /// no station is walk-reachable at all.  Ties by smaller node id.
    int nearest_station(int endpoint) {
        const std::vector<Length>& walk = walking(endpoint);
        int best = -1;
        for (size_t i = 0; i < inst.nodes.size(); ++i) {
            if (!built.node_active(static_cast<int>(i))) continue;
            if (walk[i].is_unreachable()) continue;
            if (best < 0 || walk[i] < walk[static_cast<size_t>(best)] ||
                (walk[i] == walk[static_cast<size_t>(best)] &&
                 inst.nodes[i].id < inst.nodes[static_cast<size_t>(best)].id))
                best = static_cast<int>(i);
        }
        return best;
    }

    Length penalized_walk(const Length& walk) const {
        if (walk.is_unreachable()) return walk;
        return Length::finite(params.beta * walk.value());
    }
};

/// Entry legs for one endpoint: for each admissible station, the penalized
/// cost of reaching it.  An on-network endpoint enters where it stands.
struct EntryLeg {
    int station;
    Length cost;
};

std::vector<EntryLeg> entry_legs(AccessContext& ctx, int endpoint) {
    std::vector<EntryLeg> legs;
    if (ctx.built.node_active(endpoint)) {
        legs.push_back({endpoint, Length::finite(Rat(0))});
        return legs;
    }
    if (ctx.params.access_rule == AccessRule::nearest) {
        int station = ctx.nearest_station(endpoint);
        if (station >= 0) {
            const Length& walk = ctx.walking(endpoint)[static_cast<size_t>(station)];
            if (ctx.passes_threshold(walk))
                legs.push_back({station, ctx.penalized_walk(walk)});
        }
        return legs;
    }
    const std::vector<Length>& walk = ctx.walking(endpoint);
    for (size_t i = 0; i < walk.size(); ++i) {
        if (!ctx.built.node_active(static_cast<int>(i))) continue;
        if (!ctx.passes_threshold(walk[i])) continue;
        legs.push_back({static_cast<int>(i), ctx.penalized_walk(walk[i])});
    }
    return legs;
}

Length pair_distance(AccessContext& ctx, int pair_index) {
    const OdPair& w = ctx.inst.pairs[static_cast<size_t>(pair_index)];
    int si = ctx.inst.node_index(w.s);
    int ti = ctx.inst.node_index(w.t);

    std::vector<EntryLeg> from = entry_legs(ctx, si);
    std::vector<EntryLeg> to = entry_legs(ctx, ti);

    Length best = Length::unreachable();
    for (const EntryLeg& a : from) {
        const std::vector<Length>& ride = ctx.on_built(a.station);
        for (const EntryLeg& b : to) {
            Length total = a.cost + ride[static_cast<size_t>(b.station)] + b.cost;
            best = Length::min(best, total);
        }
    }
    return best;
}

}  // namespace

Length extended_distance(const Instance& inst, const Subgraph& s, int pair_index,
                         const AccessParams& params) {
    params.validate();
    if (pair_index < 0 || static_cast<size_t>(pair_index) >= inst.pairs.size())
        throw ValidationError("pair index out of range");
    AccessContext ctx(inst, s, params);
    return pair_distance(ctx, pair_index);
}

AccessServed access_served_length(const Instance& inst, const Subgraph& s,
                                  int pair_index, const AccessParams& params) {
    Length d = extended_distance(inst, s, pair_index, params);
    const Rat& u = inst.pairs[static_cast<size_t>(pair_index)].u;
    AccessServed out;
    out.covered = d.is_finite() && d.value() <= u;
    out.served = d.is_finite() ? Rat::min(d.value(), u) : u;
    return out;
}

ServedVector access_served_lengths(const Instance& inst, const Subgraph& s,
                                   const AccessParams& params) {
    params.validate();
    AccessContext ctx(inst, s, params);
    ServedVector served;
    served.reserve(inst.pairs.size());
    for (size_t i = 0; i < inst.pairs.size(); ++i) {
        Length d = pair_distance(ctx, static_cast<int>(i));
        const Rat& u = inst.pairs[i].u;
        served.push_back(d.is_finite() ? Rat::min(d.value(), u) : u);
    }
    return served;
}

ObjectiveVector eval_access_objectives(const Instance& inst, const Subgraph& s,
                                       const AccessParams& params) {
    return objectives_from_served(inst, access_served_lengths(inst, s, params));
}

}  // namespace centdian
