#include "centdian/graph.hpp"

#include <numeric>

namespace centdian {

SubnetworkView::SubnetworkView(const Instance& inst, const Subgraph& s)
    : adj_(inst.nodes.size()), mask_(active_nodes(inst, s)) {
    for (int ei : s) {
        const Edge& e = inst.edges[static_cast<size_t>(ei)];
        int ui = inst.node_index(e.u);
        int vi = inst.node_index(e.v);
        adj_[static_cast<size_t>(ui)].push_back({vi, e.d});
        adj_[static_cast<size_t>(vi)].push_back({ui, e.d});
    }
}

SubnetworkView SubnetworkView::full_network(const Instance& inst) {
    Subgraph all(inst.edges.size());
    std::iota(all.begin(), all.end(), 0);
    SubnetworkView view(inst, all);
    view.mask_.assign(inst.nodes.size(), 1);
    return view;
}

std::vector<Length> SubnetworkView::distances_from(int src_index) const {
    const size_t n = adj_.size();
    std::vector<Length> dist(n, Length::unreachable());
    if (!node_active(src_index)) return dist;
    dist[static_cast<size_t>(src_index)] = Length::finite(Rat(0));

    // Dijkstra with linear minimum extraction; instances are small and the
    // arithmetic is exact, so simplicity beats a heap here.
    std::vector<char> done(n, 0);
    for (size_t round = 0; round < n; ++round) {
        int best = -1;
        for (size_t i = 0; i < n; ++i) {
            if (done[i] || dist[i].is_unreachable()) continue;
            if (best < 0 || dist[i] < dist[static_cast<size_t>(best)])
                best = static_cast<int>(i);
        }
        if (best < 0) break;
        done[static_cast<size_t>(best)] = 1;
        for (const Arc& arc : adj_[static_cast<size_t>(best)]) {
            Length cand = dist[static_cast<size_t>(best)] +
                          Length::finite(arc.length);
            if (cand < dist[static_cast<size_t>(arc.to)])
                dist[static_cast<size_t>(arc.to)] = cand;
        }
    }
    return dist;
}

Length shortest_path_length(const Instance& inst, const Subgraph& s,
                            long from_id, long to_id) {
    int fi = inst.node_index(from_id);
    int ti = inst.node_index(to_id);
    if (fi < 0 || ti < 0)
        throw ValidationError("shortest path endpoint is not a node of the instance");
    SubnetworkView view(inst, s);
    return view.distances_from(fi)[static_cast<size_t>(ti)];
}

namespace {

struct PathSearch {
    const std::vector<std::vector<std::pair<int, int>>>& adj;  // (neighbor, edge)
    const Instance& inst;
    int target;
    Rat cap;
    std::vector<char> on_path;
    std::vector<int> edge_stack;
    std::vector<char> used;

    void dfs(int node, const Rat& travelled) {
        if (node == target) {
            for (int ei : edge_stack) used[static_cast<size_t>(ei)] = 1;
            return;
        }
        on_path[static_cast<size_t>(node)] = 1;
        for (const auto& [nbr, ei] : adj[static_cast<size_t>(node)]) {
            if (on_path[static_cast<size_t>(nbr)]) continue;
            Rat next = travelled + inst.edges[static_cast<size_t>(ei)].d;
            if (next > cap) continue;
            edge_stack.push_back(ei);
            dfs(nbr, next);
            edge_stack.pop_back();
        }
        on_path[static_cast<size_t>(node)] = 0;
    }
};

}  // namespace

Subgraph restricted_subnetwork(const Instance& inst, int pair_index) {
    if (pair_index < 0 || static_cast<size_t>(pair_index) >= inst.pairs.size())
        throw ValidationError("pair index out of range");
    const OdPair& w = inst.pairs[static_cast<size_t>(pair_index)];

    std::vector<std::vector<std::pair<int, int>>> adj(inst.nodes.size());
    for (size_t ei = 0; ei < inst.edges.size(); ++ei) {
        const Edge& e = inst.edges[ei];
        int ui = inst.node_index(e.u);
        int vi = inst.node_index(e.v);
        adj[static_cast<size_t>(ui)].emplace_back(vi, static_cast<int>(ei));
        adj[static_cast<size_t>(vi)].emplace_back(ui, static_cast<int>(ei));
    }

    PathSearch search{adj, inst, inst.node_index(w.t), w.u,
                      std::vector<char>(inst.nodes.size(), 0), {},
                      std::vector<char>(inst.edges.size(), 0)};
    search.dfs(inst.node_index(w.s), Rat(0));

    Subgraph result;
    for (size_t ei = 0; ei < search.used.size(); ++ei)
        if (search.used[ei]) result.push_back(static_cast<int>(ei));
    return result;
}

}  // namespace centdian
