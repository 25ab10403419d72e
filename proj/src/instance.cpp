#include "centdian/instance.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <utility>

namespace centdian {

bool canonical_less(const Subgraph& a, const Subgraph& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

int Instance::node_index(long id) const {
    for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].id == id) return static_cast<int>(i);
    return -1;
}

Rat Instance::total_edge_and_node_cost() const {
    Rat total;
    for (const Node& n : nodes) total += n.b;
    for (const Edge& e : edges) total += e.c;
    return total;
}

Rat Instance::total_demand() const {
    Rat total;
    for (const OdPair& w : pairs) total += w.g;
    return total;
}

void Instance::validate() const {
    if (nodes.empty()) throw ValidationError("instance has no nodes");
    {
        std::set<long> seen;
        for (const Node& n : nodes) {
            if (!seen.insert(n.id).second)
                throw ValidationError("duplicate node id " + std::to_string(n.id));
            if (n.b.sign() < 0)
                throw ValidationError("node " + std::to_string(n.id) +
                                      " has negative activation cost");
        }
    }
    {
        std::set<std::pair<long, long>> seen;
        for (size_t i = 0; i < edges.size(); ++i) {
            const Edge& e = edges[i];
            if (e.u == e.v)
                throw ValidationError("edge " + std::to_string(i) +
                                      " is a self-loop at node " +
                                      std::to_string(e.u));
            if (node_index(e.u) < 0 || node_index(e.v) < 0)
                throw ValidationError("edge " + std::to_string(i) +
                                      " references an unknown node id");
            auto key = std::minmax(e.u, e.v);
            if (!seen.insert(key).second)
                throw ValidationError("duplicate edge between nodes " +
                                      std::to_string(key.first) + " and " +
                                      std::to_string(key.second));
            if (e.c.sign() < 0)
                throw ValidationError("edge " + std::to_string(i) +
                                      " has negative cost");
            if (e.d.sign() < 0)
                throw ValidationError("edge " + std::to_string(i) +
                                      " has negative length");
        }
    }
    if (pairs.empty())
        throw ValidationError("at least one origin-destination pair is required");
    for (size_t i = 0; i < pairs.size(); ++i) {
        const OdPair& w = pairs[i];
        if (w.s == w.t)
            throw ValidationError("pair " + std::to_string(i) +
                                  " has equal origin and destination (node " +
                                  std::to_string(w.s) + ")");
        if (node_index(w.s) < 0 || node_index(w.t) < 0)
            throw ValidationError("pair " + std::to_string(i) +
                                  " references an unknown node id");
        if (w.u.sign() <= 0)
            throw ValidationError("pair " + std::to_string(i) +
                                  " must have positive utility cap");
        if (w.g.sign() <= 0)
            throw ValidationError("pair " + std::to_string(i) +
                                  " must have positive demand");
    }
    if (budget.sign() < 0) throw ValidationError("budget must be nonnegative");
}

std::vector<char> active_nodes(const Instance& inst, const Subgraph& s) {
    std::vector<char> mask(inst.nodes.size(), 0);
    for (int ei : s) {
        const Edge& e = inst.edges[static_cast<size_t>(ei)];
        mask[static_cast<size_t>(inst.node_index(e.u))] = 1;
        mask[static_cast<size_t>(inst.node_index(e.v))] = 1;
    }
    return mask;
}

Rat design_cost(const Instance& inst, const Subgraph& s) {
    Rat total;
    std::vector<char> mask = active_nodes(inst, s);
    for (size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) total += inst.nodes[i].b;
    for (int ei : s) total += inst.edges[static_cast<size_t>(ei)].c;
    return total;
}

bool is_feasible(const Instance& inst, const Subgraph& s) {
    return design_cost(inst, s) <= inst.budget;
}

}  // namespace centdian
