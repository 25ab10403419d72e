#ifndef CENTDIAN_GRAPH_HPP
#define CENTDIAN_GRAPH_HPP

#include <vector>

#include "centdian/instance.hpp"
#include "centdian/length.hpp"

namespace centdian {

/// Adjacency view over a chosen edge set, indexed by node position.
/// Nodes not touched by any chosen edge are present but isolated.
class SubnetworkView {
public:
    /// View over the built edges of a design.  Only nodes incident to a
    /// chosen edge count as active; others are unreachable even from
    /// themselves, because the design's network simply does not reach them.
    SubnetworkView(const Instance& inst, const Subgraph& s);

    /// View over the whole underlying network, where every node exists and
    /// is at distance zero from itself.  Used for walking distances.
    static SubnetworkView full_network(const Instance& inst);

    /// Exact single-source shortest-path lengths (node-index order).
    std::vector<Length> distances_from(int src_index) const;

    bool node_active(int index) const { return mask_[static_cast<size_t>(index)] != 0; }
    const std::vector<char>& active_mask() const { return mask_; }

private:
    struct Arc {
        int to;
        Rat length;
    };
    std::vector<std::vector<Arc>> adj_;
    std::vector<char> mask_;
};

/// Shortest travel length between two external node ids inside a design.
/// Equal endpoints give zero when the node is active, unreachable otherwise.
Length shortest_path_length(const Instance& inst, const Subgraph& s, long from_id,
                            long to_id);

/// Edge indices that lie on at least one simple origin-destination path of
/// total length at most the pair's utility cap.  This is the portion of the
/// network that can possibly serve the pair within its cap.
Subgraph restricted_subnetwork(const Instance& inst, int pair_index);

}  // namespace centdian

#endif  // CENTDIAN_GRAPH_HPP
