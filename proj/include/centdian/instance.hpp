#ifndef CENTDIAN_INSTANCE_HPP
#define CENTDIAN_INSTANCE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "centdian/rational.hpp"

namespace centdian {

/// Raised for any malformed instance or request parameter.  The message
/// identifies the offending element; the CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what)
        : std::runtime_error(what) {}
};

struct Node {
    long id = 0;  // external identifier, unique within the instance
    Rat b;        // activation cost paid once if any incident edge is built
};

struct Edge {
    long u = 0;  // endpoint node ids (undirected)
    long v = 0;
    Rat c;  // construction cost
    Rat d;  // traversal length
};

/// One origin-destination demand pair.
struct OdPair {
    long s = 0;  // origin node id
    long t = 0;  // destination node id
    Rat u;       // utility cap: travel beyond this is valued as u itself
    Rat g;       // demand weight (> 0)
};

/// A candidate design: the set of built edges, stored as strictly
/// increasing edge indices into Instance::edges.  The active node set is
/// derived (endpoints of built edges), never stored.
using Subgraph = std::vector<int>;

/// Canonical order on designs: fewer edges first, then lexicographic on the
/// sorted index sequence.  Every tie in the toolkit resolves through this.
bool canonical_less(const Subgraph& a, const Subgraph& b);

struct Instance {
    std::vector<Node> nodes;
    std::vector<Edge> edges;
    std::vector<OdPair> pairs;
    Rat budget;  // absolute construction budget (resolved at parse time)

    // When the input gave the budget as a fraction of total cost, the
    // original fraction is kept for reporting.
    bool budget_from_fraction = false;
    Rat budget_fraction;

    /// Index into `nodes` for an external id, or -1 when absent.
    int node_index(long id) const;

    Rat total_edge_and_node_cost() const;
    Rat total_demand() const;

    /// Checks structural soundness (unique ids, known endpoints, sign
    /// constraints, exactly one pair rule per field...).  Throws
    /// ValidationError with a message naming the first offending element.
    void validate() const;
};

/// Nodes touched by the built edges, as a 0/1 mask over node indices.
std::vector<char> active_nodes(const Instance& inst, const Subgraph& s);

/// Construction cost of a design: built edge costs plus the activation cost
/// of every node incident to a built edge.
Rat design_cost(const Instance& inst, const Subgraph& s);

bool is_feasible(const Instance& inst, const Subgraph& s);

}  // namespace centdian

#endif  // CENTDIAN_INSTANCE_HPP
