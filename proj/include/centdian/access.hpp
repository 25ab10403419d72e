#ifndef CENTDIAN_ACCESS_HPP
#define CENTDIAN_ACCESS_HPP

#include <vector>

#include "centdian/instance.hpp"
#include "centdian/length.hpp"
#include "centdian/objectives.hpp"

namespace centdian {

/// How a pair endpoint that is off the built network chooses its entry
/// station among the design's active nodes.
enum class AccessRule {
    best,     // any station passing the walk threshold, best total trip
    nearest,  // the walk-closest station only (ties: smaller node id)
};

/// What the walk threshold k is compared against.
enum class ThresholdRule {
    penalized,  // beta * walk <= k
    raw,        // walk <= k
};

struct AccessParams {
    Rat k;              // walk tolerance (>= 0)
    Rat beta = Rat(1);  // walk discomfort multiplier (>= 1)
    AccessRule access_rule = AccessRule::best;
    ThresholdRule threshold_rule = ThresholdRule::penalized;

    void validate() const;
};

/// Door-to-door travel length for one pair under a design, where walking on
/// the underlying network bridges endpoints to the built net.  An endpoint
/// on the built network uses it directly; one off the network walks to an
/// admissible station (weighted by beta) and rides from there.  With no
/// admissible station the pair is unreachable.
Length extended_distance(const Instance& inst, const Subgraph& s, int pair_index,
                         const AccessParams& params);

struct AccessServed {
    Rat served;    // min(extended distance, utility cap)
    bool covered;  // extended distance within the cap
};

AccessServed access_served_length(const Instance& inst, const Subgraph& s,
                                  int pair_index, const AccessParams& params);

/// Served lengths for every pair under the access model, in input order.
ServedVector access_served_lengths(const Instance& inst, const Subgraph& s,
                                   const AccessParams& params);

ObjectiveVector eval_access_objectives(const Instance& inst, const Subgraph& s,
                                       const AccessParams& params);

}  // namespace centdian

#endif  // CENTDIAN_ACCESS_HPP
