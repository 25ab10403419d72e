#ifndef CENTDIAN_OBJECTIVES_HPP
#define CENTDIAN_OBJECTIVES_HPP

#include <vector>

#include "centdian/instance.hpp"
#include "centdian/rational.hpp"

namespace centdian {

/// Served travel length per pair, in pair input order.  Travel above a
/// pair's utility cap (including unreachable) is clamped to the cap, so
/// every entry lies in [0, u].
using ServedVector = std::vector<Rat>;

/// The three scalar objectives of a design, evaluated together so callers
/// never recompute shortest paths per objective.
struct ObjectiveVector {
    Rat worst;           // largest served length over pairs
    Rat mean;            // demand-weighted average served length
    Rat weighted_worst;  // served length of the pair maximizing g * served
    int weighted_worst_pair = -1;  // pair index attaining weighted_worst
};

ServedVector served_lengths(const Instance& inst, const Subgraph& s);

ObjectiveVector objectives_from_served(const Instance& inst,
                                       const ServedVector& served);

ObjectiveVector eval_objectives(const Instance& inst, const Subgraph& s);

/// Convex blend lambda * worst + (1 - lambda) * mean.  Defined for any
/// lambda >= 0; above 1 the blend rewards designs where the mean exceeds
/// the worst case, which only makes sense on a nondominated domain.
Rat eval_centdian(const ObjectiveVector& obj, const Rat& lambda);

/// Weighted Chebyshev scalarization max{lambda * worst, (1-lambda) * mean}.
Rat eval_chebyshev(const ObjectiveVector& obj, const Rat& lambda);

/// Equity gap: worst minus mean (always nonnegative).
Rat eval_equity_gap(const ObjectiveVector& obj);

/// Demand-weighted equity gap |weighted_worst - mean| (either side can be
/// larger, hence the absolute value).
Rat eval_weighted_equity_gap(const ObjectiveVector& obj);

}  // namespace centdian

#endif  // CENTDIAN_OBJECTIVES_HPP
