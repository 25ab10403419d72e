#ifndef CENTDIAN_REDUCTIONS_HPP
#define CENTDIAN_REDUCTIONS_HPP

#include <vector>

#include "centdian/instance.hpp"
#include "centdian/rational.hpp"

namespace centdian {

/// A classical p-facility input: pairwise distances among demand points and
/// the number of facilities to open.  The matrix is validated (square,
/// symmetric, zero diagonal, nonnegative) and replaced by its all-pairs
/// shortest-path closure, so multi-hop shortcuts can never undercut a
/// direct entry downstream.
struct PFacilityInput {
    std::vector<std::vector<Rat>> dist;
    int p = 1;

    PFacilityInput(std::vector<std::vector<Rat>> matrix, int p);

    size_t size() const { return dist.size(); }
    Rat max_distance() const;
};

/// Network-design instance whose optimal mean criterion mirrors the
/// p-median problem: demand nodes plus one sink t, a complete zero-cost
/// layer carrying the distances, unit-cost zero-length links (i, t), one
/// unit-demand pair (i, t) per demand node with a never-binding utility
/// cap, and budget exactly p.
Instance p_median_to_instance(const PFacilityInput& input);

/// Identical construction; the optimal worst criterion on it mirrors the
/// p-center problem.
Instance p_center_to_instance(const PFacilityInput& input);

/// Exact p-median optimum min over p-subsets S of sum_i min_{j in S} d_ij.
/// Guarded to at most 12 points.
Rat brute_force_p_median(const PFacilityInput& input);

/// Exact p-center optimum min over p-subsets S of max_i min_{j in S} d_ij.
Rat brute_force_p_center(const PFacilityInput& input);

}  // namespace centdian

#endif  // CENTDIAN_REDUCTIONS_HPP
