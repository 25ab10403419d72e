#ifndef CENTDIAN_SOLVE_HPP
#define CENTDIAN_SOLVE_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "centdian/access.hpp"
#include "centdian/instance.hpp"
#include "centdian/objectives.hpp"

namespace centdian {

/// Raised when an instance exceeds the exhaustive-search cap and the caller
/// did not ask to proceed anyway.  The CLI maps this to exit code 3.
class CapError : public std::runtime_error {
public:
    CapError(size_t edge_count, int cap)
        : std::runtime_error("instance has " + std::to_string(edge_count) +
                             " edges, above the exhaustive-search cap of " +
                             std::to_string(cap) + "; re-run with force to search anyway"),
          edge_count(edge_count),
          cap(cap) {}
    size_t edge_count;
    int cap;
};

enum class CriterionKind {
    median,                 // minimize the mean served length
    center,                 // minimize the worst served length
    weighted_center,        // minimize the demand-weighted worst served length
    centdian,               // minimize lambda*worst + (1-lambda)*mean
    gen_center,             // minimize worst - mean (equity gap)
    weighted_gen_center,    // minimize |weighted worst - mean|
    restricted_gen_center,  // equity gap over the (worst, mean) frontier
    lex_centdian,           // lexicographic: worst first, then mean
    max_centdian,           // Chebyshev blend, ties by the convex blend
};

/// Candidate domains a criterion can range over.
enum class Domain {
    automatic,        // the natural domain of the criterion
    all_feasible,     // every feasible design
    pareto_served,    // designs with nondominated served-length vectors
    pareto_objective  // designs attaining the (worst, mean) frontier
};

struct Criterion {
    CriterionKind kind = CriterionKind::median;
    Rat lambda;  // used by centdian / max_centdian
    Domain domain = Domain::automatic;
};

const char* criterion_name(CriterionKind kind);
std::optional<CriterionKind> criterion_from_name(const std::string& name);

const char* domain_name(Domain d);

/// How the optimum was certified.
enum class SearchMode { exhaustive, branch_and_bound };

struct SolveOptions {
    int cap = 24;        // refuse exhaustive search above this many edges
    bool force = false;  // proceed past the cap
    int workers = 1;     // parallel enumeration shards
    std::optional<AccessParams> access;  // evaluate under the access model
};

struct Solution {
    Subgraph edges;
    ObjectiveVector objectives;
    Rat value;                     // optimal criterion value
    std::optional<Rat> secondary;  // second-stage value for lexicographic kinds
    Domain domain = Domain::all_feasible;  // domain actually searched
    SearchMode mode = SearchMode::exhaustive;
    long long candidates = 0;  // feasible designs examined (exhaustiveness certificate)
};

/// Streams every feasible design through `fn` in canonical order: fewer
/// edges first, then lexicographically by edge indices.  Returns the number
/// of feasible designs.  Throws CapError above the cap unless forced.
long long enumerate_feasible(
    const Instance& inst, int cap, bool force,
    const std::function<void(const Subgraph&, const Rat& cost)>& fn);

/// Unordered twin of enumerate_feasible used by the optimizers: the same
/// feasible designs and count, but traversal is prefix-first and sharded
/// across up to `workers` threads.  Designs sharing their smallest edge
/// index stay in one shard; `fn` may run concurrently for different shard
/// ids and must only touch per-shard state.
long long for_each_feasible_sharded(
    const Instance& inst, int cap, bool force, int workers,
    const std::function<void(int shard, const Subgraph&, const Rat& cost)>& fn);

/// Exact optimum of a criterion over its domain.  Ties on the criterion
/// value resolve by smaller mean, then canonical edge order.  Beyond the
/// cap a forced run uses branch-and-bound, which is only sound for criteria
/// whose value cannot increase when edges are added (median, center,
/// centdian with lambda <= 1, lex and Chebyshev blends, all without the
/// access model); other forced criteria are rejected.  Branch-and-bound
/// certifies the same optimal value and objectives as exhaustive search but
/// may pick a different representative among exactly tied designs.
Solution solve(const Instance& inst, const Criterion& crit,
               const SolveOptions& opts = {});

/// Minimize the worst served length, then the mean among those optima.
Solution solve_lex_centdian(const Instance& inst, const SolveOptions& opts = {});

/// Chebyshev blend for 0 < lambda < 1: minimize max{lambda*worst,
/// (1-lambda)*mean}, ties by lambda*worst + (1-lambda)*mean, then canonical.
Solution solve_max_centdian(const Instance& inst, const Rat& lambda,
                            const SolveOptions& opts = {});

/// Optimize `crit` among designs whose mean stays within a factor
/// (1 + delta) of the best achievable mean.  The constrained search always
/// ranges over all feasible designs.
Solution solve_with_efficiency(const Instance& inst, const Criterion& crit,
                               const Rat& delta, const SolveOptions& opts = {});

}  // namespace centdian

#endif  // CENTDIAN_SOLVE_HPP
