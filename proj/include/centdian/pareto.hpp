#ifndef CENTDIAN_PARETO_HPP
#define CENTDIAN_PARETO_HPP

#include <optional>
#include <string>
#include <vector>

#include "centdian/instance.hpp"
#include "centdian/objectives.hpp"
#include "centdian/solve.hpp"

namespace centdian {

/// One nondominated served-length vector together with every design that
/// attains it.  Designs with identical vectors never dominate each other,
/// so they share an entry.
struct ServedParetoEntry {
    ServedVector served;            // per-pair served lengths, input order
    std::vector<Subgraph> designs;  // attaining designs, canonical order
};

/// The served-length Pareto set: designs whose per-pair served vectors are
/// nondominated (componentwise <=, at least one strict) among all feasible
/// designs.  Entries are sorted by their canonical first design.
struct ServedParetoSet {
    std::vector<ServedParetoEntry> entries;
    long long candidates = 0;  // feasible designs examined
};

/// A half-open-or-closed lambda range with explicit endpoint ownership.
struct LambdaInterval {
    Rat lo, hi;
    bool lo_closed = false;
    bool hi_closed = false;
};

/// One point of the (worst, mean) frontier with every attaining design and,
/// when computed, the exact lambda range on which it is the Chebyshev-lex
/// winner.
struct FrontierPoint {
    Rat worst;
    Rat mean;
    std::vector<Subgraph> designs;  // attaining designs, canonical order
    std::optional<LambdaInterval> interval;
};

/// The (worst, mean) Pareto frontier, sorted by increasing worst value
/// (hence non-increasing mean).
struct ObjectiveFrontier {
    std::vector<FrontierPoint> points;
    long long candidates = 0;  // feasible designs examined
};

ServedParetoSet compute_po(const Instance& inst, const SolveOptions& opts = {});

ObjectiveFrontier compute_po2(const Instance& inst, const SolveOptions& opts = {});

/// Checks that every frontier design also appears in the served-length
/// Pareto set.  Holds universally; exposed as a runtime assertion.
bool po2_subset_po(const Instance& inst, const SolveOptions& opts = {});

/// Frontier plus exact lambda-interval decomposition of (0,1): for each
/// point, the maximal range of lambda on which it wins the lexicographic
/// Chebyshev criterion [max{lambda*worst,(1-lambda)*mean}, then the convex
/// blend, then canonical designs].  Intervals partition (0,1): consecutive
/// intervals share an endpoint owned by exactly one side.
ObjectiveFrontier max_centdian_intervals(const Instance& inst,
                                         const SolveOptions& opts = {});

/// All distinct (worst, mean) points of feasible designs, flagged
/// dominated/nondominated, as CSV.  Two leading comment lines carry the
/// feasible-design and distinct-point counts; data rows are sorted by
/// (worst, mean) ascending.  Nondominated rows carry their lambda interval
/// bounds (6-decimal renderings; exact values come from the intervals
/// computation).
std::string export_frontier(const Instance& inst, const SolveOptions& opts = {});

}  // namespace centdian

#endif  // CENTDIAN_PARETO_HPP
