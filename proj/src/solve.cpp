#include "centdian/solve.hpp"

#include <algorithm>
#include <thread>

#include "centdian/pareto.hpp"

namespace centdian {

const char* criterion_name(CriterionKind kind) {
    switch (kind) {
        case CriterionKind::median: return "median";
        case CriterionKind::center: return "center";
        case CriterionKind::weighted_center: return "weighted-center";
        case CriterionKind::centdian: return "centdian";
        case CriterionKind::gen_center: return "gen-center";
        case CriterionKind::weighted_gen_center: return "weighted-gen-center";
        case CriterionKind::restricted_gen_center: return "restricted-gen-center";
        case CriterionKind::lex_centdian: return "lex-centdian";
        case CriterionKind::max_centdian: return "max-centdian";
    }
    return "?";
}

std::optional<CriterionKind> criterion_from_name(const std::string& name) {
    static const CriterionKind all[] = {
        CriterionKind::median,          CriterionKind::center,
        CriterionKind::weighted_center, CriterionKind::centdian,
        CriterionKind::gen_center,      CriterionKind::weighted_gen_center,
        CriterionKind::restricted_gen_center, CriterionKind::lex_centdian,
        CriterionKind::max_centdian};
    for (CriterionKind k : all)
        if (name == criterion_name(k)) return k;
    return std::nullopt;
}

const char* domain_name(Domain d) {
    switch (d) {
        case Domain::automatic: return "automatic";
        case Domain::all_feasible: return "all-feasible";
        case Domain::pareto_served: return "pareto-served";
        case Domain::pareto_objective: return "pareto-objective";
    }
    return "?";
}

namespace {

/// Incremental design cost while edges are pushed/popped: tracks per-node
/// incidence counts so activation costs are charged exactly once.
struct CostTracker {
    const Instance& inst;
    std::vector<std::pair<int, int>> ends;  // node indices per edge
    std::vector<int> uses;
    Rat cost;

    explicit CostTracker(const Instance& inst)
        : inst(inst), uses(inst.nodes.size(), 0) {
        ends.reserve(inst.edges.size());
        for (const Edge& e : inst.edges)
            ends.emplace_back(inst.node_index(e.u), inst.node_index(e.v));
    }

    Rat marginal(int ei) const {
        auto [u, v] = ends[static_cast<size_t>(ei)];
        Rat m = inst.edges[static_cast<size_t>(ei)].c;
        if (uses[static_cast<size_t>(u)] == 0) m += inst.nodes[static_cast<size_t>(u)].b;
        if (uses[static_cast<size_t>(v)] == 0) m += inst.nodes[static_cast<size_t>(v)].b;
        return m;
    }

    void add(int ei) {
        cost += marginal(ei);
        auto [u, v] = ends[static_cast<size_t>(ei)];
        ++uses[static_cast<size_t>(u)];
        ++uses[static_cast<size_t>(v)];
    }

    void remove(int ei) {
        auto [u, v] = ends[static_cast<size_t>(ei)];
        --uses[static_cast<size_t>(u)];
        --uses[static_cast<size_t>(v)];
        cost -= marginal(ei);
    }
};

void check_cap(const Instance& inst, int cap, bool force) {
    if (cap < 0) throw ValidationError("cap must be nonnegative");
    if (!force && inst.edges.size() > static_cast<size_t>(cap))
        throw CapError(inst.edges.size(), cap);
}

}  // namespace

long long enumerate_feasible(
    const Instance& inst, int cap, bool force,
    const std::function<void(const Subgraph&, const Rat& cost)>& fn) {
    inst.validate();
    check_cap(inst, cap, force);

    const int ecount = static_cast<int>(inst.edges.size());
    CostTracker tracker(inst);
    Subgraph cur;
    long long count = 0;

    // One pass per design size keeps emission in canonical order (size
    // first, then lexicographic) without buffering the feasible set.
    std::function<void(int, int)> grow = [&](int from, int want) {
        if (want == 0) {
            ++count;
            fn(cur, tracker.cost);
            return;
        }
        for (int ei = from; ei + want <= ecount; ++ei) {
            if (tracker.cost + tracker.marginal(ei) > inst.budget) continue;
            cur.push_back(ei);
            tracker.add(ei);
            grow(ei + 1, want - 1);
            tracker.remove(ei);
            cur.pop_back();
        }
    };
    for (int size = 0; size <= ecount; ++size) grow(0, size);
    return count;
}

long long for_each_feasible_sharded(
    const Instance& inst, int cap, bool force, int workers,
    const std::function<void(int shard, const Subgraph&, const Rat& cost)>& fn) {
    inst.validate();
    if (workers < 1) throw ValidationError("workers must be at least 1");
    check_cap(inst, cap, force);

    const int ecount = static_cast<int>(inst.edges.size());
    const int shards = std::max(1, std::min({workers, ecount, 32}));

    auto run_shard = [&](int shard) -> long long {
        CostTracker tracker(inst);
        Subgraph cur;
        long long local = 0;

        std::function<void(int)> extend = [&](int from) {
            for (int ei = from; ei < ecount; ++ei) {
                if (tracker.cost + tracker.marginal(ei) > inst.budget) continue;
                cur.push_back(ei);
                tracker.add(ei);
                ++local;
                fn(shard, cur, tracker.cost);
                extend(ei + 1);
                tracker.remove(ei);
                cur.pop_back();
            }
        };

        if (shard == 0) {
            ++local;
            fn(0, cur, Rat(0));  // the empty design, always feasible
        }
        // Designs whose smallest edge is `seed` stay within one shard.
        for (int seed = shard; seed < ecount; seed += shards) {
            if (tracker.marginal(seed) > inst.budget) continue;
            cur.push_back(seed);
            tracker.add(seed);
            ++local;
            fn(shard, cur, tracker.cost);
            extend(seed + 1);
            tracker.remove(seed);
            cur.pop_back();
        }
        return local;
    };

    if (shards == 1) return run_shard(0);

    std::vector<long long> counts(static_cast<size_t>(shards), 0);
    std::vector<std::exception_ptr> errors(static_cast<size_t>(shards));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(shards));
    for (int shard = 0; shard < shards; ++shard) {
        pool.emplace_back([&, shard] {
            try {
                counts[static_cast<size_t>(shard)] = run_shard(shard);
            } catch (...) {
                errors[static_cast<size_t>(shard)] = std::current_exception();
            }
        });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& err : errors)
        if (err) std::rethrow_exception(err);

    long long total = 0;
    for (long long c : counts) total += c;
    return total;
}

namespace {

ObjectiveVector evaluate_design(const Instance& inst, const Subgraph& s,
                                const std::optional<AccessParams>& access) {
    return access ? eval_access_objectives(inst, s, *access)
                  : eval_objectives(inst, s);
}

/// Primary and tie-break values of a design under a criterion.  Every kind
/// breaks primary ties by the mean, except the Chebyshev blend whose
/// second stage is the convex blend.
std::pair<Rat, Rat> criterion_values(const Criterion& crit,
                                     const ObjectiveVector& obj) {
    switch (crit.kind) {
        case CriterionKind::median:
            return {obj.mean, obj.mean};
        case CriterionKind::center:
        case CriterionKind::lex_centdian:
            return {obj.worst, obj.mean};
        case CriterionKind::weighted_center:
            return {obj.weighted_worst, obj.mean};
        case CriterionKind::centdian:
            return {eval_centdian(obj, crit.lambda), obj.mean};
        case CriterionKind::gen_center:
        case CriterionKind::restricted_gen_center:
            return {eval_equity_gap(obj), obj.mean};
        case CriterionKind::weighted_gen_center:
            return {eval_weighted_equity_gap(obj), obj.mean};
        case CriterionKind::max_centdian:
            return {eval_chebyshev(obj, crit.lambda),
                    eval_centdian(obj, crit.lambda)};
    }
    throw std::logic_error("unknown criterion kind");
}

bool lexicographic_kind(CriterionKind kind) {
    return kind == CriterionKind::lex_centdian ||
           kind == CriterionKind::max_centdian;
}

/// Running optimum under the full deterministic order: criterion value,
/// then tie-break value, then canonical edge order.
struct Best {
    bool has = false;
    Rat v1, v2;
    Subgraph edges;
    ObjectiveVector obj;

    void offer(const Rat& a, const Rat& b, const Subgraph& s,
               const ObjectiveVector& o) {
        if (has) {
            if (v1 < a) return;
            if (a == v1) {
                if (v2 < b) return;
                if (b == v2 && !canonical_less(s, edges)) return;
            }
        }
        has = true;
        v1 = a;
        v2 = b;
        edges = s;
        obj = o;
    }

    void merge(const Best& o) {
        if (o.has) offer(o.v1, o.v2, o.edges, o.obj);
    }
};

void validate_criterion(const Criterion& crit, Domain effective) {
    switch (crit.kind) {
        case CriterionKind::centdian:
            if (crit.lambda.sign() < 0)
                throw ValidationError("lambda must be nonnegative");
            if (crit.lambda > Rat(1) && effective != Domain::pareto_objective)
                throw ValidationError(
                    "lambda above 1 rewards designs whose mean exceeds their "
                    "worst case; it is only meaningful over the "
                    "pareto-objective domain");
            break;
        case CriterionKind::max_centdian:
            if (crit.lambda.sign() <= 0 || crit.lambda >= Rat(1))
                throw ValidationError(
                    "max-centdian requires lambda strictly between 0 and 1");
            break;
        case CriterionKind::restricted_gen_center:
            if (effective != Domain::pareto_objective)
                throw ValidationError(
                    "restricted-gen-center is defined over the "
                    "pareto-objective domain only");
            break;
        default:
            break;
    }
}

Domain resolve_domain(const Criterion& crit) {
    if (crit.domain != Domain::automatic) return crit.domain;
    switch (crit.kind) {
        case CriterionKind::gen_center:
        case CriterionKind::weighted_gen_center:
            return Domain::pareto_served;
        case CriterionKind::restricted_gen_center:
            return Domain::pareto_objective;
        default:
            return Domain::all_feasible;
    }
}

/// Criteria whose (v1, v2) pair can only go down when edges are added;
/// exactly these admit the completion-relaxation bound.  The access model
/// is excluded: bringing an endpoint onto the network forfeits its walking
/// options, which can lengthen trips.
bool bound_searchable(const Criterion& crit, const SolveOptions& opts) {
    if (opts.access) return false;
    switch (crit.kind) {
        case CriterionKind::median:
        case CriterionKind::center:
        case CriterionKind::lex_centdian:
        case CriterionKind::max_centdian:
            return true;
        case CriterionKind::centdian:
            return crit.lambda <= Rat(1);
        default:
            return false;
    }
}

Solution finish(const Criterion& crit, const Best& best, Domain dom,
                SearchMode mode, long long candidates) {
    if (!best.has) throw std::logic_error("no feasible design encountered");
    Solution sol;
    sol.edges = best.edges;
    sol.objectives = best.obj;
    sol.value = best.v1;
    if (lexicographic_kind(crit.kind)) sol.secondary = best.v2;
    sol.domain = dom;
    sol.mode = mode;
    sol.candidates = candidates;
    return sol;
}

/// Depth-first search over canonical prefixes with an admissible pruning
/// bound: a node's relaxation (the node plus every still-affordable edge)
/// evaluates to a value no worse than any feasible completion, so subtrees
/// whose relaxation cannot strictly beat the incumbent are dropped whole.
struct BoundedSearch {
    const Instance& inst;
    const Criterion& crit;
    const std::optional<Rat>& mean_bound;
    CostTracker tracker;
    std::vector<int> costed;  // edges that can carry a positive marginal cost
    Subgraph cur;
    Best incumbent;
    long long visited = 0;

    BoundedSearch(const Instance& inst, const Criterion& crit,
                  const std::optional<Rat>& mean_bound)
        : inst(inst), crit(crit), mean_bound(mean_bound), tracker(inst) {
        // An edge with zero build cost and zero activation cost at both ends
        // never consumes budget, and adding edges never worsens any of the
        // criteria this search admits, so some optimal design contains every
        // such edge.  Fixing them up front shrinks the tree to the costed
        // edges (dense zero-cost layers would otherwise blow it up).
        for (size_t ei = 0; ei < inst.edges.size(); ++ei) {
            auto [u, v] = tracker.ends[ei];
            bool free_edge = inst.edges[ei].c.sign() == 0 &&
                             inst.nodes[static_cast<size_t>(u)].b.sign() == 0 &&
                             inst.nodes[static_cast<size_t>(v)].b.sign() == 0;
            if (free_edge) {
                cur.push_back(static_cast<int>(ei));
                tracker.add(static_cast<int>(ei));
            } else {
                costed.push_back(static_cast<int>(ei));
            }
        }
    }

    void consider(const ObjectiveVector& obj) {
        if (mean_bound && obj.mean > *mean_bound) return;
        auto [v1, v2] = criterion_values(crit, obj);
        // First strictly-better design wins; exact ties keep the incumbent,
        // so the representative follows search order rather than canonical
        // order (the optimal value and objectives are unaffected).
        if (!incumbent.has || v1 < incumbent.v1 ||
            (v1 == incumbent.v1 && v2 < incumbent.v2)) {
            incumbent.has = true;
            incumbent.v1 = v1;
            incumbent.v2 = v2;
            incumbent.edges = cur;
            std::sort(incumbent.edges.begin(), incumbent.edges.end());
            incumbent.obj = obj;
        }
    }

    void dfs(int pos) {
        ++visited;
        consider(eval_objectives(inst, cur));

        const int csize = static_cast<int>(costed.size());
        std::vector<int> affordable;
        for (int p = pos; p < csize; ++p)
            if (tracker.cost + tracker.marginal(costed[static_cast<size_t>(p)]) <=
                inst.budget)
                affordable.push_back(p);
        if (affordable.empty()) return;

        Subgraph relaxed = cur;
        for (int p : affordable) relaxed.push_back(costed[static_cast<size_t>(p)]);
        ObjectiveVector robj = eval_objectives(inst, relaxed);
        if (mean_bound && robj.mean > *mean_bound) return;
        if (incumbent.has) {
            auto [l1, l2] = criterion_values(crit, robj);
            bool can_beat = l1 < incumbent.v1 ||
                            (l1 == incumbent.v1 && l2 < incumbent.v2);
            if (!can_beat) return;
        }
        for (int p : affordable) {
            int ei = costed[static_cast<size_t>(p)];
            cur.push_back(ei);
            tracker.add(ei);
            dfs(p + 1);
            tracker.remove(ei);
            cur.pop_back();
        }
    }
};

Solution solve_over_all(const Instance& inst, const Criterion& crit,
                        const std::optional<Rat>& mean_bound,
                        const SolveOptions& opts) {
    const size_t ecount = inst.edges.size();
    if (ecount <= static_cast<size_t>(opts.cap) || !opts.force) {
        // Exhaustive path (beyond the cap this throws the cap refusal).
        const size_t shard_slots = static_cast<size_t>(std::max(1, opts.workers));
        std::vector<Best> bests(shard_slots);
        long long count = for_each_feasible_sharded(
            inst, opts.cap, opts.force, opts.workers,
            [&](int shard, const Subgraph& s, const Rat&) {
                ObjectiveVector obj = evaluate_design(inst, s, opts.access);
                if (mean_bound && obj.mean > *mean_bound) return;
                auto [v1, v2] = criterion_values(crit, obj);
                bests[static_cast<size_t>(shard)].offer(v1, v2, s, obj);
            });
        Best total;
        for (const Best& b : bests) total.merge(b);
        return finish(crit, total, Domain::all_feasible, SearchMode::exhaustive,
                      count);
    }
    if (!bound_searchable(crit, opts))
        throw ValidationError(
            std::string("criterion ") + criterion_name(crit.kind) +
            " cannot be searched beyond the cap: it admits no sound "
            "completion bound, and exhaustive search was refused");
    BoundedSearch search(inst, crit, mean_bound);
    search.dfs(0);
    return finish(crit, search.incumbent, Domain::all_feasible,
                  SearchMode::branch_and_bound, search.visited);
}

Solution solve_over_frontier(const Instance& inst, const Criterion& crit,
                             Domain dom, const SolveOptions& opts) {
    Best best;
    long long candidates = 0;
    if (dom == Domain::pareto_served) {
        ServedParetoSet po = compute_po(inst, opts);
        candidates = po.candidates;
        for (const ServedParetoEntry& entry : po.entries) {
            // Designs in one entry share their served vector, hence their
            // objectives; the canonical-first design represents them all.
            ObjectiveVector obj = objectives_from_served(inst, entry.served);
            auto [v1, v2] = criterion_values(crit, obj);
            best.offer(v1, v2, entry.designs.front(), obj);
        }
    } else {
        ObjectiveFrontier front = compute_po2(inst, opts);
        candidates = front.candidates;
        for (const FrontierPoint& point : front.points) {
            for (const Subgraph& design : point.designs) {
                ObjectiveVector obj = evaluate_design(inst, design, opts.access);
                auto [v1, v2] = criterion_values(crit, obj);
                best.offer(v1, v2, design, obj);
            }
        }
    }
    return finish(crit, best, dom, SearchMode::exhaustive, candidates);
}

void validate_options(const SolveOptions& opts) {
    if (opts.workers < 1) throw ValidationError("workers must be at least 1");
    if (opts.cap < 0) throw ValidationError("cap must be nonnegative");
    if (opts.access) opts.access->validate();
}

}  // namespace

Solution solve(const Instance& inst, const Criterion& crit,
               const SolveOptions& opts) {
    inst.validate();
    validate_options(opts);
    Domain dom = resolve_domain(crit);
    validate_criterion(crit, dom);
    if (dom == Domain::all_feasible)
        return solve_over_all(inst, crit, std::nullopt, opts);
    return solve_over_frontier(inst, crit, dom, opts);
}

Solution solve_lex_centdian(const Instance& inst, const SolveOptions& opts) {
    return solve(inst, Criterion{CriterionKind::lex_centdian, Rat(0),
                                 Domain::automatic},
                 opts);
}

Solution solve_max_centdian(const Instance& inst, const Rat& lambda,
                            const SolveOptions& opts) {
    return solve(inst, Criterion{CriterionKind::max_centdian, lambda,
                                 Domain::automatic},
                 opts);
}

Solution solve_with_efficiency(const Instance& inst, const Criterion& crit,
                               const Rat& delta, const SolveOptions& opts) {
    inst.validate();
    validate_options(opts);
    if (delta.sign() < 0) throw ValidationError("delta must be nonnegative");
    if (crit.domain != Domain::automatic && crit.domain != Domain::all_feasible)
        throw ValidationError(
            "efficiency-constrained solving always searches all feasible "
            "designs");
    Criterion constrained = crit;
    constrained.domain = Domain::all_feasible;
    validate_criterion(constrained, Domain::all_feasible);

    Criterion median{CriterionKind::median, Rat(0), Domain::all_feasible};
    Solution best_mean = solve(inst, median, opts);
    std::optional<Rat> bound =
        (Rat(1) + delta) * best_mean.objectives.mean;
    return solve_over_all(inst, constrained, bound, opts);
}

}  // namespace centdian
