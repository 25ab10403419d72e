// Acceptance gate: one test case per published criterion, each printing a
// single PASS/FAIL line.  Checks are non-fatal so every criterion reports.

#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <utility>
#include <vector>

#include "centdian/access.hpp"
#include "centdian/graph.hpp"
#include "centdian/objectives.hpp"
#include "centdian/pareto.hpp"
#include "centdian/reductions.hpp"
#include "centdian/solve.hpp"

#include "support/fixtures.hpp"
#include "support/random_instances.hpp"

using namespace centdian;
using namespace centdian_tests;

namespace {

struct Reporter {
    const char* label;
    bool ok = true;
    explicit Reporter(const char* l) : label(l) {}
    ~Reporter() {
        std::printf("[acceptance] %s: %s\n", label, ok ? "PASS" : "FAIL");
        std::fflush(stdout);
    }
};

#define ACC_CHECK(rep, ...)                               \
    do {                                                  \
        const bool acc_ok_ = static_cast<bool>(__VA_ARGS__); \
        CHECK_MESSAGE(acc_ok_, #__VA_ARGS__);             \
        (rep).ok &= acc_ok_;                              \
    } while (0)

Criterion crit(CriterionKind kind, Rat lambda = Rat(0),
               Domain domain = Domain::automatic) {
    Criterion c;
    c.kind = kind;
    c.lambda = std::move(lambda);
    c.domain = domain;
    return c;
}

struct Point {
    Rat worst;
    Rat mean;
};

// Objective point of every feasible design, by plain enumeration.
std::vector<Point> all_points(const Instance& inst) {
    std::vector<Point> points;
    enumerate_feasible(inst, 24, false, [&](const Subgraph& s, const Rat&) {
        ObjectiveVector obj = eval_objectives(inst, s);
        points.push_back({obj.worst, obj.mean});
    });
    return points;
}

bool frontier_has_point(const ObjectiveFrontier& f, const Rat& w, const Rat& m) {
    for (const FrontierPoint& p : f.points)
        if (p.worst == w && p.mean == m) return true;
    return false;
}

bool po_has_design(const ServedParetoSet& set, const Subgraph& s) {
    for (const ServedParetoEntry& e : set.entries)
        for (const Subgraph& d : e.designs)
            if (d == s) return true;
    return false;
}

Rat abs_diff(const Rat& a, const Rat& b) { return a < b ? b - a : a - b; }

}  // namespace

TEST_CASE("criterion 1: center optimum and coverage limit, first example") {
    Reporter rep("criterion 1 (first example: center + coverage)");
    Instance inst = load_fixture("ex1.json");

    Solution center = solve(inst, crit(CriterionKind::center));
    ACC_CHECK(rep, center.value == R(92));

    // The empty design is feasible and attains the center optimum.
    ACC_CHECK(rep, design_cost(inst, {}) == R(0));
    ACC_CHECK(rep, eval_objectives(inst, {}).worst == R(92));

    ACC_CHECK(rep, eval_objectives(inst, {0, 3, 7}).mean == R(25600, 300));
    ACC_CHECK(rep, eval_objectives(inst, {0, 3, 6}).mean == R(24400, 300));

    // No feasible design covers all three pairs.
    int covering_all = 0;
    enumerate_feasible(inst, 24, false, [&](const Subgraph& s, const Rat&) {
        bool all = true;
        for (size_t i = 0; i < inst.pairs.size(); ++i) {
            Length d = shortest_path_length(inst, s, inst.pairs[i].s,
                                            inst.pairs[i].t);
            if (!(d <= Length::finite(inst.pairs[i].u))) all = false;
        }
        if (all) ++covering_all;
    });
    ACC_CHECK(rep, covering_all == 0);
}

TEST_CASE("criterion 2: median and center optima, second example") {
    Reporter rep("criterion 2 (second example: median + center)");
    Instance inst = load_fixture("ex2.json");

    Solution median = solve(inst, crit(CriterionKind::median));
    ACC_CHECK(rep, median.value == R(4010, 120));
    ACC_CHECK(rep, median.objectives.worst == R(92));
    ACC_CHECK(rep, median.edges == Subgraph{0, 2, 3});  // (1,2),(2,3),(2,4)

    Solution center = solve(inst, crit(CriterionKind::center));
    ACC_CHECK(rep, center.value == R(80));
    ACC_CHECK(rep, eval_objectives(inst, center.edges).weighted_worst == R(40));
}

TEST_CASE("criterion 3: served-vector dominance, third example") {
    Reporter rep("criterion 3 (third example: dominance)");
    Instance inst = load_fixture("ex3.json");
    const Subgraph s1 = {0, 3, 7};
    const Subgraph gc = {2, 5, 6, 7};

    ServedVector a = served_lengths(inst, s1);
    ServedVector b = served_lengths(inst, gc);
    ACC_CHECK(rep, a == ServedVector{R(30), R(20), R(40)});
    ACC_CHECK(rep, b == ServedVector{R(92), R(70), R(92)});
    bool dominates = true, strict = false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) dominates = false;
        if (a[i] < b[i]) strict = true;
    }
    ACC_CHECK(rep, dominates && strict);

    ServedParetoSet po = compute_po(inst);
    ACC_CHECK(rep, po_has_design(po, s1));
    ACC_CHECK(rep, !po_has_design(po, gc));

    ACC_CHECK(rep, eval_objectives(inst, s1).mean == R(3600, 105));
    ACC_CHECK(rep, eval_objectives(inst, gc).mean == R(9550, 105));
}

TEST_CASE("criterion 4: pareto sets and equity gaps, fourth example") {
    Reporter rep("criterion 4 (fourth example: pareto sets + equity gaps)");
    Instance inst = load_fixture("ex4.json");

    ServedParetoSet po = compute_po(inst);
    for (const Subgraph& s :
         {Subgraph{0, 1, 2}, Subgraph{0, 1, 3}, Subgraph{0, 2, 3},
          Subgraph{1, 2, 3}}) {
        ACC_CHECK(rep, po_has_design(po, s));
    }

    ObjectiveFrontier po2 = compute_po2(inst);
    ACC_CHECK(rep, po2.points.size() == 1);
    ACC_CHECK(rep, !po2.points.empty() &&
                       !po2.points.front().designs.empty() &&
                       po2.points.front().designs.front() == Subgraph{0, 1, 3});

    Solution restricted = solve(inst, crit(CriterionKind::restricted_gen_center));
    ACC_CHECK(rep, restricted.edges == Subgraph{0, 1, 3});

    Solution gen = solve(inst, crit(CriterionKind::gen_center));
    ACC_CHECK(rep, gen.edges == Subgraph{1, 2, 3});
    ACC_CHECK(rep, gen.value == R(30) - R(2300, 130));

    ACC_CHECK(rep, eval_objectives(inst, {0, 1, 3}).mean == R(1700, 130));
}

TEST_CASE("criterion 5: budget-70 frontier, unique center, and blend grid") {
    Reporter rep("criterion 5 (fifth example: frontier + blend grid)");
    Instance inst = load_fixture("ex5.json");

    ObjectiveFrontier po2 = compute_po2(inst);
    ACC_CHECK(rep, po2.points.size() == 3);
    ACC_CHECK(rep, frontier_has_point(po2, R(92), R(2460, 115)));
    ACC_CHECK(rep, frontier_has_point(po2, R(80), R(6500, 115)));
    ACC_CHECK(rep, frontier_has_point(po2, R(70), R(7500, 115)));

    // The center optimum is attained by exactly one design.
    int worst70 = 0;
    enumerate_feasible(inst, 24, false, [&](const Subgraph& s, const Rat&) {
        if (eval_objectives(inst, s).worst == R(70)) ++worst70;
    });
    ACC_CHECK(rep, worst70 == 1);

    // At every grid weight the middle design loses the convex blend to the
    // mean optimum or the worst-case optimum.
    ObjectiveVector mean_opt;  // (92, 2460/115)
    mean_opt.worst = R(92);
    mean_opt.mean = R(2460, 115);
    ObjectiveVector worst_opt;  // (70, 7500/115)
    worst_opt.worst = R(70);
    worst_opt.mean = R(7500, 115);
    ObjectiveVector middle;  // (80, 6500/115)
    middle.worst = R(80);
    middle.mean = R(6500, 115);
    int grid_losses = 0;
    for (int i = 0; i <= 999; ++i) {
        Rat lambda(i, 999);
        Rat best_pure = Rat::min(eval_centdian(mean_opt, lambda),
                                 eval_centdian(worst_opt, lambda));
        if (best_pure < eval_centdian(middle, lambda)) ++grid_losses;
    }
    ACC_CHECK(rep, grid_losses == 1000);
}

TEST_CASE("criterion 5: published weight window of the middle design") {
    Reporter rep("criterion 5 (fifth example: published weight window)");
    Instance inst = load_fixture("ex5.json");

    ObjectiveFrontier front = max_centdian_intervals(inst);
    const FrontierPoint* middle = nullptr;
    for (const FrontierPoint& p : front.points)
        if (p.worst == R(80)) middle = &p;
    ACC_CHECK(rep, middle != nullptr && middle->interval.has_value());
    if (middle && middle->interval) {
        std::printf("[acceptance]   computed window for (80, 6500/115): "
                    "%s%s, %s%s\n",
                    middle->interval->lo_closed ? "[" : "(",
                    middle->interval->lo.fraction_str().c_str(),
                    middle->interval->hi.fraction_str().c_str(),
                    middle->interval->hi_closed ? "]" : ")");
        ACC_CHECK(rep, middle->interval->lo == R(6500, 14550));
        ACC_CHECK(rep, middle->interval->hi == R(7500, 16700));
    }
}

TEST_CASE("criterion 6: budget-90 frontier and its weight breakpoints") {
    Reporter rep("criterion 6 (fifth example, larger budget: breakpoints)");
    Instance inst = load_fixture("ex5b.json");

    ObjectiveFrontier po2 = compute_po2(inst);
    ACC_CHECK(rep, po2.points.size() == 3);
    ACC_CHECK(rep, frontier_has_point(po2, R(70), R(7100, 115)));
    ACC_CHECK(rep, frontier_has_point(po2, R(80), R(6500, 115)));
    ACC_CHECK(rep, frontier_has_point(po2, R(92), R(2060, 115)));

    ObjectiveFrontier front = max_centdian_intervals(inst);
    ACC_CHECK(rep, front.points.size() == 3);
    if (front.points.size() == 3) {
        const LambdaInterval& low = *front.points.front().interval;   // worst 70
        const LambdaInterval& mid = *front.points[1].interval;        // worst 80
        const LambdaInterval& high = *front.points.back().interval;   // worst 92

        // Adjacent windows share their breakpoints exactly.
        ACC_CHECK(rep, high.hi == mid.lo);
        ACC_CHECK(rep, mid.hi == low.lo);
        ACC_CHECK(rep, high.hi == R(325, 854));
        ACC_CHECK(rep, mid.hi == R(71, 163));

        // Published 4-decimal renderings hold within 5e-3.
        Rat tol(5, 1000);
        ACC_CHECK(rep, abs_diff(high.hi, R(3805, 10000)) <= tol);
        ACC_CHECK(rep, abs_diff(mid.hi, R(4355, 10000)) <= tol);
        std::printf("[acceptance]   computed breakpoints: %s (~%s), %s (~%s)\n",
                    high.hi.fraction_str().c_str(),
                    high.hi.decimal().c_str(),
                    mid.hi.fraction_str().c_str(),
                    mid.hi.decimal().c_str());
    }
}

TEST_CASE("criterion 7: walk-access trips on the transit network") {
    Reporter rep("criterion 7 (transit network: walk-access trips)");
    Instance inst = load_fixture("metro.json");
    const Subgraph thick = {0, 1, 2, 3};
    AccessParams params;
    params.k = R(35);
    params.beta = R(2);

    ACC_CHECK(rep, extended_distance(inst, thick, 0, params) ==
                       Length::unreachable());
    ACC_CHECK(rep, extended_distance(inst, thick, 1, params) ==
                       Length::finite(R(75)));
    ACC_CHECK(rep, extended_distance(inst, thick, 2, params) ==
                       Length::finite(R(76)));
    ACC_CHECK(rep, extended_distance(inst, thick, 3, params) ==
                       Length::finite(R(57)));

    ACC_CHECK(rep, !access_served_length(inst, thick, 0, params).covered);
    ACC_CHECK(rep, !access_served_length(inst, thick, 1, params).covered);
    ACC_CHECK(rep, access_served_length(inst, thick, 2, params).covered);
    ACC_CHECK(rep, access_served_length(inst, thick, 3, params).covered);

    ACC_CHECK(rep, access_served_lengths(inst, thick, params) ==
                       ServedVector{R(70), R(70), R(76), R(57)});

    AccessParams nearest = params;
    nearest.access_rule = AccessRule::nearest;
    bool same = true;
    for (int i = 0; i < 4; ++i)
        same = same && extended_distance(inst, thick, i, nearest) ==
                           extended_distance(inst, thick, i, params);
    ACC_CHECK(rep, same);
}

TEST_CASE("criterion 8: randomized structural suites") {
    Reporter rep("criterion 8 (randomized structural suites)");
    constexpr int kInstances = 200;

    // (a) Every convex-blend minimizer with weight in (0,1) lies on the
    // (worst, mean) frontier.
    {
        Rng rng(101);
        int violations = 0;
        for (int t = 0; t < kInstances; ++t) {
            Instance inst = random_instance(rng);
            Rat lambda = random_lambda(rng);
            Solution sol = solve(inst, crit(CriterionKind::centdian, lambda));
            if (!frontier_has_point(compute_po2(inst), sol.objectives.worst,
                                    sol.objectives.mean))
                ++violations;
        }
        std::printf("[acceptance]   suite (a): %d instances, %d violations\n",
                    kInstances, violations);
        ACC_CHECK(rep, violations == 0);
    }

    // (b) Two-stage optimum, frontier equity gap, and the weight-2 blend over
    // the frontier share one objective point.
    {
        Rng rng(102);
        int violations = 0;
        for (int t = 0; t < kInstances; ++t) {
            Instance inst = random_instance(rng);
            Solution lex = solve_lex_centdian(inst);
            Solution gap =
                solve(inst, crit(CriterionKind::restricted_gen_center));
            Solution two = solve(inst, crit(CriterionKind::centdian, R(2),
                                            Domain::pareto_objective));
            bool same_point =
                lex.objectives.worst == gap.objectives.worst &&
                lex.objectives.mean == gap.objectives.mean &&
                lex.objectives.worst == two.objectives.worst &&
                lex.objectives.mean == two.objectives.mean;
            if (!same_point) ++violations;
        }
        std::printf("[acceptance]   suite (b): %d instances, %d violations\n",
                    kInstances, violations);
        ACC_CHECK(rep, violations == 0);
    }

    // (c) On random trees the frontier is claimed to hold at most two points:
    // the two-stage optimum and the mean optimum.
    {
        Rng rng(103);
        int violations = 0;
        int first_violation = -1;
        for (int t = 0; t < kInstances; ++t) {
            Instance inst = random_tree(rng);
            std::vector<Point> pts = all_points(inst);
            Rat best_worst = pts.front().worst, mean_at_worst = pts.front().mean;
            Rat best_mean = pts.front().mean, worst_at_mean = pts.front().worst;
            for (const Point& p : pts) {
                if (p.worst < best_worst ||
                    (p.worst == best_worst && p.mean < mean_at_worst)) {
                    best_worst = p.worst;
                    mean_at_worst = p.mean;
                }
                if (p.mean < best_mean ||
                    (p.mean == best_mean && p.worst < worst_at_mean)) {
                    best_mean = p.mean;
                    worst_at_mean = p.worst;
                }
            }
            std::vector<Point> expected;
            expected.push_back({best_worst, mean_at_worst});
            if (worst_at_mean != best_worst || best_mean != mean_at_worst)
                expected.push_back({worst_at_mean, best_mean});

            ObjectiveFrontier po2 = compute_po2(inst);
            bool match = po2.points.size() == expected.size();
            for (size_t i = 0; match && i < expected.size(); ++i)
                match = po2.points[i].worst == expected[i].worst &&
                        po2.points[i].mean == expected[i].mean;
            if (!match) {
                ++violations;
                if (first_violation < 0) first_violation = t;
            }
        }
        std::printf(
            "[acceptance]   suite (c): %d instances, %d violations"
            " (first at draw %d)\n",
            kInstances, violations, first_violation);
        ACC_CHECK(rep, violations == 0);
    }

    // (d) Every Chebyshev-lex winner lies on the frontier.
    {
        Rng rng(104);
        int violations = 0;
        for (int t = 0; t < kInstances; ++t) {
            Instance inst = random_instance(rng);
            Rat lambda = random_lambda(rng);
            Solution sol = solve_max_centdian(inst, lambda);
            if (!frontier_has_point(compute_po2(inst), sol.objectives.worst,
                                    sol.objectives.mean))
                ++violations;
        }
        std::printf("[acceptance]   suite (d): %d instances, %d violations\n",
                    kInstances, violations);
        ACC_CHECK(rep, violations == 0);
    }

    // (e) Each frontier point attains the Chebyshev-lex minimum at its anchor
    // weight mean/(worst+mean).
    {
        Rng rng(105);
        int violations = 0;
        for (int t = 0; t < kInstances; ++t) {
            Instance inst = random_instance(rng);
            std::vector<Point> pts = all_points(inst);
            ObjectiveFrontier po2 = compute_po2(inst);
            for (const FrontierPoint& p : po2.points) {
                Rat denom = p.worst + p.mean;
                if (denom.sign() == 0) continue;
                Rat anchor = p.mean / denom;
                Rat one_minus = Rat(1) - anchor;

                Rat cheb_here = Rat::max(anchor * p.worst, one_minus * p.mean);
                Rat blend_here = anchor * p.worst + one_minus * p.mean;
                bool first = true;
                Rat best_cheb, best_blend;
                for (const Point& q : pts) {
                    Rat cheb = Rat::max(anchor * q.worst, one_minus * q.mean);
                    Rat blend = anchor * q.worst + one_minus * q.mean;
                    if (first || cheb < best_cheb ||
                        (cheb == best_cheb && blend < best_blend)) {
                        best_cheb = cheb;
                        best_blend = blend;
                        first = false;
                    }
                }
                if (!(cheb_here == best_cheb && blend_here == best_blend))
                    ++violations;
            }
        }
        std::printf("[acceptance]   suite (e): %d instances, %d violations\n",
                    kInstances, violations);
        ACC_CHECK(rep, violations == 0);
    }

    // (f) The objective frontier's designs all carry nondominated served
    // vectors.
    {
        Rng rng(106);
        int violations = 0;
        for (int t = 0; t < kInstances; ++t) {
            if (!po2_subset_po(random_instance(rng))) ++violations;
        }
        std::printf("[acceptance]   suite (f): %d instances, %d violations\n",
                    kInstances, violations);
        ACC_CHECK(rep, violations == 0);
    }

    // (g) Cost-pruned enumeration equals the plain power-set scan.
    {
        Rng rng(107);
        int violations = 0;
        for (int t = 0; t < kInstances; ++t) {
            Instance inst = random_instance(rng);
            std::vector<Subgraph> got;
            enumerate_feasible(inst, 24, false,
                               [&](const Subgraph& s, const Rat&) {
                                   got.push_back(s);
                               });
            if (got != naive_feasible(inst)) ++violations;
        }
        std::printf("[acceptance]   suite (g): %d instances, %d violations\n",
                    kInstances, violations);
        ACC_CHECK(rep, violations == 0);
    }
}

TEST_CASE("criterion 9: facility reductions agree with brute force") {
    Reporter rep("criterion 9 (facility reductions vs brute force)");
    Rng rng(901);
    int median_misses = 0, center_misses = 0;
    for (int trial = 0; trial < 50; ++trial) {
        long n = pick(rng, 2, 8);
        std::vector<std::vector<Rat>> dist(
            static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n)));
        for (long i = 0; i < n; ++i)
            for (long j = i + 1; j < n; ++j) {
                Rat v(pick(rng, 1, 25));
                dist[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
                dist[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
            }
        int p = static_cast<int>(pick(rng, 1, std::min<long>(3, n)));
        PFacilityInput input(dist, p);

        SolveOptions opts;
        opts.cap = 0;  // the zero-cost layer makes pruned search the only
        opts.force = true;  // sensible route here

        Solution med = solve(p_median_to_instance(input),
                             crit(CriterionKind::median), opts);
        if (med.value * Rat(n) != brute_force_p_median(input)) ++median_misses;

        Solution cen = solve(p_center_to_instance(input),
                             crit(CriterionKind::center), opts);
        if (cen.value != brute_force_p_center(input)) ++center_misses;
    }
    std::printf(
        "[acceptance]   reductions: 50 inputs, %d mean misses, %d worst "
        "misses\n",
        median_misses, center_misses);
    ACC_CHECK(rep, median_misses == 0);
    ACC_CHECK(rep, center_misses == 0);
}
