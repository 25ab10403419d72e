#ifndef CENTDIAN_TESTS_RANDOM_INSTANCES_HPP
#define CENTDIAN_TESTS_RANDOM_INSTANCES_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "centdian/instance.hpp"
#include "centdian/objectives.hpp"
#include "centdian/rational.hpp"

namespace centdian_tests {

// mt19937_64 emits the same stream everywhere; ranges are derived by plain
// modulo (not std::uniform_int_distribution, whose output is
// implementation-defined), so every generated instance is reproducible
// across standard libraries.
using Rng = std::mt19937_64;

inline long pick(Rng& rng, long lo, long hi) {
    return lo +
           static_cast<long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

template <typename T>
void shuffle_vec(Rng& rng, std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(pick(rng, 0, static_cast<long>(i) - 1));
        std::swap(v[i - 1], v[j]);
    }
}

inline centdian::Rat random_lambda(Rng& rng) {
    long den = pick(rng, 2, 50);
    long num = pick(rng, 1, den - 1);
    return centdian::Rat(num, den);
}

// Arbitrary small instance: 2-6 nodes, up to max_edges distinct edges
// (zero-cost and zero-length edges included on purpose), 1-4 demand pairs,
// budget drawn from [0, full build cost].
inline centdian::Instance random_instance(Rng& rng, int max_edges = 10) {
    using centdian::Rat;
    centdian::Instance inst;
    long n = pick(rng, 2, 6);
    long total_cost = 0;
    for (long id = 1; id <= n; ++id) {
        centdian::Node node;
        node.id = id;
        long b = pick(rng, 0, 1) ? pick(rng, 1, 5) : 0;
        node.b = Rat(b);
        total_cost += b;
        inst.nodes.push_back(node);
    }
    std::vector<std::pair<long, long>> slots;
    for (long a = 1; a <= n; ++a)
        for (long b = a + 1; b <= n; ++b) slots.push_back({a, b});
    shuffle_vec(rng, slots);
    long m = pick(rng, 1, std::min<long>(max_edges, static_cast<long>(slots.size())));
    for (long e = 0; e < m; ++e) {
        centdian::Edge edge;
        edge.u = slots[static_cast<size_t>(e)].first;
        edge.v = slots[static_cast<size_t>(e)].second;
        long c = pick(rng, 0, 12);
        edge.c = Rat(c);
        edge.d = Rat(pick(rng, 0, 15));
        total_cost += c;
        inst.edges.push_back(edge);
    }
    long npairs = pick(rng, 1, 4);
    for (long i = 0; i < npairs; ++i) {
        centdian::OdPair w;
        w.s = pick(rng, 1, n);
        do { w.t = pick(rng, 1, n); } while (w.t == w.s);
        w.u = Rat(pick(rng, 1, 40));
        w.g = Rat(pick(rng, 1, 5));
        inst.pairs.push_back(w);
    }
    inst.budget = Rat(pick(rng, 0, total_cost));
    inst.validate();
    return inst;
}

// Random spanning tree on 2-11 nodes (so at most 10 edges): node i >= 2
// hangs off a uniformly chosen earlier node.
inline centdian::Instance random_tree(Rng& rng) {
    using centdian::Rat;
    centdian::Instance inst;
    long n = pick(rng, 2, 11);
    long total_cost = 0;
    for (long id = 1; id <= n; ++id) {
        centdian::Node node;
        node.id = id;
        long b = pick(rng, 0, 1) ? pick(rng, 1, 5) : 0;
        node.b = Rat(b);
        total_cost += b;
        inst.nodes.push_back(node);
    }
    for (long id = 2; id <= n; ++id) {
        centdian::Edge edge;
        edge.u = pick(rng, 1, id - 1);
        edge.v = id;
        long c = pick(rng, 0, 12);
        edge.c = Rat(c);
        edge.d = Rat(pick(rng, 0, 15));
        total_cost += c;
        inst.edges.push_back(edge);
    }
    long npairs = pick(rng, 1, 4);
    for (long i = 0; i < npairs; ++i) {
        centdian::OdPair w;
        w.s = pick(rng, 1, n);
        do { w.t = pick(rng, 1, n); } while (w.t == w.s);
        w.u = Rat(pick(rng, 1, 40));
        w.g = Rat(pick(rng, 1, 5));
        inst.pairs.push_back(w);
    }
    inst.budget = Rat(pick(rng, 0, total_cost));
    inst.validate();
    return inst;
}

// Oracle: every feasible design by bitmask scan, with its own cost
// computation, in canonical order.
inline std::vector<centdian::Subgraph> naive_feasible(const centdian::Instance& inst) {
    using centdian::Rat;
    std::vector<centdian::Subgraph> out;
    size_t m = inst.edges.size();
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
        centdian::Subgraph s;
        std::vector<char> touched(inst.nodes.size(), 0);
        Rat cost;
        for (size_t e = 0; e < m; ++e) {
            if (!(mask & (1ul << e))) continue;
            s.push_back(static_cast<int>(e));
            const centdian::Edge& edge = inst.edges[e];
            cost += edge.c;
            touched[static_cast<size_t>(inst.node_index(edge.u))] = 1;
            touched[static_cast<size_t>(inst.node_index(edge.v))] = 1;
        }
        for (size_t i = 0; i < inst.nodes.size(); ++i)
            if (touched[i]) cost += inst.nodes[i].b;
        if (cost <= inst.budget) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), centdian::canonical_less);
    return out;
}

// Oracle: served lengths through Floyd-Warshall over the built edges only.
inline centdian::ServedVector naive_served(const centdian::Instance& inst,
                                           const centdian::Subgraph& s) {
    using centdian::Rat;
    size_t n = inst.nodes.size();
    std::vector<char> act(n, 0);
    for (int ei : s) {
        const centdian::Edge& e = inst.edges[static_cast<size_t>(ei)];
        act[static_cast<size_t>(inst.node_index(e.u))] = 1;
        act[static_cast<size_t>(inst.node_index(e.v))] = 1;
    }
    std::vector<std::vector<std::optional<Rat>>> d(
        n, std::vector<std::optional<Rat>>(n));
    for (size_t i = 0; i < n; ++i)
        if (act[i]) d[i][i] = Rat(0);
    for (int ei : s) {
        const centdian::Edge& e = inst.edges[static_cast<size_t>(ei)];
        size_t a = static_cast<size_t>(inst.node_index(e.u));
        size_t b = static_cast<size_t>(inst.node_index(e.v));
        if (!d[a][b] || e.d < *d[a][b]) {
            d[a][b] = e.d;
            d[b][a] = e.d;
        }
    }
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (d[i][k] && d[k][j]) {
                    Rat via = *d[i][k] + *d[k][j];
                    if (!d[i][j] || via < *d[i][j]) d[i][j] = via;
                }
    centdian::ServedVector served;
    for (const centdian::OdPair& w : inst.pairs) {
        size_t a = static_cast<size_t>(inst.node_index(w.s));
        size_t b = static_cast<size_t>(inst.node_index(w.t));
        if (d[a][b] && *d[a][b] < w.u) served.push_back(*d[a][b]);
        else served.push_back(w.u);
    }
    return served;
}

struct NaivePoint {
    centdian::Rat worst;
    centdian::Rat mean;
};

inline NaivePoint naive_point(const centdian::Instance& inst,
                              const centdian::ServedVector& served) {
    using centdian::Rat;
    NaivePoint p;
    Rat weighted;
    for (size_t i = 0; i < served.size(); ++i) {
        p.worst = Rat::max(p.worst, served[i]);
        weighted += inst.pairs[i].g * served[i];
    }
    p.mean = weighted / inst.total_demand();
    return p;
}

}  // namespace centdian_tests

#endif  // CENTDIAN_TESTS_RANDOM_INSTANCES_HPP
