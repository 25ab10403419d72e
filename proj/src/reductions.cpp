#include "centdian/reductions.hpp"

#include <algorithm>
#include <functional>

namespace centdian {

PFacilityInput::PFacilityInput(std::vector<std::vector<Rat>> matrix, int p)
    : dist(std::move(matrix)), p(p) {
    const size_t n = dist.size();
    if (n == 0) throw ValidationError("distance matrix must be nonempty");
    for (size_t i = 0; i < n; ++i) {
        if (dist[i].size() != n)
            throw ValidationError("distance matrix must be square");
        if (dist[i][i].sign() != 0)
            throw ValidationError("distance matrix diagonal must be zero");
        for (size_t j = 0; j < n; ++j) {
            if (dist[i][j].sign() < 0)
                throw ValidationError("distances must be nonnegative");
            if (dist[i][j] != dist[j][i])
                throw ValidationError("distance matrix must be symmetric");
        }
    }
    if (p < 1 || static_cast<size_t>(p) > n)
        throw ValidationError("facility count p must lie in [1, point count]");

    // Metric closure (Floyd-Warshall): the zero-cost complete layer built
    // from these entries must not contain multi-hop shortcuts.
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Rat via = dist[i][k] + dist[k][j];
                if (via < dist[i][j]) dist[i][j] = via;
            }
}

Rat PFacilityInput::max_distance() const {
    Rat best;
    for (const std::vector<Rat>& row : dist)
        for (const Rat& d : row) best = Rat::max(best, d);
    return best;
}

namespace {

Instance build_reduced_instance(const PFacilityInput& input) {
    const long n = static_cast<long>(input.size());
    Instance inst;
    for (long i = 1; i <= n; ++i) inst.nodes.push_back({i, Rat(0)});
    const long sink = n + 1;
    inst.nodes.push_back({sink, Rat(0)});

    // Zero-cost complete layer among demand nodes first, then the paid
    // unit-cost zero-length links to the sink.
    for (long i = 1; i <= n; ++i)
        for (long j = i + 1; j <= n; ++j)
            inst.edges.push_back(
                {i, j, Rat(0),
                 input.dist[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]});
    for (long i = 1; i <= n; ++i)
        inst.edges.push_back({i, sink, Rat(1), Rat(0)});

    // A cap that can never bind: above twice the largest possible trip.
    Rat cap = Rat(1) + Rat(2) * Rat(n) * input.max_distance();
    for (long i = 1; i <= n; ++i) inst.pairs.push_back({i, sink, cap, Rat(1)});

    inst.budget = Rat(input.p);
    return inst;
}

void check_brute_force_guard(const PFacilityInput& input) {
    if (input.size() > 12)
        throw ValidationError(
            "brute-force oracle is limited to 12 demand points");
}

/// Applies `fn` to every p-subset of {0..n-1}, passing per-point assignment
/// costs min_{j in S} d_ij.
template <typename Fn>
void for_each_choice(const PFacilityInput& input, Fn&& fn) {
    const size_t n = input.size();
    std::vector<size_t> chosen;
    std::vector<Rat> assign(n);
    auto eval = [&] {
        for (size_t i = 0; i < n; ++i) {
            assign[i] = input.dist[i][chosen[0]];
            for (size_t c = 1; c < chosen.size(); ++c)
                assign[i] = Rat::min(assign[i], input.dist[i][chosen[c]]);
        }
        fn(assign);
    };
    std::function<void(size_t)> pick = [&](size_t from) {
        if (chosen.size() == static_cast<size_t>(input.p)) {
            eval();
            return;
        }
        for (size_t j = from; j < n; ++j) {
            chosen.push_back(j);
            pick(j + 1);
            chosen.pop_back();
        }
    };
    pick(0);
}

}  // namespace

Instance p_median_to_instance(const PFacilityInput& input) {
    return build_reduced_instance(input);
}

Instance p_center_to_instance(const PFacilityInput& input) {
    return build_reduced_instance(input);
}

Rat brute_force_p_median(const PFacilityInput& input) {
    check_brute_force_guard(input);
    bool first = true;
    Rat best;
    for_each_choice(input, [&](const std::vector<Rat>& assign) {
        Rat total;
        for (const Rat& a : assign) total += a;
        if (first || total < best) best = total;
        first = false;
    });
    return best;
}

Rat brute_force_p_center(const PFacilityInput& input) {
    check_brute_force_guard(input);
    bool first = true;
    Rat best;
    for_each_choice(input, [&](const std::vector<Rat>& assign) {
        Rat worst;
        for (const Rat& a : assign) worst = Rat::max(worst, a);
        if (first || worst < best) best = worst;
        first = false;
    });
    return best;
}

}  // namespace centdian
