#include "centdian/objectives.hpp"

#include <map>

#include "centdian/graph.hpp"

namespace centdian {

ServedVector served_lengths(const Instance& inst, const Subgraph& s) {
    SubnetworkView view(inst, s);

    // One shortest-path run per distinct origin, shared across its pairs.
    std::map<int, std::vector<Length>> by_origin;
    ServedVector served;
    served.reserve(inst.pairs.size());
    for (const OdPair& w : inst.pairs) {
        int si = inst.node_index(w.s);
        int ti = inst.node_index(w.t);
        auto it = by_origin.find(si);
        if (it == by_origin.end())
            it = by_origin.emplace(si, view.distances_from(si)).first;
        const Length& d = it->second[static_cast<size_t>(ti)];
        served.push_back(d.is_finite() ? Rat::min(d.value(), w.u) : w.u);
    }
    return served;
}

ObjectiveVector objectives_from_served(const Instance& inst,
                                       const ServedVector& served) {
    ObjectiveVector obj;
    Rat weighted_sum;
    Rat best_weighted;  // g * served of the current weighted-worst pair
    for (size_t i = 0; i < served.size(); ++i) {
        const Rat& g = inst.pairs[i].g;
        const Rat& ell = served[i];
        if (i == 0 || ell > obj.worst) obj.worst = ell;
        weighted_sum += g * ell;

        // Weighted-worst pair: maximize g * served; ties go to the larger
        // served length, then to the earlier pair in input order.
        Rat score = g * ell;
        bool take = obj.weighted_worst_pair < 0 || score > best_weighted ||
                    (score == best_weighted && ell > obj.weighted_worst);
        if (take) {
            best_weighted = score;
            obj.weighted_worst = ell;
            obj.weighted_worst_pair = static_cast<int>(i);
        }
    }
    obj.mean = weighted_sum / inst.total_demand();
    return obj;
}

ObjectiveVector eval_objectives(const Instance& inst, const Subgraph& s) {
    return objectives_from_served(inst, served_lengths(inst, s));
}

Rat eval_centdian(const ObjectiveVector& obj, const Rat& lambda) {
    if (lambda.sign() < 0)
        throw ValidationError("lambda must be nonnegative");
    return lambda * obj.worst + (Rat(1) - lambda) * obj.mean;
}

Rat eval_chebyshev(const ObjectiveVector& obj, const Rat& lambda) {
    if (lambda.sign() < 0 || lambda > Rat(1))
        throw ValidationError("lambda must lie in [0, 1]");
    return Rat::max(lambda * obj.worst, (Rat(1) - lambda) * obj.mean);
}

Rat eval_equity_gap(const ObjectiveVector& obj) { return obj.worst - obj.mean; }

Rat eval_weighted_equity_gap(const ObjectiveVector& obj) {
    return (obj.weighted_worst - obj.mean).abs();
}

}  // namespace centdian
