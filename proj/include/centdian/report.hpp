#ifndef CENTDIAN_REPORT_HPP
#define CENTDIAN_REPORT_HPP

#include <string>

#include <json.hpp>

#include "centdian/access.hpp"
#include "centdian/instance.hpp"
#include "centdian/length.hpp"
#include "centdian/pareto.hpp"
#include "centdian/solve.hpp"

namespace centdian {

/// JSON building blocks for deterministic machine output.  Every numeric
/// value carries exact numerator/denominator strings plus a 6-decimal
/// rendering; key order is fixed, so identical inputs produce byte-equal
/// documents.

nlohmann::ordered_json rat_json(const Rat& value);
nlohmann::ordered_json length_json(const Length& value);
nlohmann::ordered_json subgraph_json(const Subgraph& s);
nlohmann::ordered_json objectives_json(const ObjectiveVector& obj);
nlohmann::ordered_json solution_json(const Solution& sol);
nlohmann::ordered_json served_pareto_json(const ServedParetoSet& set);
nlohmann::ordered_json frontier_json(const ObjectiveFrontier& front,
                                     bool with_intervals);
nlohmann::ordered_json interval_json(const LambdaInterval& interval);
nlohmann::ordered_json instance_digest_json(const Instance& inst);

/// Per-pair access evaluation plus aggregate objectives for one design.
nlohmann::ordered_json access_report_json(const Instance& inst,
                                          const Subgraph& s,
                                          const AccessParams& params);

/// Envelope for all CLI output.  `wall_ms` is the only field allowed to
/// vary between identical runs and is therefore placed last and excluded
/// from any byte-comparison contract.
nlohmann::ordered_json run_report(const std::string& command,
                                  const Instance& inst,
                                  nlohmann::ordered_json parameters,
                                  nlohmann::ordered_json result,
                                  long long wall_ms);

}  // namespace centdian

#endif  // CENTDIAN_REPORT_HPP
