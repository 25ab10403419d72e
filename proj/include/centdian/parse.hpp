#ifndef CENTDIAN_PARSE_HPP
#define CENTDIAN_PARSE_HPP

#include <string>

#include <json.hpp>

#include "centdian/instance.hpp"
#include "centdian/reductions.hpp"

namespace centdian {

/// Instance document format (JSON object):
///   nodes:  [{id, b}]          edges: [{u, v, c, d}]
///   pairs:  [{s, t, u, g}]     budget: <amount>  XOR  alpha: <fraction>
/// Ids are JSON integers.  Amounts are JSON integers or exact strings
/// ("25.5", "7/2"); binary floats are rejected so no value is ever rounded
/// on the way in.  `alpha` scales the full network's construction cost.
Instance parse_instance(const nlohmann::json& doc);
Instance parse_instance_text(const std::string& text);
Instance load_instance(const std::string& path);

/// Emits a document that parse_instance reads back into an equal instance.
/// Integral amounts become JSON integers, everything else exact strings.
nlohmann::ordered_json instance_to_json(const Instance& inst);

/// p-facility document: {dist: square matrix, p: facility count}.
PFacilityInput parse_pfacility(const nlohmann::json& doc);
PFacilityInput load_pfacility(const std::string& path);

/// Shared exact-amount decoding (used by the CLI for lambda/delta too).
Rat parse_amount(const nlohmann::json& value, const std::string& where);

}  // namespace centdian

#endif  // CENTDIAN_PARSE_HPP
