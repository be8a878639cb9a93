#pragma once

// JSON views of the library's reports. Big integers are decimal strings.

#include <json.hpp>

#include "dynramsey/cliques.hpp"
#include "dynramsey/metric.hpp"
#include "dynramsey/ramsey.hpp"
#include "dynramsey/sepset.hpp"

namespace dynramsey {

nlohmann::ordered_json to_json(const LatticeVector& v);
nlohmann::ordered_json to_json(const RamseyCertificate& certificate);
/// `{colors: [{index, v, order, witness}], overall_max, certificate, separation}`.
nlohmann::ordered_json to_json(const CliqueReport& report, const OppositeUpperBound& bound);
nlohmann::ordered_json to_json(const OppositeRamseyResult& result);
nlohmann::ordered_json to_json(const BoundsRecord& record);
nlohmann::ordered_json to_json(const SandwichReport& report);
nlohmann::ordered_json to_json(const SuperpolyReport& report);
nlohmann::ordered_json to_json(const ShiftCounterexample& found, const ShiftSystem& system, int n);
nlohmann::ordered_json to_json(const TorusCounterexample& found, const TorusSystem& system, int n);
nlohmann::ordered_json to_json(const ShiftRecoveryReport& report);

}  // namespace dynramsey
