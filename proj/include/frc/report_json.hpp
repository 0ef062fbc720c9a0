#pragma once

#include "json.hpp"

#include "frc/analysis.hpp"
#include "frc/code.hpp"
#include "frc/repair.hpp"
#include "frc/sweep.hpp"

// Stable-field-order JSON views of the reports. Indices stay 0-based.
namespace frc::json {

using Json = nlohmann::ordered_json;

Json to_json(const CodeProfile& p);
Json to_json(const IdentityReport& r);
Json to_json(const Coverage& c);
Json to_json(const CoverageProfile& p);
Json to_json(const GoodnessReport& r);
Json to_json(const StructuralReport& r);
Json to_json(const PrgMargin& m);
Json to_json(const RingPrediction& p);
Json to_json(const RepairPlan& plan);
Json to_json(const TableRow& row);
Json to_json(const AuditFinding& f);
Json to_json(const RelationReport& r);
Json to_json(const ConjectureInstance& c);

}  // namespace frc::json
