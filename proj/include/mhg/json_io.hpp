#pragma once

#include <json.hpp>

#include "mhg/obstacles.hpp"

namespace mhg {

nlohmann::json to_json(const ParameterSet& p);
ParameterSet parameter_set_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EdgeLabelledGraph& g);
EdgeLabelledGraph graph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AdmissibilityVerdict& v);
nlohmann::json to_json(const AdmissibleRow& row);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const TraceEntry& t);
nlohmann::json to_json(const CompletionResult& r, bool include_trace);
nlohmann::json to_json(const VerifyReport& rep);
nlohmann::json to_json(const ObstacleCatalogue& cat);

} // namespace mhg
