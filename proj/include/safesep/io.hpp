#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "safesep/radius.hpp"
#include "safesep/sim.hpp"

namespace safesep {

/// Serializes a scenario to the unit-suffixed JSON schema. The round trip
/// config_from_json(config_to_json(c)) reproduces every field.
nlohmann::json config_to_json(const ScenarioConfig& config);

/// Parses the schema produced by config_to_json. Unknown or missing fields
/// throw std::invalid_argument with the field path in the message.
ScenarioConfig config_from_json(const nlohmann::json& j);

ScenarioConfig load_config(const std::string& path);
void save_config(const ScenarioConfig& config, const std::string& path);

nlohmann::json radius_report_to_json(const RadiusReport& report);
nlohmann::json verdict_to_json(const RunVerdict& verdict);

/// Human-readable verdict block, one fact per line.
std::string verdict_to_text(const RunVerdict& verdict);

/// Fixed-layout trace table: time, vehicle block, one block per obstacle,
/// run-wide minima, then the flag columns. Numbers use %.9g so identical
/// runs are byte-identical on any platform.
void write_trace_csv(std::ostream& out, const std::vector<TraceRecord>& trace);
void write_trace_csv(const std::string& path, const std::vector<TraceRecord>& trace);

}  // namespace safesep
