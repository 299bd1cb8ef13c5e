#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sulsim/pass_sim.hpp"

namespace sulsim {

inline constexpr int kScenarioSchemaVersion = 1;

/// Parses a JSON scenario document. Keys mirror ScenarioConfig; any key left out takes
/// its default_scenario() value, unknown keys are rejected.
///
/// Throws ParseError for malformed JSON, VersionError when schema_version is missing
/// or not 1, and ConfigError (naming the field) for type or invariant violations.
ScenarioConfig parse_scenario(std::string_view text);

ScenarioConfig load_scenario(const std::filesystem::path& path);

/// Full document including every field; parse_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const ScenarioConfig& scenario);

void save_scenario(const ScenarioConfig& scenario, const std::filesystem::path& path);

}  // namespace sulsim
