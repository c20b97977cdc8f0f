#pragma once

#include <string>

#include "json.hpp"
#include "run_config.hpp"

namespace phasespace::cli {

enum class DistChoice { Wigner, Husimi, Characteristic };

DistChoice dist_choice_from_string(const std::string& name);
std::string to_string(DistChoice which);

/// Each command writes its outputs and a report under config.out and returns
/// the report; report["status"] is "PASS", "FAIL" or "SKIPPED".
nlohmann::json cmd_state(const RunConfig& config);
nlohmann::json cmd_dist(const RunConfig& config, DistChoice which);
nlohmann::json cmd_sample(const RunConfig& config);
nlohmann::json cmd_pointer(const RunConfig& config);
/// Runs every command above and aggregates their statuses.
nlohmann::json cmd_report(const RunConfig& config);

/// File name of the machine-readable report written by a subcommand.
std::string report_file(const std::string& command, const RunConfig& config, DistChoice which);

bool passed(const nlohmann::json& report);
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace phasespace::cli
