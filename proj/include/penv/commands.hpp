#pragma once

#include "penv/report.hpp"
#include "penv/spec_io.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace penv {

struct CommandOptions {
  bool want_dot = false;
  // vaught
  std::optional<std::string> set;     // comma-separated point names
  std::optional<std::string> open_g;  // comma-separated element indices, or "all"
  std::string kind = "delta";         // delta | star
};

struct CommandResult {
  Report report;
  nlohmann::json data = nlohmann::json::object();
  std::vector<std::string> summary;  // human-readable lines
  std::string dot;                   // filled when want_dot
};

/// Runs one of: validate, globalize, orbits, vaught, selector, report.
/// Throws Error(UsageError) for an unknown command or bad option values.
CommandResult run_command(const std::string& command, const ActionSpec& spec,
                          const CommandOptions& options);

nlohmann::json to_json(const Report& report);
/// Deterministic document: sorted keys, canonical class representatives.
std::string render_json(const std::string& command, const ActionSpec& spec, const CommandResult& result);
std::string render_text(const std::string& command, const ActionSpec& spec, const CommandResult& result);

}  // namespace penv
