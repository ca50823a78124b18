#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prelam/completion.hpp"
#include "prelam/conditions.hpp"
#include "prelam/plane.hpp"

namespace prelam {

struct ParseError {
  std::string code;
  std::string message;
  int chord_index = -1;  // -1 when not tied to a chord record
};

struct ParseResult {
  std::optional<LamInstance> instance;  // present iff no parse errors
  std::vector<ParseError> errors;       // parse-level plus validation findings
  std::map<std::string, std::string> metadata;
  bool ok() const { return instance.has_value() && errors.empty(); }
};

/// Parses an instance document.  Rationals must be lowest-terms "p/q"
/// strings; malformed values are rejected, never normalized.  Validation
/// findings are carried into the error list.
ParseResult parse_instance(const std::string& text);

std::string serialize_instance(const LamInstance& instance,
                               const std::map<std::string, std::string>& metadata = {});

/// Map tables for transport: {"map": [{"from": "p/q", "to": "p/q"}, ...]}.
MapTable parse_map_table(const std::string& text);
std::string serialize_map_table(const MapTable& map);

std::string chord_name(const LamInstance& instance, const ChordRef& ref);

// Report rendering: human-readable text and a machine-readable document.
std::string report_text(const ValidationReport& report, const LamInstance& instance);
std::string report_text(const ConditionReport& report, const LamInstance& instance);
std::string report_text(const RealizationReport& report);
std::string report_json(const ValidationReport& report, const LamInstance& instance);
std::string report_json(const ConditionReport& report, const LamInstance& instance);
std::string report_json(const RealizationReport& report);

std::string plane_report_text(const LamInstance& instance, const CrossingSpace& space);
std::string plane_report_json(const LamInstance& instance, const CrossingSpace& space);

std::string completion_log_text(const CompletionResult& result);

}  // namespace prelam
