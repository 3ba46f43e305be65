#pragma once

// Whole-graph analysis record, serialised as JSON with sorted keys.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "resonantk/plane_graph.hpp"

namespace resonantk {

inline constexpr int kReportSchemaVersion = 1;

struct AnalysisOptions {
  bool fries = false;
  std::int64_t pm_cap = 1'000'000;
  std::optional<int> max_k;
  int max_ring_length = 12;
};

nlohmann::json analyze(const FullereneGraph& f, const AnalysisOptions& options = {});

/// Deterministic JSON text (sorted keys, two-space indent, trailing newline).
std::string to_json_text(const nlohmann::json& report);

/// Human-readable rendering of the same record, one "key: value" line per field.
std::string to_plain_text(const nlohmann::json& report);

}  // namespace resonantk
