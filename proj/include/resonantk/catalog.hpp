#pragma once

// Named fullerene graphs with their expected resonance facts, and the
// R5/R6-capped nanotube family.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resonantk/plane_graph.hpp"

namespace resonantk {

struct ExpectedOrder {
  enum class Kind { all, exact, at_most };
  Kind kind = Kind::all;
  int value = 0;
};

struct ExpectedFacts {
  int vertices = 0;
  int hexagons = 0;
  std::optional<std::vector<std::int64_t>> sextet;  ///< descending coefficients
  bool tau_known = false;
  std::optional<int> tau;  ///< meaningful when tau_known; empty means no pentagonal ring
  ExpectedOrder order;
  std::optional<int> clar;
  bool three_resonant = false;
};

struct CatalogEntry {
  std::string name;
  FullereneGraph graph;
  ExpectedFacts expected;
  std::string provenance;
};

/// F20 F24 F28 F30 F32 F36_1 F36_2 F40 F48 C60 C70
const std::vector<std::string>& catalog_names();

/// Throws ValidationError for an unknown name.
CatalogEntry catalog_graph(std::string_view name);

enum class Cap { r5, r6 };

/// Two caps joined by hex_rings rings of hexagons; throws ValidationError
/// unless hex_rings >= 1.
FullereneGraph nanotube(Cap cap, int hex_rings);

/// Recomputes every expected fact; returns one message per mismatch.
std::vector<std::string> verify_entry(const CatalogEntry& entry);

}  // namespace resonantk
