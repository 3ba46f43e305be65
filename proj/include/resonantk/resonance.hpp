#pragma once

// Resonance of hexagon sets: sextet patterns, k-resonance order, the sextet
// polynomial, Clar and Fries numbers, and the three-hexagon obstruction G*.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "resonantk/matching.hpp"
#include "resonantk/plane_graph.hpp"

namespace resonantk {

struct PatternResult {
  bool resonant = false;
  /// Perfect matching of the host that alternates on every listed hexagon.
  std::optional<Matching> certificate;
};

/// Throws ValidationError if a listed face is not a hexagon or two listed
/// hexagons share a vertex.
PatternResult is_resonant_pattern(const FullereneGraph& f, std::span<const FaceId> hexagons);

/// Visits the independent sets of size k of the hexagon "share a vertex"
/// graph in lexicographic order of sorted face ids. Return false from visit
/// to stop early.
void for_each_disjoint_hexagon_set(const FullereneGraph& f, int k,
                                   const std::function<bool(std::span<const FaceId>)>& visit);
std::vector<std::vector<FaceId>> disjoint_hexagon_sets(const FullereneGraph& f, int k);

struct OrderReport {
  enum class Kind {
    exact,     ///< order is the largest k; failing_set has k+1 hexagons
    all,       ///< every independent hexagon set is resonant
    at_least,  ///< stopped at max_k with no failure found
  };
  Kind kind = Kind::all;
  int order = 0;
  std::vector<FaceId> failing_set;
  std::int64_t sets_tested = 0;

  std::string to_string() const;
};

struct OrderOptions {
  std::optional<std::int64_t> cap;  ///< maximum number of sets tested
  std::optional<int> max_k;         ///< stop after sets of this size
};

/// Largest k such that every set of at most k disjoint hexagons is a
/// resonant pattern. The failing set is the lexicographically least among
/// the smallest non-resonant sets.
OrderReport resonance_order(const FullereneGraph& f, const OrderOptions& options = {});

/// sigma(G,0..C(G)); coefficient i counts resonant patterns of i hexagons.
struct SextetPolynomial {
  std::vector<std::int64_t> coefficients;  ///< ascending powers

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  std::int64_t operator[](int i) const { return coefficients[static_cast<std::size_t>(i)]; }
  /// [a_d, ..., a_0]
  std::vector<std::int64_t> descending() const;
  std::string to_string() const;

  friend bool operator==(const SextetPolynomial&, const SextetPolynomial&) = default;
};

/// Tests every independent hexagon set individually.
SextetPolynomial sextet_polynomial(const FullereneGraph& f);

/// Number of independent hexagon sets of each size (no resonance test).
std::vector<std::int64_t> independent_hexagon_set_counts(const FullereneGraph& f);

int clar_number(const FullereneGraph& f);

/// Maximum number of alternating hexagons over all perfect matchings.
int fries_number(const FullereneGraph& f, std::int64_t cap = kDefaultPerfectMatchingCap);

/// A vertex adjacent to three pairwise disjoint hexagons that avoid it.
struct GStar {
  Vertex vertex = -1;
  std::array<FaceId, 3> hexagons{};
};

/// First G* by ascending vertex id.
std::optional<GStar> find_g_star(const FullereneGraph& f);

struct DichotomyRecord {
  FaceId hexagon = -1;
  bool central = false;
  bool complement_bipartite = false;
};

std::vector<DichotomyRecord> hexagon_dichotomy_report(const FullereneGraph& f);

}  // namespace resonantk
