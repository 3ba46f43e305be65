#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "resonantk/plane_graph.hpp"

namespace resonantk {

/// A set of vertex-disjoint edges over vertices 0..vertex_count()-1,
/// stored as a mate array.
class Matching {
 public:
  Matching() = default;
  explicit Matching(int vertex_count);
  /// Throws ValidationError if two edges share a vertex.
  static Matching from_edges(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const { return static_cast<int>(mate_.size()); }
  int size() const { return size_; }
  /// Partner of v, or -1 when v is exposed.
  Vertex mate(Vertex v) const { return mate_[v]; }
  bool contains(Vertex u, Vertex v) const { return mate_[u] == v; }
  bool covers(Vertex v) const { return mate_[v] >= 0; }
  bool is_perfect() const { return 2 * size_ == vertex_count(); }

  void add(Vertex u, Vertex v);
  void remove(Vertex u, Vertex v);

  /// Sorted edge list.
  std::vector<Edge> edges() const;
  /// True iff every edge of the matching is an edge of g.
  bool is_valid_in(const Graph& g) const;
  /// One `u-v` line per edge, sorted.
  std::string to_text() const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<Vertex> mate_;
  int size_ = 0;
};

/// Tutte obstruction: deleting `separator` leaves more odd
/// components than |separator|.
struct TutteWitness {
  std::vector<Vertex> separator;
  std::vector<std::vector<Vertex>> odd_components;
};

/// Maximum-cardinality matching (Edmonds' blossom algorithm). Deterministic:
/// vertices scanned in ascending order, neighbours in ascending order.
Matching maximum_matching(const Graph& g);

bool has_perfect_matching(const Graph& g);

/// True iff F minus the vertices of the given faces has a perfect matching.
/// The faces must be pairwise vertex-disjoint.
bool is_central(const FullereneGraph& f, std::span<const FaceId> faces);

/// Searches every S with |S| <= bound (by size, then lexicographically) for
/// C_o(g - S) > |S|. Absence within the bound proves nothing.
std::optional<TutteWitness> tutte_witness(const Graph& g, int bound = 4);

/// Whether the closed walk `cycle` (vertex sequence) alternates in and off m.
bool is_alternating(const Matching& m, std::span<const Vertex> cycle);

/// m xor E(cycle). Throws ValidationError when the cycle is not m-alternating.
Matching symmetric_difference(const Matching& m, std::span<const Vertex> cycle);

/// Faces whose boundary is m-alternating; m must be perfect.
std::vector<FaceId> alternating_faces(const FullereneGraph& f, const Matching& m);

inline constexpr std::int64_t kDefaultPerfectMatchingCap = 1'000'000;

/// kDefaultPerfectMatchingCap unless RESONANTK_PM_CAP is set.
std::int64_t perfect_matching_cap_from_env();

/// Calls visit on every perfect matching exactly once (branching on the
/// lowest exposed vertex, partners in ascending order). Returns the count.
/// Throws GuardExceeded once more than `cap` matchings have been produced.
std::int64_t for_each_perfect_matching(const Graph& g, std::int64_t cap,
                                       const std::function<void(const Matching&)>& visit);

std::vector<Matching> enumerate_perfect_matchings(const Graph& g, std::int64_t cap);

}  // namespace resonantk
