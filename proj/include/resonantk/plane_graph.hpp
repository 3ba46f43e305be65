#pragma once

// Cubic plane graphs given as rotation systems, their faces, and the small
// set of graph utilities (induced subgraphs, bipartiteness, plane-graph
// isomorphism codes) the rest of the library builds on.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace resonantk {

using Vertex = int;
using FaceId = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  /// Normalized so that u < v.
  static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  static Graph from_edges(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return edge_count_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Adds {u,v}; a no-op when the edge already exists. Self-loops are rejected.
  void add_edge(Vertex u, Vertex v);

  /// All edges, sorted.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  int edge_count_ = 0;
};

struct Face {
  std::vector<Vertex> boundary;  ///< starts at the face's least arc
  int size() const { return static_cast<int>(boundary.size()); }
  bool contains(Vertex v) const;
};

/// Faces of an embedding. Face ids are assigned in increasing order of the
/// lexicographically least arc (u,v) traced on each face.
class FaceSet {
 public:
  int size() const { return static_cast<int>(faces_.size()); }
  const Face& operator[](FaceId f) const { return faces_[f]; }
  auto begin() const { return faces_.begin(); }
  auto end() const { return faces_.end(); }

  /// The three faces around v, in the clockwise order of v's rotation
  /// (entry i is the face traced by arc (v, rotation(v)[i])).
  const std::array<FaceId, 3>& faces_at(Vertex v) const { return at_vertex_[v]; }

 private:
  friend class EmbeddedGraph;
  std::vector<Face> faces_;
  std::vector<std::array<FaceId, 3>> at_vertex_;
};

/// Byte string identifying an embedded graph up to relabeling and reflection.
using CanonicalCode = std::vector<std::uint8_t>;

/// Cubic, simple, connected graph embedded on the sphere. rotation(v) lists
/// the neighbours of v in clockwise order. Faces are traced once at
/// construction; the object is immutable afterwards.
class EmbeddedGraph {
 public:
  using Rotation = std::array<Vertex, 3>;

  /// Validates the rotation system; throws ValidationError naming the
  /// violated invariant.
  static EmbeddedGraph from_rotation(std::vector<Rotation> rotation);

  /// Builds the embedding whose faces are the given vertex cycles. The cycles
  /// may come in either direction; they are oriented consistently here.
  static EmbeddedGraph from_face_cycles(int vertex_count,
                                        const std::vector<std::vector<Vertex>>& cycles);

  int vertex_count() const { return static_cast<int>(rotation_.size()); }
  int edge_count() const { return 3 * vertex_count() / 2; }
  const Rotation& rotation(Vertex v) const { return rotation_[v]; }
  const std::vector<Rotation>& rotations() const { return rotation_; }

  /// Position (0..2) of u in rotation(v); -1 when u is not a neighbour.
  int position(Vertex v, Vertex u) const;
  bool adjacent(Vertex u, Vertex v) const { return position(u, v) >= 0; }
  /// Neighbour of v immediately after u in clockwise order.
  Vertex next_clockwise(Vertex v, Vertex u) const;
  /// Neighbour of v immediately before u in clockwise order.
  Vertex prev_clockwise(Vertex v, Vertex u) const;

  /// Face traced by the arc (u,v): successor of (u,v) is (v, next_clockwise(v,u)).
  FaceId face_of_arc(Vertex u, Vertex v) const { return arc_face_[3 * u + position(u, v)]; }

  const FaceSet& faces() const { return faces_; }
  Graph graph() const;

  /// Same embedding with vertex i renamed to new_id[i].
  EmbeddedGraph relabeled(std::span<const Vertex> new_id) const;
  /// Mirror image (every rotation reversed).
  EmbeddedGraph mirrored() const;

 private:
  explicit EmbeddedGraph(std::vector<Rotation> rotation);
  void trace_faces();

  std::vector<Rotation> rotation_;
  std::vector<FaceId> arc_face_;
  FaceSet faces_;
};

/// Validated fullerene: exactly 12 pentagonal faces, all others hexagonal.
class FullereneGraph {
 public:
  const EmbeddedGraph& embedding() const { return graph_; }
  const FaceSet& faces() const { return graph_.faces(); }
  int vertex_count() const { return graph_.vertex_count(); }
  const std::vector<FaceId>& pentagons() const { return pentagons_; }
  const std::vector<FaceId>& hexagons() const { return hexagons_; }
  bool is_pentagon(FaceId f) const { return faces()[f].size() == 5; }
  bool is_hexagon(FaceId f) const { return faces()[f].size() == 6; }

  /// Faces sharing at least one vertex.
  bool faces_touch(FaceId a, FaceId b) const;
  /// The edge shared by two distinct faces, if any.
  std::optional<Edge> shared_edge(FaceId a, FaceId b) const;
  /// Faces sharing an edge with f, in boundary order of f.
  std::vector<FaceId> adjacent_faces(FaceId f) const;

 private:
  friend FullereneGraph validate_fullerene(EmbeddedGraph g);
  explicit FullereneGraph(EmbeddedGraph g);

  EmbeddedGraph graph_;
  std::vector<FaceId> pentagons_;
  std::vector<FaceId> hexagons_;
  std::vector<std::vector<bool>> touch_;
};

/// Induced subgraph of a parent graph, with local ids 0..kept.size()-1.
struct Subgraph {
  int parent_vertex_count = 0;
  std::vector<Vertex> kept;      ///< parent ids, ascending; local id = index
  std::vector<Vertex> local_of;  ///< parent id -> local id, or -1 if deleted
  Graph graph;

  Vertex parent_of(Vertex local) const { return kept[local]; }
};

struct BipartiteResult {
  bool bipartite = true;
  std::vector<Vertex> odd_cycle;  ///< vertex sequence of an odd cycle when not bipartite
};

// --- .rot text format -----------------------------------------------------

EmbeddedGraph parse_graph(std::string_view text);
EmbeddedGraph read_graph_file(const std::string& path);
std::string write_graph(const EmbeddedGraph& g, std::string_view comment = {});

// --- operations -------------------------------------------------------------

inline const FaceSet& faces(const EmbeddedGraph& g) { return g.faces(); }

/// Throws ValidationError describing the first violated face-size constraint.
FullereneGraph validate_fullerene(EmbeddedGraph g);

Subgraph delete_vertices(const Graph& g, std::span<const Vertex> removed);
Subgraph delete_vertices(const EmbeddedGraph& g, std::span<const Vertex> removed);
Subgraph delete_vertices(const FullereneGraph& g, std::span<const Vertex> removed);

/// Odd-cycle witness uses local ids of the graph passed in.
BipartiteResult is_bipartite(const Graph& g);
/// Odd-cycle witness is reported in parent ids.
BipartiteResult is_bipartite(const Subgraph& s);

CanonicalCode canonical_code(const EmbeddedGraph& g);
/// Short hex digest of the canonical code (FNV-1a, 64 bit).
std::string code_digest(const CanonicalCode& code);

/// True iff no set of at most k edges separates g into two components that
/// each contain a cycle. Brute force over edge subsets; |V| <= 100, k <= 4.
bool verify_cyclic_edge_connectivity(const FullereneGraph& g, int k);

}  // namespace resonantk
