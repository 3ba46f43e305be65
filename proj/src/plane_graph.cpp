#include "resonantk/plane_graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "resonantk/errors.hpp"

namespace resonantk {

// --- Graph -------------------------------------------------------------------

Graph::Graph(int vertex_count) : adjacency_(static_cast<std::size_t>(vertex_count)) {}

Graph Graph::from_edges(int vertex_count, std::span<const Edge> edges) {
  Graph g(vertex_count);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw ValidationError("edge endpoint out of range");
  if (has_edge(u, v)) return;
  auto insert_sorted = [](std::vector<Vertex>& list, Vertex x) {
    list.insert(std::upper_bound(list.begin(), list.end(), x), x);
  };
  insert_sorted(adjacency_[u], v);
  insert_sorted(adjacency_[v], u);
  ++edge_count_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

bool Face::contains(Vertex v) const {
  return std::find(boundary.begin(), boundary.end(), v) != boundary.end();
}

// --- EmbeddedGraph -----------------------------------------------------------

EmbeddedGraph::EmbeddedGraph(std::vector<Rotation> rotation) : rotation_(std::move(rotation)) {}

int EmbeddedGraph::position(Vertex v, Vertex u) const {
  const Rotation& r = rotation_[v];
  for (int i = 0; i < 3; ++i)
    if (r[i] == u) return i;
  return -1;
}

Vertex EmbeddedGraph::next_clockwise(Vertex v, Vertex u) const {
  return rotation_[v][(position(v, u) + 1) % 3];
}

Vertex EmbeddedGraph::prev_clockwise(Vertex v, Vertex u) const {
  return rotation_[v][(position(v, u) + 2) % 3];
}

EmbeddedGraph EmbeddedGraph::from_rotation(std::vector<Rotation> rotation) {
  const int n = static_cast<int>(rotation.size());
  if (n == 0) throw ValidationError("empty graph");
  for (Vertex v = 0; v < n; ++v) {
    const Rotation& r = rotation[v];
    for (int i = 0; i < 3; ++i) {
      if (r[i] < 0 || r[i] >= n)
        throw ValidationError("vertex " + std::to_string(v) + " lists unknown neighbor " +
                              std::to_string(r[i]));
      if (r[i] == v) throw ValidationError("self-loop at vertex " + std::to_string(v));
    }
    if (r[0] == r[1] || r[1] == r[2] || r[0] == r[2])
      throw ValidationError("duplicate neighbor at vertex " + std::to_string(v));
  }
  EmbeddedGraph g(std::move(rotation));
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.rotation_[v])
      if (g.position(u, v) < 0)
        throw ValidationError("asymmetric adjacency: " + std::to_string(v) + " lists " +
                              std::to_string(u) + " but not conversely");

  // connectivity
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.rotation_[v])
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
  }
  if (reached != n) throw ValidationError("disconnected graph");

  g.trace_faces();
  const int euler = g.vertex_count() - g.edge_count() + g.faces_.size();
  if (euler != 2)
    throw ValidationError("non-spherical embedding: V - E + F = " + std::to_string(euler));
  for (const Face& f : g.faces_) {
    std::vector<Vertex> sorted = f.boundary;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ValidationError("face boundary is not a simple cycle");
  }
  return g;
}

void EmbeddedGraph::trace_faces() {
  const int n = vertex_count();
  std::vector<FaceId> raw(static_cast<std::size_t>(3 * n), -1);
  std::vector<Face> traced;
  for (Vertex u0 = 0; u0 < n; ++u0) {
    for (int i0 = 0; i0 < 3; ++i0) {
      if (raw[3 * u0 + i0] >= 0) continue;
      const FaceId id = static_cast<FaceId>(traced.size());
      Face face;
      Vertex u = u0;
      Vertex v = rotation_[u0][i0];
      while (raw[3 * u + position(u, v)] < 0) {
        raw[3 * u + position(u, v)] = id;
        face.boundary.push_back(u);
        const Vertex w = next_clockwise(v, u);
        u = v;
        v = w;
      }
      traced.push_back(std::move(face));
    }
  }

  // Re-index faces by their least arc (u, v) and rotate boundaries to start there.
  struct Keyed {
    Edge least_arc;  // ordered pair, not normalized
    FaceId old_id;
  };
  std::vector<Keyed> keys;
  for (FaceId f = 0; f < static_cast<FaceId>(traced.size()); ++f) {
    auto& b = traced[f].boundary;
    std::size_t best = 0;
    for (std::size_t i = 1; i < b.size(); ++i) {
      const std::pair cand{b[i], b[(i + 1) % b.size()]};
      const std::pair cur{b[best], b[(best + 1) % b.size()]};
      if (cand < cur) best = i;
    }
    std::rotate(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(best), b.end());
    keys.push_back({{b[0], b[1 % b.size()]}, f});
  }
  std::sort(keys.begin(), keys.end(), [](const Keyed& a, const Keyed& b) {
    return std::pair{a.least_arc.u, a.least_arc.v} < std::pair{b.least_arc.u, b.least_arc.v};
  });
  std::vector<FaceId> new_id(traced.size());
  faces_.faces_.clear();
  for (std::size_t i = 0; i < keys.size(); ++i) {
    new_id[keys[i].old_id] = static_cast<FaceId>(i);
    faces_.faces_.push_back(std::move(traced[keys[i].old_id]));
  }
  arc_face_.assign(raw.size(), -1);
  for (std::size_t a = 0; a < raw.size(); ++a) arc_face_[a] = new_id[raw[a]];
  faces_.at_vertex_.assign(static_cast<std::size_t>(n), {});
  for (Vertex v = 0; v < n; ++v)
    for (int i = 0; i < 3; ++i) faces_.at_vertex_[v][i] = arc_face_[3 * v + i];
}

EmbeddedGraph EmbeddedGraph::from_face_cycles(int vertex_count,
                                              const std::vector<std::vector<Vertex>>& cycles) {
  // edge -> (cycle, position) occurrences
  std::map<Edge, std::vector<std::pair<int, int>>> occurrences;
  for (int c = 0; c < static_cast<int>(cycles.size()); ++c) {
    const auto& cyc = cycles[c];
    for (int i = 0; i < static_cast<int>(cyc.size()); ++i)
      occurrences[Edge::of(cyc[i], cyc[(i + 1) % cyc.size()])].push_back({c, i});
  }
  for (const auto& [e, occ] : occurrences)
    if (occ.size() != 2)
      throw ValidationError("face cycles do not form a closed surface at edge " +
                            std::to_string(e.u) + "-" + std::to_string(e.v));

  // Orient: adjacent cycles must traverse their shared edge in opposite directions.
  std::vector<int> orientation(cycles.size(), 0);
  for (std::size_t root = 0; root < cycles.size(); ++root) {
    if (orientation[root] != 0) continue;
    orientation[root] = 1;
    std::queue<int> q;
    q.push(static_cast<int>(root));
    while (!q.empty()) {
      const int c = q.front();
      q.pop();
      const auto& cyc = cycles[c];
      for (int i = 0; i < static_cast<int>(cyc.size()); ++i) {
        for (auto [d, j] : occurrences[Edge::of(cyc[i], cyc[(i + 1) % cyc.size()])]) {
          if (d == c) continue;
          const bool same_direction_if_plus = cycles[d][j] == cyc[i];
          const int want = same_direction_if_plus ? -orientation[c] : orientation[c];
          if (orientation[d] == 0) {
            orientation[d] = want;
            q.push(d);
          } else if (orientation[d] != want) {
            throw ValidationError("face cycles are not consistently orientable");
          }
        }
      }
    }
  }

  std::vector<std::map<Vertex, Vertex>> succ(static_cast<std::size_t>(vertex_count));
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    std::vector<Vertex> cyc = cycles[c];
    if (orientation[c] < 0) std::reverse(cyc.begin(), cyc.end());
    const std::size_t k = cyc.size();
    for (std::size_t i = 0; i < k; ++i) {
      const Vertex u = cyc[i], v = cyc[(i + 1) % k], w = cyc[(i + 2) % k];
      if (v < 0 || v >= vertex_count) throw ValidationError("face cycle vertex out of range");
      succ[v][u] = w;
    }
  }
  std::vector<Rotation> rotation(static_cast<std::size_t>(vertex_count));
  for (Vertex v = 0; v < vertex_count; ++v) {
    if (succ[v].size() != 3)
      throw ValidationError("non-cubic: vertex " + std::to_string(v) + " has " +
                            std::to_string(succ[v].size()) + " neighbors");
    const Vertex a = succ[v].begin()->first;
    const Vertex b = succ[v].at(a);
    const Vertex c = succ[v].at(b);
    if (succ[v].at(c) != a) throw ValidationError("face cycles do not close around a vertex");
    rotation[v] = {a, b, c};
  }
  EmbeddedGraph g = from_rotation(std::move(rotation));
  if (g.faces().size() != static_cast<int>(cycles.size()))
    throw ValidationError("face cycles do not match the traced faces");
  return g;
}

Graph EmbeddedGraph::graph() const {
  Graph g(vertex_count());
  for (Vertex v = 0; v < vertex_count(); ++v)
    for (Vertex u : rotation_[v])
      if (v < u) g.add_edge(v, u);
  return g;
}

EmbeddedGraph EmbeddedGraph::relabeled(std::span<const Vertex> new_id) const {
  std::vector<Rotation> rot(rotation_.size());
  for (Vertex v = 0; v < vertex_count(); ++v)
    for (int i = 0; i < 3; ++i) rot[new_id[v]][i] = new_id[rotation_[v][i]];
  return from_rotation(std::move(rot));
}

EmbeddedGraph EmbeddedGraph::mirrored() const {
  std::vector<Rotation> rot(rotation_.size());
  for (Vertex v = 0; v < vertex_count(); ++v)
    rot[v] = {rotation_[v][0], rotation_[v][2], rotation_[v][1]};
  return from_rotation(std::move(rot));
}

// --- FullereneGraph ------------------------------------------------------------

FullereneGraph::FullereneGraph(EmbeddedGraph g) : graph_(std::move(g)) {
  const FaceSet& fs = graph_.faces();
  for (FaceId f = 0; f < fs.size(); ++f) (fs[f].size() == 5 ? pentagons_ : hexagons_).push_back(f);
  touch_.assign(static_cast<std::size_t>(fs.size()),
                std::vector<bool>(static_cast<std::size_t>(fs.size()), false));
  for (Vertex v = 0; v < graph_.vertex_count(); ++v) {
    const auto& at = fs.faces_at(v);
    for (FaceId a : at)
      for (FaceId b : at) touch_[a][b] = true;
  }
}

bool FullereneGraph::faces_touch(FaceId a, FaceId b) const { return touch_[a][b]; }

std::optional<Edge> FullereneGraph::shared_edge(FaceId a, FaceId b) const {
  if (a == b) return std::nullopt;
  const auto& bd = faces()[a].boundary;
  for (std::size_t i = 0; i < bd.size(); ++i) {
    const Vertex x = bd[i], y = bd[(i + 1) % bd.size()];
    if (graph_.face_of_arc(y, x) == b) return Edge::of(x, y);
  }
  return std::nullopt;
}

std::vector<FaceId> FullereneGraph::adjacent_faces(FaceId f) const {
  const auto& bd = faces()[f].boundary;
  std::vector<FaceId> out;
  for (std::size_t i = 0; i < bd.size(); ++i)
    out.push_back(graph_.face_of_arc(bd[(i + 1) % bd.size()], bd[i]));
  return out;
}

FullereneGraph validate_fullerene(EmbeddedGraph g) {
  int pentagons = 0;
  for (FaceId f = 0; f < g.faces().size(); ++f) {
    const int size = g.faces()[f].size();
    if (size != 5 && size != 6)
      throw ValidationError("face " + std::to_string(f) + " has size " + std::to_string(size) +
                            " (fullerene faces must be pentagons or hexagons)");
    if (size == 5) ++pentagons;
  }
  if (pentagons != 12)
    throw ValidationError("fullerene must have exactly 12 pentagons, found " +
                          std::to_string(pentagons));
  return FullereneGraph(std::move(g));
}

// --- parsing -------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<long> parse_ints(std::string_view s, int line_no) {
  std::vector<long> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i == s.size()) break;
    long value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
    if (ec != std::errc())
      throw ValidationError("line " + std::to_string(line_no) + ": expected an integer");
    i = static_cast<std::size_t>(ptr - s.data());
    out.push_back(value);
  }
  return out;
}

}  // namespace

EmbeddedGraph parse_graph(std::string_view text) {
  std::optional<long> n;
  std::vector<std::optional<EmbeddedGraph::Rotation>> rotation;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (!n) {
      const auto ints = parse_ints(line, line_no);
      if (ints.size() != 1 || ints[0] <= 0)
        throw ValidationError("line " + std::to_string(line_no) + ": expected vertex count");
      n = ints[0];
      rotation.assign(static_cast<std::size_t>(*n), std::nullopt);
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ValidationError("line " + std::to_string(line_no) + ": expected 'i: a b c'");
    const auto head = parse_ints(line.substr(0, colon), line_no);
    const auto nbrs = parse_ints(line.substr(colon + 1), line_no);
    if (head.size() != 1 || head[0] < 0 || head[0] >= *n)
      throw ValidationError("line " + std::to_string(line_no) + ": bad vertex id");
    const long v = head[0];
    if (nbrs.size() != 3)
      throw ValidationError("non-cubic: vertex " + std::to_string(v) + " has " +
                            std::to_string(nbrs.size()) + " neighbors");
    if (rotation[v]) throw ValidationError("vertex " + std::to_string(v) + " listed twice");
    rotation[v] = EmbeddedGraph::Rotation{static_cast<Vertex>(nbrs[0]),
                                          static_cast<Vertex>(nbrs[1]),
                                          static_cast<Vertex>(nbrs[2])};
    if (eol == text.size()) break;
  }
  if (!n) throw ValidationError("missing vertex count");
  std::vector<EmbeddedGraph::Rotation> rot;
  rot.reserve(rotation.size());
  for (std::size_t v = 0; v < rotation.size(); ++v) {
    if (!rotation[v]) throw ValidationError("vertex " + std::to_string(v) + " missing");
    rot.push_back(*rotation[v]);
  }
  return EmbeddedGraph::from_rotation(std::move(rot));
}

EmbeddedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string write_graph(const EmbeddedGraph& g, std::string_view comment) {
  std::ostringstream out;
  std::size_t pos = 0;
  while (pos < comment.size()) {
    const std::size_t eol = std::min(comment.find('\n', pos), comment.size());
    out << "# " << comment.substr(pos, eol - pos) << '\n';
    pos = eol + 1;
  }
  out << g.vertex_count() << '\n';
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& r = g.rotation(v);
    out << v << ": " << r[0] << ' ' << r[1] << ' ' << r[2] << '\n';
  }
  return out.str();
}

// --- subgraphs -------------------------------------------------------------------

Subgraph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  const int n = g.vertex_count();
  std::vector<bool> gone(static_cast<std::size_t>(n), false);
  for (Vertex v : removed) {
    if (v < 0 || v >= n) throw ValidationError("unknown vertex id " + std::to_string(v));
    gone[v] = true;
  }
  Subgraph s;
  s.parent_vertex_count = n;
  s.local_of.assign(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v)
    if (!gone[v]) {
      s.local_of[v] = static_cast<Vertex>(s.kept.size());
      s.kept.push_back(v);
    }
  s.graph = Graph(static_cast<int>(s.kept.size()));
  for (Vertex v : s.kept)
    for (Vertex u : g.neighbors(v))
      if (v < u && !gone[u]) s.graph.add_edge(s.local_of[v], s.local_of[u]);
  return s;
}

Subgraph delete_vertices(const EmbeddedGraph& g, std::span<const Vertex> removed) {
  return delete_vertices(g.graph(), removed);
}

Subgraph delete_vertices(const FullereneGraph& g, std::span<const Vertex> removed) {
  return delete_vertices(g.embedding().graph(), removed);
}

BipartiteResult is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  for (Vertex root = 0; root < n; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop();
      for (Vertex y : g.neighbors(x)) {
        if (color[y] < 0) {
          color[y] = 1 - color[x];
          parent[y] = x;
          depth[y] = depth[x] + 1;
          q.push(y);
        } else if (color[y] == color[x]) {
          // climb both endpoints to their lowest common ancestor
          std::vector<Vertex> left{x}, right{y};
          Vertex a = x, b = y;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              a = parent[a];
              left.push_back(a);
            } else {
              b = parent[b];
              right.push_back(b);
            }
          }
          right.pop_back();  // lca is the last entry of both paths
          BipartiteResult r{false, std::move(left)};
          r.odd_cycle.insert(r.odd_cycle.end(), right.rbegin(), right.rend());
          return r;
        }
      }
    }
  }
  return {};
}

BipartiteResult is_bipartite(const Subgraph& s) {
  BipartiteResult r = is_bipartite(s.graph);
  for (Vertex& v : r.odd_cycle) v = s.parent_of(v);
  return r;
}

// --- canonical code ---------------------------------------------------------------

namespace {

// BFS labeling from the arc (start, first) scanning rotations clockwise
// (or counter-clockwise). Returns false as soon as the code would be
// lexicographically larger than `best`; on success, `best` is replaced.
bool bfs_code(const EmbeddedGraph& g, Vertex start, Vertex first, bool clockwise,
              std::vector<std::uint32_t>& best, std::vector<std::uint32_t>& code,
              std::vector<int>& label, std::vector<Vertex>& entry, std::vector<Vertex>& order) {
  const int n = g.vertex_count();
  std::fill(label.begin(), label.end(), -1);
  order.clear();
  code.clear();
  label[start] = 0;
  entry[start] = first;
  order.push_back(start);
  bool equal_so_far = !best.empty();
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex x = order[head];
    Vertex y = entry[x];
    for (int k = 0; k < 3; ++k) {
      if (label[y] < 0) {
        label[y] = static_cast<int>(order.size());
        entry[y] = x;
        order.push_back(y);
      }
      const auto value = static_cast<std::uint32_t>(label[y]);
      if (equal_so_far) {
        const std::uint32_t ref = best[code.size()];
        if (value > ref) return false;
        if (value < ref) equal_so_far = false;
      }
      code.push_back(value);
      y = clockwise ? g.next_clockwise(x, y) : g.prev_clockwise(x, y);
    }
  }
  if (static_cast<int>(order.size()) != n) return false;
  if (best.empty() || !equal_so_far) best = code;
  return true;
}

}  // namespace

CanonicalCode canonical_code(const EmbeddedGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::uint32_t> best, code;
  std::vector<int> label(static_cast<std::size_t>(n));
  std::vector<Vertex> entry(static_cast<std::size_t>(n)), order;
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.rotation(v))
      for (bool cw : {true, false}) bfs_code(g, v, w, cw, best, code, label, entry, order);
  CanonicalCode out;
  out.reserve(2 * best.size() + 2);
  auto put16 = [&](std::uint32_t x) {
    out.push_back(static_cast<std::uint8_t>(x >> 8));
    out.push_back(static_cast<std::uint8_t>(x & 0xff));
  };
  put16(static_cast<std::uint32_t>(n));
  for (auto x : best) put16(x);
  return out;
}

std::string code_digest(const CanonicalCode& code) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint8_t b : code) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return s;
}

// --- cyclic edge connectivity -------------------------------------------------------

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// True when deleting `cut` leaves at least two components containing a cycle.
bool separates_cycles(int n, const std::vector<Edge>& edges, const std::vector<bool>& cut) {
  DisjointSets ds(n);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (!cut[i]) ds.unite(edges[i].u, edges[i].v);
  std::vector<int> vertices(static_cast<std::size_t>(n), 0), edge_count(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) ++vertices[ds.find(v)];
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (!cut[i]) ++edge_count[ds.find(edges[i].u)];
  int cyclic = 0;
  for (Vertex v = 0; v < n; ++v)
    if (vertices[v] > 0 && edge_count[v] >= vertices[v]) ++cyclic;
  return cyclic >= 2;
}

bool search_cuts(int n, const std::vector<Edge>& edges, std::vector<bool>& cut, std::size_t from,
                 int remaining) {
  if (remaining == 0) return false;
  for (std::size_t i = from; i < edges.size(); ++i) {
    cut[i] = true;
    if (separates_cycles(n, edges, cut) || search_cuts(n, edges, cut, i + 1, remaining - 1)) {
      cut[i] = false;
      return true;
    }
    cut[i] = false;
  }
  return false;
}

}  // namespace

bool verify_cyclic_edge_connectivity(const FullereneGraph& g, int k) {
  if (k < 0 || k > 4) throw GuardExceeded("cyclic edge connectivity check supports k <= 4");
  if (g.vertex_count() > 100)
    throw GuardExceeded("cyclic edge connectivity check limited to 100 vertices");
  const std::vector<Edge> edges = g.embedding().graph().edges();
  std::vector<bool> cut(edges.size(), false);
  return !search_cuts(g.vertex_count(), edges, cut, 0, k);
}

}  // namespace resonantk
