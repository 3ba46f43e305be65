#include "resonantk/rings.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace resonantk {

namespace {

// Orders an edge set into a single cycle starting at its least vertex and
// heading to the smaller neighbour. Empty result if the edges are not one cycle.
std::vector<Vertex> single_cycle(const std::vector<Edge>& edges) {
  if (edges.size() < 3) return {};
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (const auto& [v, list] : adj)
    if (list.size() != 2) return {};
  const Vertex start = adj.begin()->first;
  std::vector<Vertex> cycle{start};
  Vertex prev = start;
  Vertex cur = std::min(adj[start][0], adj[start][1]);
  while (cur != start) {
    cycle.push_back(cur);
    const auto& nb = adj[cur];
    const Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  if (cycle.size() != adj.size()) return {};
  return cycle;
}

int common_vertices(const Face& a, const Face& b) {
  int n = 0;
  for (Vertex v : a.boundary)
    if (b.contains(v)) ++n;
  return n;
}

bool edges_meet(const Edge& a, const Edge& b) {
  return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

// Shared edges of a cyclic face sequence, or nullopt if it is not a ring.
std::optional<std::vector<Edge>> ring_edges(const FullereneGraph& f, const std::vector<FaceId>& faces) {
  const std::size_t l = faces.size();
  if (l < 3) return std::nullopt;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < l; ++i) {
    const FaceId a = faces[i], b = faces[(i + 1) % l];
    const auto e = f.shared_edge(a, b);
    if (!e || common_vertices(f.faces()[a], f.faces()[b]) != 2) return std::nullopt;
    edges.push_back(*e);
  }
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 2; j < l; ++j) {
      if (i == 0 && j == l - 1) continue;
      if (f.faces_touch(faces[i], faces[j])) return std::nullopt;
    }
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j)
      if (edges_meet(edges[i], edges[j])) return std::nullopt;
  return edges;
}

struct Side {
  std::vector<FaceId> faces;
  std::vector<Vertex> cycle;
  int s = 0, r = 0, n5 = 0, n6 = 0;
};

class RingSearch {
 public:
  RingSearch(const FullereneGraph& f, int max_len, FaceFilter filter)
      : f_(f), max_len_(max_len), filter_(filter), in_path_(static_cast<std::size_t>(f.faces().size()), false) {}

  std::vector<std::vector<FaceId>> run() {
    for (FaceId f0 = 0; f0 < f_.faces().size(); ++f0) {
      if (!allowed(f0)) continue;
      path_ = {f0};
      in_path_[f0] = true;
      extend();
      in_path_[f0] = false;
    }
    return std::move(found_);
  }

 private:
  bool allowed(FaceId g) const { return filter_ == FaceFilter::any || f_.is_pentagon(g); }

  void extend() {
    const FaceId f0 = path_.front();
    const FaceId last = path_.back();
    const std::size_t k = path_.size();
    if (static_cast<int>(k) >= max_len_) return;
    for (FaceId g : f_.adjacent_faces(last)) {
      if (g <= f0 || in_path_[g] || !allowed(g)) continue;
      bool clear = true;
      for (std::size_t i = 1; i + 1 < k && clear; ++i) clear = !f_.faces_touch(g, path_[i]);
      if (!clear) continue;
      const bool closes = k >= 2 && f_.faces_touch(g, f0);
      path_.push_back(g);
      if (closes) {
        if (path_[1] < g && ring_edges(f_, path_)) found_.push_back(path_);
      } else {
        in_path_[g] = true;
        extend();
        in_path_[g] = false;
      }
      path_.pop_back();
    }
  }

  const FullereneGraph& f_;
  int max_len_;
  FaceFilter filter_;
  std::vector<bool> in_path_;
  std::vector<FaceId> path_;
  std::vector<std::vector<FaceId>> found_;
};

std::vector<Side> sides_of(const FullereneGraph& f, const std::vector<FaceId>& ring_faces) {
  const int face_count = f.faces().size();
  std::vector<bool> in_ring(static_cast<std::size_t>(face_count), false);
  for (FaceId g : ring_faces) in_ring[g] = true;

  std::set<Edge> ring_edge_set;
  for (FaceId g : ring_faces) {
    const auto& b = f.faces()[g].boundary;
    for (std::size_t i = 0; i < b.size(); ++i) ring_edge_set.insert(Edge::of(b[i], b[(i + 1) % b.size()]));
  }
  std::map<Vertex, int> ring_degree;
  for (const Edge& e : ring_edge_set) {
    ++ring_degree[e.u];
    ++ring_degree[e.v];
  }

  std::vector<int> component(static_cast<std::size_t>(face_count), -1);
  std::vector<Side> sides;
  for (FaceId start = 0; start < face_count; ++start) {
    if (in_ring[start] || component[start] >= 0) continue;
    Side side;
    const int id = static_cast<int>(sides.size());
    component[start] = id;
    side.faces.push_back(start);
    for (std::size_t i = 0; i < side.faces.size(); ++i)
      for (FaceId g : f.adjacent_faces(side.faces[i]))
        if (!in_ring[g] && component[g] < 0) {
          component[g] = id;
          side.faces.push_back(g);
        }
    std::sort(side.faces.begin(), side.faces.end());

    std::vector<Edge> boundary;
    std::set<Vertex> inside;
    for (FaceId g : side.faces) {
      (f.is_pentagon(g) ? side.n5 : side.n6) += 1;
      const auto& b = f.faces()[g].boundary;
      const auto across = f.adjacent_faces(g);
      for (std::size_t i = 0; i < b.size(); ++i) {
        inside.insert(b[i]);
        if (in_ring[across[i]]) boundary.push_back(Edge::of(b[i], b[(i + 1) % b.size()]));
      }
    }
    side.cycle = single_cycle(boundary);
    if (side.cycle.empty()) throw std::logic_error("ring side is not bounded by a single cycle");
    for (Vertex v : side.cycle) {
      inside.erase(v);
      if (ring_degree[v] == 2) ++side.s;
    }
    side.r = static_cast<int>(inside.size());
    sides.push_back(std::move(side));
  }
  return sides;
}

void check(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("ring identity violated: " + what);
}

void check_side(const Side& side, int l) {
  check(static_cast<int>(side.cycle.size()) == l + side.s, "cycle length = l + s");
  check(2 * (side.n5 + side.n6) == side.s + side.r + 2, "n5 + n6 = (s + r + 2)/2");
  check(5 * side.n5 + 6 * side.n6 == 2 * side.s + 3 * side.r + l, "5 n5 + 6 n6 = 2s + 3r + l");
  check(side.n5 == 6 + side.s - l, "n5 = 6 + s - l");
  check(2 * side.n6 == 2 * l + side.r - side.s - 10, "n6 = l + (r - s)/2 - 5");
  check((side.r - side.s) % 2 == 0, "r = s mod 2");
}

// Least rotation/reflection of a cyclic sequence, written with f_0 minimal and f_1 < f_{l-1}.
std::vector<FaceId> canonical_order(std::vector<FaceId> faces) {
  const auto it = std::min_element(faces.begin(), faces.end());
  std::rotate(faces.begin(), it, faces.end());
  if (faces.size() > 2 && faces[1] > faces.back()) std::reverse(faces.begin() + 1, faces.end());
  return faces;
}

}  // namespace

Ring ring_stats(const FullereneGraph& f, const Ring& ring) {
  Ring out;
  out.faces = canonical_order(ring.faces);
  const auto edges = ring_edges(f, out.faces);
  if (!edges) throw std::logic_error("face sequence is not a polygonal ring");
  out.shared_edges = *edges;
  out.length = static_cast<int>(out.faces.size());
  out.pentagonal = std::all_of(out.faces.begin(), out.faces.end(), [&](FaceId g) { return f.is_pentagon(g); });

  auto sides = sides_of(f, out.faces);
  if (sides.size() != 2) throw std::logic_error("ring does not separate the sphere into two sides");
  auto sorted_cycle = [](const Side& s) {
    auto c = s.cycle;
    std::sort(c.begin(), c.end());
    return c;
  };
  if (sides[1].s < sides[0].s || (sides[1].s == sides[0].s && sorted_cycle(sides[1]) < sorted_cycle(sides[0])))
    std::swap(sides[0], sides[1]);
  const Side& inner = sides[0];
  const Side& outer = sides[1];

  int excess = 0;
  for (FaceId g : out.faces) excess += f.faces()[g].size() - 4;
  check(inner.s + outer.s == excess, "s + s' = sum of (|f_i| - 4)");
  check_side(inner, out.length);
  check_side(outer, out.length);
  if (out.pentagonal) check(inner.s != 1 && outer.s != 1, "s, s' != 1");

  out.inner_cycle = inner.cycle;
  out.outer_cycle = outer.cycle;
  out.s = inner.s;
  out.s_prime = outer.s;
  out.r = inner.r;
  out.n5 = inner.n5;
  out.n6 = inner.n6;
  out.inner_faces = inner.faces;
  out.outer_faces = outer.faces;
  return out;
}

std::vector<Ring> find_polygonal_rings(const FullereneGraph& f, int max_len, FaceFilter filter) {
  std::vector<Ring> rings;
  for (auto& faces : RingSearch(f, max_len, filter).run()) {
    Ring seed;
    seed.faces = std::move(faces);
    rings.push_back(ring_stats(f, seed));
  }
  std::sort(rings.begin(), rings.end(), [](const Ring& a, const Ring& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.faces < b.faces;
  });
  return rings;
}

TauResult tau(const FullereneGraph& f) {
  TauResult result;
  const auto rings = find_polygonal_rings(f, 12, FaceFilter::pentagons_only);
  if (rings.empty()) return result;
  result.value = rings.front().length;
  for (const Ring& r : rings)
    result.value = std::min(*result.value, r.length);
  if (*result.value < 5 || *result.value > 12)
    result.findings.push_back("tau = " + std::to_string(*result.value) + " lies outside 5..12");
  if (*result.value == 7) result.findings.push_back("tau = 7, a value no fullerene admits");
  return result;
}

std::optional<int> psi(const FullereneGraph& f, int l) {
  std::optional<int> best;
  for (const Ring& r : find_polygonal_rings(f, l, FaceFilter::pentagons_only))
    if (r.length == l) best = best ? std::min(*best, r.s) : r.s;
  return best;
}

bool length_five_rings_are_capped(const FullereneGraph& f) {
  for (const Ring& r : find_polygonal_rings(f, 5, FaceFilter::any)) {
    if (r.length != 5) continue;
    if (r.inner_faces.size() == 1 || r.outer_faces.size() == 1) continue;
    const bool all_hexagons =
        std::all_of(r.faces.begin(), r.faces.end(), [&](FaceId g) { return f.is_hexagon(g); });
    if (!(r.inner_cycle.size() == 10 && r.outer_cycle.size() == 10 && all_hexagons)) return false;
  }
  return true;
}

const char* to_string(FragmentShape shape) {
  switch (shape) {
    case FragmentShape::pentagon: return "PENTAGON";
    case FragmentShape::turtle: return "TURTLE";
    case FragmentShape::other: return "OTHER";
  }
  return "OTHER";
}

namespace {

// Six faces with dual edges 0-1 1-2 1-3 2-3 2-4 3-4 4-5.
bool is_turtle(const FullereneGraph& f, const std::vector<FaceId>& faces) {
  if (faces.size() != 6) return false;
  constexpr std::array<std::array<int, 2>, 7> pattern{{{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {4, 5}}};
  std::array<std::array<bool, 6>, 6> adj{};
  int edges = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (f.shared_edge(faces[i], faces[j])) {
        adj[i][j] = adj[j][i] = true;
        ++edges;
      }
  if (edges != static_cast<int>(pattern.size())) return false;
  std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
  do {
    bool ok = true;
    for (const auto& e : pattern) ok = ok && adj[perm[e[0]]][perm[e[1]]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

std::vector<Fragment> maximal_pentagonal_fragments(const FullereneGraph& f) {
  std::vector<Fragment> out;
  std::vector<bool> seen(static_cast<std::size_t>(f.faces().size()), false);
  for (FaceId start : f.pentagons()) {
    if (seen[start]) continue;
    Fragment frag;
    frag.faces.push_back(start);
    seen[start] = true;
    for (std::size_t i = 0; i < frag.faces.size(); ++i)
      for (FaceId g : f.adjacent_faces(frag.faces[i]))
        if (f.is_pentagon(g) && !seen[g]) {
          seen[g] = true;
          frag.faces.push_back(g);
        }
    std::sort(frag.faces.begin(), frag.faces.end());

    std::map<Edge, int> edge_use;
    std::set<Vertex> vertices;
    frag.gamma = 6;
    for (FaceId g : frag.faces) {
      const auto& b = f.faces()[g].boundary;
      for (std::size_t i = 0; i < b.size(); ++i) {
        vertices.insert(b[i]);
        ++edge_use[Edge::of(b[i], b[(i + 1) % b.size()])];
      }
      int inside = 0;
      for (FaceId h : f.adjacent_faces(g))
        if (std::binary_search(frag.faces.begin(), frag.faces.end(), h)) ++inside;
      frag.gamma = std::min(frag.gamma, inside);
    }
    std::vector<Edge> boundary;
    std::map<Vertex, int> degree;
    for (const auto& [e, uses] : edge_use) {
      ++degree[e.u];
      ++degree[e.v];
      if (uses == 1) boundary.push_back(e);
    }
    const int euler = static_cast<int>(vertices.size()) - static_cast<int>(edge_use.size()) +
                      static_cast<int>(frag.faces.size());
    if (euler == 1) frag.boundary = single_cycle(boundary);
    frag.disk = !frag.boundary.empty();
    frag.maximal = frag.disk;
    for (Vertex v : frag.boundary)
      if (degree[v] == 2) frag.w.push_back(v);
    std::sort(frag.w.begin(), frag.w.end());

    if (frag.disk && frag.faces.size() == 1)
      frag.shape = FragmentShape::pentagon;
    else if (frag.disk && is_turtle(f, frag.faces))
      frag.shape = FragmentShape::turtle;
    out.push_back(std::move(frag));
  }
  return out;
}

std::vector<CapWitness> detect_r5_r6(const FullereneGraph& f) {
  std::vector<CapWitness> out;
  for (const Ring& r : find_polygonal_rings(f, 6, FaceFilter::pentagons_only)) {
    if (r.length == 5 && r.s != 0) throw std::logic_error("length-5 pentagonal ring with s != 0");
    if (r.s != 0 || r.inner_faces.size() != 1) continue;
    out.push_back({r.length == 5 ? CapWitness::Kind::r5 : CapWitness::Kind::r6, r, r.inner_faces.front()});
  }
  return out;
}

}  // namespace resonantk
