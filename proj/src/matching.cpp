#include "resonantk/matching.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <sstream>

#include "resonantk/errors.hpp"

namespace resonantk {

Matching::Matching(int vertex_count) : mate_(static_cast<std::size_t>(vertex_count), -1) {}

Matching Matching::from_edges(int vertex_count, std::span<const Edge> edges) {
  Matching m(vertex_count);
  for (const Edge& e : edges) m.add(e.u, e.v);
  return m;
}

void Matching::add(Vertex u, Vertex v) {
  if (u == v || mate_[u] >= 0 || mate_[v] >= 0)
    throw ValidationError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                          " is not independent of the matching");
  mate_[u] = v;
  mate_[v] = u;
  ++size_;
}

void Matching::remove(Vertex u, Vertex v) {
  if (mate_[u] != v) throw ValidationError("edge not in matching");
  mate_[u] = mate_[v] = -1;
  --size_;
}

std::vector<Edge> Matching::edges() const {
  std::vector<Edge> out;
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (mate_[v] > v) out.push_back({v, mate_[v]});
  return out;
}

bool Matching::is_valid_in(const Graph& g) const {
  if (g.vertex_count() != vertex_count()) return false;
  for (const Edge& e : edges())
    if (!g.has_edge(e.u, e.v)) return false;
  return true;
}

std::string Matching::to_text() const {
  std::ostringstream out;
  for (const Edge& e : edges()) out << e.u << '-' << e.v << '\n';
  return out.str();
}

// --- Edmonds blossom ---------------------------------------------------------------

namespace {

class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g),
        n_(g.vertex_count()),
        match_(static_cast<std::size_t>(n_), -1),
        parent_(static_cast<std::size_t>(n_), -1),
        base_(static_cast<std::size_t>(n_)),
        used_(static_cast<std::size_t>(n_), false),
        in_blossom_(static_cast<std::size_t>(n_), false),
        on_path_(static_cast<std::size_t>(n_), false) {}

  Matching run() {
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] >= 0) continue;
      for (Vertex u : g_.neighbors(v))
        if (match_[u] < 0) {
          match_[v] = u;
          match_[u] = v;
          break;
        }
    }
    for (Vertex root = 0; root < n_; ++root) {
      if (match_[root] >= 0) continue;
      Vertex v = find_augmenting_path(root);
      while (v >= 0) {
        const Vertex pv = parent_[v];
        const Vertex next = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = next;
      }
    }
    Matching m(n_);
    for (Vertex v = 0; v < n_; ++v)
      if (match_[v] > v) m.add(v, match_[v]);
    return m;
  }

 private:
  Vertex lowest_common_ancestor(Vertex a, Vertex b) {
    std::fill(on_path_.begin(), on_path_.end(), false);
    for (;;) {
      a = base_[a];
      on_path_[a] = true;
      if (match_[a] < 0) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (on_path_[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_augmenting_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
          const Vertex b = lowest_common_ancestor(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = b;
            if (!used_[i]) {
              used_[i] = true;
              q.push(i);
            }
          }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (match_[to] < 0) return to;
          used_[match_[to]] = true;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> match_, parent_, base_;
  std::vector<bool> used_, in_blossom_, on_path_;
};

}  // namespace

Matching maximum_matching(const Graph& g) { return Blossom(g).run(); }

bool has_perfect_matching(const Graph& g) {
  if (g.vertex_count() % 2 != 0) return false;
  return maximum_matching(g).is_perfect();
}

bool is_central(const FullereneGraph& f, std::span<const FaceId> faces) {
  std::vector<Vertex> removed;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (std::size_t j = i + 1; j < faces.size(); ++j)
      if (f.faces_touch(faces[i], faces[j]))
        throw ValidationError("faces " + std::to_string(faces[i]) + " and " +
                              std::to_string(faces[j]) + " are not disjoint");
    const auto& b = f.faces()[faces[i]].boundary;
    removed.insert(removed.end(), b.begin(), b.end());
  }
  return has_perfect_matching(delete_vertices(f, removed).graph);
}

// --- Tutte witnesses -------------------------------------------------------------

namespace {

std::vector<std::vector<Vertex>> odd_components_without(const Graph& g,
                                                        const std::vector<bool>& deleted) {
  const int n = g.vertex_count();
  std::vector<bool> seen = deleted;
  std::vector<std::vector<Vertex>> odd;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex u : g.neighbors(comp[i]))
        if (!seen[u]) {
          seen[u] = true;
          comp.push_back(u);
        }
    if (comp.size() % 2 == 1) {
      std::sort(comp.begin(), comp.end());
      odd.push_back(std::move(comp));
    }
  }
  return odd;
}

double binomial(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::optional<TutteWitness> tutte_witness(const Graph& g, int bound) {
  const int n = g.vertex_count();
  if (bound < 0) throw ValidationError("negative Tutte bound");
  double work = 0;
  for (int k = 0; k <= std::min(bound, n); ++k) work += binomial(n, k);
  if (work > 2e7) throw GuardExceeded("Tutte witness search exceeds 2e7 candidate sets");

  std::vector<bool> deleted(static_cast<std::size_t>(n), false);
  for (int k = 0; k <= std::min(bound, n); ++k) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      std::fill(deleted.begin(), deleted.end(), false);
      for (int i : idx) deleted[i] = true;
      auto odd = odd_components_without(g, deleted);
      if (static_cast<int>(odd.size()) > k)
        return TutteWitness{std::vector<Vertex>(idx.begin(), idx.end()), std::move(odd)};
      // next combination
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

// --- alternating cycles ------------------------------------------------------------

bool is_alternating(const Matching& m, std::span<const Vertex> cycle) {
  const std::size_t k = cycle.size();
  if (k < 2 || k % 2 != 0) return false;
  for (int phase = 0; phase < 2; ++phase) {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      const bool in = m.contains(cycle[i], cycle[(i + 1) % k]);
      ok = in == (i % 2 == static_cast<std::size_t>(phase));
    }
    if (ok) return true;
  }
  return false;
}

Matching symmetric_difference(const Matching& m, std::span<const Vertex> cycle) {
  if (!is_alternating(m, cycle)) throw ValidationError("cycle is not M-alternating");
  Matching out = m;
  const std::size_t k = cycle.size();
  std::vector<Edge> off;
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex a = cycle[i], b = cycle[(i + 1) % k];
    if (out.contains(a, b))
      out.remove(a, b);
    else
      off.push_back({a, b});
  }
  for (const Edge& e : off) out.add(e.u, e.v);
  return out;
}

std::vector<FaceId> alternating_faces(const FullereneGraph& f, const Matching& m) {
  if (m.vertex_count() != f.vertex_count() || !m.is_perfect())
    throw ValidationError("matching is not perfect");
  std::vector<FaceId> out;
  for (FaceId id = 0; id < f.faces().size(); ++id)
    if (is_alternating(m, f.faces()[id].boundary)) out.push_back(id);
  return out;
}

// --- perfect matching enumeration -------------------------------------------------

std::int64_t perfect_matching_cap_from_env() {
  if (const char* env = std::getenv("RESONANTK_PM_CAP")) {
    char* end = nullptr;
    const long long value = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
    throw ValidationError("RESONANTK_PM_CAP must be a positive integer");
  }
  return kDefaultPerfectMatchingCap;
}

namespace {

struct PerfectMatchingSearch {
  const Graph& g;
  std::int64_t cap;
  const std::function<void(const Matching&)>& visit;
  Matching current;
  std::int64_t count = 0;

  void run(Vertex from) {
    Vertex v = from;
    while (v < g.vertex_count() && current.covers(v)) ++v;
    if (v == g.vertex_count()) {
      if (++count > cap)
        throw GuardExceeded("perfect matching enumeration exceeded cap " + std::to_string(cap));
      visit(current);
      return;
    }
    for (Vertex u : g.neighbors(v)) {
      if (current.covers(u)) continue;
      current.add(v, u);
      run(v + 1);
      current.remove(v, u);
    }
  }
};

}  // namespace

std::int64_t for_each_perfect_matching(const Graph& g, std::int64_t cap,
                                       const std::function<void(const Matching&)>& visit) {
  if (g.vertex_count() % 2 != 0) return 0;
  PerfectMatchingSearch search{g, cap, visit, Matching(g.vertex_count())};
  search.run(0);
  return search.count;
}

std::vector<Matching> enumerate_perfect_matchings(const Graph& g, std::int64_t cap) {
  std::vector<Matching> out;
  for_each_perfect_matching(g, cap, [&](const Matching& m) { out.push_back(m); });
  return out;
}

}  // namespace resonantk
