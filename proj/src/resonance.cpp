#include "resonantk/resonance.hpp"

#include <algorithm>
#include <sstream>

#include "resonantk/errors.hpp"

namespace resonantk {

namespace {

void check_hexagon_set(const FullereneGraph& f, std::span<const FaceId> hexagons) {
  for (std::size_t i = 0; i < hexagons.size(); ++i) {
    const FaceId h = hexagons[i];
    if (h < 0 || h >= f.faces().size()) throw ValidationError("unknown face id " + std::to_string(h));
    if (!f.is_hexagon(h)) throw ValidationError("face " + std::to_string(h) + " is not a hexagon");
    for (std::size_t j = 0; j < i; ++j)
      if (f.faces_touch(h, hexagons[j]))
        throw ValidationError("hexagons " + std::to_string(hexagons[j]) + " and " +
                              std::to_string(h) + " overlap");
  }
}

std::vector<Vertex> vertices_of(const FullereneGraph& f, std::span<const FaceId> faces) {
  std::vector<Vertex> out;
  for (FaceId id : faces) {
    const auto& b = f.faces()[id].boundary;
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

bool central_unchecked(const FullereneGraph& f, std::span<const FaceId> hexagons) {
  if (hexagons.empty()) return has_perfect_matching(f.embedding().graph());
  return has_perfect_matching(delete_vertices(f, vertices_of(f, hexagons)).graph);
}

// Depth-first walk over independent hexagon sets in lexicographic order.
class IndependentSetWalker {
 public:
  explicit IndependentSetWalker(const FullereneGraph& f) : f_(f), hex_(f.hexagons()) {}

  // visit(set) -> descend?  Sets are produced in lexicographic order.
  void walk(int max_size, const std::function<bool(std::span<const FaceId>)>& visit) {
    chosen_.clear();
    stop_ = false;
    recurse(0, max_size, visit);
  }

  void stop() { stop_ = true; }

 private:
  void recurse(std::size_t from, int max_size,
               const std::function<bool(std::span<const FaceId>)>& visit) {
    if (static_cast<int>(chosen_.size()) == max_size) return;
    for (std::size_t i = from; i < hex_.size() && !stop_; ++i) {
      const FaceId h = hex_[i];
      bool free = true;
      for (FaceId c : chosen_)
        if (f_.faces_touch(h, c)) {
          free = false;
          break;
        }
      if (!free) continue;
      chosen_.push_back(h);
      if (visit(chosen_) && !stop_) recurse(i + 1, max_size, visit);
      chosen_.pop_back();
    }
  }

  const FullereneGraph& f_;
  const std::vector<FaceId>& hex_;
  std::vector<FaceId> chosen_;
  bool stop_ = false;
};

}  // namespace

PatternResult is_resonant_pattern(const FullereneGraph& f, std::span<const FaceId> hexagons) {
  check_hexagon_set(f, hexagons);
  const Subgraph rest = delete_vertices(f, vertices_of(f, hexagons));
  const Matching partial = maximum_matching(rest.graph);
  if (!partial.is_perfect()) return {false, std::nullopt};
  Matching m(f.vertex_count());
  for (const Edge& e : partial.edges()) m.add(rest.parent_of(e.u), rest.parent_of(e.v));
  for (FaceId h : hexagons) {
    const auto& b = f.faces()[h].boundary;
    for (std::size_t i = 0; i < b.size(); i += 2) m.add(b[i], b[i + 1]);
  }
  return {true, std::move(m)};
}

void for_each_disjoint_hexagon_set(const FullereneGraph& f, int k,
                                   const std::function<bool(std::span<const FaceId>)>& visit) {
  if (k < 0) return;
  if (k == 0) {
    visit({});
    return;
  }
  IndependentSetWalker walker(f);
  walker.walk(k, [&](std::span<const FaceId> set) {
    if (static_cast<int>(set.size()) < k) return true;
    if (!visit(set)) walker.stop();
    return false;
  });
}

std::vector<std::vector<FaceId>> disjoint_hexagon_sets(const FullereneGraph& f, int k) {
  std::vector<std::vector<FaceId>> out;
  for_each_disjoint_hexagon_set(f, k, [&](std::span<const FaceId> s) {
    out.emplace_back(s.begin(), s.end());
    return true;
  });
  return out;
}

std::string OrderReport::to_string() const {
  switch (kind) {
    case Kind::all:
      return "ALL";
    case Kind::at_least:
      return ">=" + std::to_string(order);
    case Kind::exact:
      break;
  }
  return std::to_string(order);
}

OrderReport resonance_order(const FullereneGraph& f, const OrderOptions& options) {
  OrderReport report;
  for (int k = 1;; ++k) {
    if (options.max_k && k > *options.max_k) {
      report.kind = OrderReport::Kind::at_least;
      report.order = *options.max_k;
      return report;
    }
    bool any = false;
    std::optional<std::vector<FaceId>> failing;
    for_each_disjoint_hexagon_set(f, k, [&](std::span<const FaceId> set) {
      any = true;
      if (options.cap && report.sets_tested >= *options.cap)
        throw GuardExceeded("resonance order search exceeded cap of " +
                            std::to_string(*options.cap) + " hexagon sets");
      ++report.sets_tested;
      if (!central_unchecked(f, set)) {
        failing.emplace(set.begin(), set.end());
        return false;
      }
      return true;
    });
    if (failing) {
      report.kind = OrderReport::Kind::exact;
      report.order = k - 1;
      report.failing_set = std::move(*failing);
      return report;
    }
    if (!any) {
      report.kind = OrderReport::Kind::all;
      report.order = k - 1;
      return report;
    }
  }
}

std::vector<std::int64_t> SextetPolynomial::descending() const {
  return {coefficients.rbegin(), coefficients.rend()};
}

std::string SextetPolynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const std::int64_t c = coefficients[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0 || c != 1) out << c;
    if (i >= 1) out << 'x';
    if (i >= 2) out << '^' << i;
  }
  return first ? "0" : out.str();
}

SextetPolynomial sextet_polynomial(const FullereneGraph& f) {
  std::vector<std::int64_t> sigma{central_unchecked(f, {}) ? 1 : 0};
  IndependentSetWalker walker(f);
  walker.walk(static_cast<int>(f.hexagons().size()), [&](std::span<const FaceId> set) {
    if (sigma.size() <= set.size()) sigma.resize(set.size() + 1, 0);
    if (central_unchecked(f, set)) ++sigma[set.size()];
    return true;
  });
  while (sigma.size() > 1 && sigma.back() == 0) sigma.pop_back();
  return SextetPolynomial{std::move(sigma)};
}

std::vector<std::int64_t> independent_hexagon_set_counts(const FullereneGraph& f) {
  std::vector<std::int64_t> counts{1};
  IndependentSetWalker walker(f);
  walker.walk(static_cast<int>(f.hexagons().size()), [&](std::span<const FaceId> set) {
    if (counts.size() <= set.size()) counts.resize(set.size() + 1, 0);
    ++counts[set.size()];
    return true;
  });
  return counts;
}

int clar_number(const FullereneGraph& f) { return sextet_polynomial(f).degree(); }

int fries_number(const FullereneGraph& f, std::int64_t cap) {
  int best = 0;
  const auto& hexagons = f.hexagons();
  for_each_perfect_matching(f.embedding().graph(), cap, [&](const Matching& m) {
    int count = 0;
    for (FaceId h : hexagons)
      if (is_alternating(m, f.faces()[h].boundary)) ++count;
    best = std::max(best, count);
  });
  return best;
}

std::optional<GStar> find_g_star(const FullereneGraph& f) {
  const EmbeddedGraph& g = f.embedding();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    // The only face at neighbour u that avoids v is the one opposite edge uv.
    GStar candidate{v, {}};
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      const Vertex u = g.rotation(v)[i];
      FaceId opposite = -1;
      for (FaceId face : f.faces().faces_at(u))
        if (!f.faces()[face].contains(v)) opposite = face;
      ok = opposite >= 0 && f.is_hexagon(opposite);
      candidate.hexagons[i] = opposite;
    }
    if (!ok) continue;
    const auto& h = candidate.hexagons;
    if (f.faces_touch(h[0], h[1]) || f.faces_touch(h[0], h[2]) || f.faces_touch(h[1], h[2]))
      continue;
    std::sort(candidate.hexagons.begin(), candidate.hexagons.end());
    return candidate;
  }
  return std::nullopt;
}

std::vector<DichotomyRecord> hexagon_dichotomy_report(const FullereneGraph& f) {
  std::vector<DichotomyRecord> out;
  for (FaceId h : f.hexagons()) {
    const Subgraph rest = delete_vertices(f, f.faces()[h].boundary);
    out.push_back({h, has_perfect_matching(rest.graph), is_bipartite(rest.graph).bipartite});
  }
  return out;
}

}  // namespace resonantk
