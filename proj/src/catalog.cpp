#include "resonantk/catalog.hpp"

#include <algorithm>

#include "catalog_data.hpp"
#include "resonantk/errors.hpp"
#include "resonantk/leapfrog.hpp"
#include "resonantk/resonance.hpp"
#include "resonantk/rings.hpp"

namespace resonantk {

namespace {

// Cylinder of circumference n: top n-cycle, bands 2n-cycles, bottom n-cycle.
// Consecutive bands are joined by n rungs, producing bands-1 rings of hexagons.
FullereneGraph tube(int n, int bands) {
  const int two_n = 2 * n;
  const int vertex_count = 2 * n + bands * two_n;
  auto top = [&](int i) { return ((i % n) + n) % n; };
  auto band = [&](int j, int t) { return n + j * two_n + ((t % two_n) + two_n) % two_n; };
  auto bottom = [&](int i) { return n + bands * two_n + ((i % n) + n) % n; };

  std::vector<std::vector<Vertex>> cycles;
  std::vector<Vertex> cap;
  for (int i = 0; i < n; ++i) cap.push_back(top(i));
  cycles.push_back(cap);
  for (int i = 0; i < n; ++i)
    cycles.push_back({top(i), top(i + 1), band(0, 2 * i + 2), band(0, 2 * i + 1), band(0, 2 * i)});
  // rungs leave band j at odd offsets when j is even, at even offsets when j is odd
  for (int j = 0; j + 1 < bands; ++j) {
    const int q = 1 - j % 2;
    for (int i = 0; i < n; ++i) {
      const int t = 2 * i + q;
      cycles.push_back({band(j, t), band(j, t + 1), band(j, t + 2), band(j + 1, t + 2), band(j + 1, t + 1),
                        band(j + 1, t)});
    }
  }
  const int q = 1 - (bands - 1) % 2;
  for (int i = 0; i < n; ++i) {
    const int t = 2 * i + q;
    cycles.push_back({band(bands - 1, t), band(bands - 1, t + 1), band(bands - 1, t + 2), bottom(i + 1), bottom(i)});
  }
  cap.clear();
  for (int i = 0; i < n; ++i) cap.push_back(bottom(i));
  cycles.push_back(cap);
  return validate_fullerene(EmbeddedGraph::from_face_cycles(vertex_count, cycles));
}

ExpectedFacts three_resonant(int vertices, std::vector<std::int64_t> sextet, std::optional<int> tau) {
  ExpectedFacts e;
  e.vertices = vertices;
  e.hexagons = vertices / 2 - 10;
  e.sextet = std::move(sextet);
  e.tau_known = true;
  e.tau = tau;
  e.order = {ExpectedOrder::Kind::all, 0};
  e.three_resonant = true;
  return e;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"F20", "F24", "F28",   "F30", "F32", "F36_1",
                                              "F36_2", "F40", "F48", "C60", "C70"};
  return names;
}

CatalogEntry catalog_graph(std::string_view name) {
  if (name == "F20")
    return {"F20", tube(5, 1), three_resonant(20, {1}, 5), "dodecahedron: pentagon caps on a 5-fold zigzag band"};
  if (name == "F24")
    return {"F24", tube(6, 1), three_resonant(24, {1, 2, 1}, 6),
            "barrel: hexagon caps, two rings of six pentagons"};
  if (name == "C60") {
    CatalogEntry e{"C60", leapfrog(tube(5, 1)).image, three_resonant(60, {5, 320, 1240, 1912, 1510, 660, 160, 20, 1}, std::nullopt),
                   "leapfrog of the dodecahedron"};
    e.expected.clar = 8;
    return e;
  }
  for (const auto& frozen : detail::frozen_graphs()) {
    if (frozen.name != name) continue;
    CatalogEntry e{std::string(name), validate_fullerene(parse_graph(frozen.rot)), {},
                   "face spiral with pentagons at positions " + std::string(frozen.spiral)};
    if (name == "F28") e.expected = three_resonant(28, {4, 4, 1}, 8);
    if (name == "F32") e.expected = three_resonant(32, {9, 6, 1}, 9);
    if (name == "F36_1") e.expected = three_resonant(36, {2, 16, 20, 8, 1}, std::nullopt);
    if (name == "F36_2") e.expected = three_resonant(36, {1, 8, 18, 8, 1}, 10);
    if (name == "F40") e.expected = three_resonant(40, {25, 50, 35, 10, 1}, 10);
    if (name == "F48") e.expected = three_resonant(48, {4, 36, 109, 130, 67, 14, 1}, 12);
    if (name == "F30") {
      e.expected.vertices = 30;
      e.expected.hexagons = 5;
      e.expected.order = {ExpectedOrder::Kind::at_most, 1};
    }
    if (name == "C70") {
      e.expected.vertices = 70;
      e.expected.hexagons = 25;
      e.expected.tau_known = true;
      e.expected.order = {ExpectedOrder::Kind::exact, 2};
    }
    return e;
  }
  throw ValidationError("unknown catalog graph '" + std::string(name) + "'");
}

FullereneGraph nanotube(Cap cap, int hex_rings) {
  if (hex_rings < 1) throw ValidationError("nanotube needs at least one ring of hexagons");
  if (hex_rings > 1000) throw ValidationError("nanotube ring count too large");
  return tube(cap == Cap::r5 ? 5 : 6, hex_rings + 1);
}

std::vector<std::string> verify_entry(const CatalogEntry& entry) {
  std::vector<std::string> problems;
  const FullereneGraph& g = entry.graph;
  const ExpectedFacts& x = entry.expected;
  auto fail = [&](const std::string& what) { problems.push_back(entry.name + ": " + what); };

  if (g.vertex_count() != x.vertices) fail("vertex count " + std::to_string(g.vertex_count()));
  if (static_cast<int>(g.hexagons().size()) != x.hexagons)
    fail("hexagon count " + std::to_string(g.hexagons().size()));
  const SextetPolynomial poly = sextet_polynomial(g);
  if (x.sextet && poly.descending() != *x.sextet)
    fail("sextet polynomial " + join(poly.descending()) + ", expected " + join(*x.sextet));
  if (x.clar && poly.degree() != *x.clar) fail("Clar number " + std::to_string(poly.degree()));
  if (x.tau_known) {
    const TauResult t = tau(g);
    if (t.value != x.tau) fail("tau " + (t.value ? std::to_string(*t.value) : std::string("absent")));
    for (const auto& finding : t.findings) fail(finding);
  }
  const OrderReport order = resonance_order(g);
  switch (x.order.kind) {
    case ExpectedOrder::Kind::all:
      if (order.kind != OrderReport::Kind::all) fail("resonance order " + order.to_string() + ", expected ALL");
      break;
    case ExpectedOrder::Kind::exact:
      if (order.kind != OrderReport::Kind::exact || order.order != x.order.value)
        fail("resonance order " + order.to_string() + ", expected " + std::to_string(x.order.value));
      break;
    case ExpectedOrder::Kind::at_most:
      if (order.kind != OrderReport::Kind::exact || order.order > x.order.value)
        fail("resonance order " + order.to_string() + ", expected at most " + std::to_string(x.order.value));
      break;
  }
  return problems;
}

}  // namespace resonantk
