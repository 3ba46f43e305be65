#include "resonantk/leapfrog.hpp"

#include <algorithm>
#include <stdexcept>

#include "resonantk/errors.hpp"

namespace resonantk {

namespace {

Vertex arc_vertex(const EmbeddedGraph& g, Vertex u, Vertex v) { return 3 * u + g.position(u, v); }

// Image face traced along the given cycle (the face containing c0, c1, c2).
FaceId locate_face(const EmbeddedGraph& image, const std::vector<Vertex>& cycle) {
  for (FaceId f : {image.face_of_arc(cycle[0], cycle[1]), image.face_of_arc(cycle[1], cycle[0])})
    if (image.faces()[f].contains(cycle[2])) return f;
  throw std::logic_error("leapfrog face cycle not found in image");
}

bool adjoins(const FullereneGraph& g, FaceId a, FaceId b) {
  return a != b && g.shared_edge(a, b).has_value();
}

}  // namespace

LeapfrogResult leapfrog(const FullereneGraph& f) {
  const EmbeddedGraph& g = f.embedding();
  const int n = g.vertex_count();

  std::vector<std::vector<Vertex>> cycles;
  // heritable: the arcs of each source face, in tracing order
  for (const Face& face : f.faces()) {
    std::vector<Vertex> cyc;
    const auto& b = face.boundary;
    for (std::size_t i = 0; i < b.size(); ++i) cyc.push_back(arc_vertex(g, b[i], b[(i + 1) % b.size()]));
    cycles.push_back(std::move(cyc));
  }
  // fresh: in(x), out(next(x)), in(next(x)), ... around each source vertex
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> cyc;
    Vertex x = g.rotation(v)[0];
    for (int k = 0; k < 3; ++k) {
      const Vertex y = g.next_clockwise(v, x);
      cyc.push_back(arc_vertex(g, x, v));
      cyc.push_back(arc_vertex(g, v, y));
      x = y;
    }
    cycles.push_back(std::move(cyc));
  }

  EmbeddedGraph image = EmbeddedGraph::from_face_cycles(3 * n, cycles);
  const int source_faces = f.faces().size();
  std::vector<FaceOrigin> provenance(static_cast<std::size_t>(image.faces().size()));
  std::vector<FaceId> heritable(static_cast<std::size_t>(source_faces)), fresh(static_cast<std::size_t>(n));
  for (int c = 0; c < static_cast<int>(cycles.size()); ++c) {
    const FaceId id = locate_face(image, cycles[c]);
    if (c < source_faces) {
      provenance[id] = {FaceOrigin::Kind::heritable, c};
      heritable[c] = id;
    } else {
      provenance[id] = {FaceOrigin::Kind::fresh, c - source_faces};
      fresh[c - source_faces] = id;
    }
  }

  Matching m0(3 * n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.rotation(u))
      if (u < v) m0.add(arc_vertex(g, u, v), arc_vertex(g, v, u));

  return LeapfrogResult{validate_fullerene(std::move(image)), std::move(m0), std::move(provenance),
                        std::move(heritable), std::move(fresh)};
}

Territory territory(const LeapfrogResult& r, FaceId center) {
  if (center < 0 || center >= r.image.faces().size() ||
      r.provenance[center].kind != FaceOrigin::Kind::heritable)
    throw ValidationError("face " + std::to_string(center) + " is not heritable");
  Territory t{center, {}};
  const auto& b = r.image.faces()[center].boundary;
  for (std::size_t i = 0; i < b.size(); ++i)
    t.ring.push_back(r.image.embedding().face_of_arc(b[(i + 1) % b.size()], b[i]));
  return t;
}

const char* to_string(TwoResonanceCertificate::Construction c) {
  using C = TwoResonanceCertificate::Construction;
  switch (c) {
    case C::both_fresh: return "both_fresh";
    case C::ring_odd: return "ring_odd";
    case C::ring_even: return "ring_even";
    case C::shared_territory: return "shared_territory";
    case C::disjoint_odd_odd: return "disjoint_odd_odd";
    case C::disjoint_even_odd: return "disjoint_even_odd";
  }
  return "unknown";
}

namespace {

using Construction = TwoResonanceCertificate::Construction;

struct Attempt {
  Construction construction;
  std::vector<FaceId> flips;
};

std::optional<Matching> apply_flips(const LeapfrogResult& r, const std::vector<FaceId>& flips, FaceId f1,
                                    FaceId f2) {
  Matching m = r.m0;
  for (FaceId h : flips) {
    const auto& b = r.image.faces()[h].boundary;
    if (!is_alternating(m, b)) return std::nullopt;
    m = symmetric_difference(m, b);
  }
  if (!m.is_perfect() || !is_alternating(m, r.image.faces()[f1].boundary) ||
      !is_alternating(m, r.image.faces()[f2].boundary))
    return std::nullopt;
  return m;
}

std::vector<FaceId> pick(const std::vector<FaceId>& ring, std::initializer_list<int> offsets, int base = 0) {
  std::vector<FaceId> out;
  const int k = static_cast<int>(ring.size());
  for (int o : offsets) out.push_back(ring[static_cast<std::size_t>(((base + o) % k + k) % k)]);
  return out;
}

std::vector<FaceId> concat(std::vector<FaceId> a, const std::vector<FaceId>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool any_adjoins(const FullereneGraph& g, const std::vector<FaceId>& from, const std::vector<FaceId>& to) {
  for (FaceId a : from)
    for (FaceId b : to)
      if (adjoins(g, a, b)) return true;
  return false;
}

}  // namespace

TwoResonanceCertificate two_resonance_certificate(const LeapfrogResult& r, FaceId f1, FaceId f2) {
  const FullereneGraph& img = r.image;
  for (FaceId h : {f1, f2})
    if (h < 0 || h >= img.faces().size() || !img.is_hexagon(h))
      throw ValidationError("face " + std::to_string(h) + " is not a hexagon");
  if (f1 == f2 || img.faces_touch(f1, f2)) throw ValidationError("hexagons are not disjoint");

  const auto heritable = [&](FaceId h) { return r.provenance[h].kind == FaceOrigin::Kind::heritable; };
  if (!heritable(f1) && heritable(f2)) std::swap(f1, f2);

  // Primary choice first; the rest are alternatives tried only if it fails.
  std::vector<Attempt> attempts;
  if (!heritable(f1)) {
    attempts.push_back({Construction::both_fresh, {}});
  } else if (!heritable(f2)) {
    const auto ring = territory(r, f1).ring;
    const auto odd = pick(ring, {1, 3, 5});
    const auto even = pick(ring, {0, 2, 4});
    if (!any_adjoins(img, {f2}, odd)) {
      attempts.push_back({Construction::ring_odd, odd});
      attempts.push_back({Construction::ring_even, even});
    } else {
      attempts.push_back({Construction::ring_even, even});
      attempts.push_back({Construction::ring_odd, odd});
    }
  } else {
    const auto ring1 = territory(r, f1).ring;
    const auto ring2 = territory(r, f2).ring;
    std::vector<std::pair<int, int>> common;
    for (int i = 0; i < static_cast<int>(ring1.size()); ++i)
      for (int j = 0; j < static_cast<int>(ring2.size()); ++j)
        if (ring1[i] == ring2[j]) common.push_back({i, j});
    if (!common.empty()) {
      for (auto [i0, j0] : common)
        attempts.push_back({Construction::shared_territory,
                            concat(pick(ring1, {0, 2, 4}, i0), pick(ring2, {2, 4}, j0))});
    } else {
      const auto odd1 = pick(ring1, {1, 3, 5});
      const auto even1 = pick(ring1, {0, 2, 4});
      const auto odd2 = pick(ring2, {1, 3, 5});
      const auto even2 = pick(ring2, {0, 2, 4});
      auto t2 = ring2;
      t2.push_back(f2);
      const Attempt odd_odd{Construction::disjoint_odd_odd, concat(odd1, odd2)};
      const Attempt even_odd{Construction::disjoint_even_odd, concat(even1, odd2)};
      if (!any_adjoins(img, t2, odd1)) {
        attempts.push_back(odd_odd);
        attempts.push_back(even_odd);
      } else {
        attempts.push_back(even_odd);
        attempts.push_back(odd_odd);
      }
      attempts.push_back({Construction::disjoint_odd_odd, concat(odd1, even2)});
      attempts.push_back({Construction::disjoint_even_odd, concat(even1, even2)});
    }
  }

  for (std::size_t i = 0; i < attempts.size(); ++i) {
    if (auto m = apply_flips(r, attempts[i].flips, f1, f2))
      return {std::move(*m), attempts[i].construction, attempts[i].flips, i > 0};
  }
  throw std::logic_error("no territory construction alternates on both hexagons");
}

}  // namespace resonantk
