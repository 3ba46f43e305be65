#pragma once

// Polygonal and pentagonal rings with their side statistics, tau/psi, and
// maximal pentagonal fragments.

#include <optional>
#include <string>
#include <vector>

#include "resonantk/plane_graph.hpp"

namespace resonantk {

/// Cyclic face sequence f_0..f_{l-1} whose consecutive faces share one edge,
/// non-consecutive faces are disjoint, and the shared edges form a matching.
struct Ring {
  std::vector<FaceId> faces;      ///< f_0 is the least id and f_1 < f_{l-1}
  std::vector<Edge> shared_edges;  ///< e_i = f_i ∩ f_{i+1}
  std::vector<Vertex> inner_cycle;  ///< boundary of the side with fewer 2-degree vertices
  std::vector<Vertex> outer_cycle;
  int length = 0;
  int s = 0;        ///< 2-degree vertices of the ring on the inner cycle
  int s_prime = 0;  ///< same on the outer cycle
  int r = 0;        ///< vertices strictly inside the inner cycle
  int n5 = 0;       ///< pentagons inside the inner cycle
  int n6 = 0;       ///< hexagons inside the inner cycle
  bool pentagonal = false;
  std::vector<FaceId> inner_faces;  ///< faces inside the inner cycle, ascending
  std::vector<FaceId> outer_faces;  ///< faces outside the outer cycle, ascending
};

enum class FaceFilter { pentagons_only, any };

/// Every ring of length 3..max_len, each reported once.
std::vector<Ring> find_polygonal_rings(const FullereneGraph& f, int max_len = 12,
                                       FaceFilter filter = FaceFilter::pentagons_only);

/// Recomputes the side statistics of ring.faces from the embedding, checks the
/// Euler identities and parity, and returns the rebuilt record. Throws
/// std::logic_error on any violation.
Ring ring_stats(const FullereneGraph& f, const Ring& ring);

struct TauResult {
  std::optional<int> value;
  std::vector<std::string> findings;  ///< sanity-check breaches, empty when clean
};

TauResult tau(const FullereneGraph& f);

/// Minimum s over pentagonal rings of length l.
std::optional<int> psi(const FullereneGraph& f, int l);

/// True when, for every length-5 ring, one side cycle bounds a face or both
/// cycles have length 10 and all five ring faces are hexagons.
bool length_five_rings_are_capped(const FullereneGraph& f);

enum class FragmentShape { pentagon, turtle, other };

const char* to_string(FragmentShape shape);

struct Fragment {
  std::vector<FaceId> faces;      ///< ascending
  std::vector<Vertex> boundary;   ///< boundary cycle, empty when the cluster is not a disk
  std::vector<Vertex> w;          ///< boundary vertices of degree 2 in the fragment, ascending
  int gamma = 0;
  bool pentagonal = true;
  bool disk = false;
  bool maximal = false;
  FragmentShape shape = FragmentShape::other;
};

/// Edge-connected pentagon clusters, ordered by least face id.
std::vector<Fragment> maximal_pentagonal_fragments(const FullereneGraph& f);

struct CapWitness {
  enum class Kind { r5, r6 };
  Kind kind = Kind::r5;
  Ring ring;
  FaceId inner_face = -1;  ///< the face bounded by the inner cycle
};

/// Pentagonal rings of length 5 or 6 whose inner cycle bounds a face. Throws
/// std::logic_error if some length-5 pentagonal ring has s != 0.
std::vector<CapWitness> detect_r5_r6(const FullereneGraph& f);

}  // namespace resonantk
