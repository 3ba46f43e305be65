#pragma once

// Leapfrog transform (truncation of the dual) realised on arcs, with face
// provenance, the canonical perfect matching M0, territories, and
// constructive certificates that any two disjoint hexagons of a leapfrog
// image are simultaneously alternating.

#include <vector>

#include "resonantk/matching.hpp"
#include "resonantk/plane_graph.hpp"

namespace resonantk {

struct FaceOrigin {
  enum class Kind { heritable, fresh };
  Kind kind = Kind::fresh;
  int source = -1;  ///< source face id (heritable) or source vertex id (fresh)

  friend bool operator==(const FaceOrigin&, const FaceOrigin&) = default;
};

/// Image vertex 3*u+i corresponds to the source arc (u, rotation(u)[i]).
struct LeapfrogResult {
  FullereneGraph image;
  Matching m0;                          ///< pairs each arc with its reverse
  std::vector<FaceOrigin> provenance;   ///< indexed by image face id
  std::vector<FaceId> heritable_face;   ///< source face id -> image face id
  std::vector<FaceId> fresh_face;       ///< source vertex id -> image face id
};

LeapfrogResult leapfrog(const FullereneGraph& f);

inline const std::vector<FaceOrigin>& classify_faces(const LeapfrogResult& r) { return r.provenance; }

struct Territory {
  FaceId center = -1;
  /// Fresh faces around the center in boundary order, starting with the one
  /// across the center's least boundary arc.
  std::vector<FaceId> ring;
};

/// Throws ValidationError when center is not heritable.
Territory territory(const LeapfrogResult& r, FaceId center);

struct TwoResonanceCertificate {
  enum class Construction {
    both_fresh,         ///< M0 itself
    ring_odd,           ///< M0 + h1 + h3 + h5 around the heritable hexagon
    ring_even,          ///< M0 + h0 + h2 + h4
    shared_territory,   ///< five ring flips through a common ring hexagon
    disjoint_odd_odd,   ///< odd triples of both territories
    disjoint_even_odd,  ///< even triple of the first, odd triple of the second
  };
  Matching matching;
  Construction construction = Construction::both_fresh;
  std::vector<FaceId> flipped;  ///< faces whose alternation was switched, in order
  bool fallback = false;        ///< primary case choice failed; an alternative succeeded
};

/// Perfect matching of r.image alternating on both hexagons, built from M0 by
/// flipping territory hexagons. Throws ValidationError for overlapping faces
/// or non-hexagons.
TwoResonanceCertificate two_resonance_certificate(const LeapfrogResult& r, FaceId f1, FaceId f2);

const char* to_string(TwoResonanceCertificate::Construction c);

}  // namespace resonantk
