#include <gtest/gtest.h>

#include <random>

#include "resonantk/catalog.hpp"
#include "resonantk/errors.hpp"
#include "resonantk/leapfrog.hpp"
#include "resonantk/plane_graph.hpp"
#include "test_support.hpp"

using namespace resonantk;

namespace {

std::string dodecahedron_text() { return write_graph(catalog_graph("F20").graph.embedding()); }

void expect_error(const std::string& text, const std::string& fragment) {
  try {
    parse_graph(text);
    FAIL() << "expected error containing '" << fragment << "'";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

}  // namespace

TEST(ParseGraph, DodecahedronCounts) {
  const EmbeddedGraph g = parse_graph(dodecahedron_text());
  EXPECT_EQ(g.vertex_count(), 20);
  EXPECT_EQ(g.edge_count(), 30);
  EXPECT_EQ(g.graph().edge_count(), 30);
}

TEST(ParseGraph, CommentsAndRoundTrip) {
  const EmbeddedGraph g = parse_graph("# a comment\n\n" + dodecahedron_text());
  EXPECT_EQ(write_graph(g), dodecahedron_text());
  EXPECT_EQ(parse_graph(write_graph(g, "line one\nline two")).rotations(), g.rotations());
}

TEST(ParseGraph, RejectsVertexWithTwoNeighbours) {
  std::string text = dodecahedron_text();
  const auto pos = text.find("\n0: ");
  const auto eol = text.find('\n', pos + 1);
  text.replace(pos, eol - pos, "\n0: 1 4");
  expect_error(text, "non-cubic");
}

TEST(ParseGraph, RejectsAsymmetricAndDuplicateNeighbours) {
  expect_error("4\n0: 1 2 3\n1: 0 2 3\n2: 0 1 3\n3: 0 1 1\n", "duplicate neighbor");
  expect_error("4\n0: 1 2 3\n1: 0 2 3\n2: 0 1 3\n3: 1 2 1\n", "duplicate neighbor");
  expect_error("6\n0: 1 2 3\n1: 0 2 4\n2: 0 1 5\n3: 0 4 5\n4: 1 3 5\n5: 2 3 1\n", "asymmetric adjacency");
}

TEST(ParseGraph, RejectsNonSphericalRotation) {
  EmbeddedGraph g = parse_graph(dodecahedron_text());
  auto rot = g.rotations();
  std::swap(rot[0][1], rot[0][2]);
  const int v = 20, e = 30;
  ASSERT_EQ(v - e + oracle::traced_face_count(rot), 0);
  std::string text = "20\n";
  for (int i = 0; i < 20; ++i)
    text += std::to_string(i) + ": " + std::to_string(rot[i][0]) + " " + std::to_string(rot[i][1]) + " " +
            std::to_string(rot[i][2]) + "\n";
  expect_error(text, "non-spherical embedding: V - E + F = 0");
}

TEST(Faces, TracingCoversEveryArcOnce) {
  for (const auto& name : catalog_names()) {
    const FullereneGraph f = catalog_graph(name).graph;
    const EmbeddedGraph& g = f.embedding();
    std::vector<int> hits(static_cast<std::size_t>(3 * g.vertex_count()), 0);
    for (FaceId id = 0; id < g.faces().size(); ++id) {
      const auto& b = g.faces()[id].boundary;
      for (std::size_t i = 0; i < b.size(); ++i) {
        const Vertex u = b[i], w = b[(i + 1) % b.size()];
        ++hits[3 * u + g.position(u, w)];
        EXPECT_EQ(g.face_of_arc(u, w), id);
      }
    }
    for (int h : hits) EXPECT_EQ(h, 1) << name;
    EXPECT_EQ(g.faces().size(), oracle::traced_face_count(g.rotations())) << name;
    EXPECT_EQ(g.faces().size(), g.vertex_count() / 2 + 2) << name;
    EXPECT_EQ(static_cast<int>(f.hexagons().size()), g.vertex_count() / 2 - 10) << name;
  }
}

TEST(Faces, SuccessorConvention) {
  const EmbeddedGraph g = parse_graph(dodecahedron_text());
  for (const Face& face : g.faces()) {
    const auto& b = face.boundary;
    for (std::size_t i = 0; i < b.size(); ++i) {
      const Vertex u = b[i], v = b[(i + 1) % b.size()], w = b[(i + 2) % b.size()];
      EXPECT_EQ(g.next_clockwise(v, u), w);
    }
  }
}

TEST(Faces, KnownFaceCounts) {
  const auto f20 = catalog_graph("F20").graph;
  EXPECT_EQ(f20.faces().size(), 12);
  EXPECT_EQ(f20.pentagons().size(), 12u);
  const auto c60 = catalog_graph("C60").graph;
  EXPECT_EQ(c60.faces().size(), 32);
  EXPECT_EQ(c60.hexagons().size(), 20u);
  const auto c70 = catalog_graph("C70").graph;
  EXPECT_EQ(c70.faces().size(), 37);
  EXPECT_EQ(c70.hexagons().size(), 25u);
}

TEST(ValidateFullerene, RejectsSquaresAndTriangles) {
  // cube: six quadrilateral faces
  const char* cube = "8\n0: 1 3 4\n1: 2 0 5\n2: 3 1 6\n3: 0 2 7\n4: 7 5 0\n5: 4 6 1\n6: 5 7 2\n7: 6 4 3\n";
  const EmbeddedGraph g = parse_graph(cube);
  EXPECT_EQ(g.faces().size(), 6);
  EXPECT_THROW(validate_fullerene(g), ValidationError);
  const EmbeddedGraph k4 = parse_graph("4\n0: 1 2 3\n1: 0 3 2\n2: 0 1 3\n3: 0 2 1\n");
  EXPECT_THROW(validate_fullerene(k4), ValidationError);
}

TEST(ValidateFullerene, F24HasTwoHexagons) {
  EXPECT_EQ(catalog_graph("F24").graph.hexagons().size(), 2u);
}

TEST(DeleteVertices, BasicCases) {
  const FullereneGraph f20 = catalog_graph("F20").graph;
  const Subgraph all = delete_vertices(f20, std::vector<Vertex>{});
  EXPECT_EQ(all.graph.vertex_count(), 20);
  EXPECT_EQ(all.graph.edges(), f20.embedding().graph().edges());

  const Subgraph r5 = delete_vertices(f20, f20.faces()[0].boundary);
  EXPECT_EQ(r5.graph.vertex_count(), 15);
  EXPECT_EQ(r5.graph.edge_count(), 30 - 5 - 5);
  for (Vertex v = 0; v < r5.graph.vertex_count(); ++v) EXPECT_FALSE(f20.faces()[0].contains(r5.parent_of(v)));

  EXPECT_THROW(delete_vertices(f20, std::vector<Vertex>{20}), ValidationError);
}

TEST(IsBipartite, WitnessCases) {
  EXPECT_TRUE(is_bipartite(Graph(0)).bipartite);
  Graph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  const auto r = is_bipartite(c5);
  ASSERT_FALSE(r.bipartite);
  ASSERT_EQ(r.odd_cycle.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_TRUE(c5.has_edge(r.odd_cycle[i], r.odd_cycle[(i + 1) % 5]));

  const FullereneGraph c60 = catalog_graph("C60").graph;
  for (FaceId h : c60.hexagons()) {
    const auto res = is_bipartite(delete_vertices(c60, c60.faces()[h].boundary));
    ASSERT_FALSE(res.bipartite);
    const auto& cyc = res.odd_cycle;
    ASSERT_EQ(cyc.size() % 2, 1u);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      EXPECT_TRUE(c60.embedding().adjacent(cyc[i], cyc[(i + 1) % cyc.size()]));
      EXPECT_FALSE(c60.faces()[h].contains(cyc[i]));
    }
  }
}

TEST(CanonicalCode, InvariantUnderRelabellingAndReflection) {
  std::mt19937 rng(20240611);
  for (const auto& name : catalog_names()) {
    const EmbeddedGraph g = catalog_graph(name).graph.embedding();
    const CanonicalCode code = canonical_code(g);
    EXPECT_EQ(code, canonical_code(g));
    EXPECT_EQ(code, canonical_code(g.mirrored())) << name;
    for (int trial = 0; trial < 5; ++trial) {
      const auto perm = oracle::random_permutation(rng, g.vertex_count());
      const EmbeddedGraph h = g.relabeled(perm);
      EXPECT_EQ(code, canonical_code(h)) << name;
      EXPECT_EQ(code, canonical_code(h.mirrored())) << name;
    }
  }
}

TEST(CanonicalCode, SeparatesIsomers) {
  EXPECT_NE(canonical_code(catalog_graph("F20").graph.embedding()),
            canonical_code(catalog_graph("F24").graph.embedding()));
  EXPECT_NE(canonical_code(catalog_graph("F36_1").graph.embedding()),
            canonical_code(catalog_graph("F36_2").graph.embedding()));
  EXPECT_NE(canonical_code(catalog_graph("F48").graph.embedding()),
            canonical_code(nanotube(Cap::r6, 2).embedding()));
  EXPECT_EQ(code_digest(canonical_code(catalog_graph("F24").graph.embedding())).size(), 16u);
}

TEST(CanonicalCode, LeapfrogOfDodecahedronIsTheSpiralC60) {
  const EmbeddedGraph spiral = read_graph_file(RESONANTK_TEST_DATA "/c60_spiral.rot");
  const FullereneGraph f20 = catalog_graph("F20").graph;
  EXPECT_EQ(canonical_code(leapfrog(f20).image.embedding()), canonical_code(spiral));
}

TEST(CyclicEdgeConnectivity, FullerenesAreCyclicallyFiveConnected) {
  for (const char* name : {"F20", "F24", "F28", "F30", "C60"})
    EXPECT_TRUE(verify_cyclic_edge_connectivity(catalog_graph(name).graph, 4)) << name;
}

TEST(CyclicEdgeConnectivity, Guards) {
  EXPECT_THROW(verify_cyclic_edge_connectivity(catalog_graph("F20").graph, 5), GuardExceeded);
  EXPECT_THROW(verify_cyclic_edge_connectivity(nanotube(Cap::r6, 7), 4), GuardExceeded);
}
