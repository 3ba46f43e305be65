#include <gtest/gtest.h>

#include "resonantk/catalog.hpp"
#include "resonantk/errors.hpp"
#include "resonantk/report.hpp"

using namespace resonantk;

TEST(Catalog, NamesAndLookup) {
  const std::vector<std::string> expected{"F20", "F24", "F28", "F30", "F32", "F36_1",
                                          "F36_2", "F40", "F48", "C60", "C70"};
  EXPECT_EQ(catalog_names(), expected);
  EXPECT_THROW(catalog_graph("F22"), ValidationError);
  for (const auto& name : catalog_names()) {
    const CatalogEntry e = catalog_graph(name);
    EXPECT_EQ(e.name, name);
    EXPECT_EQ(e.graph.vertex_count(), e.expected.vertices);
    EXPECT_EQ(static_cast<int>(e.graph.hexagons().size()), e.expected.hexagons);
    EXPECT_FALSE(e.provenance.empty());
  }
}

TEST(Catalog, EveryExpectedFactHolds) {
  for (const auto& name : catalog_names()) {
    const auto problems = verify_entry(catalog_graph(name));
    EXPECT_TRUE(problems.empty()) << name << ": " << (problems.empty() ? "" : problems.front());
  }
}

TEST(Catalog, VerifyReportsTamperedFacts) {
  CatalogEntry e = catalog_graph("F28");
  e.expected.clar = 7;
  e.expected.order = {ExpectedOrder::Kind::exact, 1};
  EXPECT_EQ(verify_entry(e).size(), 2u);
}

TEST(Catalog, IsomersAreDistinct) {
  std::set<CanonicalCode> codes;
  for (const auto& name : catalog_names()) codes.insert(canonical_code(catalog_graph(name).graph.embedding()));
  EXPECT_EQ(codes.size(), catalog_names().size());
}

TEST(Nanotube, Sizes) {
  for (int k = 1; k <= 5; ++k) {
    EXPECT_EQ(nanotube(Cap::r5, k).vertex_count(), 20 + 10 * k);
    EXPECT_EQ(nanotube(Cap::r6, k).vertex_count(), 24 + 12 * k);
  }
  EXPECT_THROW(nanotube(Cap::r5, 0), ValidationError);
  EXPECT_THROW(nanotube(Cap::r6, -3), ValidationError);
}

TEST(Report, DeterministicAndComplete) {
  const FullereneGraph f = catalog_graph("F28").graph;
  AnalysisOptions opt;
  opt.fries = true;
  const auto a = to_json_text(analyze(f, opt));
  EXPECT_EQ(a, to_json_text(analyze(f, opt)));
  const auto j = analyze(f, opt);
  for (const char* key : {"schema_version", "code_digest", "counts", "tau", "psi", "resonance_order",
                          "sextet_polynomial", "clar_number", "fries_number", "fragments", "r5_r6", "g_star",
                          "dichotomy"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["resonance_order"]["value"], "ALL");
  EXPECT_EQ(j["sextet_polynomial"], (std::vector<int>{4, 4, 1}));
  EXPECT_FALSE(analyze(f).contains("fries_number"));
  EXPECT_NE(to_plain_text(j).find("clar_number: "), std::string::npos);

  // relabelling changes neither the digest nor the invariants
  std::vector<Vertex> perm(static_cast<std::size_t>(f.vertex_count()));
  for (int i = 0; i < f.vertex_count(); ++i) perm[i] = f.vertex_count() - 1 - i;
  const auto k = analyze(validate_fullerene(f.embedding().relabeled(perm)), opt);
  EXPECT_EQ(k["code_digest"], j["code_digest"]);
  EXPECT_EQ(k["sextet_polynomial"], j["sextet_polynomial"]);
  EXPECT_EQ(k["tau"], j["tau"]);
}
