// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <unistd.h>

#include "resonantk/catalog.hpp"
#include "resonantk/leapfrog.hpp"
#include "resonantk/matching.hpp"
#include "resonantk/report.hpp"
#include "resonantk/resonance.hpp"
#include "resonantk/rings.hpp"
#include "test_support.hpp"

using namespace resonantk;

namespace {

const std::vector<std::string> kNine{"F20", "F24", "F28", "F32", "F36_1", "F36_2", "F40", "F48", "C60"};

const FullereneGraph& named(const std::string& name) {
  static std::map<std::string, FullereneGraph> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, catalog_graph(name).graph).first;
  return it->second;
}

std::vector<std::pair<std::string, FullereneGraph>> catalog_and_tubes() {
  std::vector<std::pair<std::string, FullereneGraph>> out;
  for (const auto& n : catalog_names()) out.emplace_back(n, named(n));
  for (int k = 1; k <= 3; ++k) {
    out.emplace_back("nanotube(R5," + std::to_string(k) + ")", nanotube(Cap::r5, k));
    out.emplace_back("nanotube(R6," + std::to_string(k) + ")", nanotube(Cap::r6, k));
  }
  return out;
}

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_ < 5) detail_ += (detail_.empty() ? "" : "; ") + what;
    ++failures_;
  }
  bool passed() const { return failures_ == 0; }
  std::string detail() const {
    return failures_ <= 5 ? detail_ : detail_ + "; +" + std::to_string(failures_ - 5) + " more";
  }

 private:
  int failures_ = 0;
  std::string detail_;
};

// Descending coefficients as printed in the literature.
bool criterion1(Check& c) {
  const std::vector<std::pair<std::string, std::vector<std::int64_t>>> table{
      {"F20", {1}},
      {"F24", {1, 2, 1}},
      {"F28", {4, 4, 1}},
      {"F32", {9, 6, 1}},
      {"F36_1", {2, 16, 20, 8, 1}},
      {"F36_2", {1, 8, 18, 8, 1}},
      {"F40", {25, 50, 35, 10, 1}},
      {"F48", {4, 36, 109, 130, 67, 14, 1}},
      {"C60", {5, 320, 1240, 1912, 1510, 660, 160, 20, 1}},
  };
  for (const auto& [name, want] : table) {
    const auto got = sextet_polynomial(named(name));
    c.expect(got.descending() == want, name + " gives " + got.to_string());
  }
  return c.passed();
}

bool criterion2(Check& c) {
  int hexagons = 0;
  for (const auto& [name, f] : catalog_and_tubes())
    for (FaceId h : f.hexagons()) {
      ++hexagons;
      const std::vector<FaceId> one{h};
      c.expect(is_resonant_pattern(f, one).resonant, name + " hexagon " + std::to_string(h) + " not resonant");
      c.expect(!is_bipartite(delete_vertices(f, f.faces()[h].boundary)).bipartite,
               name + " minus hexagon " + std::to_string(h) + " is bipartite");
    }
  c.expect(hexagons > 0, "no hexagons checked");
  return c.passed();
}

std::vector<LeapfrogResult> leapfrog_images() {
  std::vector<LeapfrogResult> out;
  for (const char* name : {"F20", "F24", "F28", "F36_1"}) out.push_back(leapfrog(named(name)));
  return out;
}

bool criterion3(Check& c) {
  for (const LeapfrogResult& r : leapfrog_images()) {
    const std::string tag = "L(F" + std::to_string(r.image.vertex_count() / 3) + ")";
    for (const auto& pair : disjoint_hexagon_sets(r.image, 2)) {
      const TwoResonanceCertificate cert = two_resonance_certificate(r, pair[0], pair[1]);
      bool constructive = cert.matching.is_perfect() && cert.matching.is_valid_in(r.image.embedding().graph());
      for (FaceId h : pair) constructive = constructive && is_alternating(cert.matching, r.image.faces()[h].boundary);
      const bool decided = is_resonant_pattern(r.image, pair).resonant;
      const std::string p = tag + " pair " + std::to_string(pair[0]) + "," + std::to_string(pair[1]);
      c.expect(constructive, p + ": certificate invalid");
      c.expect(decided, p + ": not resonant");
      c.expect(constructive == decided, p + ": certificate and decision disagree");
    }
  }
  return c.passed();
}

bool criterion4(Check& c) {
  for (const LeapfrogResult& r : leapfrog_images()) {
    const std::string tag = "L(F" + std::to_string(r.image.vertex_count() / 3) + ")";
    std::vector<FaceId> fresh;
    std::vector<int> cover(static_cast<std::size_t>(r.image.vertex_count()), 0);
    for (FaceId id = 0; id < r.image.faces().size(); ++id) {
      if (r.provenance[id].kind == FaceOrigin::Kind::fresh) {
        fresh.push_back(id);
        c.expect(is_alternating(r.m0, r.image.faces()[id].boundary), tag + " fresh face not M0-alternating");
      } else {
        for (Vertex v : r.image.faces()[id].boundary) ++cover[v];
      }
    }
    c.expect(r.m0.is_perfect() && r.m0.is_valid_in(r.image.embedding().graph()), tag + " M0 not perfect");
    c.expect(std::all_of(cover.begin(), cover.end(), [](int k) { return k == 1; }),
             tag + " heritable faces do not partition V");
    c.expect(static_cast<int>(fresh.size()) == r.image.vertex_count() / 3, tag + " fresh count");
  }
  return c.passed();
}

bool criterion5(Check& c) {
  const FullereneGraph& c70 = named("C70");
  const OrderReport r = resonance_order(c70);
  c.expect(r.kind == OrderReport::Kind::exact && r.order == 2, "order is " + r.to_string());
  c.expect(r.failing_set.size() == 3, "failing set size " + std::to_string(r.failing_set.size()));
  if (r.failing_set.size() == 3) {
    c.expect(!has_perfect_matching(delete_vertices(c70, [&] {
                                     std::vector<Vertex> vs;
                                     for (FaceId h : r.failing_set)
                                       vs.insert(vs.end(), c70.faces()[h].boundary.begin(),
                                                 c70.faces()[h].boundary.end());
                                     return vs;
                                   }())
                                     .graph),
             "failing set is resonant");
  }
  return c.passed();
}

bool criterion6(Check& c) {
  std::vector<std::pair<std::string, FullereneGraph>> graphs{{"F30", named("F30")}};
  for (int k = 1; k <= 3; ++k) {
    graphs.emplace_back("nanotube(R5," + std::to_string(k) + ")", nanotube(Cap::r5, k));
    graphs.emplace_back("nanotube(R6," + std::to_string(k) + ")", nanotube(Cap::r6, k));
  }
  for (const auto& [name, f] : graphs) {
    const OrderReport r = resonance_order(f);
    c.expect(r.kind == OrderReport::Kind::exact && r.order <= 1, name + " order " + r.to_string());
    c.expect(!detect_r5_r6(f).empty(), name + " has no R5/R6");
  }
  return c.passed();
}

bool criterion7(Check& c) {
  std::vector<std::string> all;
  for (const auto& name : catalog_names()) {
    const FullereneGraph& f = named(name);
    if (resonance_order(f).kind != OrderReport::Kind::all) continue;
    all.push_back(name);
    c.expect(sextet_polynomial(f).coefficients == independent_hexagon_set_counts(f),
             name + ": sextet counts differ from independent set counts");
  }
  c.expect(all == kNine, "ALL set has " + std::to_string(all.size()) + " graphs");
  return c.passed();
}

bool criterion8(Check& c) {
  const std::map<std::string, int> want{{"F20", 5},  {"F24", 6},  {"F28", 8}, {"F32", 9},
                                        {"F36_2", 10}, {"F40", 10}, {"F48", 12}};
  std::size_t rings = 0;
  for (const auto& [name, f] : catalog_and_tubes()) {
    for (const Ring& r : find_polygonal_rings(f, 12, FaceFilter::any)) {
      ++rings;
      const std::string tag = name + " ring of length " + std::to_string(r.length);
      int excess = 0;
      for (FaceId g : r.faces) excess += f.faces()[g].size() - 4;
      c.expect(r.s + r.s_prime == excess, tag + ": s + s' mismatch");
      c.expect(2 * (r.n5 + r.n6) == r.s + r.r + 2, tag + ": n5+n6 = (s+r+2)/2 fails");
      c.expect(5 * r.n5 + 6 * r.n6 == 2 * r.s + 3 * r.r + r.length, tag + ": 5n5+6n6 = 2s+3r+l fails");
      c.expect(r.n5 == 6 + r.s - r.length, tag + ": n5 = 6+s-l fails");
      c.expect(2 * r.n6 == 2 * r.length + r.r - r.s - 10, tag + ": n6 = l+(r-s)/2-5 fails");
      c.expect((r.r - r.s) % 2 == 0, tag + ": r and s differ in parity");
      if (r.pentagonal) c.expect(r.s + r.s_prime == r.length, tag + ": s + s' != l");
    }
    const TauResult t = tau(f);
    c.expect(t.value != 7, name + " has tau 7");
    if (auto it = want.find(name); it != want.end())
      c.expect(t.value == it->second,
               name + " tau " + (t.value ? std::to_string(*t.value) : "none") + ", want " + std::to_string(it->second));
  }
  c.expect(rings > 0, "no rings scanned");
  return c.passed();
}

bool criterion9(Check& c) {
  for (const auto& name : kNine) {
    if (name == "F20") continue;
    for (const Fragment& fr : maximal_pentagonal_fragments(named(name)))
      if (fr.maximal)
        c.expect(fr.shape == FragmentShape::pentagon || fr.shape == FragmentShape::turtle,
                 name + " has a maximal fragment of " + std::to_string(fr.faces.size()) + " pentagons");
  }
  int turtles = 0;
  for (const Fragment& fr : maximal_pentagonal_fragments(named("F36_1")))
    turtles += fr.maximal && fr.shape == FragmentShape::turtle ? 1 : 0;
  c.expect(turtles == 2, "F36_1 has " + std::to_string(turtles) + " turtles");
  return c.passed();
}

bool criterion10(Check& c) {
  c.expect(clar_number(named("C60")) == 8, "clar(C60) = " + std::to_string(clar_number(named("C60"))));
  for (const auto& name : catalog_names()) {
    const FullereneGraph& f = named(name);
    const int clar = clar_number(f);
    c.expect(clar <= (f.vertex_count() - 12) / 6, name + " clar " + std::to_string(clar) + " above bound");
  }
  return c.passed();
}

bool criterion11(Check& c) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> size(0, 16);
  std::uniform_real_distribution<double> density(0.05, 0.7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(rng, size(rng), density(rng));
    const Matching m = maximum_matching(g);
    c.expect(m.is_valid_in(g), "trial " + std::to_string(trial) + ": invalid matching");
    c.expect(m.size() == oracle::brute_force_matching_size(g), "trial " + std::to_string(trial) + ": size differs");
  }
  return c.passed();
}

bool criterion12(Check& c) {
  const auto path = std::filesystem::temp_directory_path() / ("resonantk_acceptance_" + std::to_string(::getpid()) + ".rot");
  {
    std::ofstream out(path);
    out << write_graph(named("C70").embedding(), "C70");
  }
  AnalysisOptions opt;
  opt.fries = true;
  const std::string a = to_json_text(analyze(validate_fullerene(read_graph_file(path.string())), opt));
  const std::string b = to_json_text(analyze(validate_fullerene(read_graph_file(path.string())), opt));
  std::filesystem::remove(path);
  c.expect(a == b, "JSON differs between runs");
  c.expect(a.size() > 100, "JSON unexpectedly short");
  return c.passed();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool(Check&)>>> criteria{
      {"sextet polynomials of the nine 3-resonant graphs", criterion1},
      {"every hexagon is resonant and leaves a non-bipartite graph", criterion2},
      {"leapfrog images are 2-resonant (certificate and decision agree)", criterion3},
      {"fresh faces are M0-alternating, heritable faces partition V", criterion4},
      {"C70 has resonance order exactly 2", criterion5},
      {"R5/R6 capped tubes and F30 have order at most 1", criterion6},
      {"order ALL for exactly the nine graphs", criterion7},
      {"ring identities, parity and tau values", criterion8},
      {"maximal pentagonal fragments are pentagons or turtles", criterion9},
      {"Clar numbers", criterion10},
      {"maximum matching agrees with brute force", criterion11},
      {"analyze output is byte-identical across runs", criterion12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criteria[i].second(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    ok = ok && check.passed();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2zu  %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                ok ? "" : ": ", ok ? "" : check.detail().c_str());
    failed += ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
