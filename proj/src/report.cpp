#include "resonantk/report.hpp"

#include <map>
#include <sstream>

#include "resonantk/resonance.hpp"
#include "resonantk/rings.hpp"

namespace resonantk {

using nlohmann::json;

namespace {

json ring_json(const Ring& r) {
  return {{"faces", r.faces}, {"length", r.length}, {"s", r.s},   {"s_prime", r.s_prime},
          {"r", r.r},         {"n5", r.n5},         {"n6", r.n6}, {"pentagonal", r.pentagonal}};
}

}  // namespace

json analyze(const FullereneGraph& f, const AnalysisOptions& options) {
  json report;
  report["schema_version"] = kReportSchemaVersion;
  report["code_digest"] = code_digest(canonical_code(f.embedding()));
  report["counts"] = {{"vertices", f.vertex_count()},
                      {"edges", f.embedding().edge_count()},
                      {"faces", f.faces().size()},
                      {"pentagons", f.pentagons().size()},
                      {"hexagons", f.hexagons().size()}};

  const auto rings = find_polygonal_rings(f, options.max_ring_length, FaceFilter::pentagons_only);
  std::map<int, int> psi_table;
  json ring_list = json::array();
  for (const Ring& r : rings) {
    auto [it, fresh] = psi_table.emplace(r.length, r.s);
    if (!fresh) it->second = std::min(it->second, r.s);
    ring_list.push_back(ring_json(r));
  }
  const TauResult t = tau(f);
  report["tau"] = t.value ? json(*t.value) : json(nullptr);
  report["tau_findings"] = t.findings;
  json psi = json::object();
  for (auto [l, s] : psi_table) psi[std::to_string(l)] = s;
  report["psi"] = psi;
  report["pentagonal_rings"] = ring_list;

  OrderOptions order_options;
  order_options.max_k = options.max_k;
  const OrderReport order = resonance_order(f, order_options);
  const char* kind = order.kind == OrderReport::Kind::all      ? "all"
                     : order.kind == OrderReport::Kind::exact ? "exact"
                                                                : "at_least";
  report["resonance_order"] = {{"value", order.to_string()},
                               {"kind", kind},
                               {"order", order.order},
                               {"failing_set", order.failing_set},
                               {"sets_tested", order.sets_tested}};

  const SextetPolynomial poly = sextet_polynomial(f);
  report["sextet_polynomial"] = poly.descending();
  report["sextet_polynomial_text"] = poly.to_string();
  report["clar_number"] = poly.degree();
  if (options.fries) report["fries_number"] = fries_number(f, options.pm_cap);

  json fragments = json::array();
  for (const Fragment& fr : maximal_pentagonal_fragments(f)) {
    fragments.push_back({{"faces", fr.faces},
                         {"shape", to_string(fr.shape)},
                         {"gamma", fr.gamma},
                         {"w", fr.w.size()},
                         {"disk", fr.disk},
                         {"maximal", fr.maximal}});
  }
  report["fragments"] = fragments;

  json caps = json::array();
  for (const CapWitness& w : detect_r5_r6(f))
    caps.push_back({{"kind", w.kind == CapWitness::Kind::r5 ? "R5" : "R6"},
                    {"faces", w.ring.faces},
                    {"inner_face", w.inner_face}});
  report["r5_r6"] = caps;

  if (const auto g = find_g_star(f))
    report["g_star"] = {{"vertex", g->vertex}, {"hexagons", g->hexagons}};
  else
    report["g_star"] = nullptr;

  int central = 0, bipartite = 0;
  for (const DichotomyRecord& d : hexagon_dichotomy_report(f)) {
    central += d.central ? 1 : 0;
    bipartite += d.complement_bipartite ? 1 : 0;
  }
  report["dichotomy"] = {{"hexagons", f.hexagons().size()},
                         {"central", central},
                         {"complement_bipartite", bipartite}};
  return report;
}

std::string to_json_text(const json& report) { return report.dump(2) + "\n"; }

std::string to_plain_text(const json& report) {
  std::ostringstream out;
  for (const auto& [key, value] : report.items()) {
    if (key == "pentagonal_rings") {
      out << key << ": " << value.size() << "\n";
      continue;
    }
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  return out.str();
}

}  // namespace resonantk
