// resonantk command-line front end.

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "resonantk/catalog.hpp"
#include "resonantk/errors.hpp"
#include "resonantk/leapfrog.hpp"
#include "resonantk/matching.hpp"
#include "resonantk/report.hpp"
#include "resonantk/resonance.hpp"
#include "resonantk/rings.hpp"

using namespace resonantk;
using nlohmann::json;

namespace {

FullereneGraph load(const std::string& path) { return validate_fullerene(read_graph_file(path)); }

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

json rings_json(const std::vector<Ring>& rings) {
  json out = json::array();
  for (const Ring& r : rings)
    out.push_back({{"faces", r.faces},
                   {"length", r.length},
                   {"s", r.s},
                   {"s_prime", r.s_prime},
                   {"r", r.r},
                   {"n5", r.n5},
                   {"n6", r.n6},
                   {"pentagonal", r.pentagonal},
                   {"inner_cycle", r.inner_cycle},
                   {"outer_cycle", r.outer_cycle}});
  return out;
}

json fragments_json(const std::vector<Fragment>& fragments) {
  json out = json::array();
  for (const Fragment& f : fragments)
    out.push_back({{"faces", f.faces},
                   {"boundary", f.boundary},
                   {"w", f.w},
                   {"gamma", f.gamma},
                   {"pentagonal", f.pentagonal},
                   {"disk", f.disk},
                   {"maximal", f.maximal},
                   {"shape", to_string(f.shape)}});
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resonance analysis of fullerene graphs given as rotation systems"};
  app.require_subcommand(1);

  std::string input, output;
  std::vector<std::string> inputs;

  auto* validate = app.add_subcommand("validate", "check that a file describes a fullerene graph");
  validate->add_option("file", input)->required();

  bool as_json = false, with_fries = false;
  std::int64_t pm_cap = 0;
  auto* analyze_cmd = app.add_subcommand("analyze", "full analysis report");
  analyze_cmd->add_option("files", inputs)->required();
  analyze_cmd->add_flag("--json", as_json, "emit JSON");
  analyze_cmd->add_flag("--fries", with_fries, "include the Fries number");
  analyze_cmd->add_option("--pm-cap", pm_cap, "perfect matching enumeration cap");

  int max_k = 0;
  auto* order = app.add_subcommand("order", "k-resonance order with a failing hexagon set");
  order->add_option("file", input)->required();
  order->add_option("--max-k", max_k, "stop after sets of this size");

  auto* sextet = app.add_subcommand("sextet", "sextet polynomial");
  sextet->add_option("file", input)->required();
  auto* clar = app.add_subcommand("clar", "Clar number");
  clar->add_option("file", input)->required();
  auto* fries = app.add_subcommand("fries", "Fries number");
  fries->add_option("file", input)->required();
  fries->add_option("--pm-cap", pm_cap, "perfect matching enumeration cap");

  std::string matching_path, provenance_path;
  auto* leap = app.add_subcommand("leapfrog", "leapfrog transform");
  leap->add_option("file", input)->required();
  leap->add_option("-o,--output", output, "output .rot file")->required();
  leap->add_option("--emit-matching", matching_path, "write the canonical perfect matching");
  leap->add_option("--provenance", provenance_path, "write face provenance as JSON");

  int max_len = 12;
  bool pentagonal = false;
  auto* rings = app.add_subcommand("rings", "polygonal rings");
  rings->add_option("file", input)->required();
  rings->add_option("--max-len", max_len, "maximum ring length")->check(CLI::Range(3, 12));
  rings->add_flag("--pentagonal", pentagonal, "pentagonal rings only");
  rings->add_flag("--json", as_json, "emit JSON");

  auto* fragments = app.add_subcommand("fragments", "pentagon clusters and maximal pentagonal fragments");
  fragments->add_option("file", input)->required();
  fragments->add_flag("--json", as_json, "emit JSON");

  auto* gstar = app.add_subcommand("gstar", "vertex with three disjoint hexagons around it");
  gstar->add_option("file", input)->required();

  auto* catalog = app.add_subcommand("catalog", "built-in graphs");
  catalog->require_subcommand(1);
  auto* catalog_list = catalog->add_subcommand("list", "list names");
  std::string name;
  auto* catalog_emit = catalog->add_subcommand("emit", "write a catalog graph");
  catalog_emit->add_option("name", name)->required();
  catalog_emit->add_option("-o,--output", output, "output .rot file");
  auto* catalog_verify = catalog->add_subcommand("verify", "recheck every expected fact");

  std::string cap = "r5";
  int hex_rings = 1;
  auto* tube = app.add_subcommand("nanotube", "R5- or R6-capped nanotube");
  tube->add_option("--cap", cap)->check(CLI::IsMember({"r5", "r6"}))->required();
  tube->add_option("--rings", hex_rings, "rings of hexagons")->required();
  tube->add_option("-o,--output", output, "output .rot file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const std::int64_t cap_value = pm_cap > 0 ? pm_cap : perfect_matching_cap_from_env();

    if (*validate) {
      const FullereneGraph f = load(input);
      std::cout << "ok: fullerene with " << f.vertex_count() << " vertices, " << f.pentagons().size()
                << " pentagons, " << f.hexagons().size() << " hexagons\n";
    } else if (*analyze_cmd) {
      AnalysisOptions options;
      options.fries = with_fries;
      options.pm_cap = cap_value;
      std::vector<std::future<std::string>> jobs;
      for (const auto& path : inputs)
        jobs.push_back(std::async(std::launch::async, [&, path] {
          const json report = analyze(load(path), options);
          return as_json ? to_json_text(report) : to_plain_text(report);
        }));
      // output follows input order; the first failure wins
      std::vector<std::string> texts;
      for (auto& job : jobs) texts.push_back(job.get());
      for (std::size_t i = 0; i < texts.size(); ++i) {
        if (!as_json && inputs.size() > 1) std::cout << "== " << inputs[i] << "\n";
        std::cout << texts[i];
      }
    } else if (*order) {
      OrderOptions options;
      if (max_k > 0) options.max_k = max_k;
      const OrderReport r = resonance_order(load(input), options);
      std::cout << r.to_string() << "\n";
      if (!r.failing_set.empty()) std::cout << "failing: " << join(r.failing_set) << "\n";
    } else if (*sextet) {
      const SextetPolynomial p = sextet_polynomial(load(input));
      std::cout << p.to_string() << "\n";
    } else if (*clar) {
      std::cout << clar_number(load(input)) << "\n";
    } else if (*fries) {
      std::cout << fries_number(load(input), cap_value) << "\n";
    } else if (*leap) {
      const LeapfrogResult r = leapfrog(load(input));
      write_text(output, write_graph(r.image.embedding(), "leapfrog of " + input));
      if (!matching_path.empty()) write_text(matching_path, r.m0.to_text());
      if (!provenance_path.empty()) {
        json faces = json::array();
        for (const FaceOrigin& o : r.provenance)
          faces.push_back({{"kind", o.kind == FaceOrigin::Kind::heritable ? "heritable" : "fresh"},
                           {"source", o.source}});
        write_text(provenance_path, json{{"faces", faces}}.dump(2) + "\n");
      }
    } else if (*rings) {
      const auto found =
          find_polygonal_rings(load(input), max_len, pentagonal ? FaceFilter::pentagons_only : FaceFilter::any);
      if (as_json) {
        std::cout << rings_json(found).dump(2) << "\n";
      } else {
        for (const Ring& r : found)
          std::cout << "l=" << r.length << " s=" << r.s << " s'=" << r.s_prime << " r=" << r.r << " n5=" << r.n5
                    << " n6=" << r.n6 << " faces: " << join(r.faces) << "\n";
      }
    } else if (*fragments) {
      const auto found = maximal_pentagonal_fragments(load(input));
      if (as_json) {
        std::cout << fragments_json(found).dump(2) << "\n";
      } else {
        for (const Fragment& f : found)
          std::cout << to_string(f.shape) << (f.maximal ? "" : " (not a disk)") << " gamma=" << f.gamma
                    << " |W|=" << f.w.size() << " faces: " << join(f.faces) << "\n";
      }
    } else if (*gstar) {
      if (const auto g = find_g_star(load(input)))
        std::cout << "vertex " << g->vertex << " hexagons " << g->hexagons[0] << " " << g->hexagons[1] << " "
                  << g->hexagons[2] << "\n";
      else
        std::cout << "none\n";
    } else if (*catalog_list) {
      for (const auto& n : catalog_names()) std::cout << n << "\n";
    } else if (*catalog_emit) {
      const CatalogEntry e = catalog_graph(name);
      write_text(output, write_graph(e.graph.embedding(), e.name + ": " + e.provenance));
    } else if (*catalog_verify) {
      int problems = 0;
      for (const auto& n : catalog_names()) {
        const auto found = verify_entry(catalog_graph(n));
        for (const auto& p : found) std::cout << "FAIL " << p << "\n";
        if (found.empty()) std::cout << "ok   " << n << "\n";
        problems += static_cast<int>(found.size());
      }
      return problems == 0 ? 0 : 1;
    } else if (*tube) {
      const FullereneGraph g = nanotube(cap == "r5" ? Cap::r5 : Cap::r6, hex_rings);
      write_text(output, write_graph(g.embedding(), "nanotube cap=" + cap + " rings=" + std::to_string(hex_rings)));
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
