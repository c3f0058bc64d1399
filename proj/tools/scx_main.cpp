#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "scx/complex_ops.hpp"
#include "scx/error.hpp"
#include "scx/generators.hpp"
#include "scx/homology.hpp"
#include "scx/report.hpp"
#include "scx/scx_format.hpp"
#include "scx/shelling.hpp"
#include "scx/skeleton_graph.hpp"
#include "scx/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

using nlohmann::json;

struct Options {
  bool json = false;
  unsigned threads = 1;
  std::uint64_t budget = 10'000'000;

  std::string file;
  std::string name;
  std::vector<std::string> params;
  std::string output;

  std::optional<std::string> property;
  std::vector<std::string> files;
  bool corpus = false;

  std::optional<std::string> relative;
  std::optional<std::string> link;
  std::optional<std::string> seed_star;
  std::vector<std::string> paths;
};

std::vector<std::string> labels(const scx::SimplicialComplex& c, const scx::Face& f) {
  std::vector<std::string> out;
  for (auto v : f) out.push_back(c.label(v));
  return out;
}

int run_analyze(const Options& o) {
  const scx::SimplicialComplex c = scx::load_scx(o.file);
  const scx::AnalysisReport r = scx::analyze(c, o.file);
  std::cout << (o.json ? scx::report_json(r) + "\n" : scx::report_text(r));
  return r.theorem_applies && r.bound_satisfied == false ? kExitFail : kExitPass;
}

int run_gen(const Options& o) {
  if (o.name == "list") {
    for (const auto& [name, params] : scx::generator_names()) {
      std::cout << name << (params.empty() ? "" : " " + params) << '\n';
    }
    return kExitPass;
  }
  scx::GeneratorSpec spec{o.name, {}};
  for (const auto& p : o.params) {
    try {
      std::size_t used = 0;
      spec.params.push_back(std::stol(p, &used));
      if (used != p.size()) throw std::invalid_argument(p);
    } catch (const std::logic_error&) {
      throw scx::Error(scx::ErrorCode::kOutOfRange, "parameter '" + p + "' is not an integer");
    }
  }
  const scx::SimplicialComplex c = scx::generate(spec);
  if (o.output.empty()) {
    std::cout << "# " << spec.display() << '\n' << scx::to_scx(c);
  } else {
    scx::save_scx(o.output, c);
  }
  return kExitPass;
}

int run_verify(const Options& o) {
  scx::CorpusOptions options;
  options.include_catalog = o.corpus || o.files.empty();
  options.files = o.files;
  options.property = o.property;
  options.threads = o.threads;
  const scx::CorpusSummary summary = scx::verify_corpus(options);
  std::cout << (o.json ? summary.json() + "\n" : summary.table());
  return summary.exit_code();
}

int run_homology(const Options& o) {
  const scx::SimplicialComplex c = scx::load_scx(o.file);
  scx::BettiVector betti;
  std::string what = "reduced";
  if (o.relative) {
    betti = scx::z2_relative_betti(c, scx::load_scx(*o.relative));
    what = "relative";
  } else if (o.link) {
    std::istringstream in(*o.link);
    std::vector<std::string> face;
    for (std::string s; in >> s;) face.push_back(s);
    betti = scx::z2_betti(scx::link(c, c.face_from_labels(face)));
    what = "link reduced";
  } else {
    betti = scx::z2_betti(c);
  }
  if (o.json) {
    json j;
    j["kind"] = what;
    j["betti"] = betti.values;
    j["euler_characteristic"] = betti.euler_characteristic();
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << what << " Z2 Betti numbers: " << scx::to_string(betti) << '\n';
  }
  return kExitPass;
}

int run_shelling(const Options& o) {
  const scx::SimplicialComplex c = scx::load_scx(o.file);
  scx::ShellingOptions options;
  options.budget = o.budget;
  if (o.seed_star) options.seed = scx::star_shelling_seed(c, c.vertex_id(*o.seed_star), o.budget);
  std::optional<scx::ShellingOrder> order;
  bool timed_out = false;
  try {
    order = scx::find_shelling(c, options);
  } catch (const scx::Error& e) {
    if (e.code() != scx::ErrorCode::kTimeout) throw;
    timed_out = true;
  }
  const std::string status = order ? "shellable" : timed_out ? "timeout" : "not shellable";
  if (o.json) {
    json j;
    j["status"] = status;
    j["seed_length"] = options.seed.size();
    j["order"] = json::array();
    if (order) {
      for (const auto& f : order->facets) j["order"].push_back(labels(c, f));
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << status << '\n';
    if (order) {
      for (const auto& f : order->facets) std::cout << "  " << c.format_face(f) << '\n';
    }
  }
  return order ? kExitPass : kExitFail;
}

int run_connectivity(const Options& o) {
  const scx::SimplicialComplex c = scx::load_scx(o.file);
  const scx::SkeletonGraph g = scx::skeleton(c);
  json j;
  std::ostringstream text;
  if (!o.paths.empty()) {
    const scx::PathFamily family =
        scx::independent_paths(g, c.vertex_id(o.paths[0]), c.vertex_id(o.paths[1]));
    j["u"] = o.paths[0];
    j["v"] = o.paths[1];
    j["paths"] = json::array();
    text << family.paths.size() << " independent paths from " << o.paths[0] << " to "
         << o.paths[1] << '\n';
    for (const auto& p : family.paths) {
      std::vector<std::string> names;
      for (auto v : p) names.push_back(c.label(v));
      j["paths"].push_back(names);
      text << " ";
      for (const auto& n : names) text << ' ' << n;
      text << '\n';
    }
  } else {
    const scx::Connectivity k = scx::vertex_connectivity(g);
    j["connectivity"] = k.kappa;
    j["complete"] = k.complete;
    j["cut"] = nullptr;
    text << "connectivity " << k.kappa << (k.complete ? " (complete graph)" : "") << '\n';
    if (k.cut) {
      j["cut"] = {{"vertices", labels(c, scx::Face(k.cut->vertices))},
                  {"a", c.label(k.cut->a)},
                  {"b", c.label(k.cut->b)}};
      text << "minimum cut " << c.format_face(scx::Face(k.cut->vertices)) << " separates "
           << c.label(k.cut->a) << " from " << c.label(k.cut->b) << '\n';
    }
  }
  std::cout << (o.json ? j.dump(2) + "\n" : text.str());
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Banner complexes: classification, banner numbers and graph connectivity"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--threads", o.threads, "Worker threads for corpus verification")
      ->check(CLI::Range(1u, 256u));

  auto* analyze = app.add_subcommand("analyze", "Report every invariant of a complex");
  analyze->add_option("FILE", o.file, "Facet-list file")->required();

  auto* gen = app.add_subcommand("gen", "Write a named complex as a facet list ('gen list' for names)");
  gen->add_option("NAME", o.name, "Generator name")->required();
  gen->add_option("ARGS", o.params, "Integer parameters");
  gen->add_option("-o,--output", o.output, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check the connectivity statements on complexes");
  verify->add_option("--property", o.property, "Restrict to one property id");
  verify->add_option("FILE", o.files, "Facet-list files");
  verify->add_flag("--corpus", o.corpus, "Include the built-in corpus");

  auto* homology = app.add_subcommand("homology", "Z/2 Betti numbers");
  homology->add_option("FILE", o.file, "Facet-list file")->required();
  auto* rel = homology->add_option("--relative", o.relative, "Subcomplex file for relative homology");
  homology->add_option("--link", o.link, "Face whose link to use, as \"v1 v2 ...\"")->excludes(rel);

  auto* shelling = app.add_subcommand("shelling", "Search for a shelling order");
  shelling->add_option("FILE", o.file, "Facet-list file")->required();
  shelling->add_option("--seed-star", o.seed_star, "Start with a shelling of this vertex star");
  shelling->add_option("--budget", o.budget, "Search node budget");

  auto* connectivity = app.add_subcommand("connectivity", "Vertex connectivity of the graph");
  connectivity->add_option("FILE", o.file, "Facet-list file")->required();
  connectivity->add_option("--paths", o.paths, "Independent paths between two vertices")
      ->expected(2);

  for (auto* sub : {analyze, gen, verify, homology, shelling, connectivity}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*analyze) return run_analyze(o);
    if (*gen) return run_gen(o);
    if (*verify) return run_verify(o);
    if (*homology) return run_homology(o);
    if (*shelling) return run_shelling(o);
    if (*connectivity) return run_connectivity(o);
  } catch (const scx::Error& e) {
    std::cerr << "scx: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "scx: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
