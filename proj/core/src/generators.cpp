#include "scx/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <string_view>

#include "detail.hpp"
#include "scx/complex_ops.hpp"

namespace scx {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kOutOfRange, what);
}

std::string v(long i) { return "v" + std::to_string(i); }

}  // namespace

LabelledEdges complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  LabelledEdges out;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) out.emplace_back(std::to_string(a), std::to_string(b));
  }
  return out;
}

LabelledEdges cycle_graph(int n) {
  require(n >= 3, "cycle graph needs n >= 3");
  LabelledEdges out;
  for (int a = 1; a <= n; ++a) out.emplace_back(std::to_string(a), std::to_string(a % n + 1));
  return out;
}

LabelledEdges path_graph(int n) {
  require(n >= 1, "path graph needs n >= 1");
  LabelledEdges out;
  for (int a = 1; a < n; ++a) out.emplace_back(std::to_string(a), std::to_string(a + 1));
  return out;
}

SimplicialComplex banana(const LabelledEdges& graph) {
  if (graph.empty()) throw Error(ErrorCode::kNoEdges, "banana needs at least one edge");
  std::vector<std::vector<std::string>> facets;
  for (const auto& [a, b] : graph) {
    const std::string stem = a + "~" + b;
    facets.push_back({a, b, stem + ".1", stem + ".2"});
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex ring_ball() {
  auto idx = [](int i) { return std::to_string((i + 3) % 3 + 1); };  // i is 0-based
  std::vector<std::vector<std::string>> facets;
  for (int i = 0; i < 3; ++i) {
    const std::string x = "x" + idx(i), xn = "x" + idx(i + 1);
    const std::string a = "a" + idx(i), an = "a" + idx(i + 1), ap = "a" + idx(i - 1);
    const std::string b = "b" + idx(i), bn = "b" + idx(i + 1), bp = "b" + idx(i - 1);
    const std::string cc = "c" + idx(i), dd = "d" + idx(i);
    // Octahedron on x_i, x_{i+1}, a_i, b_i, c_i, d_i.
    facets.push_back({x, xn, a, b});
    facets.push_back({x, xn, b, cc});
    facets.push_back({x, xn, cc, dd});
    facets.push_back({x, xn, a, dd});
    // Filling between the ring and y.
    facets.push_back({x, a, b, bp});
    facets.push_back({x, a, ap, bp});
    facets.push_back({"y", a, b, an});
    facets.push_back({"y", b, an, bn});
  }
  facets.push_back({"y", "a1", "a2", "a3"});
  facets.push_back({"y", "b1", "b2", "b3"});
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex simplex(int d) {
  require(d >= 0, "simplex needs d >= 0");
  std::vector<std::string> f;
  for (int i = 0; i <= d; ++i) f.push_back(v(i));
  return SimplicialComplex::from_facets({f});
}

SimplicialComplex simplex_boundary(int d) {
  require(d >= 1, "simplex boundary needs d >= 1");
  std::vector<std::vector<std::string>> facets;
  for (int skip = 0; skip <= d; ++skip) {
    std::vector<std::string> f;
    for (int i = 0; i <= d; ++i) {
      if (i != skip) f.push_back(v(i));
    }
    facets.push_back(f);
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex cross_polytope_boundary(int d) {
  require(d >= 0 && d <= 20, "cross-polytope needs 0 <= d <= 20");
  std::vector<std::vector<std::string>> facets;
  for (long mask = 0; mask < (1L << (d + 1)); ++mask) {
    std::vector<std::string> f;
    for (int i = 0; i <= d; ++i) {
      f.push_back(((mask >> i) & 1 ? "n" : "p") + std::to_string(i));
    }
    facets.push_back(f);
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<std::vector<std::string>> facets;
  for (int i = 0; i < n; ++i) facets.push_back({v(i), v((i + 1) % n)});
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex stacked_sphere(int d, int k, std::uint32_t seed) {
  require(d >= 1, "stacked sphere needs d >= 1");
  require(k >= 0, "stacked sphere needs k >= 0");
  SimplicialComplex c = simplex_boundary(d + 1);
  std::minstd_rand rng(seed);
  for (int step = 0; step < k; ++step) {
    const auto& facets = c.facets();
    const Face chosen = facets[rng() % facets.size()];
    std::vector<std::string> labels = c.labels();
    const auto apex = static_cast<VertexId>(labels.size());
    labels.push_back(v(d + 2 + step));
    std::vector<Face> next;
    for (const Face& f : facets) {
      if (f != chosen) next.push_back(f);
    }
    for (VertexId u : chosen) next.push_back(chosen.without(u).with(apex));
    c = SimplicialComplex::from_id_facets(labels, std::move(next));
  }
  return c;
}

SimplicialComplex cyclic_polytope_boundary(int n, int d) {
  require(d >= 1, "cyclic polytope boundary needs d >= 1");
  require(n >= d + 2, "cyclic polytope boundary needs n >= d+2");
  require(n <= 64, "cyclic polytope boundary needs n <= 64");
  const auto facet_size = static_cast<std::size_t>(d) + 1;
  std::vector<VertexId> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[i] = i;
  std::vector<std::vector<std::string>> facets;
  detail::for_each_subset(Face::from_sorted(all), facet_size, [&](const Face& s) {
    // Gale's evenness: between any two non-members an even number of members.
    int last_gap = -1;
    bool even = true;
    for (int i = 0; i < n && even; ++i) {
      if (s.contains(i)) continue;
      if (last_gap >= 0) {
        int between = 0;
        for (VertexId u : s) between += (u > last_gap && u < i);
        even = between % 2 == 0;
      }
      last_gap = i;
    }
    if (!even) return;
    std::vector<std::string> f;
    for (VertexId u : s) f.push_back(v(u + 1));
    facets.push_back(f);
  });
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex torus7() {
  std::vector<std::vector<std::string>> facets;
  for (int i = 0; i < 7; ++i) {
    facets.push_back({v(i), v((i + 1) % 7), v((i + 3) % 7)});
    facets.push_back({v(i), v((i + 2) % 7), v((i + 3) % 7)});
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex split_outside_sphere() {
  const SimplicialComplex disk = SimplicialComplex::from_facets({
      {"u", "y", "p"}, {"u", "p", "z"}, {"u", "z", "y"},
      {"w", "y", "q"}, {"w", "q", "z"}, {"w", "z", "y"},
  });
  return tilde(disk, "x");
}

std::string GeneratorSpec::display() const {
  if (params.empty()) return name;
  std::string out = name + "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(params[i]);
  }
  return out + ")";
}

namespace {

struct Builder {
  std::size_t arity;
  std::string help;
  std::function<SimplicialComplex(const std::vector<long>&)> build;
};

int as_int(long x) {
  require(x >= -1'000'000 && x <= 1'000'000, "parameter out of range");
  return static_cast<int>(x);
}

const std::map<std::string, Builder, std::less<>>& builders() {
  static const std::map<std::string, Builder, std::less<>> table = {
      {"simplex", {1, "D", [](const auto& p) { return simplex(as_int(p[0])); }}},
      {"simplex_boundary", {1, "D", [](const auto& p) { return simplex_boundary(as_int(p[0])); }}},
      {"cross_polytope",
       {1, "D", [](const auto& p) { return cross_polytope_boundary(as_int(p[0])); }}},
      {"cycle", {1, "N", [](const auto& p) { return cycle(as_int(p[0])); }}},
      {"banana_complete",
       {1, "N", [](const auto& p) { return banana(complete_graph(as_int(p[0]))); }}},
      {"banana_cycle", {1, "N", [](const auto& p) { return banana(cycle_graph(as_int(p[0]))); }}},
      {"banana_path", {1, "N", [](const auto& p) { return banana(path_graph(as_int(p[0]))); }}},
      {"ring_ball", {0, "", [](const auto&) { return ring_ball(); }}},
      {"torus7", {0, "", [](const auto&) { return torus7(); }}},
      {"split_outside_sphere", {0, "", [](const auto&) { return split_outside_sphere(); }}},
      {"stacked_sphere",
       {3, "D K SEED",
        [](const auto& p) {
          require(p[2] >= 0 && p[2] <= 0xffffffffL, "seed must fit in 32 bits");
          return stacked_sphere(as_int(p[0]), as_int(p[1]), static_cast<std::uint32_t>(p[2]));
        }}},
      {"cyclic",
       {2, "N D", [](const auto& p) { return cyclic_polytope_boundary(as_int(p[0]), as_int(p[1])); }}},
  };
  return table;
}

constexpr std::string_view kCone = "cone_";
constexpr std::string_view kSuspension = "suspension_";
constexpr std::string_view kTilde = "tilde_";

}  // namespace

SimplicialComplex generate(const GeneratorSpec& spec) {
  const std::string_view name = spec.name;
  auto rest = [&](std::string_view prefix) {
    return GeneratorSpec{std::string(name.substr(prefix.size())), spec.params};
  };
  if (name.starts_with(kCone)) return cone(generate(rest(kCone)));
  if (name.starts_with(kSuspension)) return suspension(generate(rest(kSuspension)));
  if (name.starts_with(kTilde)) return tilde(generate(rest(kTilde)));
  const auto& table = builders();
  auto it = table.find(name);
  if (it == table.end()) {
    throw Error(ErrorCode::kUnknownGenerator, "no generator named '" + spec.name + "'");
  }
  if (spec.params.size() != it->second.arity) {
    throw Error(ErrorCode::kOutOfRange, spec.name + " expects " +
                                            std::to_string(it->second.arity) + " parameter(s)");
  }
  return it->second.build(spec.params);
}

std::vector<std::pair<std::string, std::string>> generator_names() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [name, b] : builders()) out.emplace_back(name, b.help);
  return out;
}

std::vector<CatalogEntry> catalog() {
  std::vector<GeneratorSpec> specs;
  for (long d = 2; d <= 5; ++d) specs.push_back({"simplex_boundary", {d}});
  for (long d = 2; d <= 4; ++d) specs.push_back({"cross_polytope", {d}});
  for (long n = 3; n <= 8; ++n) specs.push_back({"cycle", {n}});
  specs.push_back({"simplex", {2}});
  specs.push_back({"simplex", {3}});
  specs.push_back({"banana_complete", {3}});
  specs.push_back({"banana_complete", {4}});
  specs.push_back({"banana_cycle", {5}});
  specs.push_back({"banana_path", {4}});
  specs.push_back({"ring_ball", {}});
  specs.push_back({"tilde_ring_ball", {}});
  specs.push_back({"cone_cycle", {4}});
  specs.push_back({"cone_cycle", {5}});
  specs.push_back({"cone_ring_ball", {}});
  specs.push_back({"cone_banana_complete", {3}});
  specs.push_back({"suspension_cycle", {3}});
  specs.push_back({"suspension_cycle", {5}});
  specs.push_back({"suspension_simplex_boundary", {3}});
  specs.push_back({"suspension_ring_ball", {}});
  specs.push_back({"suspension_tilde_ring_ball", {}});
  specs.push_back({"suspension_banana_complete", {4}});
  specs.push_back({"stacked_sphere", {2, 4, 1}});
  specs.push_back({"stacked_sphere", {2, 6, 7}});
  specs.push_back({"stacked_sphere", {3, 3, 1}});
  specs.push_back({"stacked_sphere", {3, 5, 7}});
  specs.push_back({"cyclic", {6, 2}});
  specs.push_back({"cyclic", {7, 3}});
  specs.push_back({"cyclic", {8, 3}});
  specs.push_back({"cyclic", {7, 4}});
  specs.push_back({"torus7", {}});
  specs.push_back({"split_outside_sphere", {}});

  std::vector<CatalogEntry> out;
  out.reserve(specs.size());
  for (auto& spec : specs) {
    SimplicialComplex c = generate(spec);
    out.push_back({std::move(spec), std::move(c)});
  }
  return out;
}

}  // namespace scx
