#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "scx/banner.hpp"
#include "scx/complex_ops.hpp"
#include "scx/generators.hpp"
#include "scx/homology.hpp"
#include "scx/manifold.hpp"
#include "scx/shelling.hpp"
#include "scx/skeleton_graph.hpp"
#include "scx/verify.hpp"

using namespace scx;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string fvec(const std::vector<std::size_t>& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

SimplicialComplex skeleton_complex(const oracle::Graph& g) {
  std::vector<std::vector<std::string>> facets;
  for (int u = 0; u < g.n; ++u) {
    facets.push_back({"g" + std::to_string(u)});
    for (int v = u + 1; v < g.n; ++v) {
      if (g.adjacent(u, v)) facets.push_back({"g" + std::to_string(u), "g" + std::to_string(v)});
    }
  }
  return SimplicialComplex::from_facets(facets);
}

SkeletonGraph to_skeleton(const oracle::Graph& g) {
  std::vector<SkeletonGraph::Edge> edges;
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      if (g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return SkeletonGraph(static_cast<std::size_t>(g.n), edges);
}

Outcome ring_ball_reproduction() {
  Outcome o;
  const auto ball = ring_ball();
  const auto f = ball.f_vector().counts;
  o.expect(f == std::vector<std::size_t>{1, 16, 54, 65, 26}, "f-vector " + fvec(f));
  o.expect(oracle::f_vector(ball) == f, "f-vector disagrees with face enumeration");
  const auto bd = boundary(ball);
  o.expect(bd && bd->f_vector().counts == std::vector<std::size_t>{1, 15, 39, 26},
           "boundary f-vector " + (bd ? fvec(bd->f_vector().counts) : std::string("none")));

  const auto g = oracle::graph_of(ball);
  const auto faces = oracle::all_faces(ball);
  std::vector<std::string> empty;
  for (oracle::Mask t = 1; t < oracle::bit(g.n); ++t) {
    if (std::popcount(t) != 3 || !oracle::is_clique(g, t)) continue;
    const auto m = oracle::members(t);
    if (!faces.count(m)) empty.push_back(ball.format_face(Face(std::vector<VertexId>(m.begin(), m.end()))));
  }
  o.expect(empty == std::vector<std::string>{"{x1 x2 x3}"},
           "empty triangles: " + std::to_string(empty.size()));

  const auto cls = classify(ball);
  const auto levels = oracle::banner_levels(ball);
  o.expect(cls.strongly_banner && !cls.flag, "classification is not strongly banner and non-flag");
  o.expect(levels.strongly_banner && !levels.flag, "subset scan disagrees on classification");

  const auto y = ball.vertex_id("y");
  const auto seed = star_shelling_seed(ball, y);
  const auto shelling = find_shelling(ball, {seed});
  o.expect(seed.size() == 8, "star(y) has " + std::to_string(seed.size()) + " facets");
  if (!shelling) {
    o.failures.push_back("no shelling extends the star(y) prefix");
  } else {
    o.expect(oracle::is_shelling(ball, shelling->facets), "returned order is not a shelling");
    bool prefix_in_star = shelling->facets.size() >= 8;
    for (std::size_t i = 0; prefix_in_star && i < 8; ++i) {
      prefix_in_star = shelling->facets[i].contains(y);
    }
    o.expect(prefix_in_star, "first 8 facets are not star(y)");
  }
  return o;
}

Outcome banana_reproduction() {
  Outcome o;
  const auto k3 = banana(complete_graph(3));
  const auto k4 = banana(complete_graph(4));
  const auto c3 = classify(k3);
  const auto c4 = classify(k4);
  o.expect(c3.strongly_banner && !c3.flag, "banana(K3) is not strongly banner and non-flag");
  o.expect(c4.banner && !c4.strongly_banner, "banana(K4) is not banner and non-strongly banner");
  const auto l3 = oracle::banner_levels(k3);
  const auto l4 = oracle::banner_levels(k4);
  o.expect(l3.strongly_banner && !l3.flag, "subset scan disagrees on banana(K3)");
  o.expect(l4.banner && !l4.strongly_banner, "subset scan disagrees on banana(K4)");
  return o;
}

Outcome connectivity_bound() {
  Outcome o;
  const auto corpus = catalog();
  o.expect(corpus.size() >= 20, "corpus has " + std::to_string(corpus.size()) + " complexes");
  int checked = 0;
  for (const auto& entry : corpus) {
    const auto& c = entry.complex;
    const int d = c.dimension();
    const std::string name = entry.spec.display();
    o.expect(d <= 4 && c.num_vertices() <= 30, name + " exceeds corpus limits");
    const auto m = classify_manifold(c);
    if (!m.normal_pseudomanifold() || d < 1) continue;
    const auto b = banner_number(c);
    if (!b.defined()) {
      o.failures.push_back(name + ": banner number undefined");
      continue;
    }
    const int kappa = vertex_connectivity(skeleton(c)).kappa;
    if (c.num_vertices() <= 20) {
      o.expect(kappa == oracle::kappa(oracle::graph_of(c)), name + ": flow and brute force disagree");
    }
    o.expect(kappa >= 2 * d - b.get(), name + ": kappa " + std::to_string(kappa) + " < 2d - b = " +
                                           std::to_string(2 * d - b.get()));
    ++checked;
  }
  o.notes.push_back(std::to_string(checked) + " normal pseudomanifolds checked");
  o.expect(checked >= 20, "only " + std::to_string(checked) + " normal pseudomanifolds in corpus");

  for (int d = 1; d <= 4; ++d) {
    const auto s = simplex_boundary(d + 1);
    const int kappa = vertex_connectivity(skeleton(s)).kappa;
    const auto b = banner_number(s);
    o.expect(kappa == d + 1, "kappa(K" + std::to_string(d + 2) + ") = " + std::to_string(kappa));
    o.expect(b.defined() && b.get() == d - 1,
             "banner number of the " + std::to_string(d) + "-dimensional simplex boundary");
  }
  const int octa = vertex_connectivity(skeleton(cross_polytope_boundary(2))).kappa;
  o.expect(octa == 4, "octahedron kappa " + std::to_string(octa));

  const auto t = tilde(ring_ball());
  const int d = t.dimension();
  const auto conn = vertex_connectivity(skeleton(t));
  const int brute = oracle::kappa(oracle::graph_of(t));
  o.expect(conn.kappa == brute, "closed-off ring ball: flow and brute force disagree");
  if (conn.kappa != 2 * d) {
    std::string cut;
    if (conn.cut) {
      std::vector<VertexId> vs = conn.cut->vertices;
      cut = " (cut " + t.format_face(Face(vs)) + " separates " + t.label(conn.cut->a) + " from " +
            t.label(conn.cut->b) + ")";
    }
    o.failures.push_back("closed-off ring ball: kappa " + std::to_string(conn.kappa) +
                         " != 2d = " + std::to_string(2 * d) + cut);
  }
  return o;
}

Outcome lemma_suite() {
  Outcome o;
  const std::vector<std::string> ids = {"L2.1", "L4.2", "L4.3", "L4.4", "L5.2", "P3.7", "P3.8i", "P3.8ii"};
  std::map<std::string, int> passes;
  for (const auto& entry : catalog()) {
    const auto& c = entry.complex;
    const std::string name = entry.spec.display();
    const auto facts = compute_facts(c);
    // Hypotheses recomputed from definitions where the subset scan is feasible.
    const bool closed = pseudomanifold_kind(c) == PseudomanifoldKind::kClosed;
    const bool small = c.num_vertices() <= 24;
    const auto levels = small ? oracle::banner_levels(c) : oracle::BannerLevels{};
    const bool banner = small ? levels.banner : facts.banner.banner;
    const bool strongly = small ? levels.strongly_banner : facts.banner.strongly_banner;
    std::map<std::string, bool> hypothesis = {
        {"L2.1", closed},
        {"L4.2", closed && banner},
        {"L4.3", closed && banner},
        {"L4.4", closed && banner},
        {"L5.2", c.is_pure() && facts.banner_number.defined()},
        {"P3.7", c.is_pure() && (banner || strongly) && c.dimension() >= 1},
        {"P3.8i", c.is_pure()},
        {"P3.8ii", c.is_pure()},
    };
    for (const auto& id : ids) {
      const auto r = verify_property(id, c, facts);
      const std::string where = id + " on " + name;
      if (r.verdict == Verdict::kFail) o.failures.push_back(where + ": " + r.detail);
      if (!hypothesis[id]) {
        o.expect(r.verdict == Verdict::kSkip, where + ": hypothesis unmet but verdict " +
                                                  std::string(to_string(r.verdict)));
      } else {
        o.expect(r.verdict != Verdict::kSkip, where + ": hypothesis met but skipped (" + r.detail + ")");
      }
      if (r.verdict == Verdict::kPass) ++passes[id];
    }
  }
  std::string counts;
  for (const auto& id : ids) {
    counts += (counts.empty() ? "" : " ") + id + "=" + std::to_string(passes[id]);
    o.expect(passes[id] > 0, id + " never exercised");
  }
  o.notes.push_back("passes: " + counts);
  return o;
}

Outcome homological_cross_check() {
  Outcome o;
  int complexes = 0;
  int vertices = 0;
  for (const auto& entry : catalog()) {
    const auto& c = entry.complex;
    const int d = c.dimension();
    if (d < 1 || !classify(c).banner || !is_homology_manifold(c)) continue;
    ++complexes;
    const std::string name = entry.spec.display();
    const auto faces = oracle::all_faces(c);
    const auto g = oracle::graph_of(c);
    for (int x = 0; x < g.n; ++x) {
      ++vertices;
      const std::string at = name + " at " + c.label(static_cast<VertexId>(x));
      // N(x) is the vertex set of star(x), so it contains x.
      const oracle::Mask closed = g.adj[x] | oracle::bit(x);
      std::set<std::vector<int>> sigma_faces;
      for (const auto& f : faces) {
        bool inside = true;
        for (int v : f) inside &= static_cast<bool>(closed & oracle::bit(v));
        if (inside) sigma_faces.insert(f);
      }
      const auto sb = oracle::betti(sigma_faces, d, nullptr, true);
      const auto rel = oracle::betti(faces, d, &sigma_faces, false);
      const oracle::Mask outside = g.all() & ~closed;
      const bool gamma_connected = outside && oracle::connected_on(g, outside);
      o.expect(sb[static_cast<std::size_t>(d)] == 0 && sb[static_cast<std::size_t>(d - 1)] == 0,
               at + ": induced neighbourhood Betti " + fvec(sb));
      o.expect(rel[static_cast<std::size_t>(d)] == 1,
               at + ": relative Betti " + std::to_string(rel[static_cast<std::size_t>(d)]));
      o.expect((rel[static_cast<std::size_t>(d)] == 1) == gamma_connected,
               at + ": relative Betti disagrees with outside connectivity");

      const auto sigma = induced(c, neighborhood(c, static_cast<VertexId>(x)));
      const auto lib_sb = z2_betti(sigma);
      o.expect(lib_sb[static_cast<std::size_t>(d)] == sb[static_cast<std::size_t>(d)] &&
                   lib_sb[static_cast<std::size_t>(d - 1)] == sb[static_cast<std::size_t>(d - 1)],
               at + ": library Betti of the neighbourhood disagrees");
      o.expect(z2_relative_betti(c, sigma)[static_cast<std::size_t>(d)] ==
                   rel[static_cast<std::size_t>(d)],
               at + ": library relative Betti disagrees");
      o.expect(is_outside_connected(c, static_cast<VertexId>(x)) == gamma_connected,
               at + ": library outside connectivity disagrees");
    }
  }
  o.notes.push_back(std::to_string(complexes) + " complexes, " + std::to_string(vertices) + " vertices");
  o.expect(complexes > 0, "no banner homology manifold in the corpus");
  return o;
}

void compare_graph(Outcome& o, const oracle::Graph& og, const std::string& name, int& pairs) {
  const auto g = to_skeleton(og);
  const int kappa = vertex_connectivity(g).kappa;
  const int brute = oracle::kappa(og);
  o.expect(kappa == brute, name + ": kappa " + std::to_string(kappa) + " vs " + std::to_string(brute));
  for (int u = 0; u < og.n; ++u) {
    for (int v = u + 1; v < og.n; ++v) {
      if (og.adjacent(u, v)) continue;
      ++pairs;
      const auto family = independent_paths(g, u, v);
      const int want = oracle::max_independent_paths(og, u, v);
      o.expect(is_valid_path_family(g, family), name + ": invalid path family");
      o.expect(static_cast<int>(family.paths.size()) == want,
               name + ": " + std::to_string(family.paths.size()) + " paths between " +
                   std::to_string(u) + " and " + std::to_string(v) + ", brute force " +
                   std::to_string(want));
    }
  }
}

Outcome oracle_equivalence() {
  Outcome o;
  int graphs = 0;
  int pairs = 0;
  for (const auto& entry : catalog()) {
    if (entry.complex.num_vertices() > 10) continue;
    ++graphs;
    compare_graph(o, oracle::graph_of(entry.complex), entry.spec.display(), pairs);
  }
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const int n = 3 + static_cast<int>(seed % 8);
    const double p = 0.25 + 0.5 * static_cast<double>(seed % 5) / 4.0;
    const auto og = oracle::random_graph(n, p, seed);
    ++graphs;
    compare_graph(o, og, "random seed " + std::to_string(seed), pairs);
    // The library skeleton of the same graph agrees with the direct build.
    o.expect(skeleton(skeleton_complex(og)).num_edges() == to_skeleton(og).num_edges(),
             "random seed " + std::to_string(seed) + ": skeleton edge count");
  }
  o.notes.push_back(std::to_string(graphs) + " graphs, " + std::to_string(pairs) + " non-adjacent pairs");
  return o;
}

Outcome homology_sanity() {
  Outcome o;
  for (int d = 1; d <= 4; ++d) {
    const auto b = z2_betti(simplex_boundary(d + 1));
    for (int k = 0; k <= d; ++k) {
      o.expect(b[static_cast<std::size_t>(k)] == (k == d ? 1u : 0u),
               "simplex boundary d=" + std::to_string(d) + " degree " + std::to_string(k));
    }
  }
  for (const auto& entry : catalog()) {
    const auto& c = entry.complex;
    const std::string name = entry.spec.display();
    const auto b = z2_betti(c);
    o.expect(z2_betti(cone(c)).all_zero(), name + ": cone has homology");
    const auto s = z2_betti(suspension(c));
    for (int k = 0; k <= c.dimension(); ++k) {
      o.expect(s[static_cast<std::size_t>(k) + 1] == b[static_cast<std::size_t>(k)],
               name + ": suspension shift in degree " + std::to_string(k));
    }
    o.expect(s[0] == 0, name + ": suspension has reduced degree-0 homology");
    long long chi = -1;
    const auto f = c.f_vector().counts;
    for (std::size_t k = 1; k < f.size(); ++k) {
      chi += (k % 2 ? 1 : -1) * static_cast<long long>(f[k]);
    }
    o.expect(chi == b.euler_characteristic(), name + ": Euler identity");
    if (c.num_vertices() <= 12) {
      o.expect(b.values == oracle::reduced_betti(c), name + ": Betti disagrees with dense rank");
    }
  }
  return o;
}

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "ring ball reproduction", 5, ring_ball_reproduction},
      {2, "banana reproduction", 1, banana_reproduction},
      {3, "connectivity lower bound and tight endpoints", 60, connectivity_bound},
      {4, "lemma suite", 120, lemma_suite},
      {5, "homological cross-check of the outside set", 60, homological_cross_check},
      {6, "flow versus brute-force oracle", 120, oracle_equivalence},
      {7, "homology sanity", 30, homology_sanity},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      o.failures.push_back("took " + std::to_string(secs) + " s, limit " +
                           std::to_string(c.limit_seconds) + " s");
    }
    const bool ok = o.failures.empty();
    failed += !ok;
    std::printf("%s criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", c.number, c.title, secs);
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    for (const auto& f : o.failures) std::printf("    failed: %s\n", f.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
