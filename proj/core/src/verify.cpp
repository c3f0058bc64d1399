#include "scx/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "scx/complex_ops.hpp"
#include "scx/error.hpp"
#include "scx/generators.hpp"
#include "scx/homology.hpp"
#include "scx/scx_format.hpp"
#include "scx/skeleton_graph.hpp"

namespace scx {

namespace {

PropertyCheckResult pass() { return {"", Verdict::kPass, ""}; }
PropertyCheckResult fail(std::string detail) { return {"", Verdict::kFail, std::move(detail)}; }
PropertyCheckResult skip(std::string reason) { return {"", Verdict::kSkip, std::move(reason)}; }

std::string levels(const BannerClass& bc) {
  std::string s = bc.flag ? "flag" : "-";
  s += bc.strongly_banner ? "/strongly banner" : "/-";
  s += bc.banner ? "/banner" : "/-";
  return s;
}

// Closed pseudomanifold, dimension at least 1.
std::optional<std::string> needs_closed(const ComplexFacts& f, const SimplicialComplex& c) {
  if (!f.pure) return "not pure";
  if (!f.manifold.closed_pseudomanifold()) return "not a closed pseudomanifold";
  if (c.dimension() < 1) return "dimension 0";
  return std::nullopt;
}

PropertyCheckResult check_t11(const SimplicialComplex& c, const ComplexFacts& f) {
  if (auto why = needs_closed(f, c)) return skip(*why);
  if (!f.manifold.normal) return skip("not normal");
  if (!f.banner_number.defined()) return skip("banner number undefined");
  const int d = c.dimension();
  const int bound = 2 * d - f.banner_number.get();
  if (f.kappa < bound) {
    return fail("connectivity " + std::to_string(f.kappa) + " < 2d - b = " + std::to_string(bound));
  }
  if (f.kappa < d + 1) {
    return fail("connectivity " + std::to_string(f.kappa) + " < d + 1 = " + std::to_string(d + 1));
  }
  return pass();
}

PropertyCheckResult check_t41(const SimplicialComplex& c, const ComplexFacts& f) {
  if (auto why = needs_closed(f, c)) return skip(*why);
  if (!f.manifold.normal) return skip("not normal");
  if (!f.banner.banner) return skip("not banner");
  if (f.kappa < 2 * c.dimension()) {
    return fail("connectivity " + std::to_string(f.kappa) + " < 2d = " +
                std::to_string(2 * c.dimension()));
  }
  return pass();
}

PropertyCheckResult check_a32(const SimplicialComplex& c, const ComplexFacts& f) {
  if (auto why = needs_closed(f, c)) return skip(*why);
  if (!f.banner.flag) return skip("not flag");
  if (f.kappa < 2 * c.dimension()) {
    return fail("connectivity " + std::to_string(f.kappa) + " < 2d = " +
                std::to_string(2 * c.dimension()));
  }
  return pass();
}

PropertyCheckResult check_l21(const SimplicialComplex& c, const ComplexFacts& f) {
  if (auto why = needs_closed(f, c)) return skip(*why);
  const AntistarCheck check = verify_barnette_antistar(c);
  if (!check.holds) return fail("antistar of " + c.label(*check.witness) + " not strongly connected");
  return pass();
}

PropertyCheckResult check_l42(const SimplicialComplex& c, const ComplexFacts& f) {
  if (auto why = needs_closed(f, c)) return skip(*why);
  if (!f.banner.banner) return skip("not banner");
  std::vector<VertexSet> nbhd;
  for (std::size_t v = 0; v < c.num_vertices(); ++v) {
    nbhd.push_back(neighborhood(c, static_cast<VertexId>(v)));
  }
  for (const Face& e : c.faces(2)) {
    for (int k = 0; k < 2; ++k) {
      const VertexId x = e[k];
      const VertexId y = e[1 - k];
      if (nbhd[y].is_subset_of(nbhd[x])) {
        return fail("N(" + c.label(y) + ") is contained in N(" + c.label(x) + ")");
      }
    }
  }
  return pass();
}

PropertyCheckResult check_l43(const SimplicialComplex& c, const ComplexFacts& f) {
  if (auto why = needs_closed(f, c)) return skip(*why);
  if (!f.banner.banner) return skip("not banner");
  if (skeleton(c).is_complete()) return fail("graph is complete");
  return pass();
}

PropertyCheckResult check_l44(const SimplicialComplex& c, const ComplexFacts& f) {
  if (auto why = needs_closed(f, c)) return skip(*why);
  if (!f.banner.banner) return skip("not banner");
  for (std::size_t v = 0; v < c.num_vertices(); ++v) {
    const auto x = static_cast<VertexId>(v);
    try {
      if (!is_outside_connected(c, x)) {
        return fail("vertices outside N(" + c.label(x) + ") induce a disconnected subcomplex");
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kEmptyOutside) throw;
      return fail("every vertex lies in N(" + c.label(x) + ")");
    }
  }
  return pass();
}

PropertyCheckResult check_l44_homological(const SimplicialComplex& c, const ComplexFacts& f) {
  if (!f.pure) return skip("not pure");
  if (!f.banner.banner) return skip("not banner");
  if (!f.manifold.homology_manifold) return skip("not a homology manifold");
  const int d = c.dimension();
  if (d < 1) return skip("dimension 0");
  for (std::size_t v = 0; v < c.num_vertices(); ++v) {
    const auto x = static_cast<VertexId>(v);
    const std::string at = " at " + c.label(x);
    const SimplicialComplex sigma = induced(c, neighborhood(c, x));
    const BettiVector sb = z2_betti(sigma);
    if (sb[d] != 0 || sb[d - 1] != 0) {
      return fail("induced neighborhood has reduced Betti " + to_string(sb) + at);
    }
    const std::size_t rel = z2_relative_betti(c, sigma)[d];
    std::size_t components = 0;
    try {
      components = skeleton(outside_subcomplex(c, x)).components().size();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kEmptyOutside) throw;
    }
    if (rel != components) {
      return fail("relative Betti " + std::to_string(rel) + " but " + std::to_string(components) +
                  " outside components" + at);
    }
    if (rel != 1) return fail("relative Betti " + std::to_string(rel) + at);
  }
  return pass();
}

PropertyCheckResult check_l52(const SimplicialComplex& c, const ComplexFacts& f) {
  if (!f.pure) return skip("not pure");
  if (!f.banner_number.defined()) return skip("banner number undefined");
  const int b = f.banner_number.get();
  for (int s = 1; s <= b; ++s) {
    for (const Face& sigma : c.faces(static_cast<std::size_t>(s))) {
      const BannerNumber lb = banner_number(link(c, sigma));
      if (!lb.defined()) return fail("banner number of link of " + c.format_face(sigma) + " undefined");
      if (lb.get() > b - s) {
        return fail("link of " + c.format_face(sigma) + " has banner number " +
                    std::to_string(lb.get()) + " > " + std::to_string(b - s));
      }
    }
  }
  return pass();
}

PropertyCheckResult check_p37(const SimplicialComplex& c, const ComplexFacts& f) {
  if (!f.pure) return skip("not pure");
  if (!f.banner.banner && !f.banner.strongly_banner) return skip("not banner");
  if (c.dimension() < 1) return skip("dimension 0");
  for (std::size_t v = 0; v < c.num_vertices(); ++v) {
    const auto x = static_cast<VertexId>(v);
    const BannerClass lc = classify(link(c, Face({x})));
    if (f.banner.banner && !lc.banner) return fail("link of " + c.label(x) + " is not banner");
    if (f.banner.strongly_banner && !lc.strongly_banner) {
      return fail("link of " + c.label(x) + " is not strongly banner");
    }
  }
  return pass();
}

PropertyCheckResult same_levels(const BannerClass& before, const BannerClass& after,
                                const std::string& what) {
  if (before.flag != after.flag || before.strongly_banner != after.strongly_banner ||
      before.banner != after.banner) {
    return fail("complex is " + levels(before) + " but " + what + " is " + levels(after));
  }
  return pass();
}

PropertyCheckResult check_p38i(const SimplicialComplex& c, const ComplexFacts& f) {
  if (!f.pure) return skip("not pure");
  return same_levels(f.banner, classify(cone(c)), "cone");
}

PropertyCheckResult check_p38ii(const SimplicialComplex& c, const ComplexFacts& f) {
  if (!f.pure) return skip("not pure");
  return same_levels(f.banner, classify(suspension(c)), "suspension");
}

PropertyCheckResult check_p38iii(const SimplicialComplex& c, const ComplexFacts& f) {
  if (!f.pure) return skip("not pure");
  if (f.manifold.pseudomanifold != PseudomanifoldKind::kWithBoundary) {
    return skip("not a pseudomanifold with boundary");
  }
  const int d = c.dimension();
  if (d < 1) return skip("dimension 0");
  if (!z2_betti(c).all_zero()) return skip("not acyclic");
  const std::optional<SimplicialComplex> bd = boundary(c);
  if (!bd || !bd->is_pure() || bd->dimension() != d - 1 || !is_homology_sphere(*bd)) {
    return skip("boundary is not a homology sphere");
  }
  for (int j = 1; j <= d + 2; ++j) {
    const TildeCliqueTypes types = classify_tilde_cliques(c, static_cast<std::size_t>(j));
    if (!types.type3.empty()) {
      return skip("clique " + types.tilde.format_face(types.type3.front()) +
                  " of the closed-off sphere is of the third kind");
    }
  }
  const BannerClass tc = classify(tilde(c));
  const BannerClass bc = classify(*bd);
  BannerClass both;
  both.flag = f.banner.flag && bc.flag;
  both.strongly_banner = f.banner.strongly_banner && bc.strongly_banner;
  both.banner = f.banner.banner && bc.banner;
  return same_levels(both, tc, "closed-off sphere");
}

using Check = PropertyCheckResult (*)(const SimplicialComplex&, const ComplexFacts&);

const std::vector<std::pair<std::string, Check>>& checks() {
  static const std::vector<std::pair<std::string, Check>> table = {
      {"T1.1", check_t11},
      {"T4.1", check_t41},
      {"L2.1", check_l21},
      {"L4.2", check_l42},
      {"L4.3", check_l43},
      {"L4.4", check_l44},
      {"L4.4-homological", check_l44_homological},
      {"L5.2", check_l52},
      {"P3.7", check_p37},
      {"P3.8i", check_p38i},
      {"P3.8ii", check_p38ii},
      {"P3.8iii", check_p38iii},
      {"A3.2-special-case", check_a32},
  };
  return table;
}

Check find_check(std::string_view id) {
  for (const auto& [name, fn] : checks()) {
    if (name == id) return fn;
  }
  throw Error(ErrorCode::kUnknownProperty, "unknown property '" + std::string(id) + "'");
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kSkip: return "skip";
  }
  return "?";
}

const std::vector<std::string>& property_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& entry : checks()) out.push_back(entry.first);
    return out;
  }();
  return ids;
}

bool is_property_id(std::string_view id) {
  return std::find(property_ids().begin(), property_ids().end(), id) != property_ids().end();
}

ComplexFacts compute_facts(const SimplicialComplex& c) {
  ComplexFacts f;
  f.pure = c.is_pure();
  if (!f.pure) return f;
  f.manifold = classify_manifold(c);
  f.banner = classify(c);
  f.banner_number = banner_number(c);
  f.kappa = vertex_connectivity(skeleton(c)).kappa;
  return f;
}

PropertyCheckResult verify_property(std::string_view id, const SimplicialComplex& c) {
  find_check(id);
  return verify_property(id, c, compute_facts(c));
}

PropertyCheckResult verify_property(std::string_view id, const SimplicialComplex& c,
                                    const ComplexFacts& facts) {
  PropertyCheckResult r = find_check(id)(c, facts);
  r.property = std::string(id);
  return r;
}

int CorpusSummary::exit_code() const {
  if (failed > 0) return 1;
  if (errors > 0) return 2;
  return 0;
}

std::string CorpusSummary::table() const {
  std::size_t width = 7;
  for (const auto& e : entries) width = std::max(width, e.name.size());
  std::ostringstream os;
  auto pad = [&](const std::string& s) { return s + std::string(width + 2 - s.size(), ' '); };
  os << pad("complex") << "pass  fail  skip\n";
  for (const auto& e : entries) {
    if (e.error) {
      os << pad(e.name) << "error: " << *e.error << '\n';
      continue;
    }
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& r : e.results) ++counts[static_cast<int>(r.verdict)];
    auto cell = [](std::size_t n) {
      std::string s = std::to_string(n);
      return s + std::string(s.size() < 6 ? 6 - s.size() : 0, ' ');
    };
    os << pad(e.name) << cell(counts[0]) << cell(counts[1]) << counts[2] << '\n';
    for (const auto& r : e.results) {
      if (r.verdict == Verdict::kFail) os << "  FAIL " << r.property << ": " << r.detail << '\n';
    }
  }
  os << "total: " << passed << " pass, " << failed << " fail, " << skipped << " skip, " << errors
     << " error\n";
  return os.str();
}

std::string CorpusSummary::json() const {
  nlohmann::json j;
  j["schema"] = "scx-verify/1";
  j["passed"] = passed;
  j["failed"] = failed;
  j["skipped"] = skipped;
  j["errors"] = errors;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json je;
    je["name"] = e.name;
    je["error"] = e.error ? nlohmann::json(*e.error) : nlohmann::json(nullptr);
    je["results"] = nlohmann::json::array();
    for (const auto& r : e.results) {
      je["results"].push_back(
          {{"property", r.property}, {"verdict", to_string(r.verdict)}, {"detail", r.detail}});
    }
    j["entries"].push_back(std::move(je));
  }
  return j.dump(2);
}

CorpusSummary verify_corpus(const CorpusOptions& options) {
  std::vector<std::string> ids = property_ids();
  if (options.property) {
    find_check(*options.property);
    ids = {*options.property};
  }

  struct Input {
    std::string name;
    std::optional<std::string> path;
    std::optional<SimplicialComplex> complex;
    std::optional<std::string> error;
    ComplexFacts facts;
  };
  std::vector<Input> inputs;
  if (options.include_catalog) {
    for (auto& entry : catalog()) inputs.push_back({entry.spec.display(), {}, entry.complex, {}, {}});
  }
  for (const auto& file : options.files) inputs.push_back({file, file, {}, {}, {}});
  for (const auto& [name, c] : options.complexes) inputs.push_back({name, {}, c, {}, {}});

  parallel_for(inputs.size(), options.threads, [&](std::size_t i) {
    Input& in = inputs[i];
    try {
      if (in.path) in.complex = load_scx(*in.path);
      in.facts = compute_facts(*in.complex);
    } catch (const Error& e) {
      in.error = e.what();
      in.complex.reset();
    }
  });

  CorpusSummary summary;
  summary.entries.resize(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    summary.entries[i].name = inputs[i].name;
    summary.entries[i].error = inputs[i].error;
    if (!inputs[i].error) summary.entries[i].results.resize(ids.size());
  }

  std::vector<std::pair<std::size_t, std::size_t>> tasks;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i].error) continue;
    for (std::size_t k = 0; k < ids.size(); ++k) tasks.emplace_back(i, k);
  }
  parallel_for(tasks.size(), options.threads, [&](std::size_t t) {
    const auto [i, k] = tasks[t];
    PropertyCheckResult& slot = summary.entries[i].results[k];
    try {
      slot = verify_property(ids[k], *inputs[i].complex, inputs[i].facts);
    } catch (const Error& e) {
      slot = {ids[k], Verdict::kFail, std::string("check raised: ") + e.what()};
    }
  });

  for (const auto& e : summary.entries) {
    if (e.error) ++summary.errors;
    for (const auto& r : e.results) {
      switch (r.verdict) {
        case Verdict::kPass: ++summary.passed; break;
        case Verdict::kFail: ++summary.failed; break;
        case Verdict::kSkip: ++summary.skipped; break;
      }
    }
  }
  return summary;
}

}  // namespace scx
