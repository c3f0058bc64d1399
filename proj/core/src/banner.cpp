#include "scx/banner.hpp"

#include <algorithm>

#include "detail.hpp"
#include "scx/complex_ops.hpp"

namespace scx {

namespace {

using Bits = boost::dynamic_bitset<>;

// Extends `current` by vertices from `candidates`; candidates are all larger
// than every member of current.
bool extend_clique(const SkeletonGraph& g, std::vector<VertexId>& current,
                   Bits candidates, std::size_t j,
                   const std::function<bool(const Clique&)>& fn) {
  if (current.size() == j) return fn(Face::from_sorted(current));
  const std::size_t need = j - current.size();
  for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_first()) {
    if (candidates.count() < need) return true;
    candidates.reset(v);
    current.push_back(static_cast<VertexId>(v));
    const bool go_on =
        extend_clique(g, current, candidates & g.adjacency_row(static_cast<VertexId>(v)),
                      j, fn);
    current.pop_back();
    if (!go_on) return false;
  }
  return true;
}

void require_clique(const SimplicialComplex& c, const Clique& t) {
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = a + 1; b < t.size(); ++b) {
      if (!c.has_face(Face::from_sorted({t[a], t[b]}))) {
        throw Error(ErrorCode::kNotAClique, c.format_face(t) + " is not a clique");
      }
    }
  }
}

void require_pure(const SimplicialComplex& c) {
  if (!c.is_pure()) throw Error(ErrorCode::kNotPure, "complex is not pure");
}

bool critical_unchecked(const SimplicialComplex& c, const Clique& t) {
  return std::any_of(t.begin(), t.end(), [&](VertexId v) { return c.has_face(t.without(v)); });
}

std::optional<VertexSet> find_simplex_boundary(const SimplicialComplex& c,
                                               const SkeletonGraph& g, std::size_t k) {
  std::optional<VertexSet> found;
  for_each_clique(g, k + 1, [&](const Clique& t) {
    bool all = true;
    detail::for_each_subset(t, k, [&](const Face& s) {
      if (all && !c.has_face(s)) all = false;
    });
    if (all) found = t;
    return !all;
  });
  return found;
}

// First (d+1)-clique that is not spanning, and first critical one that is not.
struct TopCliqueScan {
  std::optional<Clique> non_spanning;
  std::optional<Clique> critical_non_spanning;
};

TopCliqueScan scan_top_cliques(const SimplicialComplex& c, const SkeletonGraph& g) {
  TopCliqueScan scan;
  const auto size = static_cast<std::size_t>(c.dimension()) + 1;
  for_each_clique(g, size, [&](const Clique& t) {
    if (c.has_face(t)) return true;
    if (!scan.non_spanning) scan.non_spanning = t;
    if (critical_unchecked(c, t)) {
      scan.critical_non_spanning = t;
      return false;
    }
    return true;
  });
  return scan;
}

}  // namespace

bool for_each_clique(const SkeletonGraph& g, std::size_t j,
                     const std::function<bool(const Clique&)>& fn) {
  std::vector<VertexId> current;
  if (j == 0) return fn(Face{});
  Bits all(g.num_vertices());
  all.set();
  return extend_clique(g, current, all, j, fn);
}

std::vector<Clique> cliques(const SkeletonGraph& g, std::size_t j) {
  std::vector<Clique> out;
  for_each_clique(g, j, [&](const Clique& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::vector<Clique> cliques(const SimplicialComplex& c, std::size_t j) {
  return cliques(skeleton(c), j);
}

bool is_spanning(const SimplicialComplex& c, const Clique& t) {
  require_clique(c, t);
  return c.has_face(t);
}

bool is_critical(const SimplicialComplex& c, const Clique& t) {
  require_clique(c, t);
  return critical_unchecked(c, t);
}

std::optional<VertexSet> contains_simplex_boundary(const SimplicialComplex& c,
                                                   std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kOutOfRange, "simplex boundary needs k >= 1");
  return find_simplex_boundary(c, skeleton(c), k);
}

const std::optional<VertexSet>& BannerClass::witness() const {
  if (!banner) return banner_witness;
  if (!strongly_banner) return strongly_banner_witness;
  return flag_witness;
}

BannerClass classify(const SimplicialComplex& c) {
  require_pure(c);
  const SkeletonGraph g = skeleton(c);
  const auto d = static_cast<std::size_t>(c.dimension());
  BannerClass out;

  // Cliques with at most two vertices are faces; any clique with d+3 or more
  // vertices contains a non-spanning (d+2)-clique.
  for (std::size_t j = 3; j <= d + 2 && !out.flag_witness; ++j) {
    for_each_clique(g, j, [&](const Clique& t) {
      if (c.has_face(t)) return true;
      out.flag_witness = t;
      return false;
    });
  }
  out.flag = !out.flag_witness;

  const TopCliqueScan scan = scan_top_cliques(c, g);
  std::optional<VertexSet> sphere;
  if (!scan.non_spanning || !scan.critical_non_spanning) {
    sphere = find_simplex_boundary(c, g, d + 1);
  }
  out.strongly_banner_witness = scan.non_spanning ? scan.non_spanning : sphere;
  out.banner_witness = scan.critical_non_spanning ? scan.critical_non_spanning : sphere;
  out.strongly_banner = !out.strongly_banner_witness;
  out.banner = !out.banner_witness;
  return out;
}

bool is_banner(const SimplicialComplex& c) {
  require_pure(c);
  const SkeletonGraph g = skeleton(c);
  const auto size = static_cast<std::size_t>(c.dimension()) + 1;
  const bool cliques_ok = for_each_clique(g, size, [&](const Clique& t) {
    return c.has_face(t) || !critical_unchecked(c, t);
  });
  return cliques_ok && !find_simplex_boundary(c, g, size);
}

bool is_c3(const SimplicialComplex& c) {
  return c.num_vertices() == 3 && c.dimension() == 1 && c.facets().size() == 3;
}

int BannerNumber::get() const {
  if (!value) {
    throw Error(ErrorCode::kUndefined, "no level j <= d-1 has only banner or C3 links");
  }
  return *value;
}

BannerNumber banner_number(const SimplicialComplex& c) {
  require_pure(c);
  BannerNumber out;
  std::optional<Face> previous_failure;
  for (int j = 0; j < c.dimension(); ++j) {
    std::optional<Face> failure;
    const auto& level = c.faces(static_cast<std::size_t>(j));
    for (const Face& sigma : level) {
      const SimplicialComplex l = link(c, sigma);
      if (!is_c3(l) && !is_banner(l)) {
        failure = sigma;
        break;
      }
    }
    if (!failure) {
      out.value = j;
      out.faces_checked = level.size();
      out.failing_face = previous_failure;
      return out;
    }
    previous_failure = failure;
  }
  out.failing_face = previous_failure;
  return out;
}

TildeCliqueTypes classify_tilde_cliques(const SimplicialComplex& ball, std::size_t j) {
  const std::vector<Face> ridges = boundary_ridges(ball);
  if (ridges.empty()) {
    throw Error(ErrorCode::kNoBoundary, "complex has no boundary");
  }
  const std::string apex_label = fresh_apex_label(ball);
  TildeCliqueTypes out{tilde(ball, apex_label), 0, {}, {}, {}};
  out.apex = out.tilde.vertex_id(apex_label);
  const SimplicialComplex rim = *boundary(ball);

  auto to_tilde = [&](const SimplicialComplex& from, const Clique& t, bool add_apex) {
    Face mapped = *translate_face(from, out.tilde, t);
    return add_apex ? mapped.with(out.apex) : mapped;
  };

  for (const Clique& t : cliques(ball, j)) out.type1.push_back(to_tilde(ball, t, false));
  if (j == 0) return out;

  for (const Clique& t : cliques(rim, j - 1)) out.type2.push_back(to_tilde(rim, t, true));

  const SkeletonGraph rim_graph = skeleton(rim);
  for (const Clique& t : cliques(ball, j - 1)) {
    bool on_rim = true;
    std::vector<VertexId> rim_ids;
    for (VertexId v : t) {
      auto id = rim.find_vertex(ball.label(v));
      if (!id) {
        on_rim = false;
        break;
      }
      rim_ids.push_back(*id);
    }
    if (!on_rim) continue;
    bool rim_clique = true;
    for (std::size_t a = 0; a < rim_ids.size() && rim_clique; ++a) {
      for (std::size_t b = a + 1; b < rim_ids.size(); ++b) {
        if (!rim_graph.adjacent(rim_ids[a], rim_ids[b])) {
          rim_clique = false;
          break;
        }
      }
    }
    if (!rim_clique) out.type3.push_back(to_tilde(ball, t, true));
  }
  std::sort(out.type1.begin(), out.type1.end());
  std::sort(out.type2.begin(), out.type2.end());
  std::sort(out.type3.begin(), out.type3.end());
  return out;
}

}  // namespace scx
