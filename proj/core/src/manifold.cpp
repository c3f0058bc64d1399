#include "scx/manifold.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "detail.hpp"
#include "scx/complex_ops.hpp"
#include "scx/homology.hpp"
#include "scx/skeleton_graph.hpp"

namespace scx {

namespace {

void require_pure(const SimplicialComplex& c) {
  if (!c.is_pure()) throw Error(ErrorCode::kNotPure, "complex is not pure");
}

std::map<Face, std::vector<std::size_t>> ridge_incidence(const SimplicialComplex& c) {
  std::map<Face, std::vector<std::size_t>> out;
  const auto ridge_size = static_cast<std::size_t>(c.dimension());
  for (std::size_t i = 0; i < c.facets().size(); ++i) {
    detail::for_each_subset(c.facets()[i], ridge_size,
                            [&](Face r) { out[std::move(r)].push_back(i); });
  }
  return out;
}

}  // namespace

std::size_t FacetGraph::num_edges() const {
  std::size_t total = 0;
  for (const auto& nbrs : adjacency) total += nbrs.size();
  return total / 2;
}

bool FacetGraph::is_connected() const {
  if (facets.empty()) return true;
  std::vector<char> seen(facets.size(), 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t f = queue.front();
    queue.pop_front();
    for (std::size_t g : adjacency[f]) {
      if (!seen[g]) {
        seen[g] = 1;
        ++reached;
        queue.push_back(g);
      }
    }
  }
  return reached == facets.size();
}

FacetGraph facet_graph(const SimplicialComplex& c) {
  require_pure(c);
  FacetGraph g{c.facets(), std::vector<std::vector<std::size_t>>(c.facets().size())};
  for (const auto& [ridge, owners] : ridge_incidence(c)) {
    for (std::size_t a = 0; a < owners.size(); ++a) {
      for (std::size_t b = a + 1; b < owners.size(); ++b) {
        g.adjacency[owners[a]].push_back(owners[b]);
        g.adjacency[owners[b]].push_back(owners[a]);
      }
    }
  }
  for (auto& nbrs : g.adjacency) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return g;
}

bool is_strongly_connected(const SimplicialComplex& c) {
  return facet_graph(c).is_connected();
}

std::string_view to_string(PseudomanifoldKind kind) {
  switch (kind) {
    case PseudomanifoldKind::kClosed: return "closed";
    case PseudomanifoldKind::kWithBoundary: return "with_boundary";
    case PseudomanifoldKind::kNone: break;
  }
  return "no";
}

namespace {

struct RidgeSummary {
  PseudomanifoldKind kind = PseudomanifoldKind::kNone;
  std::optional<Face> witness;
};

RidgeSummary summarize_ridges(const SimplicialComplex& c) {
  require_pure(c);
  RidgeSummary out;
  bool has_boundary = false;
  for (const auto& [ridge, owners] : ridge_incidence(c)) {
    if (owners.size() > 2) {
      out.witness = ridge;
      return out;
    }
    if (owners.size() == 1) has_boundary = true;
  }
  if (!is_strongly_connected(c)) return out;
  out.kind = has_boundary ? PseudomanifoldKind::kWithBoundary : PseudomanifoldKind::kClosed;
  return out;
}

}  // namespace

PseudomanifoldKind pseudomanifold_kind(const SimplicialComplex& c) {
  return summarize_ridges(c).kind;
}

NormalityCheck check_normal(const SimplicialComplex& c) {
  if (pseudomanifold_kind(c) == PseudomanifoldKind::kNone) {
    throw Error(ErrorCode::kNotPseudomanifold, "normality is defined on pseudomanifolds");
  }
  NormalityCheck out;
  const int d = c.dimension();
  // Links of faces with k vertices have dimension d - k.
  for (int k = 0; k <= d - 1; ++k) {
    for (const Face& tau : c.faces(static_cast<std::size_t>(k))) {
      if (!is_connected(link(c, tau))) {
        out.normal = false;
        out.witness = tau;
        return out;
      }
    }
  }
  return out;
}

AntistarCheck verify_barnette_antistar(const SimplicialComplex& c) {
  if (pseudomanifold_kind(c) != PseudomanifoldKind::kClosed) {
    throw Error(ErrorCode::kNotPseudomanifold, "antistar check needs a closed pseudomanifold");
  }
  AntistarCheck out;
  for (VertexId x = 0; x < static_cast<VertexId>(c.num_vertices()); ++x) {
    const SimplicialComplex rest = antistar(c, x);
    if (!rest.is_pure() || !is_strongly_connected(rest)) {
      out.holds = false;
      out.witness = x;
      return out;
    }
  }
  return out;
}

ManifoldClass classify_manifold(const SimplicialComplex& c) {
  ManifoldClass out;
  const RidgeSummary ridges = summarize_ridges(c);
  out.pseudomanifold = ridges.kind;
  out.ridge_witness = ridges.witness;
  out.strongly_connected = is_strongly_connected(c);
  if (out.pseudomanifold != PseudomanifoldKind::kNone) {
    const NormalityCheck normal = check_normal(c);
    out.normal = normal.normal;
    out.normality_witness = normal.witness;
  }
  const HomologyManifoldCheck hm = check_homology_manifold(c);
  out.homology_manifold = hm.holds;
  out.homology_witness = hm.witness;
  out.homology_sphere =
      hm.holds && has_sphere_homology(z2_betti(c), c.dimension());
  return out;
}

}  // namespace scx
