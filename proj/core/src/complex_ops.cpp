#include "scx/complex_ops.hpp"

#include <algorithm>
#include <map>

#include "detail.hpp"

namespace scx {

SimplicialComplex link(const SimplicialComplex& c, const Face& tau) {
  if (!c.has_face(tau)) {
    throw Error(ErrorCode::kNotAFace, c.format_face(tau) + " is not a face");
  }
  std::vector<Face> out;
  for (const Face& f : c.facets()) {
    if (!tau.is_subset_of(f)) continue;
    std::vector<VertexId> rest;
    std::set_difference(f.begin(), f.end(), tau.begin(), tau.end(),
                        std::back_inserter(rest));
    if (!rest.empty()) out.push_back(Face::from_sorted(std::move(rest)));
  }
  if (out.empty()) {
    throw Error(ErrorCode::kEmptyComplex,
                "link of facet " + c.format_face(tau) + " is the void complex");
  }
  return SimplicialComplex::from_id_facets(c.labels(), std::move(out));
}

namespace {

void check_vertex(const SimplicialComplex& c, VertexId x) {
  if (x < 0 || static_cast<std::size_t>(x) >= c.num_vertices()) {
    throw Error(ErrorCode::kUnknownVertex, "vertex id " + std::to_string(x));
  }
}

}  // namespace

SimplicialComplex star(const SimplicialComplex& c, VertexId x) {
  check_vertex(c, x);
  std::vector<Face> out;
  for (const Face& f : c.facets()) {
    if (f.contains(x)) out.push_back(f);
  }
  return SimplicialComplex::from_id_facets(c.labels(), std::move(out));
}

SimplicialComplex antistar(const SimplicialComplex& c, VertexId x) {
  check_vertex(c, x);
  return induced(c, c.all_vertices().without(x));
}

SimplicialComplex induced(const SimplicialComplex& c, const VertexSet& vertices) {
  for (VertexId v : vertices) check_vertex(c, v);
  std::vector<Face> out;
  for (const Face& f : c.facets()) {
    Face kept = f.intersection(vertices);
    if (!kept.empty()) out.push_back(std::move(kept));
  }
  if (out.empty()) {
    throw Error(ErrorCode::kEmptyComplex, "induced subcomplex has no vertices");
  }
  return SimplicialComplex::from_id_facets(c.labels(), std::move(out));
}

std::string fresh_apex_label(const SimplicialComplex& c,
                             const std::vector<std::string>& taken) {
  for (int i = 0;; ++i) {
    std::string label = "_apex" + std::to_string(i);
    if (!c.find_vertex(label) &&
        std::find(taken.begin(), taken.end(), label) == taken.end()) {
      return label;
    }
  }
}

namespace {

std::string claim_label(const SimplicialComplex& c, std::optional<std::string> wanted,
                        const std::vector<std::string>& taken) {
  if (!wanted) return fresh_apex_label(c, taken);
  if (c.find_vertex(*wanted) ||
      std::find(taken.begin(), taken.end(), *wanted) != taken.end()) {
    throw Error(ErrorCode::kLabelClash, "label '" + *wanted + "' already in use");
  }
  return *wanted;
}

// Facets of c joined with each apex in turn, apexes appended to the label table.
SimplicialComplex join_with_points(const SimplicialComplex& c,
                                   const std::vector<std::string>& apexes) {
  std::vector<std::string> labels = c.labels();
  std::vector<Face> out;
  for (const auto& apex : apexes) {
    const auto id = static_cast<VertexId>(labels.size());
    labels.push_back(apex);
    for (const Face& f : c.facets()) out.push_back(f.with(id));
  }
  return SimplicialComplex::from_id_facets(labels, std::move(out));
}

}  // namespace

SimplicialComplex cone(const SimplicialComplex& c, std::optional<std::string> apex) {
  return join_with_points(c, {claim_label(c, std::move(apex), {})});
}

SimplicialComplex suspension(const SimplicialComplex& c, std::optional<std::string> north,
                             std::optional<std::string> south) {
  std::string n = claim_label(c, std::move(north), {});
  std::string s = claim_label(c, std::move(south), {n});
  return join_with_points(c, {n, s});
}

std::vector<Face> boundary_ridges(const SimplicialComplex& c) {
  if (!c.is_pure()) {
    throw Error(ErrorCode::kNotPure, "boundary requires a pure complex");
  }
  if (c.dimension() == 0) return {};
  std::map<Face, int> count;
  const std::size_t ridge_size = static_cast<std::size_t>(c.dimension());
  for (const Face& f : c.facets()) {
    detail::for_each_subset(f, ridge_size, [&](Face r) { ++count[std::move(r)]; });
  }
  std::vector<Face> out;
  for (auto& [ridge, n] : count) {
    if (n == 1) out.push_back(ridge);
  }
  return out;
}

std::optional<SimplicialComplex> boundary(const SimplicialComplex& c) {
  std::vector<Face> ridges = boundary_ridges(c);
  if (ridges.empty()) return std::nullopt;
  return SimplicialComplex::from_id_facets(c.labels(), std::move(ridges));
}

SimplicialComplex tilde(const SimplicialComplex& c, std::optional<std::string> apex) {
  std::vector<Face> ridges = boundary_ridges(c);
  if (ridges.empty()) {
    throw Error(ErrorCode::kNoBoundary, "complex has no boundary to cone off");
  }
  const std::string apex_label = claim_label(c, std::move(apex), {});
  std::vector<std::string> labels = c.labels();
  const auto apex_id = static_cast<VertexId>(labels.size());
  labels.push_back(apex_label);
  std::vector<Face> out = c.facets();
  for (const Face& r : ridges) out.push_back(r.with(apex_id));
  return SimplicialComplex::from_id_facets(labels, std::move(out));
}

std::optional<Face> translate_face(const SimplicialComplex& sub,
                                   const SimplicialComplex& c, const Face& face) {
  std::vector<VertexId> vs;
  vs.reserve(face.size());
  for (VertexId v : face) {
    auto id = c.find_vertex(sub.label(v));
    if (!id) return std::nullopt;
    vs.push_back(*id);
  }
  return Face(std::move(vs));
}

bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& c) {
  return std::all_of(sub.facets().begin(), sub.facets().end(), [&](const Face& f) {
    auto mapped = translate_face(sub, c, f);
    return mapped && c.has_face(*mapped);
  });
}

}  // namespace scx
