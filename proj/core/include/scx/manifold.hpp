#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "scx/complex.hpp"

namespace scx {

// Facets as nodes, joined when they share a ridge.
struct FacetGraph {
  std::vector<Face> facets;
  std::vector<std::vector<std::size_t>> adjacency;

  std::size_t num_edges() const;
  bool is_connected() const;
};

// Throws kNotPure.
FacetGraph facet_graph(const SimplicialComplex& c);
bool is_strongly_connected(const SimplicialComplex& c);

enum class PseudomanifoldKind { kNone, kClosed, kWithBoundary };
std::string_view to_string(PseudomanifoldKind kind);

// kClosed: every ridge in exactly two facets and strongly connected.
// kWithBoundary: every ridge in one or two facets, some in one, strongly
// connected. Throws kNotPure.
PseudomanifoldKind pseudomanifold_kind(const SimplicialComplex& c);

struct NormalityCheck {
  bool normal = true;
  // A face whose link has dimension >= 1 and is disconnected.
  std::optional<Face> witness;
};

// Throws kNotPseudomanifold unless c is a pseudomanifold (either kind).
NormalityCheck check_normal(const SimplicialComplex& c);

struct AntistarCheck {
  bool holds = true;
  std::optional<VertexId> witness;
};

// Strong connectivity of every vertex antistar. Throws kNotPseudomanifold
// unless c is a closed pseudomanifold.
AntistarCheck verify_barnette_antistar(const SimplicialComplex& c);

// Recorded manifold properties of a pure complex. Homology flags are over GF(2).
struct ManifoldClass {
  PseudomanifoldKind pseudomanifold = PseudomanifoldKind::kNone;
  bool strongly_connected = false;
  // Only meaningful when pseudomanifold != kNone.
  bool normal = false;
  bool homology_manifold = false;
  bool homology_sphere = false;
  std::optional<Face> ridge_witness;      // ridge in the wrong number of facets
  std::optional<Face> normality_witness;  // face with a disconnected link
  std::optional<Face> homology_witness;   // face whose link is not a homology sphere

  bool closed_pseudomanifold() const { return pseudomanifold == PseudomanifoldKind::kClosed; }
  bool normal_pseudomanifold() const { return closed_pseudomanifold() && normal; }
};

// Throws kNotPure.
ManifoldClass classify_manifold(const SimplicialComplex& c);

}  // namespace scx
