#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "scx/complex.hpp"
#include "scx/skeleton_graph.hpp"

namespace scx {

// Vertex set pairwise adjacent in the 1-skeleton.
using Clique = Face;

// Visits the j-cliques of g in lexicographic order until fn returns false.
// Returns false if the walk was stopped early.
bool for_each_clique(const SkeletonGraph& g, std::size_t j,
                     const std::function<bool(const Clique&)>& fn);
std::vector<Clique> cliques(const SkeletonGraph& g, std::size_t j);
std::vector<Clique> cliques(const SimplicialComplex& c, std::size_t j);

// T ∈ c. Throws kNotAClique.
bool is_spanning(const SimplicialComplex& c, const Clique& t);
// T \ {v} ∈ c for some v ∈ T. Throws kNotAClique.
bool is_critical(const SimplicialComplex& c, const Clique& t);

// A (k+1)-clique all of whose k-subsets are faces of c, i.e. a copy of the
// boundary of a k-simplex. The lexicographically first one is returned.
std::optional<VertexSet> contains_simplex_boundary(const SimplicialComplex& c,
                                                   std::size_t k);

// Flag / strongly banner / banner status of a pure complex. Each witness is
// the lexicographically smallest failing vertex set for that level (smallest
// size first for the flag level).
struct BannerClass {
  bool flag = true;
  bool strongly_banner = true;
  bool banner = true;
  std::optional<VertexSet> flag_witness;
  std::optional<VertexSet> strongly_banner_witness;
  std::optional<VertexSet> banner_witness;

  // Witness of the weakest level that fails, if any.
  const std::optional<VertexSet>& witness() const;
};

// Throws kNotPure.
BannerClass classify(const SimplicialComplex& c);
// Banner test alone; cheaper than classify(). Throws kNotPure.
bool is_banner(const SimplicialComplex& c);

// The 3-cycle, the boundary of a triangle.
bool is_c3(const SimplicialComplex& c);

struct BannerNumber {
  // Least j in [0, d-1] such that every face with j vertices has a link that
  // is banner or C3; nullopt when none qualifies.
  std::optional<int> value;
  // Faces examined at level `value`.
  std::size_t faces_checked = 0;
  // A face at level value-1 whose link fails, or at level d-1 when undefined.
  std::optional<Face> failing_face;

  bool defined() const noexcept { return value.has_value(); }
  // Throws kUndefined.
  int get() const;
};

// Throws kNotPure.
BannerNumber banner_number(const SimplicialComplex& c);

// The j-cliques of G(tilde(ball)) split by how they arise. Cliques are in
// the vertex ids of `tilde`.
struct TildeCliqueTypes {
  SimplicialComplex tilde;
  VertexId apex = 0;
  // j-cliques of G(ball).
  std::vector<Clique> type1;
  // (j-1)-cliques of G(∂ball) plus the apex.
  std::vector<Clique> type2;
  // (j-1)-cliques of G(ball) on boundary vertices only that are not cliques
  // of G(∂ball), plus the apex.
  std::vector<Clique> type3;
};

// Throws kNoBoundary on closed input.
TildeCliqueTypes classify_tilde_cliques(const SimplicialComplex& ball, std::size_t j);

}  // namespace scx
