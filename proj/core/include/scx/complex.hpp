#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scx/error.hpp"

namespace scx {

// Dense vertex index, contiguous 0..n-1 within one complex.
using VertexId = std::int32_t;

// A strictly increasing list of vertex ids. Used for faces, facets, cliques
// and plain vertex sets alike.
class Face {
 public:
  Face() = default;
  // Sorts the input; throws kMalformedFace on a repeated vertex.
  explicit Face(std::vector<VertexId> vertices);
  Face(std::initializer_list<VertexId> vertices)
      : Face(std::vector<VertexId>(vertices)) {}

  // Caller guarantees strictly increasing input.
  static Face from_sorted(std::vector<VertexId> vertices);

  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  int dimension() const noexcept { return static_cast<int>(size()) - 1; }
  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const noexcept { return vertices_.begin(); }
  auto end() const noexcept { return vertices_.end(); }

  bool contains(VertexId v) const;
  bool is_subset_of(const Face& other) const;
  Face without(VertexId v) const;
  Face with(VertexId v) const;
  Face intersection(const Face& other) const;

  friend bool operator==(const Face&, const Face&) = default;
  friend auto operator<=>(const Face& a, const Face& b) {
    return a.vertices_ <=> b.vertices_;
  }

 private:
  std::vector<VertexId> vertices_;
};

using VertexSet = Face;

// (f_{-1}, f_0, ..., f_d); counts[0] is always 1.
struct FVector {
  std::vector<std::size_t> counts;

  // Number of faces of dimension `dim` (dim >= -1); 0 outside the range.
  std::size_t f(int dim) const;
  friend bool operator==(const FVector&, const FVector&) = default;
};

std::string to_string(const FVector& f);

// Finite simplicial complex stored by its facets.
//
// Vertices carry string labels; ids are assigned in natural label order
// ("v2" < "v10") so two complexes with the same labels and facets compare
// equal regardless of how they were built. Facets are kept sorted
// lexicographically. The empty complex cannot be constructed.
//
// Instances are immutable. Per-cardinality face lists are computed on first
// use and shared between copies; concurrent readers are safe.
class SimplicialComplex {
 public:
  // Builds from facets given as label lists. Non-maximal entries are dropped
  // and counted in absorbed_facets(). Throws kEmptyComplex, kMalformedFace.
  static SimplicialComplex from_facets(
      const std::vector<std::vector<std::string>>& facets);

  // Builds from facets over ids into `labels`. Unused labels are dropped and
  // the remaining vertices renumbered.
  static SimplicialComplex from_id_facets(const std::vector<std::string>& labels,
                                          std::vector<Face> facets);

  std::size_t num_vertices() const noexcept { return labels_.size(); }
  int dimension() const noexcept { return dim_; }
  bool is_pure() const noexcept { return pure_; }
  std::size_t absorbed_facets() const noexcept { return absorbed_; }

  const std::vector<Face>& facets() const noexcept { return facets_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(VertexId v) const { return labels_.at(v); }

  std::optional<VertexId> find_vertex(std::string_view label) const;
  // Throws kUnknownVertex.
  VertexId vertex_id(std::string_view label) const;
  Face face_from_labels(const std::vector<std::string>& labels) const;
  std::vector<std::string> face_labels(const Face& face) const;
  // "{a b c}"
  std::string format_face(const Face& face) const;
  Face all_vertices() const;

  // All faces with `cardinality` vertices, lexicographically sorted.
  // cardinality 0 yields the single empty face; out of range yields nothing.
  const std::vector<Face>& faces(std::size_t cardinality) const;
  bool has_face(const Face& face) const;
  FVector f_vector() const;

  // Same labels and same facets.
  bool operator==(const SimplicialComplex& other) const;

 private:
  struct FaceCache;

  SimplicialComplex() = default;

  std::vector<std::string> labels_;
  std::vector<Face> facets_;
  int dim_ = -1;
  bool pure_ = true;
  std::size_t absorbed_ = 0;
  std::shared_ptr<FaceCache> cache_;
};

// Natural ordering on labels: digit runs compare numerically.
bool natural_less(std::string_view a, std::string_view b);

}  // namespace scx
