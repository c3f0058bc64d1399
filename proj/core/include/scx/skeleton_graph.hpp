#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "scx/complex.hpp"

namespace scx {

// Simple undirected graph on vertices 0..n-1.
class SkeletonGraph {
 public:
  using Edge = std::pair<VertexId, VertexId>;

  explicit SkeletonGraph(std::size_t n, const std::vector<Edge>& edges = {});

  std::size_t num_vertices() const noexcept { return neighbors_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }
  bool adjacent(VertexId u, VertexId v) const { return rows_[u].test(v); }
  // Ascending.
  const std::vector<VertexId>& neighbors(VertexId v) const { return neighbors_[v]; }
  const boost::dynamic_bitset<>& adjacency_row(VertexId v) const { return rows_[v]; }
  std::vector<Edge> edges() const;

  bool is_complete() const;
  bool is_connected() const;
  // Connected components as sorted vertex lists, ordered by smallest member.
  std::vector<std::vector<VertexId>> components() const;
  // Connectivity of the subgraph on vertices with keep[v] set.
  bool is_connected_on(const boost::dynamic_bitset<>& keep) const;

 private:
  std::vector<boost::dynamic_bitset<>> rows_;
  std::vector<std::vector<VertexId>> neighbors_;
  std::size_t num_edges_ = 0;
};

// The 1-skeleton G(c).
SkeletonGraph skeleton(const SimplicialComplex& c);

// x together with all vertices adjacent to it. Throws kUnknownVertex.
VertexSet neighborhood(const SimplicialComplex& c, VertexId x);

// A complex is connected iff its 1-skeleton is.
bool is_connected(const SimplicialComplex& c);

// Vertex set S whose removal separates a from b.
struct CutSet {
  std::vector<VertexId> vertices;
  VertexId a = 0;
  VertexId b = 0;
};

struct Connectivity {
  int kappa = 0;
  // Complete graphs (including K_1) have no separating set; kappa = n - 1.
  bool complete = false;
  std::optional<CutSet> cut;
};

// Vertex connectivity by unit-capacity max flow on the vertex-split network.
// Disconnected graphs give 0 with an empty cut.
Connectivity vertex_connectivity(const SkeletonGraph& g);

// Maximum number of internally disjoint u-v paths, capped at `limit`.
// An edge uv counts as one path.
int local_connectivity(const SkeletonGraph& g, VertexId u, VertexId v,
                       int limit = -1);

struct PathFamily {
  VertexId u = 0;
  VertexId v = 0;
  // Each path starts at u and ends at v.
  std::vector<std::vector<VertexId>> paths;
};

// A maximum family of independent u-v paths. Throws kSameVertex.
PathFamily independent_paths(const SkeletonGraph& g, VertexId u, VertexId v);

// Checks paths join u to v along edges and share no interior vertex.
bool is_valid_path_family(const SkeletonGraph& g, const PathFamily& family);

struct LiuScan {
  bool holds = true;
  // First distance-2 pair (lexicographic) with fewer than k paths.
  std::optional<std::pair<VertexId, VertexId>> failing_pair;
  int paths_found = 0;
  std::size_t pairs_checked = 0;
};

// Requires at least k independent paths for every pair at distance two.
// Throws kTooSmall when n <= k, kNotConnected on a disconnected graph.
LiuScan liu_scan(const SkeletonGraph& g, int k);

// Subcomplex induced on the vertices not in N(x). Throws kEmptyOutside.
SimplicialComplex outside_subcomplex(const SimplicialComplex& c, VertexId x);
bool is_outside_connected(const SimplicialComplex& c, VertexId x);

}  // namespace scx
