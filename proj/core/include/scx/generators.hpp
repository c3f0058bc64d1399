#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "scx/complex.hpp"

namespace scx {

using LabelledEdges = std::vector<std::pair<std::string, std::string>>;

LabelledEdges complete_graph(int n);  // vertices "1".."n"
LabelledEdges cycle_graph(int n);     // vertices "1".."n"
LabelledEdges path_graph(int n);      // vertices "1".."n"

// One tetrahedron {u, v, u~v.1, u~v.2} per edge uv. Throws kNoEdges.
SimplicialComplex banana(const LabelledEdges& graph);

// The 26-facet 3-ball on x1..x3, a1..a3, b1..b3, c1..c3, d1..d3, y: a ring of
// three octahedra around x1 x2 x3 with its hole filled through y.
SimplicialComplex ring_ball();

// Full d-simplex on v0..vd.
SimplicialComplex simplex(int d);
// Boundary of the d-simplex: a (d-1)-sphere on d+1 vertices, d >= 1.
SimplicialComplex simplex_boundary(int d);
// Boundary of the (d+1)-dimensional cross-polytope: join of d+1 pairs
// {p_i, n_i}.
SimplicialComplex cross_polytope_boundary(int d);
// C_n on v0..v{n-1}, n >= 3.
SimplicialComplex cycle(int n);

// Starts from the boundary of the (d+1)-simplex and k times replaces a facet
// F by the cone over its boundary with a new vertex. The facet is chosen as
// index (r mod #facets) in lexicographic facet order, with r the next output
// of std::minstd_rand seeded with `seed` (a standardized LCG, so the result
// is identical on every platform).
SimplicialComplex stacked_sphere(int d, int k, std::uint32_t seed);

// Boundary of the cyclic (d+1)-polytope on n vertices v1..vn, facets by
// Gale's evenness condition. Requires n >= d+2, d >= 1.
SimplicialComplex cyclic_polytope_boundary(int n, int d);

// Möbius' 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
SimplicialComplex torus7();

// Seven-vertex 2-sphere in which the vertex x has an outside set {u, w}
// consisting of two non-adjacent vertices: a disk with the chord y-z split
// into two fans, closed off by a cone with apex x over its boundary. It is
// not banner, since {x, y, z} is an empty triangle.
SimplicialComplex split_outside_sphere();

struct GeneratorSpec {
  std::string name;
  std::vector<long> params;

  // "name" or "name(p1,p2,...)".
  std::string display() const;
};

// Builds a complex by generator name. Throws kUnknownGenerator, kOutOfRange.
SimplicialComplex generate(const GeneratorSpec& spec);

// Names accepted by generate(), with a short parameter description.
std::vector<std::pair<std::string, std::string>> generator_names();

struct CatalogEntry {
  GeneratorSpec spec;
  SimplicialComplex complex;
};

// The fixed default corpus.
std::vector<CatalogEntry> catalog();

}  // namespace scx
