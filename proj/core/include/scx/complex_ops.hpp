#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scx/complex.hpp"

namespace scx {

// {sigma : sigma ∩ tau = ∅, sigma ∪ tau ∈ c}. The link of the empty face is
// c itself. Throws kNotAFace, and kEmptyComplex when tau is a facet (its link
// is the void complex).
SimplicialComplex link(const SimplicialComplex& c, const Face& tau);

// Closed star: the facets of c containing x.
SimplicialComplex star(const SimplicialComplex& c, VertexId x);
// Subcomplex induced on all vertices except x.
SimplicialComplex antistar(const SimplicialComplex& c, VertexId x);
// Faces of c whose vertices all lie in `vertices`. Throws kEmptyComplex when
// nothing survives.
SimplicialComplex induced(const SimplicialComplex& c, const VertexSet& vertices);

// "_apex0", "_apex1", ...: the first such label not used by c (skipping
// `taken` as well).
std::string fresh_apex_label(const SimplicialComplex& c,
                             const std::vector<std::string>& taken = {});

// Throws kLabelClash if the apex label already names a vertex.
SimplicialComplex cone(const SimplicialComplex& c,
                       std::optional<std::string> apex = std::nullopt);
SimplicialComplex suspension(const SimplicialComplex& c,
                             std::optional<std::string> north = std::nullopt,
                             std::optional<std::string> south = std::nullopt);

// Ridges of a pure complex that lie in exactly one facet, in c's ids.
std::vector<Face> boundary_ridges(const SimplicialComplex& c);
// Complex generated by boundary_ridges(c); nullopt when there are none.
// Throws kNotPure.
std::optional<SimplicialComplex> boundary(const SimplicialComplex& c);
// c ∪ (∂c * apex). Throws kNoBoundary for closed input.
SimplicialComplex tilde(const SimplicialComplex& c,
                        std::optional<std::string> apex = std::nullopt);

// Maps a face of `sub` into `c` by label; nullopt if some label is missing.
std::optional<Face> translate_face(const SimplicialComplex& sub,
                                   const SimplicialComplex& c,
                                   const Face& face);

// Every facet of `sub` (by label) is a face of `c`.
bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& c);

}  // namespace scx
