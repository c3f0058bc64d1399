#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "scx/complex.hpp"

namespace scx {

// Facets F_1..F_m such that for k >= 2, F_k ∩ (F_1 ∪ ... ∪ F_{k-1}) is pure
// of dimension d-1.
struct ShellingOrder {
  std::vector<Face> facets;
};

struct ShellingOptions {
  // Ordered prefix the shelling must start with.
  std::vector<Face> seed;
  // Node expansions before giving up with kTimeout.
  std::uint64_t budget = 10'000'000;
};

// Backtracking search. Returns nullopt when no shelling extends the seed.
// Throws kNotPure, kBadSeed, kTimeout.
std::optional<ShellingOrder> find_shelling(const SimplicialComplex& c,
                                           const ShellingOptions& options = {});

// Checks that `order` lists every facet of c exactly once and meets the
// shelling condition. Used to validate search results.
bool is_shelling_order(const SimplicialComplex& c, const std::vector<Face>& order);

// A shelling of star(x), expressed in c's vertex ids, for use as a seed.
// Throws kTimeout, or kBadSeed if the star is not shellable.
std::vector<Face> star_shelling_seed(const SimplicialComplex& c, VertexId x,
                                     std::uint64_t budget = 10'000'000);

}  // namespace scx
