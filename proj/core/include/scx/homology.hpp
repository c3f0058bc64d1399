#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "scx/complex.hpp"

namespace scx {

// Z/2 Betti numbers in degrees 0..values.size()-1.
struct BettiVector {
  std::vector<std::size_t> values;
  bool reduced = true;

  // 0 outside the stored range.
  std::size_t operator[](std::size_t k) const {
    return k < values.size() ? values[k] : 0;
  }
  long long euler_characteristic() const;
  bool all_zero() const;
  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

std::string to_string(const BettiVector& b);

// Reduced Betti numbers from the augmented chain complex.
BettiVector z2_betti(const SimplicialComplex& c);
BettiVector z2_betti_unreduced(const SimplicialComplex& c);

// Betti numbers of C(c)/C(sub), matched by vertex label. A missing `sub`
// gives the unreduced absolute homology. Throws kNotSubcomplex.
BettiVector z2_relative_betti(const SimplicialComplex& c,
                              const std::optional<SimplicialComplex>& sub);

// Reduced Betti pattern of the m-sphere: 1 in degree m, 0 elsewhere.
bool has_sphere_homology(const BettiVector& reduced, int m);

struct HomologyManifoldCheck {
  bool holds = true;
  std::optional<Face> witness;
};

// Connected, and every non-empty face tau has a link with the homology of
// the (d - |tau|)-sphere. Throws kNotPure.
HomologyManifoldCheck check_homology_manifold(const SimplicialComplex& c);
bool is_homology_manifold(const SimplicialComplex& c);
// Homology manifold that itself has sphere homology.
bool is_homology_sphere(const SimplicialComplex& c);

}  // namespace scx
