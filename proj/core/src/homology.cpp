#include "scx/homology.hpp"

#include <algorithm>
#include <sstream>

#include <boost/dynamic_bitset.hpp>

#include "detail.hpp"
#include "scx/complex_ops.hpp"
#include "scx/skeleton_graph.hpp"

namespace scx {

namespace {

using Bits = boost::dynamic_bitset<>;

// Incremental Gaussian elimination over GF(2); pivots keyed by lowest bit.
class Gf2Basis {
 public:
  explicit Gf2Basis(std::size_t width) : pivots_(width) {}

  void insert(Bits v) {
    while (v.any()) {
      const auto low = v.find_first();
      if (!pivots_[low]) {
        pivots_[low] = std::move(v);
        ++rank_;
        return;
      }
      v ^= *pivots_[low];
    }
  }

  std::size_t rank() const noexcept { return rank_; }

 private:
  std::vector<std::optional<Bits>> pivots_;
  std::size_t rank_ = 0;
};

// cells[k] = chain basis of faces with k vertices, sorted.
using Cells = std::vector<std::vector<Face>>;

// Rank of the boundary map from cells[k] to cells[k-1]. Boundary terms that
// are not in cells[k-1] vanish (quotient by a subcomplex).
std::size_t boundary_rank(const Cells& cells, std::size_t k) {
  if (k == 0 || k >= cells.size()) return 0;
  const auto& rows = cells[k - 1];
  const auto& cols = cells[k];
  if (rows.empty() || cols.empty()) return 0;
  Gf2Basis basis(rows.size());
  for (const Face& f : cols) {
    Bits column(rows.size());
    detail::for_each_subset(f, k - 1, [&](const Face& s) {
      auto it = std::lower_bound(rows.begin(), rows.end(), s);
      if (it != rows.end() && *it == s) column.set(static_cast<std::size_t>(it - rows.begin()));
    });
    basis.insert(std::move(column));
  }
  return basis.rank();
}

BettiVector betti_from_cells(const Cells& cells, int dim, bool reduced) {
  BettiVector out;
  out.reduced = reduced;
  std::vector<std::size_t> ranks(cells.size() + 1, 0);
  for (std::size_t k = 1; k < cells.size(); ++k) ranks[k] = boundary_rank(cells, k);
  for (int q = 0; q <= dim; ++q) {
    const auto k = static_cast<std::size_t>(q) + 1;
    const std::size_t chains = k < cells.size() ? cells[k].size() : 0;
    out.values.push_back(chains - ranks[k] - ranks[k + 1]);
  }
  return out;
}

Cells absolute_cells(const SimplicialComplex& c, bool augmented) {
  Cells cells(static_cast<std::size_t>(c.dimension()) + 2);
  if (augmented) cells[0] = {Face{}};
  for (std::size_t k = 1; k < cells.size(); ++k) cells[k] = c.faces(k);
  return cells;
}

}  // namespace

long long BettiVector::euler_characteristic() const {
  long long sum = 0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    sum += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(values[k]);
  }
  return sum;
}

bool BettiVector::all_zero() const {
  return std::all_of(values.begin(), values.end(), [](std::size_t b) { return b == 0; });
}

std::string to_string(const BettiVector& b) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < b.values.size(); ++i) {
    if (i) os << ", ";
    os << b.values[i];
  }
  os << ')';
  return os.str();
}

BettiVector z2_betti(const SimplicialComplex& c) {
  return betti_from_cells(absolute_cells(c, true), c.dimension(), true);
}

BettiVector z2_betti_unreduced(const SimplicialComplex& c) {
  return betti_from_cells(absolute_cells(c, false), c.dimension(), false);
}

BettiVector z2_relative_betti(const SimplicialComplex& c,
                              const std::optional<SimplicialComplex>& sub) {
  if (!sub) return z2_betti_unreduced(c);
  if (!is_subcomplex(*sub, c)) {
    throw Error(ErrorCode::kNotSubcomplex, "relative pair needs sub ⊆ c");
  }
  Cells cells = absolute_cells(c, false);
  for (std::size_t k = 1; k < cells.size(); ++k) {
    std::vector<Face> drop;
    for (const Face& f : sub->faces(k)) drop.push_back(*translate_face(*sub, c, f));
    std::sort(drop.begin(), drop.end());
    std::vector<Face> kept;
    std::set_difference(cells[k].begin(), cells[k].end(), drop.begin(), drop.end(),
                        std::back_inserter(kept));
    cells[k] = std::move(kept);
  }
  return betti_from_cells(cells, c.dimension(), false);
}

bool has_sphere_homology(const BettiVector& reduced, int m) {
  if (m < 0) return reduced.all_zero();
  const std::size_t top = std::max(reduced.values.size(), static_cast<std::size_t>(m) + 1);
  for (std::size_t k = 0; k < top; ++k) {
    if (reduced[k] != (k == static_cast<std::size_t>(m) ? 1u : 0u)) return false;
  }
  return true;
}

HomologyManifoldCheck check_homology_manifold(const SimplicialComplex& c) {
  if (!c.is_pure()) throw Error(ErrorCode::kNotPure, "complex is not pure");
  HomologyManifoldCheck out;
  if (!is_connected(c)) {
    out.holds = false;
    return out;
  }
  const int d = c.dimension();
  // Facets have the void complex, the (-1)-sphere, as link.
  for (int k = 1; k <= d; ++k) {
    for (const Face& tau : c.faces(static_cast<std::size_t>(k))) {
      if (!has_sphere_homology(z2_betti(link(c, tau)), d - k)) {
        out.holds = false;
        out.witness = tau;
        return out;
      }
    }
  }
  return out;
}

bool is_homology_manifold(const SimplicialComplex& c) {
  return check_homology_manifold(c).holds;
}

bool is_homology_sphere(const SimplicialComplex& c) {
  return is_homology_manifold(c) && has_sphere_homology(z2_betti(c), c.dimension());
}

}  // namespace scx
