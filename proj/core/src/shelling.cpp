#include "scx/shelling.hpp"

#include <algorithm>
#include <set>

#include <boost/dynamic_bitset.hpp>

#include "scx/complex_ops.hpp"

namespace scx {

namespace {

using Bits = boost::dynamic_bitset<>;

class ShellingSearch {
 public:
  ShellingSearch(const SimplicialComplex& c, std::uint64_t budget)
      : c_(c), d_(static_cast<std::size_t>(c.dimension())), budget_(budget),
        placed_(c.facets().size()) {
    for (const Face& f : c.facets()) {
      Bits b(c.num_vertices());
      for (VertexId v : f) b.set(v);
      bits_.push_back(std::move(b));
    }
  }

  std::size_t index_of(const Face& f) const {
    const auto& all = c_.facets();
    auto it = std::lower_bound(all.begin(), all.end(), f);
    if (it == all.end() || *it != f) {
      throw Error(ErrorCode::kBadSeed, c_.format_face(f) + " is not a facet");
    }
    return static_cast<std::size_t>(it - all.begin());
  }

  void place_seed(const std::vector<Face>& seed) {
    for (const Face& f : seed) {
      const std::size_t i = index_of(f);
      if (placed_.test(i) || (!order_.empty() && shared_vertices(i).none())) {
        throw Error(ErrorCode::kBadSeed, "seed is not a shelling prefix at " + c_.format_face(f));
      }
      place(i);
    }
  }

  bool run() { return step(); }

  std::vector<Face> order() const {
    std::vector<Face> out;
    for (std::size_t i : order_) out.push_back(c_.facets()[i]);
    return out;
  }

 private:
  void place(std::size_t i) {
    placed_.set(i);
    order_.push_back(i);
  }

  void unplace(std::size_t i) {
    placed_.reset(i);
    order_.pop_back();
  }

  // Vertices v of facet i such that F_i \ {v} lies in an earlier facet; empty
  // when facet i would violate the shelling condition.
  Bits shared_vertices(std::size_t i) const {
    Bits tips(c_.num_vertices());
    for (std::size_t j : order_) {
      if ((bits_[i] & bits_[j]).count() == d_) tips |= bits_[i] - bits_[j];
    }
    if (tips.none()) return tips;
    // F_i ∩ F_j must sit inside one of those ridges: some tip avoids F_j.
    for (std::size_t j : order_) {
      if (!(tips - bits_[j]).any()) return Bits(c_.num_vertices());
    }
    return tips;
  }

  bool step() {
    if (++expansions_ > budget_) {
      throw Error(ErrorCode::kTimeout, "shelling search exceeded its budget");
    }
    const std::size_t m = bits_.size();
    if (order_.size() == m) return true;
    if (failed_.count(placed_)) return false;

    std::vector<std::pair<std::size_t, std::size_t>> candidates;  // (score, index)
    for (std::size_t i = 0; i < m; ++i) {
      if (placed_.test(i)) continue;
      if (order_.empty()) {
        candidates.emplace_back(0, i);
        continue;
      }
      const Bits tips = shared_vertices(i);
      if (tips.any()) candidates.emplace_back(tips.count(), i);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [score, i] : candidates) {
      place(i);
      if (step()) return true;
      unplace(i);
    }
    failed_.insert(placed_);
    return false;
  }

  const SimplicialComplex& c_;
  std::size_t d_;
  std::uint64_t budget_;
  std::uint64_t expansions_ = 0;
  std::vector<Bits> bits_;
  Bits placed_;
  std::vector<std::size_t> order_;
  std::set<Bits> failed_;
};

}  // namespace

std::optional<ShellingOrder> find_shelling(const SimplicialComplex& c,
                                           const ShellingOptions& options) {
  if (!c.is_pure()) throw Error(ErrorCode::kNotPure, "shellings need a pure complex");
  ShellingSearch search(c, options.budget);
  search.place_seed(options.seed);
  if (!search.run()) return std::nullopt;
  return ShellingOrder{search.order()};
}

bool is_shelling_order(const SimplicialComplex& c, const std::vector<Face>& order) {
  std::vector<Face> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != c.facets()) return false;
  const auto ridge_size = static_cast<std::size_t>(c.dimension());
  for (std::size_t k = 1; k < order.size(); ++k) {
    std::vector<Face> meets;
    for (std::size_t i = 0; i < k; ++i) meets.push_back(order[k].intersection(order[i]));
    // Maximal intersections generate F_k ∩ (F_1 ∪ ... ∪ F_{k-1}).
    for (const Face& a : meets) {
      const bool maximal = std::none_of(meets.begin(), meets.end(), [&](const Face& b) {
        return b.size() > a.size() && a.is_subset_of(b);
      });
      if (maximal && a.size() != ridge_size) return false;
    }
  }
  return true;
}

std::vector<Face> star_shelling_seed(const SimplicialComplex& c, VertexId x,
                                     std::uint64_t budget) {
  const SimplicialComplex s = star(c, x);
  ShellingOptions options;
  options.budget = budget;
  auto order = find_shelling(s, options);
  if (!order) {
    throw Error(ErrorCode::kBadSeed, "star of " + c.label(x) + " is not shellable");
  }
  std::vector<Face> seed;
  for (const Face& f : order->facets) seed.push_back(*translate_face(s, c, f));
  return seed;
}

}  // namespace scx
