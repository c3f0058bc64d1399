#pragma once

#include <cstddef>
#include <vector>

#include "scx/complex.hpp"

namespace scx::detail {

// Calls fn(Face) for every k-subset of `face`, in lexicographic order.
template <typename Fn>
void for_each_subset(const Face& face, std::size_t k, Fn&& fn) {
  const std::size_t n = face.size();
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<VertexId> buf(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) buf[i] = face[idx[i]];
    fn(Face::from_sorted(buf));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace scx::detail
