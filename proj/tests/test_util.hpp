#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "scx/complex.hpp"

namespace scx::testing {

// Facets written as space-separated label strings: {"a b c", "a b d"}.
inline SimplicialComplex make(const std::vector<std::string>& rows) {
  std::vector<std::vector<std::string>> facets;
  for (const auto& row : rows) {
    std::istringstream in(row);
    std::vector<std::string> f;
    for (std::string s; in >> s;) f.push_back(s);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(facets);
}

inline Face face(const SimplicialComplex& c, const std::string& row) {
  std::istringstream in(row);
  std::vector<std::string> labels;
  for (std::string s; in >> s;) labels.push_back(s);
  return c.face_from_labels(labels);
}

}  // namespace scx::testing

#define CHECK_THROWS_CODE(expr, expected)                         \
  do {                                                            \
    bool thrown_ = false;                                         \
    try {                                                         \
      (void)(expr);                                               \
    } catch (const ::scx::Error& e_) {                            \
      thrown_ = true;                                             \
      CHECK(e_.code() == (expected));                             \
    }                                                             \
    CHECK_MESSAGE(thrown_, "expected scx::Error from " #expr);    \
  } while (0)
