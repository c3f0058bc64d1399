#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scx/banner.hpp"
#include "scx/complex.hpp"
#include "scx/manifold.hpp"

namespace scx {

enum class Verdict { kPass, kFail, kSkip };
std::string_view to_string(Verdict v);

struct PropertyCheckResult {
  std::string property;
  Verdict verdict = Verdict::kSkip;
  // Counterexample on fail, unmet hypothesis on skip, empty on pass.
  std::string detail;
};

// T1.1, T4.1, L2.1, L4.2, L4.3, L4.4, L4.4-homological, L5.2, P3.7, P3.8i,
// P3.8ii, P3.8iii, A3.2-special-case.
const std::vector<std::string>& property_ids();
bool is_property_id(std::string_view id);

// Invariants shared by the property checks on one complex. The remaining
// fields are only filled in when `pure` is set.
struct ComplexFacts {
  bool pure = false;
  ManifoldClass manifold;
  BannerClass banner;
  BannerNumber banner_number;
  int kappa = 0;
};

ComplexFacts compute_facts(const SimplicialComplex& c);

// Throws kUnknownProperty.
PropertyCheckResult verify_property(std::string_view id, const SimplicialComplex& c);
PropertyCheckResult verify_property(std::string_view id, const SimplicialComplex& c,
                                    const ComplexFacts& facts);

struct CorpusOptions {
  bool include_catalog = true;
  // .scx files, verified after the catalog in the given order.
  std::vector<std::string> files;
  // In-memory complexes, verified after the files.
  std::vector<std::pair<std::string, SimplicialComplex>> complexes;
  // Restrict to one property id.
  std::optional<std::string> property;
  unsigned threads = 1;
};

struct CorpusEntry {
  std::string name;
  // Set when the input could not be read or parsed.
  std::optional<std::string> error;
  std::vector<PropertyCheckResult> results;
};

struct CorpusSummary {
  std::vector<CorpusEntry> entries;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::size_t errors = 0;

  // 1 on any failed check, otherwise 2 on any unreadable input, otherwise 0.
  int exit_code() const;
  std::string table() const;
  // Results as an "scx-verify/1" JSON document.
  std::string json() const;
};

// Throws kUnknownProperty for a bad filter.
CorpusSummary verify_corpus(const CorpusOptions& options);

}  // namespace scx
