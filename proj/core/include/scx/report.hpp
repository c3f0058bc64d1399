#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scx/complex.hpp"

namespace scx {

inline constexpr std::string_view kReportSchema = "scx-report/1";

// Every invariant computed for one complex. Vertex sets in witnesses are
// printed by label, so a report does not depend on how the complex was built.
struct AnalysisReport {
  std::string name;
  int dim = 0;
  std::vector<std::size_t> f_vector;
  // "closed", "with_boundary" or "no".
  std::string pseudomanifold;
  bool strongly_connected = false;
  // Only set for pseudomanifolds.
  std::optional<bool> normal;
  bool homology_manifold = false;
  bool homology_sphere = false;
  // Reduced Z/2 Betti numbers, degrees 0..dim.
  std::vector<std::size_t> betti;
  bool flag = false;
  bool strongly_banner = false;
  bool banner = false;
  std::optional<int> banner_number;
  int connectivity = 0;
  // 2d - b when b is defined.
  std::optional<int> bound;
  // The complex is a closed normal pseudomanifold, so connectivity >= bound
  // is a claim rather than an observation.
  bool theorem_applies = false;
  // connectivity >= bound, when bound is defined.
  std::optional<bool> bound_satisfied;
  std::map<std::string, std::string> witnesses;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

// Throws kNotPure.
AnalysisReport analyze(const SimplicialComplex& c, std::string name = "");

// Canonical JSON (sorted keys, fixed layout) carrying kReportSchema.
std::string report_json(const AnalysisReport& r);
// Inverse of report_json. Rejects unknown or missing fields and other schema
// versions with kParse.
AnalysisReport report_from_json(std::string_view text);

// Multi-line plain-text rendering for the terminal.
std::string report_text(const AnalysisReport& r);

}  // namespace scx
