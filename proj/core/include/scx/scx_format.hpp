#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "scx/complex.hpp"

namespace scx {

// Facet-list text format (.scx):
//   - UTF-8, one facet per non-blank line, vertex labels separated by
//     whitespace;
//   - lines whose first non-blank character is '#' are comments.
// Writing emits each facet's labels in natural order and the facets in
// lexicographic order of those label lists.

SimplicialComplex read_scx(std::istream& in);
SimplicialComplex parse_scx(std::string_view text);
// Throws Error(kIo) if the file cannot be opened.
SimplicialComplex load_scx(const std::filesystem::path& path);

void write_scx(std::ostream& out, const SimplicialComplex& c);
std::string to_scx(const SimplicialComplex& c);
void save_scx(const std::filesystem::path& path, const SimplicialComplex& c);

}  // namespace scx
