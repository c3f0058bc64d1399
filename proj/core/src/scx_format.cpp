#include "scx/scx_format.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace scx {

SimplicialComplex read_scx(std::istream& in) {
  std::vector<std::vector<std::string>> facets;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::vector<std::string> facet;
    std::string tok;
    while (tokens >> tok) facet.push_back(tok);
    if (facet.empty() || facet.front().front() == '#') continue;
    facets.push_back(std::move(facet));
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "read failure");
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex parse_scx(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_scx(in);
}

SimplicialComplex load_scx(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return read_scx(in);
}

void write_scx(std::ostream& out, const SimplicialComplex& c) {
  // Ids already follow natural label order, so sorted ids give sorted labels.
  std::vector<std::vector<std::string>> rows;
  rows.reserve(c.facets().size());
  for (const Face& f : c.facets()) rows.push_back(c.face_labels(f));
  std::sort(rows.begin(), rows.end());
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ' ';
      out << row[i];
    }
    out << '\n';
  }
}

std::string to_scx(const SimplicialComplex& c) {
  std::ostringstream os;
  write_scx(os, c);
  return os.str();
}

void save_scx(const std::filesystem::path& path, const SimplicialComplex& c) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  write_scx(out, c);
  if (!out) throw Error(ErrorCode::kIo, "write failure on " + path.string());
}

}  // namespace scx
