#include "scx/complex.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "detail.hpp"

namespace scx {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyComplex: return "EmptyComplex";
    case ErrorCode::kMalformedFace: return "MalformedFace";
    case ErrorCode::kNotAFace: return "NotAFace";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kLabelClash: return "LabelClash";
    case ErrorCode::kNoBoundary: return "NoBoundary";
    case ErrorCode::kNotPure: return "NotPure";
    case ErrorCode::kNotAClique: return "NotAClique";
    case ErrorCode::kUndefined: return "Undefined";
    case ErrorCode::kNotPseudomanifold: return "NotPseudomanifold";
    case ErrorCode::kNotSubcomplex: return "NotSubcomplex";
    case ErrorCode::kNotConnected: return "NotConnected";
    case ErrorCode::kBadSeed: return "BadSeed";
    case ErrorCode::kTimeout: return "Timeout";
    case ErrorCode::kSameVertex: return "SameVertex";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kEmptyOutside: return "EmptyOutside";
    case ErrorCode::kNoEdges: return "NoEdges";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kUnknownGenerator: return "UnknownGenerator";
    case ErrorCode::kUnknownProperty: return "UnknownProperty";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

// --- Face -------------------------------------------------------------------

Face::Face(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw Error(ErrorCode::kMalformedFace, "repeated vertex in face");
  }
}

Face Face::from_sorted(std::vector<VertexId> vertices) {
  Face f;
  f.vertices_ = std::move(vertices);
  return f;
}

bool Face::contains(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Face::is_subset_of(const Face& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(),
                       vertices_.begin(), vertices_.end());
}

Face Face::without(VertexId v) const {
  std::vector<VertexId> out;
  out.reserve(vertices_.size());
  for (VertexId u : vertices_) {
    if (u != v) out.push_back(u);
  }
  return from_sorted(std::move(out));
}

Face Face::with(VertexId v) const {
  if (contains(v)) return *this;
  std::vector<VertexId> out = vertices_;
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return from_sorted(std::move(out));
}

Face Face::intersection(const Face& other) const {
  std::vector<VertexId> out;
  std::set_intersection(vertices_.begin(), vertices_.end(),
                        other.vertices_.begin(), other.vertices_.end(),
                        std::back_inserter(out));
  return from_sorted(std::move(out));
}

// --- FVector ----------------------------------------------------------------

std::size_t FVector::f(int dim) const {
  const int idx = dim + 1;
  if (idx < 0 || idx >= static_cast<int>(counts.size())) return 0;
  return counts[idx];
}

std::string to_string(const FVector& f) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < f.counts.size(); ++i) {
    if (i) os << ", ";
    os << f.counts[i];
  }
  os << ')';
  return os.str();
}

// --- labels -----------------------------------------------------------------

bool natural_less(std::string_view a, std::string_view b) {
  auto is_digit = [](char ch) {
    return std::isdigit(static_cast<unsigned char>(ch)) != 0;
  };
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < a.size() && is_digit(a[ie])) ++ie;
      while (je < b.size() && is_digit(b[je])) ++je;
      std::size_t is = i;
      std::size_t js = j;
      while (is + 1 < ie && a[is] == '0') ++is;
      while (js + 1 < je && b[js] == '0') ++js;
      const std::string_view da = a.substr(is, ie - is);
      const std::string_view db = b.substr(js, je - js);
      if (da.size() != db.size()) return da.size() < db.size();
      if (da != db) return da < db;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) {
        return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
      }
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  // Equal up to leading zeros; fall back to a strict total order.
  return a < b;
}

// --- SimplicialComplex ------------------------------------------------------

struct SimplicialComplex::FaceCache {
  explicit FaceCache(std::size_t slots)
      : once(std::make_unique<std::once_flag[]>(slots)), faces(slots) {}

  std::unique_ptr<std::once_flag[]> once;
  std::vector<std::vector<Face>> faces;
};

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<std::string>>& facets) {
  if (facets.empty()) {
    throw Error(ErrorCode::kEmptyComplex, "no facets given");
  }
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> ids;
  std::vector<Face> id_facets;
  id_facets.reserve(facets.size());
  for (const auto& facet : facets) {
    if (facet.empty()) {
      throw Error(ErrorCode::kMalformedFace, "empty facet");
    }
    std::vector<VertexId> vs;
    vs.reserve(facet.size());
    for (const auto& label : facet) {
      if (label.empty() ||
          std::any_of(label.begin(), label.end(), [](char ch) {
            return std::isspace(static_cast<unsigned char>(ch)) != 0;
          })) {
        throw Error(ErrorCode::kMalformedFace,
                    "vertex label must be a non-empty token: '" + label + "'");
      }
      auto [it, inserted] = ids.emplace(label, static_cast<VertexId>(labels.size()));
      if (inserted) labels.push_back(label);
      vs.push_back(it->second);
    }
    std::vector<VertexId> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      std::string text;
      for (const auto& label : facet) text += (text.empty() ? "" : " ") + label;
      throw Error(ErrorCode::kMalformedFace, "repeated vertex in facet {" + text + "}");
    }
    id_facets.push_back(Face::from_sorted(std::move(sorted)));
  }
  return from_id_facets(labels, std::move(id_facets));
}

SimplicialComplex SimplicialComplex::from_id_facets(
    const std::vector<std::string>& labels, std::vector<Face> facets) {
  if (facets.empty()) {
    throw Error(ErrorCode::kEmptyComplex, "no facets given");
  }
  const std::size_t input_count = facets.size();

  std::vector<char> used(labels.size(), 0);
  for (const Face& f : facets) {
    if (f.empty()) throw Error(ErrorCode::kMalformedFace, "empty facet");
    for (VertexId v : f) {
      if (v < 0 || static_cast<std::size_t>(v) >= labels.size()) {
        throw Error(ErrorCode::kUnknownVertex, "vertex id out of range");
      }
      used[v] = 1;
    }
  }
  std::vector<VertexId> order;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (used[v]) order.push_back(static_cast<VertexId>(v));
  }
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return natural_less(labels[a], labels[b]);
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (labels[order[i - 1]] == labels[order[i]]) {
      throw Error(ErrorCode::kLabelClash, "duplicate label '" + labels[order[i]] + "'");
    }
  }
  std::vector<VertexId> remap(labels.size(), -1);
  SimplicialComplex c;
  c.labels_.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    remap[order[i]] = static_cast<VertexId>(i);
    c.labels_.push_back(labels[order[i]]);
  }

  for (Face& f : facets) {
    std::vector<VertexId> vs;
    vs.reserve(f.size());
    for (VertexId v : f) vs.push_back(remap[v]);
    f = Face(std::move(vs));
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  // Drop faces contained in a larger facet.
  std::vector<const Face*> by_size;
  by_size.reserve(facets.size());
  for (const Face& f : facets) by_size.push_back(&f);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](const Face* a, const Face* b) { return a->size() > b->size(); });
  std::vector<Face> kept;
  for (const Face* f : by_size) {
    const bool absorbed = std::any_of(kept.begin(), kept.end(), [&](const Face& g) {
      return g.size() > f->size() && f->is_subset_of(g);
    });
    if (!absorbed) kept.push_back(*f);
  }
  std::sort(kept.begin(), kept.end());

  c.absorbed_ = input_count - kept.size();
  c.dim_ = 0;
  for (const Face& f : kept) c.dim_ = std::max(c.dim_, f.dimension());
  c.pure_ = std::all_of(kept.begin(), kept.end(),
                        [&](const Face& f) { return f.dimension() == c.dim_; });
  c.facets_ = std::move(kept);
  c.cache_ = std::make_shared<FaceCache>(static_cast<std::size_t>(c.dim_) + 2);
  return c;
}

std::optional<VertexId> SimplicialComplex::find_vertex(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label,
                             [](const std::string& a, std::string_view b) {
                               return natural_less(a, b);
                             });
  if (it != labels_.end() && *it == label) {
    return static_cast<VertexId>(it - labels_.begin());
  }
  return std::nullopt;
}

VertexId SimplicialComplex::vertex_id(std::string_view label) const {
  if (auto v = find_vertex(label)) return *v;
  throw Error(ErrorCode::kUnknownVertex, "no vertex labelled '" + std::string(label) + "'");
}

Face SimplicialComplex::face_from_labels(const std::vector<std::string>& labels) const {
  std::vector<VertexId> vs;
  vs.reserve(labels.size());
  for (const auto& l : labels) vs.push_back(vertex_id(l));
  return Face(std::move(vs));
}

std::vector<std::string> SimplicialComplex::face_labels(const Face& face) const {
  std::vector<std::string> out;
  out.reserve(face.size());
  for (VertexId v : face) out.push_back(labels_.at(v));
  return out;
}

std::string SimplicialComplex::format_face(const Face& face) const {
  std::string out = "{";
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i) out += ' ';
    out += labels_.at(face[i]);
  }
  out += '}';
  return out;
}

Face SimplicialComplex::all_vertices() const {
  std::vector<VertexId> vs(labels_.size());
  for (std::size_t i = 0; i < vs.size(); ++i) vs[i] = static_cast<VertexId>(i);
  return Face::from_sorted(std::move(vs));
}

const std::vector<Face>& SimplicialComplex::faces(std::size_t cardinality) const {
  static const std::vector<Face> kNone;
  if (cardinality > static_cast<std::size_t>(dim_) + 1) return kNone;
  std::call_once(cache_->once[cardinality], [&] {
    std::vector<Face> out;
    for (const Face& f : facets_) {
      detail::for_each_subset(f, cardinality, [&](Face s) { out.push_back(std::move(s)); });
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    cache_->faces[cardinality] = std::move(out);
  });
  return cache_->faces[cardinality];
}

bool SimplicialComplex::has_face(const Face& face) const {
  if (face.empty()) return true;
  if (face.size() > static_cast<std::size_t>(dim_) + 1) return false;
  const auto& pool = faces(face.size());
  return std::binary_search(pool.begin(), pool.end(), face);
}

FVector SimplicialComplex::f_vector() const {
  FVector f;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(dim_) + 1; ++k) {
    f.counts.push_back(faces(k).size());
  }
  return f;
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
  return labels_ == other.labels_ && facets_ == other.facets_;
}

}  // namespace scx
