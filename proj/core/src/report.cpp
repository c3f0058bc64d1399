#include "scx/report.hpp"

#include <set>
#include <sstream>

#include "json.hpp"
#include "scx/banner.hpp"
#include "scx/homology.hpp"
#include "scx/manifold.hpp"
#include "scx/skeleton_graph.hpp"

namespace scx {

using nlohmann::json;

AnalysisReport analyze(const SimplicialComplex& c, std::string name) {
  if (!c.is_pure()) throw Error(ErrorCode::kNotPure, "analysis needs a pure complex");
  AnalysisReport r;
  r.name = std::move(name);
  r.dim = c.dimension();
  r.f_vector = c.f_vector().counts;

  const ManifoldClass m = classify_manifold(c);
  r.pseudomanifold = std::string(to_string(m.pseudomanifold));
  r.strongly_connected = m.strongly_connected;
  if (m.pseudomanifold != PseudomanifoldKind::kNone) r.normal = m.normal;
  r.homology_manifold = m.homology_manifold;
  r.homology_sphere = m.homology_sphere;
  if (m.ridge_witness) r.witnesses["ridge"] = c.format_face(*m.ridge_witness);
  if (m.normality_witness) r.witnesses["normal"] = c.format_face(*m.normality_witness);
  if (m.homology_witness) r.witnesses["homology_manifold"] = c.format_face(*m.homology_witness);
  r.betti = z2_betti(c).values;

  const BannerClass bc = classify(c);
  r.flag = bc.flag;
  r.strongly_banner = bc.strongly_banner;
  r.banner = bc.banner;
  if (bc.flag_witness) r.witnesses["flag"] = c.format_face(*bc.flag_witness);
  if (bc.strongly_banner_witness) {
    r.witnesses["strongly_banner"] = c.format_face(*bc.strongly_banner_witness);
  }
  if (bc.banner_witness) r.witnesses["banner"] = c.format_face(*bc.banner_witness);

  const BannerNumber b = banner_number(c);
  r.banner_number = b.value;
  if (b.failing_face) r.witnesses["banner_number"] = c.format_face(*b.failing_face);

  const Connectivity kappa = vertex_connectivity(skeleton(c));
  r.connectivity = kappa.kappa;
  if (kappa.cut) {
    std::vector<VertexId> cut = kappa.cut->vertices;
    r.witnesses["connectivity"] = c.format_face(Face(std::move(cut))) + " separates " +
                                  c.label(kappa.cut->a) + " from " + c.label(kappa.cut->b);
  }

  r.theorem_applies = m.normal_pseudomanifold();
  if (b.value) {
    r.bound = 2 * r.dim - *b.value;
    r.bound_satisfied = r.connectivity >= *r.bound;
  }
  return r;
}

namespace {

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

const std::set<std::string>& report_keys() {
  static const std::set<std::string> keys = {
      "schema", "name", "dim", "f_vector", "pseudomanifold", "strongly_connected",
      "normal", "homology_manifold", "homology_sphere", "betti", "flag",
      "strongly_banner", "banner", "banner_number", "connectivity", "bound",
      "theorem_applies", "bound_satisfied", "witnesses"};
  return keys;
}

template <typename T>
std::optional<T> read_optional(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

}  // namespace

std::string report_json(const AnalysisReport& r) {
  json j;
  j["schema"] = kReportSchema;
  j["name"] = r.name;
  j["dim"] = r.dim;
  j["f_vector"] = r.f_vector;
  j["pseudomanifold"] = r.pseudomanifold;
  j["strongly_connected"] = r.strongly_connected;
  j["normal"] = optional_json(r.normal);
  j["homology_manifold"] = r.homology_manifold;
  j["homology_sphere"] = r.homology_sphere;
  j["betti"] = r.betti;
  j["flag"] = r.flag;
  j["strongly_banner"] = r.strongly_banner;
  j["banner"] = r.banner;
  j["banner_number"] = optional_json(r.banner_number);
  j["connectivity"] = r.connectivity;
  j["bound"] = optional_json(r.bound);
  j["theorem_applies"] = r.theorem_applies;
  j["bound_satisfied"] = optional_json(r.bound_satisfied);
  j["witnesses"] = r.witnesses;
  return j.dump(2);
}

AnalysisReport report_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    if (!j.is_object()) throw Error(ErrorCode::kParse, "report must be a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (!report_keys().count(key)) {
        throw Error(ErrorCode::kParse, "unknown report field '" + key + "'");
      }
    }
    for (const auto& key : report_keys()) {
      if (!j.contains(key)) throw Error(ErrorCode::kParse, "missing report field '" + key + "'");
    }
    if (j.at("schema").get<std::string>() != kReportSchema) {
      throw Error(ErrorCode::kParse, "unsupported schema " + j.at("schema").dump());
    }
    AnalysisReport r;
    r.name = j.at("name").get<std::string>();
    r.dim = j.at("dim").get<int>();
    r.f_vector = j.at("f_vector").get<std::vector<std::size_t>>();
    r.pseudomanifold = j.at("pseudomanifold").get<std::string>();
    r.strongly_connected = j.at("strongly_connected").get<bool>();
    r.normal = read_optional<bool>(j.at("normal"));
    r.homology_manifold = j.at("homology_manifold").get<bool>();
    r.homology_sphere = j.at("homology_sphere").get<bool>();
    r.betti = j.at("betti").get<std::vector<std::size_t>>();
    r.flag = j.at("flag").get<bool>();
    r.strongly_banner = j.at("strongly_banner").get<bool>();
    r.banner = j.at("banner").get<bool>();
    r.banner_number = read_optional<int>(j.at("banner_number"));
    r.connectivity = j.at("connectivity").get<int>();
    r.bound = read_optional<int>(j.at("bound"));
    r.theorem_applies = j.at("theorem_applies").get<bool>();
    r.bound_satisfied = read_optional<bool>(j.at("bound_satisfied"));
    r.witnesses = j.at("witnesses").get<std::map<std::string, std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

std::string report_text(const AnalysisReport& r) {
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  auto list = [](const std::vector<std::size_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + ")";
  };
  std::ostringstream os;
  if (!r.name.empty()) os << "name               " << r.name << '\n';
  os << "dimension          " << r.dim << '\n'
     << "f-vector           " << list(r.f_vector) << '\n'
     << "pseudomanifold     " << r.pseudomanifold << '\n'
     << "strongly connected " << yes_no(r.strongly_connected) << '\n'
     << "normal             " << (r.normal ? yes_no(*r.normal) : "n/a") << '\n'
     << "homology manifold  " << yes_no(r.homology_manifold) << '\n'
     << "homology sphere    " << yes_no(r.homology_sphere) << '\n'
     << "reduced Z2 Betti   " << list(r.betti) << '\n'
     << "flag               " << yes_no(r.flag) << '\n'
     << "strongly banner    " << yes_no(r.strongly_banner) << '\n'
     << "banner             " << yes_no(r.banner) << '\n'
     << "banner number      "
     << (r.banner_number ? std::to_string(*r.banner_number) : "undefined") << '\n'
     << "connectivity       " << r.connectivity << '\n'
     << "bound 2d - b       " << (r.bound ? std::to_string(*r.bound) : "n/a") << '\n'
     << "bound satisfied    " << (r.bound_satisfied ? yes_no(*r.bound_satisfied) : "n/a")
     << (r.theorem_applies ? "" : " (hypothesis not met)") << '\n';
  for (const auto& [key, value] : r.witnesses) {
    os << "witness " << key << ": " << value << '\n';
  }
  return os.str();
}

}  // namespace scx
