#include "simplotope/io.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

namespace simplotope {

namespace {

std::vector<int> int_array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw std::invalid_argument(what + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument(what + " must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

TriangulationCandidate triangulation_from_json(const Json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("triangulation file must be a JSON object");
  for (const char* key : {"factors", "coords", "simplices"}) {
    if (!doc.contains(key)) throw std::invalid_argument(std::string("missing key \"") + key + "\"");
  }
  SimplotopeSpec spec(int_array(doc["factors"], "\"factors\""));
  const std::string coords = doc["coords"].is_string() ? doc["coords"].get<std::string>() : "";
  std::optional<VertexPoint> pivot;
  if (coords == "reduced") {
    if (!doc.contains("reduction_vertex")) throw std::invalid_argument("\"reduction_vertex\" is required for reduced coordinates");
    auto rv = int_array(doc["reduction_vertex"], "\"reduction_vertex\"");
    pivot = VertexPoint::from_standard(spec, rv);
  } else if (coords != "standard") {
    throw std::invalid_argument("\"coords\" must be \"standard\" or \"reduced\"");
  }
  if (!doc["simplices"].is_array()) throw std::invalid_argument("\"simplices\" must be an array");

  TriangulationCandidate cand{spec, {}};
  std::size_t index = 0;
  for (const auto& sj : doc["simplices"]) {
    const std::string where = "simplex " + std::to_string(index++);
    if (!sj.is_array()) throw std::invalid_argument(where + " must be an array of vertices");
    if (static_cast<int>(sj.size()) != spec.dimension() + 1) {
      throw std::invalid_argument(where + " has " + std::to_string(sj.size()) + " vertices, expected " +
                                  std::to_string(spec.dimension() + 1));
    }
    std::vector<VertexPoint> verts;
    for (const auto& vj : sj) {
      auto v = int_array(vj, where + " vertex");
      try {
        verts.push_back(pivot ? VertexPoint::from_reduced(spec, v, *pivot) : VertexPoint::from_standard(spec, v));
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(where + ": " + e.what());
      }
    }
    cand.simplices.emplace_back(spec, std::move(verts));
  }
  return cand;
}

TriangulationCandidate read_triangulation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
  return triangulation_from_json(doc);
}

Json triangulation_to_json(const TriangulationCandidate& cand, const std::optional<VertexPoint>& pivot, const Json& metadata) {
  Json doc;
  doc["factors"] = cand.spec.factors();
  doc["coords"] = pivot ? "reduced" : "standard";
  if (pivot) doc["reduction_vertex"] = pivot->standard(cand.spec);
  Json simplices = Json::array();
  for (const auto& x : cand.simplices) {
    Json sj = Json::array();
    for (const auto& v : x.vertices()) sj.push_back(pivot ? v.reduced(cand.spec, *pivot) : v.standard(cand.spec));
    simplices.push_back(std::move(sj));
  }
  doc["simplices"] = std::move(simplices);
  if (!metadata.is_null()) doc["metadata"] = metadata;
  return doc;
}

void write_triangulation(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

Json report_to_json(const VerifierReport& report, const TriangulationCandidate& cand) {
  Json j;
  j["factors"] = cand.spec.factors();
  j["simplices"] = cand.simplices.size();
  Json classes = Json::array();
  for (const auto& c : report.classes) classes.push_back(c.str());
  j["classes"] = std::move(classes);
  j["total_class"] = report.total_class.str();
  j["polytope_class"] = report.polytope_class.str();
  j["classes_ok"] = report.classes_ok;
  j["disjoint_ok"] = report.disjoint_ok;
  j["face_to_face_ok"] = report.face_to_face_ok;
  j["certified"] = report.certified();
  Json adj = Json::array();
  for (auto [a, b] : report.adjacency) adj.push_back({a, b});
  j["adjacency"] = std::move(adj);
  j["diagnostics"] = report.diagnostics;
  return j;
}

void write_bounds_csv(std::ostream& out, const std::vector<BoundCell>& cells) {
  out << bounds_csv_header << '\n';
  for (const auto& c : cells) {
    out << c.s << ',' << c.t << ',';
    if (c.computed) {
      out << to_string(c.lp_value) << ',' << c.lower_bound << ',' << c.v_used;
    } else {
      out << "NA,NA,NA";
    }
    out << '\n';
  }
}

Json bounds_to_json(const std::vector<BoundCell>& cells, const VTable& v) {
  Json doc;
  doc["v_policy"] = to_string(v.policy());
  Json arr = Json::array();
  for (const auto& c : cells) {
    Json j;
    j["s"] = c.s;
    j["t"] = c.t;
    if (c.computed) {
      j["lp_value"] = to_string(c.lp_value);
      j["lower_bound"] = c.lower_bound.str();
      j["v_used"] = c.v_used.str();
      j["v_provenance"] = to_string(c.v_provenance);
      j["constraints"] = c.constraints;
      j["f_memo_hits"] = c.f_stats.memo_hits;
      j["f_memo_misses"] = c.f_stats.memo_misses;
    } else {
      j["skipped"] = c.skip_reason;
    }
    arr.push_back(std::move(j));
  }
  doc["cells"] = std::move(arr);
  return doc;
}

}  // namespace simplotope
