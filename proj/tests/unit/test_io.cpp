#include "simplotope/io.hpp"
#include "simplotope/standard.hpp"
#include "simplotope/tri_square.hpp"

#include <doctest.h>

#include <sstream>

using namespace simplotope;

namespace {

std::string error_of(const Json& doc) {
  try {
    triangulation_from_json(doc);
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  return "";
}

bool same(const TriangulationCandidate& a, const TriangulationCandidate& b) {
  if (!(a.spec == b.spec) || a.simplices.size() != b.simplices.size()) return false;
  for (std::size_t i = 0; i < a.simplices.size(); ++i)
    if (a.simplices[i].vertices() != b.simplices[i].vertices()) return false;
  return true;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("round trip in both coordinate systems") {
    SimplotopeSpec spec({1, 2, 1});
    TriangulationCandidate cand{spec, standard_triangulation(spec)};
    auto std_doc = triangulation_to_json(cand);
    CHECK(std_doc["coords"] == "standard");
    CHECK(same(triangulation_from_json(std_doc), cand));
    auto pivot = last_coordinate_pivot(spec);
    auto red_doc = triangulation_to_json(cand, pivot, Json{{"note", "x"}});
    CHECK(red_doc["coords"] == "reduced");
    CHECK(red_doc["metadata"]["note"] == "x");
    CHECK(same(triangulation_from_json(red_doc), cand));
    CHECK(Json::parse(std_doc.dump()) == std_doc);

    auto file = std::filesystem::temp_directory_path() / "simplotope_io_test.json";
    write_triangulation(file, red_doc);
    CHECK(same(read_triangulation(file), cand));
    std::filesystem::remove(file);
  }

  TEST_CASE("malformed documents") {
    CHECK(error_of(Json::array()).find("object") != std::string::npos);
    CHECK(error_of(Json{{"factors", {1}}, {"coords", "standard"}}).find("simplices") != std::string::npos);
    CHECK(error_of(Json{{"factors", {1}}, {"coords", "polar"}, {"simplices", Json::array()}}).find("coords") != std::string::npos);
    CHECK(error_of(Json{{"factors", {1}}, {"coords", "reduced"}, {"simplices", Json::array()}}).find("reduction_vertex") !=
          std::string::npos);
    CHECK(error_of(Json{{"factors", {1}}, {"coords", "standard"}, {"simplices", {{{1, 0}}}}}).find("expected 2") !=
          std::string::npos);
    CHECK(error_of(Json{{"factors", {1}}, {"coords", "standard"}, {"simplices", {{{1, 1}, {0, 1}}}}}).find("simplex 0") !=
          std::string::npos);
    CHECK(error_of(Json{{"factors", {1}}, {"coords", "standard"}, {"simplices", {{{1, "a"}, {0, 1}}}}}) != "");
    CHECK_THROWS_AS(read_triangulation("/nonexistent/file.json"), std::invalid_argument);
  }

  TEST_CASE("verifier report") {
    auto cand = minimal_triangulation_10();
    auto j = report_to_json(verify(cand), cand);
    CHECK(j["certified"] == true);
    CHECK(j["total_class"] == "12");
    CHECK(j["adjacency"].size() == 11);
    CHECK(j["diagnostics"].empty());
  }

  TEST_CASE("bounds csv and json") {
    VTable v(CubeCaps::load(CubeCaps::default_path()), VPolicy::published);
    FBounds f(v);
    auto cells = bounds_table(3, 1, 5, f);
    BoundCell skipped;
    skipped.s = 9;
    skipped.t = 0;
    skipped.skip_reason = "no cap";
    cells.push_back(skipped);
    std::ostringstream out;
    write_bounds_csv(out, cells);
    auto text = out.str();
    CHECK(text.starts_with(std::string(bounds_csv_header) + "\n0,0,1,1,1\n"));
    CHECK(text.find("\n3,1,159/5,32,5\n") != std::string::npos);
    CHECK(text.ends_with("\n9,0,NA,NA,NA\n"));

    std::ostringstream again;
    write_bounds_csv(again, cells);
    CHECK(again.str() == text);

    auto j = bounds_to_json(cells, v);
    CHECK(j["v_policy"] == "published");
    CHECK(j["cells"].back()["skipped"] == "no cap");
    CHECK(j["cells"][0]["lower_bound"] == "1");
  }
}
