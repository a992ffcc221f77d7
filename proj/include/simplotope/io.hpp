// JSON and CSV formats.
//
// Triangulation file:
//   {
//     "factors": [1, 1, 2],
//     "coords": "standard" | "reduced",
//     "reduction_vertex": [0, 1, 0, 1, 0, 0, 1],   // only for "reduced"
//     "simplices": [[[...vertex...], ...], ...],
//     "metadata": { ... }                          // optional, ignored
//   }

#pragma once

#include "simplotope/lp_bounds.hpp"
#include "simplotope/verifier.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace simplotope {

using Json = nlohmann::ordered_json;

/// Throws std::invalid_argument with a description of the first problem.
TriangulationCandidate triangulation_from_json(const Json& doc);
TriangulationCandidate read_triangulation(const std::filesystem::path& path);

/// Vertices written in standard coordinates unless `pivot` is given.
Json triangulation_to_json(const TriangulationCandidate& cand, const std::optional<VertexPoint>& pivot = std::nullopt,
                           const Json& metadata = nullptr);
void write_triangulation(const std::filesystem::path& path, const Json& doc);

Json report_to_json(const VerifierReport& report, const TriangulationCandidate& cand);

inline constexpr const char* bounds_csv_header = "s,t,lp_value,lower_bound,v_used";
void write_bounds_csv(std::ostream& out, const std::vector<BoundCell>& cells);
Json bounds_to_json(const std::vector<BoundCell>& cells, const VTable& v);

}  // namespace simplotope
