// The triangle-cross-square Π*_{2,1} = Π(1,1,2): class-2 simplices, the
// center-in-facet property, the ten-simplex triangulation and the argument
// that no cover has fewer than ten simplices.

#pragma once

#include "simplotope/lp_bounds.hpp"
#include "simplotope/verifier.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace simplotope {

// ---------------------------------------------------------------------------
// Vertex symbols
//
// The twelve vertices in increasing order of their reduced coordinates
// (a; b; c, d) with respect to the vertex (0,1; 0,1; 0,0,1), first factor
// most significant, are labelled 1 2 3 4 5 6 7 8 9 0 # *.

inline constexpr std::string_view tri_square_symbols = "1234567890#*";

SimplotopeSpec tri_square_spec();
VertexPoint tri_square_pivot();
/// Throws std::invalid_argument for an unknown symbol.
VertexPoint decode_vertex(char symbol);
char encode_vertex(const VertexPoint& v);
/// "1850*" -> the simplex on those vertices, in that order.
VertexSimplex decode_simplex(std::string_view word);
std::string encode_simplex(const VertexSimplex& x);

/// (1/2, 1/2; 1/2, 1/2; 1/3, 1/3, 1/3), i.e. (1/2; 1/2; 1/3, 1/3) reduced.
StandardPoint center_point();

/// Coordinate permutations within each factor: 2 * 2 * 6 = 24.
using FactorPermutation = std::array<std::vector<int>, 3>;
std::vector<FactorPermutation> tri_square_symmetries();
VertexPoint apply(const FactorPermutation& p, const VertexPoint& v);
VertexSimplex apply(const FactorPermutation& p, const VertexSimplex& x);

/// Nondegenerate 5-vertex subsets of class 2, in lexicographic subset
/// order.
std::vector<VertexSimplex> enumerate_class2();

/// Barycentric coefficients of the center in x. Throws
/// std::invalid_argument unless x has class 2, and std::logic_error unless
/// exactly one coefficient is zero and the others are positive.
std::vector<Rat> center_in_facet(const VertexSimplex& x);

/// 1850* 1450* 1456* 1356* 1358* 1398* 1798* 1708* #850* 13582
std::vector<std::string> minimal_triangulation_words();
TriangulationCandidate minimal_triangulation_10();

struct ReplayStage {
  std::string label;
  std::vector<std::string> words;
  TriangulationCandidate candidate;
};

/// The standard triangulation (12), after replacing the six simplices
/// around the cube 12578#*0 by five (11), and after replacing five of the
/// remaining simplices by four (10).
std::vector<ReplayStage> construction_replay();

struct Ingredient {
  std::string id;
  std::string claim;
  bool ok = false;
  std::string detail;
};

struct LowerBoundArgument {
  std::vector<Ingredient> ingredients;
  Int lp_bound;
  int bound = 0;                // smallest cover size not ruled out
  bool triangulation_ok = false;  // the ten-simplex set certifies
  bool ok = false;                // all ingredients hold and bound == 10
};

LowerBoundArgument lower_bound_10_argument(FBounds& f);

}  // namespace simplotope
