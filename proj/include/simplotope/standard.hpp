// Standard (staircase) triangulation of a simplotope.
//
// Each simplex corresponds to an interleaving of the factor labels: the
// i-th label appears c_i times, and its j-th occurrence stands for y_j^i.
// Vertex k of the simplex sets to 1 exactly the first k symbols of the
// order, so factor i contributes m ones, which is standard vertex e_{m+1}
// of that factor.

#pragma once

#include "simplotope/core.hpp"

#include <vector>

namespace simplotope {

/// (c_1 + ... + c_n)! / (c_1! ... c_n!)
Int standard_size(const SimplotopeSpec& spec);

/// Interleavings in lexicographic order of the label sequence.
std::vector<std::vector<int>> y_orderings(const SimplotopeSpec& spec);

/// Vertices of the simplex for one interleaving, from the all-zero y-point
/// (k = 0) to the all-one y-point (k = d).
VertexSimplex ordering_simplex(const SimplotopeSpec& spec, const std::vector<int>& order);

std::vector<VertexSimplex> standard_triangulation(const SimplotopeSpec& spec);

}  // namespace simplotope
