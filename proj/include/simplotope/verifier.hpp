// Certification of vertex triangulations: exact class accounting, pairwise
// interior-disjointness and pairwise face-to-face intersection.

#pragma once

#include "simplotope/core.hpp"

#include <string>
#include <utility>
#include <vector>

namespace simplotope {

struct TriangulationCandidate {
  SimplotopeSpec spec;
  std::vector<VertexSimplex> simplices;
};

/// d! vol(Π(c_1..c_n)) = d! / (c_1! ... c_n!).
Int polytope_class(const SimplotopeSpec& spec);

/// True iff some point has strictly positive barycentric coordinates in
/// both simplices. Decided by an exact LP maximizing the smallest
/// barycentric coordinate, after a check for a separating facet.
bool interiors_overlap(const VertexSimplex& a, const VertexSimplex& b);

/// True iff conv(a) ∩ conv(b) = conv(shared vertices). The intersection
/// is cut out by the 2(d+1) facet inequalities of the two simplices; all
/// its vertices are enumerated from d-subsets of those inequalities and
/// each must be a shared vertex.
bool meet_face_to_face(const VertexSimplex& a, const VertexSimplex& b);

struct VerifierReport {
  std::vector<Int> classes;
  Int total_class;
  Int polytope_class;
  bool classes_ok = false;         // no degenerate simplex and total == polytope class
  bool disjoint_ok = false;
  bool face_to_face_ok = false;
  std::vector<std::pair<std::size_t, std::size_t>> adjacency;
  std::vector<std::string> diagnostics;

  bool certified() const { return classes_ok && disjoint_ok && face_to_face_ok; }
};

/// Never throws on bad geometry; problems go to diagnostics. `jobs` threads
/// share the pair loop.
VerifierReport verify(const TriangulationCandidate& cand, int jobs = 1);

/// Pairs of simplices with d common vertices that meet face-to-face.
std::vector<std::pair<std::size_t, std::size_t>> adjacency_graph(const TriangulationCandidate& cand);

/// Every facet of every simplex either lies in a facet of the simplotope
/// or is a facet of exactly one other simplex.
bool facets_match(const TriangulationCandidate& cand, std::vector<std::string>* diagnostics = nullptr);

}  // namespace simplotope
