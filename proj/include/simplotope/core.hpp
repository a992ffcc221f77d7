// Simplotopes Π(c_1, ..., c_n): coordinates, vertices, faces and vertex
// simplices.
//
// A point is written in standard coordinates as n concatenated blocks, the
// i-th block holding the c_i + 1 barycentric coordinates of the point in
// the i-th simplex factor. A face is identified by the set of standard
// coordinate positions that are zero on it; a k-face has d - k such zeros.

#pragma once

#include "simplotope/exact.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace simplotope {

class SimplotopeSpec {
public:
  explicit SimplotopeSpec(std::vector<int> factors);

  /// Π*_{s,t}: s segments followed by t triangles.
  static SimplotopeSpec segments_triangles(int s, int t);
  /// Parses "1,1,2".
  static SimplotopeSpec parse(const std::string& text);

  const std::vector<int>& factors() const { return factors_; }
  int factor_count() const { return static_cast<int>(factors_.size()); }
  int factor(int i) const { return factors_[i]; }
  int dimension() const { return dimension_; }
  int coordinate_count() const { return coordinates_; }
  int reduced_count() const { return dimension_; }
  /// First standard-coordinate position of factor i.
  int offset(int i) const { return offsets_[i]; }
  std::uint64_t vertex_count() const;

  bool segments_and_triangles_only() const;
  int segments() const;
  int triangles() const;
  /// Throws unless every factor is a segment or a triangle.
  void require_segments_and_triangles() const;

  std::string to_string() const;

  bool operator==(const SimplotopeSpec&) const = default;

private:
  std::vector<int> factors_;
  std::vector<int> offsets_;
  int dimension_ = 0;
  int coordinates_ = 0;
};

/// A simplotope vertex: in each factor, the index of the coordinate that
/// is 1.
class VertexPoint {
public:
  VertexPoint() = default;
  explicit VertexPoint(std::vector<int> choice) : choice_(std::move(choice)) {}

  /// Validates a 0/1 standard-coordinate vector with one 1 per block.
  static VertexPoint from_standard(const SimplotopeSpec& spec, std::span<const int> coords);
  /// Reduced coordinates w.r.t. `pivot`; a block whose kept entries are all
  /// zero maps to the pivot's coordinate.
  static VertexPoint from_reduced(const SimplotopeSpec& spec, std::span<const int> coords, const VertexPoint& pivot);

  const std::vector<int>& choice() const { return choice_; }
  int operator[](int factor) const { return choice_[factor]; }

  std::vector<int> standard(const SimplotopeSpec& spec) const;
  std::vector<int> reduced(const SimplotopeSpec& spec, const VertexPoint& pivot) const;
  /// Standard-coordinate bitmask of the 1 entries.
  std::uint64_t support(const SimplotopeSpec& spec) const;
  bool belongs_to(const SimplotopeSpec& spec) const;

  auto operator<=>(const VertexPoint&) const = default;

private:
  std::vector<int> choice_;
};

/// All vertices, mixed radix with the first factor most significant.
std::vector<VertexPoint> all_vertices(const SimplotopeSpec& spec);

/// The vertex whose block i has its 1 in the last position; reducing with
/// respect to it keeps the first c_i coordinates of every block.
VertexPoint last_coordinate_pivot(const SimplotopeSpec& spec);

// ---------------------------------------------------------------------------
// Reduced coordinates

struct StandardPoint {
  std::vector<Rat> coords;

  static StandardPoint of(const SimplotopeSpec& spec, const VertexPoint& v);
  bool belongs_to(const SimplotopeSpec& spec) const;
};

struct ReducedPoint {
  std::vector<Rat> coords;
  VertexPoint pivot;
};

/// Drops, in every factor, the coordinate where `pivot` is 1.
ReducedPoint reduce(const SimplotopeSpec& spec, const StandardPoint& p, const VertexPoint& pivot);
/// Restores each dropped coordinate as 1 minus the kept block sum.
StandardPoint unreduce(const SimplotopeSpec& spec, const ReducedPoint& p);

// ---------------------------------------------------------------------------
// Faces

struct FaceSignature {
  int segments = 0;   // s'
  int triangles = 0;  // t'
  int from_segments = 0;  // q: segments of the face supported by segment factors

  int dimension() const { return segments + 2 * triangles; }
  bool operator==(const FaceSignature&) const = default;
};

class FaceId {
public:
  /// Throws if the zero set empties a factor or exceeds 64 coordinates.
  FaceId(SimplotopeSpec spec, std::uint64_t zero_mask);
  static FaceId whole(SimplotopeSpec spec) { return FaceId(std::move(spec), 0); }

  const SimplotopeSpec& spec() const { return spec_; }
  std::uint64_t zero_mask() const { return zero_; }
  std::vector<int> zero_positions() const;
  int zero_count() const;
  int dimension() const;

  /// Coordinates that vary over the face: the non-zero positions of every
  /// factor with at least two of them. A factor with a single non-zero
  /// position has it fixed at 1 (a dependent coordinate).
  std::uint64_t free_mask() const;
  std::uint64_t dependent_mask() const;

  bool contains(const VertexPoint& v) const;
  std::vector<VertexPoint> vertices() const;

  /// Requires a segment/triangle simplotope.
  FaceSignature signature() const;

  bool operator==(const FaceId& o) const { return spec_ == o.spec_ && zero_ == o.zero_; }

private:
  SimplotopeSpec spec_;
  std::uint64_t zero_;
};

/// Smallest face containing every point: its zero set is the set of
/// columns that vanish in all points.
FaceId minimal_face(const SimplotopeSpec& spec, std::span<const VertexPoint> points);
FaceId minimal_face(const SimplotopeSpec& spec, std::span<const StandardPoint> points);

/// Every face of the simplotope (product over factors of the proper zero
/// patterns).
std::vector<FaceId> all_faces(const SimplotopeSpec& spec);

bool is_parallel(const FaceId& a, const FaceId& b);
bool is_tri_positioned(const FaceId& a, const FaceId& b, const FaceId& c);

// ---------------------------------------------------------------------------
// Vertex simplices

class VertexSimplex {
public:
  VertexSimplex(SimplotopeSpec spec, std::vector<VertexPoint> vertices);

  const SimplotopeSpec& spec() const { return spec_; }
  const std::vector<VertexPoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool full_dimensional() const { return static_cast<int>(vertices_.size()) == spec_.dimension() + 1; }

  /// Normalized volume: |det[1|M_v]| for a full simplex; for a smaller
  /// simplex, its class inside its minimal face (0 if it does not span it).
  const Int& klass() const { return class_; }
  bool degenerate() const { return class_ == 0; }

  /// Vertex set as a sorted copy, for set comparisons.
  std::vector<VertexPoint> sorted_vertices() const;

private:
  SimplotopeSpec spec_;
  std::vector<VertexPoint> vertices_;
  Int class_;
};

/// [1 | M_pivot] for the given vertices.
IntMatrix augmented_reduced_matrix(const SimplotopeSpec& spec, std::span<const VertexPoint> vertices, const VertexPoint& pivot);

/// |det[1|M_pivot]|. Requires d + 1 vertices; `pivot` is any simplotope
/// vertex.
Int class_of(const VertexSimplex& x, const VertexPoint& pivot);

/// Class of k+1 points inside a k-dimensional face: the reduced matrix
/// with respect to the first point, restricted to the face's non-zero
/// columns. Requires points.size() == face.dimension() + 1.
Int face_class(const FaceId& face, std::span<const VertexPoint> points);

/// v together with every vertex differing from v in exactly one factor.
VertexSimplex corner_simplex(const SimplotopeSpec& spec, const VertexPoint& v);

// ---------------------------------------------------------------------------
// Exterior faces, footprints and shadows

/// Subset of a simplex's vertices, as a bitmask over vertex indices.
using VertexSubset = std::uint32_t;

std::vector<int> subset_indices(VertexSubset s);
std::vector<VertexPoint> subset_points(const VertexSimplex& x, VertexSubset s);
int subset_size(VertexSubset s);

struct ExteriorFace {
  VertexSubset members;
  FaceId face;
  Int klass;  // class inside `face`
};

/// Every vertex subset (of any size) lying in a face of dimension one less
/// than its size, including the full simplex. Requires x nondegenerate.
std::vector<ExteriorFace> all_exterior_faces(const VertexSimplex& x);

/// Exterior faces lying in faces of signature (s', t').
std::vector<ExteriorFace> exterior_faces(const VertexSimplex& x, int s_prime, int t_prime);

bool is_exterior(const VertexSimplex& x, VertexSubset members);

bool has_exterior_facet(const VertexSimplex& x);

/// σ ∩ τ.
VertexSubset footprint(VertexSubset tau, VertexSubset sigma, const VertexSimplex& x);

/// Image of τ under the projection collapsing σ. In reduced coordinates
/// w.r.t. the lowest-index vertex v of σ, the projection zeroes every
/// column where σ is not identically zero; as vertices of the simplotope
/// this keeps a block's coordinate when it lies in σ's zero set and
/// otherwise moves it to v's coordinate.
struct Shadow {
  std::vector<VertexPoint> points;  // distinct images, sorted
  FaceId ambient;                   // face carrying σ⊥
};

Shadow shadow(VertexSubset tau, VertexSubset sigma, const VertexSimplex& x);
VertexPoint project_onto_complement(const VertexSimplex& x, VertexSubset sigma, const VertexPoint& u);

/// Enumerates k-subsets of {0..n-1} in lexicographic order.
void for_each_combination(int n, int k, const std::function<void(std::span<const int>)>& visit);

}  // namespace simplotope
