#include "simplotope/core.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace simplotope {

// ---------------------------------------------------------------------------
// SimplotopeSpec

SimplotopeSpec::SimplotopeSpec(std::vector<int> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("simplotope needs at least one factor");
  for (int c : factors_) {
    if (c < 1) throw std::invalid_argument("simplex factor dimension must be positive");
    offsets_.push_back(coordinates_);
    coordinates_ += c + 1;
    dimension_ += c;
  }
  if (coordinates_ > 64) throw std::invalid_argument("simplotope has more than 64 standard coordinates");
}

SimplotopeSpec SimplotopeSpec::segments_triangles(int s, int t) {
  if (s < 0 || t < 0) throw std::invalid_argument("negative segment or triangle count");
  std::vector<int> f(s, 1);
  f.insert(f.end(), t, 2);
  if (f.empty()) throw std::invalid_argument("Π*_{0,0} has no factors");
  return SimplotopeSpec(std::move(f));
}

SimplotopeSpec SimplotopeSpec::parse(const std::string& text) {
  std::vector<int> f;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty factor in '" + text + "'");
    std::size_t used = 0;
    int c = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad factor '" + item + "'");
    f.push_back(c);
  }
  return SimplotopeSpec(std::move(f));
}

std::uint64_t SimplotopeSpec::vertex_count() const {
  std::uint64_t n = 1;
  for (int c : factors_) n *= static_cast<std::uint64_t>(c + 1);
  return n;
}

bool SimplotopeSpec::segments_and_triangles_only() const {
  return std::all_of(factors_.begin(), factors_.end(), [](int c) { return c == 1 || c == 2; });
}

int SimplotopeSpec::segments() const { return static_cast<int>(std::count(factors_.begin(), factors_.end(), 1)); }
int SimplotopeSpec::triangles() const { return static_cast<int>(std::count(factors_.begin(), factors_.end(), 2)); }

void SimplotopeSpec::require_segments_and_triangles() const {
  if (!segments_and_triangles_only()) {
    throw std::invalid_argument("Π(" + to_string() + ") is not a product of segments and triangles");
  }
}

std::string SimplotopeSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(factors_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// VertexPoint

VertexPoint VertexPoint::from_standard(const SimplotopeSpec& spec, std::span<const int> coords) {
  if (static_cast<int>(coords.size()) != spec.coordinate_count()) {
    throw std::invalid_argument("vertex has " + std::to_string(coords.size()) + " standard coordinates, expected " +
                                std::to_string(spec.coordinate_count()));
  }
  std::vector<int> choice(spec.factor_count(), -1);
  for (int i = 0; i < spec.factor_count(); ++i) {
    for (int j = 0; j <= spec.factor(i); ++j) {
      int v = coords[spec.offset(i) + j];
      if (v != 0 && v != 1) throw std::invalid_argument("vertex coordinate is not 0 or 1");
      if (v == 1) {
        if (choice[i] != -1) throw std::invalid_argument("vertex block has more than one 1");
        choice[i] = j;
      }
    }
    if (choice[i] == -1) throw std::invalid_argument("vertex block has no 1");
  }
  return VertexPoint(std::move(choice));
}

VertexPoint VertexPoint::from_reduced(const SimplotopeSpec& spec, std::span<const int> coords, const VertexPoint& pivot) {
  if (static_cast<int>(coords.size()) != spec.reduced_count()) {
    throw std::invalid_argument("vertex has " + std::to_string(coords.size()) + " reduced coordinates, expected " +
                                std::to_string(spec.reduced_count()));
  }
  std::vector<int> choice(spec.factor_count());
  std::size_t k = 0;
  for (int i = 0; i < spec.factor_count(); ++i) {
    int chosen = pivot[i];
    int ones = 0;
    for (int j = 0; j <= spec.factor(i); ++j) {
      if (j == pivot[i]) continue;
      int v = coords[k++];
      if (v != 0 && v != 1) throw std::invalid_argument("vertex coordinate is not 0 or 1");
      if (v == 1) {
        ++ones;
        chosen = j;
      }
    }
    if (ones > 1) throw std::invalid_argument("reduced vertex block has more than one 1");
    choice[i] = chosen;
  }
  return VertexPoint(std::move(choice));
}

std::vector<int> VertexPoint::standard(const SimplotopeSpec& spec) const {
  std::vector<int> out(spec.coordinate_count(), 0);
  for (int i = 0; i < spec.factor_count(); ++i) out[spec.offset(i) + choice_[i]] = 1;
  return out;
}

std::vector<int> VertexPoint::reduced(const SimplotopeSpec& spec, const VertexPoint& pivot) const {
  std::vector<int> out;
  out.reserve(spec.reduced_count());
  for (int i = 0; i < spec.factor_count(); ++i) {
    for (int j = 0; j <= spec.factor(i); ++j) {
      if (j != pivot[i]) out.push_back(choice_[i] == j ? 1 : 0);
    }
  }
  return out;
}

std::uint64_t VertexPoint::support(const SimplotopeSpec& spec) const {
  std::uint64_t m = 0;
  for (int i = 0; i < spec.factor_count(); ++i) m |= std::uint64_t{1} << (spec.offset(i) + choice_[i]);
  return m;
}

bool VertexPoint::belongs_to(const SimplotopeSpec& spec) const {
  if (static_cast<int>(choice_.size()) != spec.factor_count()) return false;
  for (int i = 0; i < spec.factor_count(); ++i) {
    if (choice_[i] < 0 || choice_[i] > spec.factor(i)) return false;
  }
  return true;
}

std::vector<VertexPoint> all_vertices(const SimplotopeSpec& spec) {
  std::vector<VertexPoint> out;
  out.reserve(spec.vertex_count());
  std::vector<int> choice(spec.factor_count(), 0);
  for (;;) {
    out.emplace_back(choice);
    int i = spec.factor_count() - 1;
    while (i >= 0 && choice[i] == spec.factor(i)) {
      choice[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++choice[i];
  }
  return out;
}

VertexPoint last_coordinate_pivot(const SimplotopeSpec& spec) { return VertexPoint(spec.factors()); }

// ---------------------------------------------------------------------------
// Reduced coordinates

StandardPoint StandardPoint::of(const SimplotopeSpec& spec, const VertexPoint& v) {
  StandardPoint p;
  for (int c : v.standard(spec)) p.coords.emplace_back(c);
  return p;
}

bool StandardPoint::belongs_to(const SimplotopeSpec& spec) const {
  if (static_cast<int>(coords.size()) != spec.coordinate_count()) return false;
  for (int i = 0; i < spec.factor_count(); ++i) {
    Rat sum = 0;
    for (int j = 0; j <= spec.factor(i); ++j) {
      const Rat& x = coords[spec.offset(i) + j];
      if (x < 0) return false;
      sum += x;
    }
    if (sum != 1) return false;
  }
  return true;
}

ReducedPoint reduce(const SimplotopeSpec& spec, const StandardPoint& p, const VertexPoint& pivot) {
  if (static_cast<int>(p.coords.size()) != spec.coordinate_count() || !pivot.belongs_to(spec)) {
    throw std::invalid_argument("reduce: point or pivot does not match the simplotope");
  }
  ReducedPoint r{{}, pivot};
  r.coords.reserve(spec.reduced_count());
  for (int i = 0; i < spec.factor_count(); ++i) {
    for (int j = 0; j <= spec.factor(i); ++j) {
      if (j != pivot[i]) r.coords.push_back(p.coords[spec.offset(i) + j]);
    }
  }
  return r;
}

StandardPoint unreduce(const SimplotopeSpec& spec, const ReducedPoint& p) {
  if (static_cast<int>(p.coords.size()) != spec.reduced_count() || !p.pivot.belongs_to(spec)) {
    throw std::invalid_argument("unreduce: point or pivot does not match the simplotope");
  }
  StandardPoint s;
  s.coords.resize(spec.coordinate_count());
  std::size_t k = 0;
  for (int i = 0; i < spec.factor_count(); ++i) {
    Rat kept = 0;
    for (int j = 0; j <= spec.factor(i); ++j) {
      if (j == p.pivot[i]) continue;
      s.coords[spec.offset(i) + j] = p.coords[k];
      kept += p.coords[k];
      ++k;
    }
    s.coords[spec.offset(i) + p.pivot[i]] = 1 - kept;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Faces

namespace {

std::uint64_t block_mask(const SimplotopeSpec& spec, int i) {
  return ((std::uint64_t{1} << (spec.factor(i) + 1)) - 1) << spec.offset(i);
}

}  // namespace

FaceId::FaceId(SimplotopeSpec spec, std::uint64_t zero_mask) : spec_(std::move(spec)), zero_(zero_mask) {
  std::uint64_t all = spec_.coordinate_count() == 64 ? ~std::uint64_t{0}
                                                     : (std::uint64_t{1} << spec_.coordinate_count()) - 1;
  if (zero_ & ~all) throw std::invalid_argument("face zero set outside the coordinate range");
  for (int i = 0; i < spec_.factor_count(); ++i) {
    std::uint64_t b = block_mask(spec_, i);
    if ((zero_ & b) == b) throw std::invalid_argument("face zero set empties a factor");
  }
}

std::vector<int> FaceId::zero_positions() const {
  std::vector<int> out;
  for (int p = 0; p < spec_.coordinate_count(); ++p) {
    if (zero_ >> p & 1) out.push_back(p);
  }
  return out;
}

int FaceId::zero_count() const { return std::popcount(zero_); }

int FaceId::dimension() const { return spec_.dimension() - zero_count(); }

std::uint64_t FaceId::free_mask() const {
  std::uint64_t m = 0;
  for (int i = 0; i < spec_.factor_count(); ++i) {
    std::uint64_t nonzero = block_mask(spec_, i) & ~zero_;
    if (std::popcount(nonzero) >= 2) m |= nonzero;
  }
  return m;
}

std::uint64_t FaceId::dependent_mask() const {
  std::uint64_t m = 0;
  for (int i = 0; i < spec_.factor_count(); ++i) {
    std::uint64_t nonzero = block_mask(spec_, i) & ~zero_;
    if (std::popcount(nonzero) == 1) m |= nonzero;
  }
  return m;
}

bool FaceId::contains(const VertexPoint& v) const { return (v.support(spec_) & zero_) == 0; }

std::vector<VertexPoint> FaceId::vertices() const {
  std::vector<VertexPoint> out;
  for (auto& v : all_vertices(spec_)) {
    if (contains(v)) out.push_back(std::move(v));
  }
  return out;
}

FaceSignature FaceId::signature() const {
  spec_.require_segments_and_triangles();
  FaceSignature sig;
  for (int i = 0; i < spec_.factor_count(); ++i) {
    int nonzero = std::popcount(block_mask(spec_, i) & ~zero_);
    if (nonzero == 2) {
      ++sig.segments;
      if (spec_.factor(i) == 1) ++sig.from_segments;
    } else if (nonzero == 3) {
      ++sig.triangles;
    }
  }
  return sig;
}

FaceId minimal_face(const SimplotopeSpec& spec, std::span<const VertexPoint> points) {
  std::uint64_t nonzero = 0;
  for (const auto& p : points) nonzero |= p.support(spec);
  std::uint64_t all = spec.coordinate_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << spec.coordinate_count()) - 1;
  return FaceId(spec, all & ~nonzero);
}

FaceId minimal_face(const SimplotopeSpec& spec, std::span<const StandardPoint> points) {
  std::uint64_t zero = 0;
  for (int p = 0; p < spec.coordinate_count(); ++p) {
    bool all_zero = std::all_of(points.begin(), points.end(), [&](const StandardPoint& x) { return x.coords.at(p) == 0; });
    if (all_zero) zero |= std::uint64_t{1} << p;
  }
  return FaceId(spec, zero);
}

std::vector<FaceId> all_faces(const SimplotopeSpec& spec) {
  // Per factor: every proper subset of the block as its zero pattern.
  std::vector<std::vector<std::uint64_t>> patterns(spec.factor_count());
  for (int i = 0; i < spec.factor_count(); ++i) {
    std::uint64_t full = (std::uint64_t{1} << (spec.factor(i) + 1)) - 1;
    for (std::uint64_t m = 0; m < full; ++m) patterns[i].push_back(m << spec.offset(i));
  }
  std::vector<FaceId> out;
  std::vector<std::size_t> idx(spec.factor_count(), 0);
  for (;;) {
    std::uint64_t zero = 0;
    for (int i = 0; i < spec.factor_count(); ++i) zero |= patterns[i][idx[i]];
    out.emplace_back(spec, zero);
    int i = spec.factor_count() - 1;
    while (i >= 0 && idx[i] + 1 == patterns[i].size()) {
      idx[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++idx[i];
  }
  return out;
}

bool is_parallel(const FaceId& a, const FaceId& b) {
  if (!(a.spec() == b.spec())) throw std::invalid_argument("is_parallel: faces of different simplotopes");
  return a.free_mask() == b.free_mask();
}

bool is_tri_positioned(const FaceId& a, const FaceId& b, const FaceId& c) {
  const auto& spec = a.spec();
  if (!(spec == b.spec()) || !(spec == c.spec())) {
    throw std::invalid_argument("is_tri_positioned: faces of different simplotopes");
  }
  int differing = -1;
  for (int i = 0; i < spec.factor_count(); ++i) {
    std::uint64_t m = block_mask(spec, i);
    std::uint64_t za = a.zero_mask() & m, zb = b.zero_mask() & m, zc = c.zero_mask() & m;
    if (za == zb && zb == zc) continue;
    if (differing != -1) return false;
    differing = i;
    if (spec.factor(i) != 2) return false;
    if (std::popcount(za) != 1 || std::popcount(zb) != 1 || std::popcount(zc) != 1) return false;
    if (za == zb || zb == zc || za == zc) return false;
  }
  return differing != -1;
}

// ---------------------------------------------------------------------------
// Vertex simplices

IntMatrix augmented_reduced_matrix(const SimplotopeSpec& spec, std::span<const VertexPoint> vertices, const VertexPoint& pivot) {
  IntMatrix m(vertices.size(), spec.reduced_count() + 1);
  for (std::size_t r = 0; r < vertices.size(); ++r) {
    m(r, 0) = 1;
    auto red = vertices[r].reduced(spec, pivot);
    for (std::size_t c = 0; c < red.size(); ++c) m(r, c + 1) = red[c];
  }
  return m;
}

Int face_class(const FaceId& face, std::span<const VertexPoint> points) {
  const auto& spec = face.spec();
  if (points.empty() || static_cast<int>(points.size()) != face.dimension() + 1) {
    throw std::invalid_argument("face_class: need dimension + 1 points");
  }
  const VertexPoint& pivot = points.front();
  std::vector<int> columns;
  for (int i = 0; i < spec.factor_count(); ++i) {
    for (int j = 0; j <= spec.factor(i); ++j) {
      int pos = spec.offset(i) + j;
      if (j != pivot[i] && !(face.zero_mask() >> pos & 1)) columns.push_back(pos);
    }
  }
  IntMatrix m(points.size(), columns.size() + 1);
  for (std::size_t r = 0; r < points.size(); ++r) {
    m(r, 0) = 1;
    std::uint64_t sup = points[r].support(spec);
    for (std::size_t c = 0; c < columns.size(); ++c) m(r, c + 1) = (sup >> columns[c]) & 1;
  }
  Int d = det(std::move(m));
  return d < 0 ? Int(-d) : d;
}

VertexSimplex::VertexSimplex(SimplotopeSpec spec, std::vector<VertexPoint> vertices)
    : spec_(std::move(spec)), vertices_(std::move(vertices)) {
  if (vertices_.empty() || static_cast<int>(vertices_.size()) > spec_.dimension() + 1) {
    throw std::invalid_argument("simplex needs between 1 and d + 1 vertices");
  }
  for (const auto& v : vertices_) {
    if (!v.belongs_to(spec_)) throw std::invalid_argument("simplex vertex is not a vertex of Π(" + spec_.to_string() + ")");
  }
  if (full_dimensional()) {
    class_ = class_of(*this, vertices_.front());
  } else {
    FaceId f = minimal_face(spec_, vertices_);
    class_ = f.dimension() + 1 == static_cast<int>(vertices_.size()) ? face_class(f, vertices_) : Int(0);
  }
}

std::vector<VertexPoint> VertexSimplex::sorted_vertices() const {
  auto v = vertices_;
  std::sort(v.begin(), v.end());
  return v;
}

Int class_of(const VertexSimplex& x, const VertexPoint& pivot) {
  if (!x.full_dimensional()) throw std::invalid_argument("class_of: simplex is not full-dimensional");
  if (!pivot.belongs_to(x.spec())) throw std::invalid_argument("class_of: pivot is not a vertex of the simplotope");
  Int d = det(augmented_reduced_matrix(x.spec(), x.vertices(), pivot));
  return d < 0 ? Int(-d) : d;
}

VertexSimplex corner_simplex(const SimplotopeSpec& spec, const VertexPoint& v) {
  if (!v.belongs_to(spec)) throw std::invalid_argument("corner_simplex: not a vertex");
  std::vector<VertexPoint> verts{v};
  for (int i = 0; i < spec.factor_count(); ++i) {
    for (int j = 0; j <= spec.factor(i); ++j) {
      if (j == v[i]) continue;
      auto c = v.choice();
      c[i] = j;
      verts.emplace_back(std::move(c));
    }
  }
  return VertexSimplex(spec, std::move(verts));
}

// ---------------------------------------------------------------------------
// Exterior faces

std::vector<int> subset_indices(VertexSubset s) {
  std::vector<int> out;
  for (int i = 0; s; ++i, s >>= 1) {
    if (s & 1) out.push_back(i);
  }
  return out;
}

std::vector<VertexPoint> subset_points(const VertexSimplex& x, VertexSubset s) {
  std::vector<VertexPoint> out;
  for (int i : subset_indices(s)) out.push_back(x.vertices().at(i));
  return out;
}

int subset_size(VertexSubset s) { return std::popcount(s); }

bool is_exterior(const VertexSimplex& x, VertexSubset members) {
  auto pts = subset_points(x, members);
  if (pts.empty()) return false;
  return minimal_face(x.spec(), pts).dimension() + 1 == static_cast<int>(pts.size());
}

std::vector<ExteriorFace> all_exterior_faces(const VertexSimplex& x) {
  if (x.degenerate()) throw std::invalid_argument("exterior faces of a degenerate simplex");
  std::vector<ExteriorFace> out;
  const VertexSubset all = (VertexSubset{1} << x.size()) - 1;
  for (VertexSubset s = 1; s <= all; ++s) {
    auto pts = subset_points(x, s);
    FaceId f = minimal_face(x.spec(), pts);
    if (f.dimension() + 1 != static_cast<int>(pts.size())) continue;
    Int k = face_class(f, pts);
    out.push_back({s, std::move(f), std::move(k)});
  }
  return out;
}

std::vector<ExteriorFace> exterior_faces(const VertexSimplex& x, int s_prime, int t_prime) {
  if (x.degenerate()) throw std::invalid_argument("exterior faces of a degenerate simplex");
  x.spec().require_segments_and_triangles();
  std::vector<ExteriorFace> out;
  const int size = s_prime + 2 * t_prime + 1;
  if (s_prime < 0 || t_prime < 0 || size > static_cast<int>(x.size())) return out;
  for_each_combination(static_cast<int>(x.size()), size, [&](std::span<const int> idx) {
    VertexSubset s = 0;
    for (int i : idx) s |= VertexSubset{1} << i;
    auto pts = subset_points(x, s);
    FaceId f = minimal_face(x.spec(), pts);
    if (f.dimension() + 1 != size) return;
    auto sig = f.signature();
    if (sig.segments != s_prime || sig.triangles != t_prime) return;
    Int k = face_class(f, pts);
    out.push_back({s, std::move(f), std::move(k)});
  });
  return out;
}

bool has_exterior_facet(const VertexSimplex& x) {
  if (!x.full_dimensional() || x.degenerate()) throw std::invalid_argument("has_exterior_facet: need a full nondegenerate simplex");
  const int n = static_cast<int>(x.size());
  for (int skip = 0; skip < n; ++skip) {
    VertexSubset s = ((VertexSubset{1} << n) - 1) & ~(VertexSubset{1} << skip);
    if (is_exterior(x, s)) return true;
  }
  return false;
}

VertexSubset footprint(VertexSubset tau, VertexSubset sigma, const VertexSimplex& x) {
  const VertexSubset all = (VertexSubset{1} << x.size()) - 1;
  if ((tau & ~all) || (sigma & ~all)) throw std::invalid_argument("footprint: subset outside the simplex");
  return tau & sigma;
}

VertexPoint project_onto_complement(const VertexSimplex& x, VertexSubset sigma, const VertexPoint& u) {
  const auto& spec = x.spec();
  auto sigma_pts = subset_points(x, sigma);
  if (sigma_pts.empty()) throw std::invalid_argument("shadow: empty σ");
  const VertexPoint& v = sigma_pts.front();
  const std::uint64_t zero = minimal_face(spec, sigma_pts).zero_mask();
  std::vector<int> c(spec.factor_count());
  for (int i = 0; i < spec.factor_count(); ++i) {
    c[i] = (zero >> (spec.offset(i) + u[i]) & 1) ? u[i] : v[i];
  }
  return VertexPoint(std::move(c));
}

Shadow shadow(VertexSubset tau, VertexSubset sigma, const VertexSimplex& x) {
  if (!x.full_dimensional() || x.degenerate()) throw std::invalid_argument("shadow: need a full nondegenerate simplex");
  if (!is_exterior(x, sigma)) throw std::invalid_argument("shadow: σ is not an exterior face");
  const auto& spec = x.spec();
  auto sigma_pts = subset_points(x, sigma);
  const VertexPoint& v = sigma_pts.front();
  const std::uint64_t zero = minimal_face(spec, sigma_pts).zero_mask();

  std::vector<VertexPoint> pts;
  for (const auto& u : subset_points(x, tau)) pts.push_back(project_onto_complement(x, sigma, u));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  // σ⊥ lives where only σ's zero columns and v's coordinates are non-zero.
  std::uint64_t keep = zero | v.support(spec);
  std::uint64_t all = spec.coordinate_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << spec.coordinate_count()) - 1;
  return Shadow{std::move(pts), FaceId(spec, all & ~keep)};
}

void for_each_combination(int n, int k, const std::function<void(std::span<const int>)>& visit) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace simplotope
