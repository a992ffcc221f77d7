#include "simplotope/tri_square.hpp"

#include "simplotope/standard.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace simplotope {

SimplotopeSpec tri_square_spec() { return SimplotopeSpec({1, 1, 2}); }

VertexPoint tri_square_pivot() { return last_coordinate_pivot(tri_square_spec()); }

namespace {

const std::vector<VertexPoint>& symbol_table() {
  static const std::vector<VertexPoint> table = [] {
    auto spec = tri_square_spec();
    auto pivot = tri_square_pivot();
    auto verts = all_vertices(spec);
    std::sort(verts.begin(), verts.end(), [&](const VertexPoint& a, const VertexPoint& b) {
      return a.reduced(spec, pivot) < b.reduced(spec, pivot);
    });
    return verts;
  }();
  return table;
}

}  // namespace

VertexPoint decode_vertex(char symbol) {
  auto pos = tri_square_symbols.find(symbol);
  if (pos == std::string_view::npos) throw std::invalid_argument(std::string("unknown vertex symbol '") + symbol + "'");
  return symbol_table()[pos];
}

char encode_vertex(const VertexPoint& v) {
  const auto& t = symbol_table();
  auto it = std::find(t.begin(), t.end(), v);
  if (it == t.end()) throw std::invalid_argument("not a vertex of Π(1,1,2)");
  return tri_square_symbols[it - t.begin()];
}

VertexSimplex decode_simplex(std::string_view word) {
  std::vector<VertexPoint> v;
  for (char c : word) v.push_back(decode_vertex(c));
  return VertexSimplex(tri_square_spec(), std::move(v));
}

std::string encode_simplex(const VertexSimplex& x) {
  std::string w;
  for (const auto& v : x.vertices()) w += encode_vertex(v);
  return w;
}

StandardPoint center_point() {
  StandardPoint p;
  p.coords = {Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 3), Rat(1, 3), Rat(1, 3)};
  return p;
}

std::vector<FactorPermutation> tri_square_symmetries() {
  std::vector<FactorPermutation> out;
  std::vector<int> tri{0, 1, 2};
  do {
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        out.push_back({std::vector<int>{a, 1 - a}, std::vector<int>{b, 1 - b}, tri});
      }
  } while (std::next_permutation(tri.begin(), tri.end()));
  return out;
}

VertexPoint apply(const FactorPermutation& p, const VertexPoint& v) {
  std::vector<int> c(3);
  for (int i = 0; i < 3; ++i) c[i] = p[i].at(v[i]);
  return VertexPoint(std::move(c));
}

VertexSimplex apply(const FactorPermutation& p, const VertexSimplex& x) {
  std::vector<VertexPoint> v;
  for (const auto& u : x.vertices()) v.push_back(apply(p, u));
  return VertexSimplex(x.spec(), std::move(v));
}

namespace {

std::vector<VertexSimplex> all_nondegenerate() {
  auto spec = tri_square_spec();
  const auto& verts = symbol_table();
  std::vector<VertexSimplex> out;
  for_each_combination(static_cast<int>(verts.size()), spec.dimension() + 1, [&](std::span<const int> idx) {
    std::vector<VertexPoint> v;
    for (int i : idx) v.push_back(verts[i]);
    VertexSimplex x(spec, std::move(v));
    if (!x.degenerate()) out.push_back(std::move(x));
  });
  return out;
}

// Solves the square system a x = b exactly; throws if singular.
std::vector<Rat> solve(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
  const std::size_t n = b.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw std::logic_error("singular system");
    std::swap(a[k], a[p]);
    std::swap(b[k], b[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rat f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

}  // namespace

std::vector<VertexSimplex> enumerate_class2() {
  std::vector<VertexSimplex> out;
  for (auto& x : all_nondegenerate()) {
    if (x.klass() == 2) out.push_back(std::move(x));
  }
  return out;
}

std::vector<Rat> center_in_facet(const VertexSimplex& x) {
  if (!(x.spec() == tri_square_spec()) || !x.full_dimensional() || x.klass() != 2) {
    throw std::invalid_argument("center_in_facet needs a class-2 simplex of Π(1,1,2)");
  }
  const auto spec = x.spec();
  const auto pivot = tri_square_pivot();
  const auto center = reduce(spec, center_point(), pivot);
  const std::size_t n = x.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  std::vector<Rat> b(n);
  for (std::size_t j = 0; j < n; ++j) {
    a[0][j] = 1;
    auto r = x.vertices()[j].reduced(spec, pivot);
    for (std::size_t c = 0; c < r.size(); ++c) a[c + 1][j] = r[c];
  }
  b[0] = 1;
  for (std::size_t c = 0; c < center.coords.size(); ++c) b[c + 1] = center.coords[c];
  auto coef = solve(std::move(a), std::move(b));
  auto zeros = std::count(coef.begin(), coef.end(), Rat(0));
  auto negative = std::count_if(coef.begin(), coef.end(), [](const Rat& r) { return r < 0; });
  if (zeros != 1 || negative != 0) throw std::logic_error("center is not interior to a facet of " + encode_simplex(x));
  return coef;
}

std::vector<std::string> minimal_triangulation_words() {
  return {"1850*", "1450*", "1456*", "1356*", "1358*", "1398*", "1798*", "1708*", "#850*", "13582"};
}

namespace {

TriangulationCandidate candidate_of(const std::vector<std::string>& words) {
  TriangulationCandidate c{tri_square_spec(), {}};
  for (const auto& w : words) c.simplices.push_back(decode_simplex(w));
  return c;
}

std::string sorted_word(const std::string& w) {
  std::string s = w;
  std::sort(s.begin(), s.end(), [](char a, char b) { return tri_square_symbols.find(a) < tri_square_symbols.find(b); });
  return s;
}

std::vector<std::string> replace(const std::vector<std::string>& words, const std::vector<std::string>& out,
                                 const std::vector<std::string>& in) {
  std::vector<std::string> r;
  std::set<std::string> drop;
  for (const auto& w : out) drop.insert(sorted_word(w));
  for (const auto& w : words) {
    if (!drop.erase(sorted_word(w))) r.push_back(w);
  }
  if (!drop.empty()) throw std::logic_error("replacement removes a simplex that is not present: " + *drop.begin());
  r.insert(r.end(), in.begin(), in.end());
  return r;
}

}  // namespace

TriangulationCandidate minimal_triangulation_10() { return candidate_of(minimal_triangulation_words()); }

std::vector<ReplayStage> construction_replay() {
  std::vector<std::string> words;
  for (const auto& x : standard_triangulation(tri_square_spec())) words.push_back(encode_simplex(x));

  std::vector<ReplayStage> stages;
  stages.push_back({"standard", words, candidate_of(words)});
  // The six simplices of the cube 12578#*0 (all containing the diagonal
  // 1-*) become five: four corners and the central simplex.
  words = replace(words, {"125#*", "128#*", "178#*", "170#*", "140#*", "145#*"},
                  {"1580*", "1258*", "1450*", "1708*", "#850*"});
  stages.push_back({"cube re-triangulated", words, candidate_of(words)});
  words = replace(words, {"1258*", "1256*", "1236*", "1239*", "1289*"}, {"1356*", "1358*", "1398*", "13582"});
  stages.push_back({"cut cube re-triangulated", words, candidate_of(words)});
  return stages;
}

LowerBoundArgument lower_bound_10_argument(FBounds& f) {
  LowerBoundArgument arg;
  const auto spec = tri_square_spec();
  const Int volume = polytope_class(spec);  // 12

  // (a)
  BoundCell cell = solve_cell(2, 1, f);
  arg.lp_bound = cell.lower_bound;
  arg.ingredients.push_back({"a", "the linear program needs at least 9 simplices", cell.lower_bound >= 9,
                             "LP optimum " + to_string(cell.lp_value) + ", bound " + cell.lower_bound.str()});

  // (b)
  auto simplices = all_nondegenerate();
  bool facets = true;
  Int max_class = 0;
  for (const auto& x : simplices) {
    facets = facets && has_exterior_facet(x);
    max_class = std::max(max_class, x.klass());
  }
  arg.ingredients.push_back({"b", "every simplex has an exterior facet and class at most 2", facets && max_class <= 2,
                             std::to_string(simplices.size()) + " nondegenerate simplices, largest class " +
                                 max_class.str()});

  // (c)
  auto fat = enumerate_class2();
  bool centered = fat.size() == 24;
  for (const auto& x : fat) {
    try {
      center_in_facet(x);
    } catch (const std::logic_error&) {
      centered = false;
    }
  }
  arg.ingredients.push_back({"c", "the 24 class-2 simplices each hold the center inside a facet", centered,
                             std::to_string(fat.size()) + " class-2 simplices"});

  // (d)
  const std::size_t m = fat.size();
  std::vector<std::vector<char>> overlap(m, std::vector<char>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) overlap[i][j] = overlap[j][i] = interiors_overlap(fat[i], fat[j]);
  std::size_t triples = 0, bad = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        ++triples;
        if (!overlap[i][j] && !overlap[i][k] && !overlap[j][k]) ++bad;
      }
  arg.ingredients.push_back({"d", "any three class-2 simplices include two with overlapping interiors", bad == 0 && m >= 3,
                             std::to_string(triples) + " triples, " + std::to_string(bad) + " pairwise disjoint"});

  // (e) Prism facets: a segment coordinate is zero.
  std::vector<FaceId> prisms;
  for (int factor = 0; factor < 2; ++factor)
    for (int j = 0; j < 2; ++j) prisms.emplace_back(spec, std::uint64_t{1} << (spec.offset(factor) + j));
  bool prism_class1 = true, no_double = true;
  for (const auto& x : simplices) {
    std::vector<bool> touches(prisms.size());
    for (int skip = 0; skip < 5; ++skip) {
      VertexSubset s = 0b11111 & ~(VertexSubset{1} << skip);
      auto pts = subset_points(x, s);
      FaceId face = minimal_face(spec, pts);
      for (std::size_t p = 0; p < prisms.size(); ++p) {
        if (face == prisms[p]) {
          touches[p] = true;
          if (x.klass() != 1) prism_class1 = false;
        }
      }
    }
    if ((touches[0] && touches[1]) || (touches[2] && touches[3])) no_double = false;
  }
  const Int prism_volume = polytope_class(SimplotopeSpec({1, 2}));
  const int per_prism = static_cast<int>(prism_volume);  // class-1 tetrahedra needed per prism facet
  arg.ingredients.push_back({"e", "two opposite prism facets need 6 distinct class-1 simplices", prism_class1 && no_double,
                             "prism class " + prism_volume.str() + "; simplices with a prism facet have class 1: " +
                                 (prism_class1 ? "yes" : "no") + "; one simplex on two opposite prisms: " +
                                 (no_double ? "never" : "found")});

  bool all = std::all_of(arg.ingredients.begin(), arg.ingredients.end(), [](const Ingredient& i) { return i.ok; });

  // Rule out every size below the first one that survives.
  const int min_class1 = 2 * per_prism;
  int n = static_cast<int>(cell.lower_bound);
  for (;; ++n) {
    bool feasible = false;
    std::string why;
    for (int n2 = 0; n2 <= n; ++n2) {
      const int n1 = n - n2;
      if (n1 < min_class1 || Int(n1 + 2 * n2) < volume) continue;
      // Total class equal to the volume forces disjoint interiors.
      if (Int(n1 + 2 * n2) == volume && n2 >= 3 && bad == 0) continue;
      feasible = true;
    }
    if (feasible || n > 64) break;
  }
  arg.bound = n;
  arg.ingredients.push_back({"conclusion", "no cover with fewer than 10 simplices", all && n == 10,
                             "smallest size not excluded: " + std::to_string(n)});

  auto report = verify(minimal_triangulation_10());
  arg.triangulation_ok = report.certified();
  arg.ingredients.push_back({"attained", "the ten-simplex set is a triangulation", arg.triangulation_ok,
                             "total class " + report.total_class.str()});
  arg.ok = all && n == 10 && arg.triangulation_ok;
  return arg;
}

}  // namespace simplotope
