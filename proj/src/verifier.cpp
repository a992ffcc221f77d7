#include "simplotope/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace simplotope {

Int polytope_class(const SimplotopeSpec& spec) {
  Int r = factorial(spec.dimension());
  for (int c : spec.factors()) r /= factorial(c);
  return r;
}

namespace {

using i128 = __int128;

// Integer points in reduced coordinates w.r.t. the last-coordinate pivot.
std::vector<std::vector<Int>> points_of(const VertexSimplex& x) {
  const auto pivot = last_coordinate_pivot(x.spec());
  std::vector<std::vector<Int>> out;
  for (const auto& v : x.vertices()) {
    auto r = v.reduced(x.spec(), pivot);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

// Row i: (alpha, beta) with alpha + beta . x = |D| lambda_i(x), so the
// simplex is { x : every row >= 0 }.
std::vector<std::vector<Int>> halfspaces(const std::vector<std::vector<Int>>& pts) {
  const std::size_t n = pts.size();  // d + 1
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    m(r, 0) = 1;
    for (std::size_t c = 1; c < n; ++c) m(r, c) = pts[r][c - 1];
  }
  Int d = det(m);
  if (d == 0) throw std::invalid_argument("degenerate simplex");
  const int sign = d > 0 ? 1 : -1;
  // lambda^T = [1, x] adj(M) / D, and adj(M)(r, i) = (-1)^{r+i} det(M minus row i, column r).
  std::vector<std::vector<Int>> h(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < n; ++r) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t a = 0, ma = 0; a < n; ++a) {
        if (a == i) continue;
        for (std::size_t b = 0, mb = 0; b < n; ++b) {
          if (b == r) continue;
          minor(ma, mb++) = m(a, b);
        }
        ++ma;
      }
      Int cof = det(std::move(minor));
      if ((r + i) % 2) cof = -cof;
      h[i][r] = sign * cof;
    }
  return h;
}

Int evaluate(const std::vector<Int>& h, const std::vector<Int>& p) {
  Int v = h[0];
  for (std::size_t j = 0; j < p.size(); ++j) v += h[j + 1] * p[j];
  return v;
}

struct Geometry {
  std::vector<std::vector<Int>> points;
  std::vector<std::vector<Int>> h;
};

Geometry geometry(const VertexSimplex& x) {
  if (x.degenerate() || !x.full_dimensional()) throw std::invalid_argument("simplex is degenerate or not full-dimensional");
  Geometry g;
  g.points = points_of(x);
  g.h = halfspaces(g.points);
  return g;
}

bool same_point(const std::vector<Int>& a, const std::vector<Int>& b) { return a == b; }

bool is_vertex_of(const std::vector<Int>& p, const Geometry& g) {
  return std::any_of(g.points.begin(), g.points.end(), [&](const auto& q) { return same_point(p, q); });
}

// A facet of `a` with every vertex of `b` on its closed negative side.
// When `strict_shared` is set, the vertices of b on the hyperplane must
// also be vertices of a.
bool separated_by_facet(const Geometry& a, const Geometry& b, bool strict_shared) {
  for (const auto& h : a.h) {
    bool ok = true;
    for (const auto& p : b.points) {
      Int v = evaluate(h, p);
      if (v > 0 || (strict_shared && v == 0 && !is_vertex_of(p, a))) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

void check_pair(const VertexSimplex& a, const VertexSimplex& b) {
  if (!(a.spec() == b.spec())) throw std::invalid_argument("simplices of different simplotopes");
}

template <typename T>
T bareiss(std::vector<T> m, int n) {
  if (n == 0) return T(1);
  auto at = [&](int r, int c) -> T& { return m[static_cast<std::size_t>(r) * n + c]; };
  T prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      int p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return T(0);
      for (int c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign < 0 ? T(-at(n - 1, n - 1)) : at(n - 1, n - 1);
}

// Vertices of { x : h_k(x) >= 0 for all k } from d-subsets of the rows;
// false as soon as one is not in `shared`.
template <typename T>
bool vertices_all_shared(const std::vector<std::vector<T>>& h, const std::vector<std::vector<T>>& shared, int d) {
  const int m = static_cast<int>(h.size());
  bool ok = true;
  std::vector<T> a(static_cast<std::size_t>(d) * d);
  std::vector<T> num(d);
  // for_each_combination cannot stop early, so `ok` short-circuits the body.
  for_each_combination(m, d, [&](std::span<const int> rows) {
    if (!ok) return;
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) a[static_cast<std::size_t>(r) * d + c] = h[rows[r]][c + 1];
    T den = bareiss(a, d);
    if (den == 0) return;
    for (int j = 0; j < d; ++j) {
      auto b = a;
      for (int r = 0; r < d; ++r) b[static_cast<std::size_t>(r) * d + j] = -h[rows[r]][0];
      num[j] = bareiss(std::move(b), d);
    }
    if (den < 0) {
      den = -den;
      for (auto& v : num) v = -v;
    }
    for (const auto& row : h) {
      T v = row[0] * den;
      for (int j = 0; j < d; ++j) v += row[j + 1] * num[j];
      if (v < 0) return;
    }
    for (const auto& p : shared) {
      bool eq = true;
      for (int j = 0; j < d && eq; ++j) eq = num[j] == p[j] * den;
      if (eq) return;
    }
    ok = false;
  });
  return ok;
}

double log2_abs(const Int& v) {
  if (v == 0) return 0;
  return std::log2(std::fabs(v.convert_to<double>()));
}

}  // namespace

bool interiors_overlap(const VertexSimplex& a, const VertexSimplex& b) {
  check_pair(a, b);
  Geometry ga = geometry(a), gb = geometry(b);
  if (separated_by_facet(ga, gb, false) || separated_by_facet(gb, ga, false)) return false;

  const int d = a.spec().dimension();
  const int n = d + 1;
  // Variables: lambda_0..lambda_d, mu_0..mu_d, eps.
  const int vars = 2 * n + 1;
  const int eps = 2 * n;
  LpProblem lp;
  lp.objective.assign(vars, Rat(0));
  lp.objective[eps] = -1;
  auto equality = [&](std::vector<Rat> row, Rat rhs) {
    std::vector<Rat> neg(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) neg[j] = -row[j];
    lp.add(std::move(row), rhs);
    lp.add(std::move(neg), -rhs);
  };
  {
    std::vector<Rat> la(vars), mu(vars);
    for (int i = 0; i < n; ++i) {
      la[i] = 1;
      mu[n + i] = 1;
    }
    equality(std::move(la), 1);
    equality(std::move(mu), 1);
  }
  for (int c = 0; c < d; ++c) {
    std::vector<Rat> row(vars);
    for (int i = 0; i < n; ++i) {
      row[i] = Rat(ga.points[i][c]);
      row[n + i] = Rat(-gb.points[i][c]);
    }
    equality(std::move(row), 0);
  }
  for (int i = 0; i < 2 * n; ++i) {
    std::vector<Rat> row(vars);
    row[i] = 1;
    row[eps] = -1;
    lp.add(std::move(row), 0);
  }
  LpResult r = lp_minimize(lp);
  if (r.status != LpStatus::optimal) return false;
  return r.value < 0;
}

bool meet_face_to_face(const VertexSimplex& a, const VertexSimplex& b) {
  check_pair(a, b);
  Geometry ga = geometry(a), gb = geometry(b);
  if (separated_by_facet(ga, gb, true) || separated_by_facet(gb, ga, true)) return true;

  const int d = a.spec().dimension();
  std::vector<std::vector<Int>> h = ga.h;
  h.insert(h.end(), gb.h.begin(), gb.h.end());
  std::vector<std::vector<Int>> shared;
  for (const auto& p : ga.points) {
    if (is_vertex_of(p, gb)) shared.push_back(p);
  }

  // Cramer determinants are bounded by Hadamard's inequality; use 128-bit
  // arithmetic when every product along the way stays below 2^125.
  double row_norm = 0;
  for (const auto& row : h) {
    double n2 = 0;
    for (const auto& v : row) n2 += std::exp2(2 * log2_abs(v));
    row_norm = std::max(row_norm, 0.5 * std::log2(std::max(n2, 1.0)));
  }
  double max_entry = 0;
  for (const auto& row : h)
    for (const auto& v : row) max_entry = std::max(max_entry, log2_abs(v));
  const double hadamard = d * row_norm;
  if (2 * hadamard < 120 && hadamard + max_entry + std::log2(d + 1.0) < 120) {
    auto narrow = [](const std::vector<std::vector<Int>>& in) {
      std::vector<std::vector<i128>> out;
      for (const auto& row : in) {
        std::vector<i128> r;
        for (const auto& v : row) r.push_back(static_cast<i128>(v.convert_to<long long>()));
        out.push_back(std::move(r));
      }
      return out;
    };
    return vertices_all_shared<i128>(narrow(h), narrow(shared), d);
  }
  return vertices_all_shared<Int>(h, shared, d);
}

namespace {

std::size_t shared_count(const VertexSimplex& a, const VertexSimplex& b) {
  auto x = a.sorted_vertices(), y = b.sorted_vertices();
  std::vector<VertexPoint> common;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
  return common.size();
}

std::string name(std::size_t i) { return "simplex " + std::to_string(i); }

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> adjacency_graph(const TriangulationCandidate& cand) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t d = cand.spec.dimension();
  for (std::size_t i = 0; i < cand.simplices.size(); ++i)
    for (std::size_t j = i + 1; j < cand.simplices.size(); ++j) {
      const auto& a = cand.simplices[i];
      const auto& b = cand.simplices[j];
      if (a.degenerate() || b.degenerate()) continue;
      if (shared_count(a, b) == d && meet_face_to_face(a, b)) out.emplace_back(i, j);
    }
  return out;
}

VerifierReport verify(const TriangulationCandidate& cand, int jobs) {
  VerifierReport rep;
  rep.polytope_class = polytope_class(cand.spec);
  rep.total_class = 0;
  bool usable = true;
  const std::size_t d = cand.spec.dimension();
  for (std::size_t i = 0; i < cand.simplices.size(); ++i) {
    const auto& x = cand.simplices[i];
    rep.classes.push_back(x.klass());
    rep.total_class += x.klass();
    if (!(x.spec() == cand.spec)) {
      rep.diagnostics.push_back(name(i) + " belongs to a different simplotope");
      usable = false;
    } else if (!x.full_dimensional()) {
      rep.diagnostics.push_back(name(i) + " has " + std::to_string(x.size()) + " vertices, expected " + std::to_string(d + 1));
      usable = false;
    } else if (x.degenerate()) {
      rep.diagnostics.push_back(name(i) + " is degenerate (class 0)");
      usable = false;
    }
  }
  if (cand.simplices.empty()) rep.diagnostics.push_back("no simplices");
  rep.classes_ok = usable && !cand.simplices.empty() && rep.total_class == rep.polytope_class;
  if (usable && rep.total_class != rep.polytope_class) {
    rep.diagnostics.push_back("total class " + rep.total_class.str() + " differs from the polytope class " +
                              rep.polytope_class.str());
  }
  if (!usable) return rep;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < cand.simplices.size(); ++i)
    for (std::size_t j = i + 1; j < cand.simplices.size(); ++j) pairs.emplace_back(i, j);

  std::vector<char> overlap(pairs.size()), f2f(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < pairs.size();) {
      const auto& a = cand.simplices[pairs[k].first];
      const auto& b = cand.simplices[pairs[k].second];
      overlap[k] = interiors_overlap(a, b);
      f2f[k] = meet_face_to_face(a, b);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  rep.disjoint_ok = true;
  rep.face_to_face_ok = true;
  constexpr std::size_t max_pair_diagnostics = 50;
  std::size_t reported = 0;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [i, j] = pairs[k];
    if (overlap[k]) {
      rep.disjoint_ok = false;
      if (reported++ < max_pair_diagnostics) rep.diagnostics.push_back(name(i) + " and " + name(j) + " have overlapping interiors");
    }
    if (!f2f[k]) {
      rep.face_to_face_ok = false;
      if (reported++ < max_pair_diagnostics) rep.diagnostics.push_back(name(i) + " and " + name(j) + " do not meet face-to-face");
    }
    if (f2f[k] && shared_count(cand.simplices[i], cand.simplices[j]) == d) rep.adjacency.emplace_back(i, j);
  }
  if (reported > max_pair_diagnostics) {
    rep.diagnostics.push_back(std::to_string(reported - max_pair_diagnostics) + " further pair problems not listed");
  }
  return rep;
}

bool facets_match(const TriangulationCandidate& cand, std::vector<std::string>* diagnostics) {
  const int d = cand.spec.dimension();
  std::map<std::vector<VertexPoint>, int> seen;
  std::map<std::vector<VertexPoint>, bool> exterior;
  for (const auto& x : cand.simplices) {
    auto v = x.sorted_vertices();
    for (std::size_t skip = 0; skip < v.size(); ++skip) {
      std::vector<VertexPoint> facet;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != skip) facet.push_back(v[i]);
      }
      exterior[facet] = minimal_face(cand.spec, facet).dimension() == d - 1;
      ++seen[facet];
    }
  }
  bool ok = true;
  for (const auto& [facet, n] : seen) {
    int expected = exterior[facet] ? 1 : 2;
    if (n != expected) {
      ok = false;
      if (diagnostics) {
        diagnostics->push_back(std::string(exterior[facet] ? "boundary" : "interior") + " facet shared by " +
                               std::to_string(n) + " simplices, expected " + std::to_string(expected));
      }
    }
  }
  return ok;
}

}  // namespace simplotope
