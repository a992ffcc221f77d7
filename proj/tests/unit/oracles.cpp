#include "oracles.hpp"

namespace oracle {

Int cofactor_det(const std::vector<std::vector<long>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int sum = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    Int term = m[0][c] * cofactor_det(minor);
    sum += c % 2 ? Int(-term) : term;
  }
  return sum;
}

Int q_brute(int s, int t, int s_prime, int t_prime) {
  // A segment factor keeps 1 coordinate (2 ways) or 2 (1 way); a triangle
  // keeps 1 (3 ways), 2 (3 ways) or 3 (1 way).
  Int total = 0;
  for (int kept2 = 0; kept2 <= s; ++kept2)  // segments left free
    for (int tri2 = 0; tri2 <= t; ++tri2)
      for (int tri3 = 0; tri3 + tri2 <= t; ++tri3) {
        if (kept2 + tri2 != s_prime || tri3 != t_prime) continue;
        Int ways = simplotope::binomial(s, kept2) * simplotope::power(2, s - kept2);
        ways *= simplotope::binomial(t, tri3) * simplotope::binomial(t - tri3, tri2);
        ways *= simplotope::power(3, tri2) * simplotope::power(3, t - tri3 - tri2);
        total += ways;
      }
  return total;
}

Int class_by_cofactors(const simplotope::SimplotopeSpec& spec, const std::vector<simplotope::VertexPoint>& v) {
  std::vector<std::vector<long>> m;
  auto base = v[0].standard(spec);
  for (std::size_t i = 1; i < v.size(); ++i) {
    auto x = v[i].standard(spec);
    std::vector<long> row;
    for (int f = 0; f < spec.factor_count(); ++f)
      for (int j = 0; j < spec.factor(f); ++j) row.push_back(x[spec.offset(f) + j] - base[spec.offset(f) + j]);
    m.push_back(std::move(row));
  }
  Int d = cofactor_det(m);
  return d < 0 ? Int(-d) : d;
}

std::vector<std::vector<simplotope::VertexPoint>> all_vertex_subsets(const simplotope::SimplotopeSpec& spec, int size) {
  auto verts = simplotope::all_vertices(spec);
  std::vector<std::vector<simplotope::VertexPoint>> out;
  simplotope::for_each_combination(static_cast<int>(verts.size()), size, [&](std::span<const int> idx) {
    std::vector<simplotope::VertexPoint> s;
    for (int i : idx) s.push_back(verts[i]);
    out.push_back(std::move(s));
  });
  return out;
}

std::mt19937_64& rng() {
  static std::mt19937_64 r(20240611);
  return r;
}

}  // namespace oracle
