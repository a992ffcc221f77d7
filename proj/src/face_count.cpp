#include "simplotope/face_count.hpp"

#include "simplotope/core.hpp"

#include <stdexcept>
#include <vector>

namespace simplotope {

Int q_count(const QQuery& q) {
  const auto [s, t, sp, tp] = q;
  if (s < 0 || t < 0 || sp < 0 || tp < 0 || tp > t || sp > s + t - tp) return 0;
  Int sum = 0;
  for (int j = 0; j <= sp; ++j) {
    if (j > s || sp - j > t - tp) continue;
    sum += power(2, s - j) * power(3, t - tp) * binomial(s, j) * binomial(t - tp, sp - j);
  }
  return binomial(t, tp) * sum;
}

namespace {

// Dense bivariate polynomial, p[i][j] the coefficient of x^i y^j.
using Poly = std::vector<std::vector<Int>>;

Poly multiply(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, std::vector<Int>(a[0].size() + b[0].size() - 1));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t k = 0; k < b.size(); ++k)
        for (std::size_t l = 0; l < b[k].size(); ++l) r[i + k][j + l] += a[i][j] * b[k][l];
    }
  return r;
}

}  // namespace

Int q_by_generating_function(const QQuery& q) {
  const auto [s, t, sp, tp] = q;
  if (s < 0 || t < 0 || sp < 0 || tp < 0) return 0;
  Poly p{{Int(1)}};
  const Poly segment{{Int(2)}, {Int(1)}};                // 2 + x
  const Poly triangle{{Int(3), Int(1)}, {Int(3), Int(0)}};  // 3 + y + 3x
  for (int i = 0; i < s; ++i) p = multiply(p, segment);
  for (int i = 0; i < t; ++i) p = multiply(p, triangle);
  if (static_cast<std::size_t>(sp) >= p.size() || static_cast<std::size_t>(tp) >= p[0].size()) return 0;
  return p[sp][tp];
}

bool q_enumeration_feasible(int s, int t) {
  if (s < 0 || t < 0) return false;
  long double n = 1;
  for (int i = 0; i < s; ++i) n *= 3;
  for (int i = 0; i < t; ++i) n *= 7;
  return n <= static_cast<long double>(q_enumeration_limit) && 2 * s + 3 * t <= 64;
}

std::map<std::pair<int, int>, Int> face_histogram(int s, int t) {
  if (!q_enumeration_feasible(s, t)) {
    throw std::invalid_argument("face enumeration of Π*_{" + std::to_string(s) + "," + std::to_string(t) +
                                "} exceeds the face-count guard");
  }
  std::map<std::pair<int, int>, Int> out;
  if (s + t == 0) {
    out[{0, 0}] = 1;
    return out;
  }
  for (const auto& f : all_faces(SimplotopeSpec::segments_triangles(s, t))) {
    auto sig = f.signature();
    out[{sig.segments, sig.triangles}] += 1;
  }
  return out;
}

Int q_by_enumeration(const QQuery& q) {
  auto h = face_histogram(q.s, q.t);
  auto it = h.find({q.s_prime, q.t_prime});
  return it == h.end() ? Int(0) : it->second;
}

}  // namespace simplotope
