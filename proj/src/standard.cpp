#include "simplotope/standard.hpp"

#include <algorithm>
#include <stdexcept>

namespace simplotope {

Int standard_size(const SimplotopeSpec& spec) {
  Int r = factorial(spec.dimension());
  for (int c : spec.factors()) r /= factorial(c);
  return r;
}

std::vector<std::vector<int>> y_orderings(const SimplotopeSpec& spec) {
  std::vector<int> labels;
  for (int i = 0; i < spec.factor_count(); ++i) labels.insert(labels.end(), spec.factor(i), i);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(labels);
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

VertexSimplex ordering_simplex(const SimplotopeSpec& spec, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != spec.dimension()) throw std::invalid_argument("ordering has the wrong length");
  std::vector<int> ones(spec.factor_count(), 0);
  std::vector<VertexPoint> verts{VertexPoint(ones)};
  for (int label : order) {
    if (label < 0 || label >= spec.factor_count()) throw std::invalid_argument("ordering label out of range");
    ++ones[label];
    verts.emplace_back(ones);
  }
  for (int i = 0; i < spec.factor_count(); ++i) {
    if (ones[i] != spec.factor(i)) throw std::invalid_argument("ordering does not use each label c_i times");
  }
  return VertexSimplex(spec, std::move(verts));
}

std::vector<VertexSimplex> standard_triangulation(const SimplotopeSpec& spec) {
  std::vector<VertexSimplex> out;
  for (const auto& order : y_orderings(spec)) out.push_back(ordering_simplex(spec, order));
  return out;
}

}  // namespace simplotope
