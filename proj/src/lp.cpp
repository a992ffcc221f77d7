#include "simplotope/exact.hpp"

#include <optional>
#include <stdexcept>

namespace simplotope {

void LpProblem::add(std::vector<Rat> coefficients, Rat rhs) {
  constraints.push_back({std::move(coefficients), std::move(rhs)});
}

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
  }
  return "?";
}

namespace {

// Dense tableau over the standard form  G x' = h, x' >= 0, with columns
// [structural | slack | artificial | rhs].
class Tableau {
public:
  Tableau(const LpProblem& p) : n_(p.variables()), m_(p.constraints.size()) {
    sign_.assign(m_, 1);
    std::vector<std::size_t> needs_artificial;
    for (std::size_t i = 0; i < m_; ++i) {
      if (p.constraints[i].rhs <= 0) sign_[i] = -1;
      else needs_artificial.push_back(i);
    }
    artificial_begin_ = n_ + m_;
    cols_ = artificial_begin_ + needs_artificial.size();
    rows_.assign(m_, std::vector<Rat>(cols_ + 1));
    basis_.assign(m_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      const auto& c = p.constraints[i];
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = sign_[i] * c.coefficients[j];
      rows_[i][n_ + i] = -sign_[i];
      rows_[i][cols_] = sign_[i] * c.rhs;
      if (sign_[i] < 0) basis_[i] = n_ + i;
    }
    for (std::size_t a = 0; a < needs_artificial.size(); ++a) {
      std::size_t i = needs_artificial[a];
      rows_[i][artificial_begin_ + a] = 1;
      basis_[i] = artificial_begin_ + a;
    }
    removed_.assign(m_, false);
  }

  // Reduced-cost row for the given column costs; entry cols_ holds -value.
  void price(const std::vector<Rat>& cost) {
    cost_ = cost;
    z_.assign(cols_ + 1, Rat(0));
    for (std::size_t j = 0; j < cols_; ++j) z_[j] = cost[j];
    for (std::size_t i = 0; i < m_; ++i) {
      if (removed_[i]) continue;
      const Rat& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) z_[j] -= cb * rows_[i][j];
    }
  }

  // Runs Bland's rule over columns [0, limit). Returns false on unbounded.
  bool optimize(std::size_t limit) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < limit; ++j) {
        if (z_[j] < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rat best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (removed_[i] || rows_[i][*entering] <= 0) continue;
        Rat ratio = rows_[i][cols_] / rows_[i][*entering];
        if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    ++pivots_;
    Rat inv = 1 / rows_[r][c];
    for (auto& v : rows_[r]) v *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || removed_[i] || rows_[i][c] == 0) continue;
      Rat f = rows_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (rows_[r][j] != 0) rows_[i][j] -= f * rows_[r][j];
      }
    }
    if (z_[c] != 0) {
      Rat f = z_[c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (rows_[r][j] != 0) z_[j] -= f * rows_[r][j];
      }
    }
    basis_[r] = c;
  }

  // After phase 1: pivot zero-valued artificials out of the basis, dropping
  // rows that are linear combinations of others.
  void expel_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (removed_[i] || basis_[i] < artificial_begin_) continue;
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < artificial_begin_; ++j) {
        if (rows_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col) pivot(i, *col);
      else removed_[i] = true;
    }
  }

  Rat value() const { return -z_[cols_]; }

  std::vector<Rat> primal() const {
    std::vector<Rat> x(n_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (!removed_[i] && basis_[i] < n_) x[basis_[i]] = rows_[i][cols_];
    }
    return x;
  }

  // Dual of constraint i equals the reduced cost of its slack column.
  std::vector<Rat> dual() const {
    std::vector<Rat> y(m_);
    for (std::size_t i = 0; i < m_; ++i) y[i] = z_[n_ + i];
    return y;
  }

  std::size_t cols() const { return cols_; }
  std::size_t artificial_begin() const { return artificial_begin_; }
  std::size_t pivots() const { return pivots_; }

private:
  std::size_t n_;
  std::size_t m_;
  std::size_t cols_ = 0;
  std::size_t artificial_begin_ = 0;
  std::vector<int> sign_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<bool> removed_;
  std::vector<Rat> cost_;
  std::vector<Rat> z_;
  std::size_t pivots_ = 0;
};

}  // namespace

LpResult lp_minimize(const LpProblem& problem) {
  const std::size_t n = problem.variables();
  for (const auto& c : problem.constraints) {
    if (c.coefficients.size() != n) throw std::invalid_argument("lp_minimize: constraint row length differs from objective");
  }

  Tableau t(problem);
  LpResult result;

  std::vector<Rat> phase1(t.cols());
  for (std::size_t j = t.artificial_begin(); j < t.cols(); ++j) phase1[j] = 1;
  t.price(phase1);
  t.optimize(t.cols());
  if (t.value() > 0) {
    result.status = LpStatus::infeasible;
    result.pivots = t.pivots();
    return result;
  }
  t.expel_artificials();

  std::vector<Rat> phase2(t.cols());
  for (std::size_t j = 0; j < n; ++j) phase2[j] = problem.objective[j];
  t.price(phase2);
  if (!t.optimize(t.artificial_begin())) {
    result.status = LpStatus::unbounded;
    result.pivots = t.pivots();
    return result;
  }
  result.status = LpStatus::optimal;
  result.value = t.value();
  result.solution = t.primal();
  result.dual = t.dual();
  result.pivots = t.pivots();
  return result;
}

bool lp_feasible(const LpProblem& problem, std::span<const Rat> x) {
  if (x.size() != problem.variables()) return false;
  for (const auto& v : x) {
    if (v < 0) return false;
  }
  for (const auto& c : problem.constraints) {
    Rat lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += c.coefficients[j] * x[j];
    if (lhs < c.rhs) return false;
  }
  return true;
}

bool lp_dual_certifies(const LpProblem& problem, std::span<const Rat> y, const Rat& value) {
  if (y.size() != problem.constraints.size()) return false;
  Rat objective = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] < 0) return false;
    objective += y[i] * problem.constraints[i].rhs;
  }
  if (objective != value) return false;
  for (std::size_t j = 0; j < problem.variables(); ++j) {
    Rat column = 0;
    for (std::size_t i = 0; i < y.size(); ++i) column += y[i] * problem.constraints[i].coefficients[j];
    if (column > problem.objective[j]) return false;
  }
  return true;
}

}  // namespace simplotope
