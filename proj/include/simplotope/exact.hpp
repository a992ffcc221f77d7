// Exact numeric kernel: big integers, rationals, integer matrices,
// fraction-free determinants and an exact rational LP solver.

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace simplotope {

using Int = boost::multiprecision::mpz_int;
// GMP keeps every mpq_t canonical (lowest terms, positive denominator)
// after each operation.
using Rat = boost::multiprecision::mpq_rational;

Int binomial(long n, long k);
Int factorial(long n);
Int power(long base, long exponent);

Int ceil(const Rat& r);
std::string to_string(const Int& v);
// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& r);
Rat parse_rational(const std::string& text);

/// Dense row-major integer matrix.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Exact determinant by Bareiss fraction-free elimination.
/// Throws std::invalid_argument for a non-square matrix.
Int det(IntMatrix m);

/// Bareiss on a small machine-integer matrix (row-major, n*n entries).
/// Exact as long as every minor fits in 64 bits, which holds for the
/// 0/±1 matrices of vertex simplices up to dimension 13. The buffer is
/// overwritten.
std::int64_t det_small(std::span<std::int64_t> a, int n);

// ---------------------------------------------------------------------------
// Linear programming

/// minimize objective . x  subject to  row . x >= rhs for every constraint,
/// x >= 0.
struct LpConstraint {
  std::vector<Rat> coefficients;
  Rat rhs;
};

struct LpProblem {
  std::vector<Rat> objective;
  std::vector<LpConstraint> constraints;

  std::size_t variables() const { return objective.size(); }
  void add(std::vector<Rat> coefficients, Rat rhs);
};

enum class LpStatus { optimal, infeasible, unbounded };

const char* to_string(LpStatus s);

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rat value;
  std::vector<Rat> solution;
  // Optimal dual multipliers, one per constraint (>= 0); certify the
  // optimum via  dual . rhs == value  and  A^T dual <= objective.
  std::vector<Rat> dual;
  std::size_t pivots = 0;
};

/// Two-phase dense tableau simplex with Bland's least-index rule.
/// Throws std::invalid_argument when a row length differs from the
/// objective length.
LpResult lp_minimize(const LpProblem& problem);

/// Checks a primal solution exactly: x >= 0 and every row satisfied.
bool lp_feasible(const LpProblem& problem, std::span<const Rat> x);

/// Checks a dual certificate exactly: y >= 0, A^T y <= objective and
/// rhs . y == value.
bool lp_dual_certifies(const LpProblem& problem, std::span<const Rat> y, const Rat& value);

}  // namespace simplotope
