// Lower bounds on the size of a simplicial cover of Π*_{s,t} from the
// linear program over x_c, the number of simplices of class c.

#pragma once

#include "simplotope/exterior_bounds.hpp"

#include <optional>
#include <string>
#include <vector>

namespace simplotope {

/// One row per signature (s', t'), 0 <= t' <= t, 0 <= s' <= s + t - t':
///
///   sum_c c F(s,t,c,s',t',c) x_c  >=  Q(s,t,s',t') (s'+2t')! / 2^{t'}
///
/// (each row scaled by (s'+2t')!). The (0,0) row is left out except for
/// the point Π*_{0,0}, where it is the whole-polytope row.
struct CellLp {
  LpProblem problem;
  std::vector<std::pair<int, int>> signatures;  // row order
  Int v_used;
  VProvenance v_provenance = VProvenance::brute_forced;
};

/// Throws std::out_of_range when V(s, t) is not available, and
/// std::logic_error when a row has a zero left side and a positive right
/// side.
CellLp build_lp(int s, int t, FBounds& f, FStats* stats = nullptr);

struct BoundCell {
  int s = 0, t = 0;
  bool computed = false;
  std::string skip_reason;
  Rat lp_value;
  Int lower_bound;  // ceil(lp_value)
  Int v_used;
  VProvenance v_provenance = VProvenance::brute_forced;
  std::size_t constraints = 0;
  std::size_t pivots = 0;
  FStats f_stats;
  std::vector<Rat> solution;
};

/// Throws std::logic_error if the program is not optimal.
BoundCell solve_cell(int s, int t, FBounds& f);

/// Every (s, t) with s <= max_s, t <= max_t and s + 2t <= dim_cap, ordered
/// by t then s. Cells without a V value come back with computed = false.
std::vector<BoundCell> bounds_table(int max_s, int max_t, int dim_cap, FBounds& f, int jobs = 1);

}  // namespace simplotope
