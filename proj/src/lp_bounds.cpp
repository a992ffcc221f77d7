#include "simplotope/lp_bounds.hpp"

#include "simplotope/face_count.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace simplotope {

CellLp build_lp(int s, int t, FBounds& f, FStats* stats) {
  if (s < 0 || t < 0) throw std::invalid_argument("build_lp: negative argument");
  auto v = f.v_table().lookup(s, t);
  if (!v) f.v_table().value(s, t);  // throws the missing-cap diagnostic
  if (v->value > 1'000'000) throw std::out_of_range("build_lp: V(s,t) too large for a dense tableau");
  const int n = static_cast<int>(v->value);

  CellLp lp;
  lp.v_used = v->value;
  lp.v_provenance = v->provenance;
  lp.problem.objective.assign(n, Rat(1));
  for (int tp = 0; tp <= t; ++tp)
    for (int sp = 0; sp <= s + t - tp; ++sp) {
      if (sp == 0 && tp == 0 && s + t > 0) continue;
      std::vector<Rat> row(n);
      bool any = false;
      for (int c = 1; c <= n; ++c) {
        Int fb = f.f_bound({s, t, c, sp, tp, c}, stats);
        row[c - 1] = Rat(c * fb);
        any = any || fb != 0;
      }
      Rat rhs(q_count({s, t, sp, tp}) * factorial(sp + 2 * tp), power(2, tp));
      if (!any && rhs > 0) {
        throw std::logic_error("cell (" + std::to_string(s) + "," + std::to_string(t) + "): row (" + std::to_string(sp) +
                               "," + std::to_string(tp) + ") has no admissible class but " + to_string(rhs) +
                               " faces to cover");
      }
      lp.problem.add(std::move(row), std::move(rhs));
      lp.signatures.emplace_back(sp, tp);
    }
  return lp;
}

BoundCell solve_cell(int s, int t, FBounds& f) {
  BoundCell cell;
  cell.s = s;
  cell.t = t;
  CellLp lp = build_lp(s, t, f, &cell.f_stats);
  LpResult r = lp_minimize(lp.problem);
  if (r.status != LpStatus::optimal) {
    throw std::logic_error("cell (" + std::to_string(s) + "," + std::to_string(t) + "): program is " + to_string(r.status));
  }
  cell.computed = true;
  cell.lp_value = r.value;
  cell.lower_bound = ceil(r.value);
  cell.v_used = lp.v_used;
  cell.v_provenance = lp.v_provenance;
  cell.constraints = lp.problem.constraints.size();
  cell.pivots = r.pivots;
  cell.solution = std::move(r.solution);
  return cell;
}

std::vector<BoundCell> bounds_table(int max_s, int max_t, int dim_cap, FBounds& f, int jobs) {
  std::vector<BoundCell> cells;
  for (int t = 0; t <= max_t; ++t)
    for (int s = 0; s <= max_s; ++s) {
      if (s + 2 * t > dim_cap) continue;
      BoundCell c;
      c.s = s;
      c.t = t;
      cells.push_back(c);
    }

  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < cells.size();) {
      auto& c = cells[i];
      if (!f.v_table().lookup(c.s, c.t)) {
        c.skip_reason = "no V value: dimension " + std::to_string(c.s + 2 * c.t) + " has no configured cube cap";
        continue;
      }
      try {
        c = solve_cell(c.s, c.t, f);
      } catch (const std::out_of_range& e) {
        c.skip_reason = e.what();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return cells;
}

}  // namespace simplotope
