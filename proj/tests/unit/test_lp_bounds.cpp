#include "simplotope/face_count.hpp"
#include "simplotope/lp_bounds.hpp"

#include <doctest.h>

#include <map>

using namespace simplotope;

namespace {

VTable published() { return VTable(CubeCaps::load(CubeCaps::default_path()), VPolicy::published); }

}  // namespace

TEST_SUITE("lp_bounds") {
  TEST_CASE("rows of the cube program") {
    auto v = published();
    FBounds f(v);
    auto lp = build_lp(3, 0, f);
    CHECK(lp.v_used == 2);
    CHECK(lp.problem.variables() == 2);
    // (1,0), (2,0), (3,0); the vertex row is left out.
    REQUIRE(lp.signatures.size() == 3);
    CHECK(lp.signatures.front() == std::pair{1, 0});
    CHECK(lp.signatures.back() == std::pair{3, 0});
    const auto& top = lp.problem.constraints.back();
    CHECK(top.coefficients == std::vector<Rat>{1, 2});
    CHECK(top.rhs == 6);
    auto r = lp_minimize(lp.problem);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(ceil(r.value) == 5);
  }

  TEST_CASE("whole-polytope row alone forces the triangle-cross-segment bound") {
    auto v = published();
    FBounds f(v);
    auto lp = build_lp(1, 1, f);
    CHECK(lp.v_used == 1);
    const auto& top = lp.problem.constraints.back();
    CHECK(lp.signatures.back() == std::pair{1, 1});
    CHECK(top.coefficients == std::vector<Rat>{1});
    CHECK(top.rhs == 3);
    CHECK(solve_cell(1, 1, f).lower_bound == 3);
  }

  TEST_CASE("point cell keeps its vertex row") {
    auto v = published();
    FBounds f(v);
    auto lp = build_lp(0, 0, f);
    REQUIRE(lp.signatures.size() == 1);
    CHECK(lp.signatures[0] == std::pair{0, 0});
    CHECK(solve_cell(0, 0, f).lower_bound == 1);
  }

  TEST_CASE("right sides count scaled faces") {
    auto v = published();
    FBounds f(v);
    auto lp = build_lp(2, 2, f);
    for (std::size_t i = 0; i < lp.signatures.size(); ++i) {
      auto [sp, tp] = lp.signatures[i];
      CHECK(lp.problem.constraints[i].rhs == Rat(q_count({2, 2, sp, tp}) * factorial(sp + 2 * tp), power(2, tp)));
    }
  }

  TEST_CASE("desk-scale table") {
    auto v = published();
    FBounds f(v);
    std::map<std::pair<int, int>, int> expected{{{0, 0}, 1}, {{1, 0}, 1}, {{2, 0}, 2}, {{3, 0}, 5}, {{0, 1}, 1}, {{1, 1}, 3},
                                                {{2, 1}, 9}, {{0, 2}, 6}, {{1, 2}, 20}, {{2, 2}, 68}, {{0, 3}, 50}};
    auto cells = bounds_table(3, 3, 6, f, 4);
    std::map<std::pair<int, int>, int> seen;
    for (const auto& c : cells) {
      REQUIRE(c.computed);
      auto it = expected.find({c.s, c.t});
      if (it == expected.end()) continue;
      CHECK_MESSAGE(c.lower_bound == it->second, "(" << c.s << "," << c.t << ")");
      ++seen[{c.s, c.t}];
    }
    CHECK(seen.size() == expected.size());
    // Ordered by t, then s.
    for (std::size_t i = 1; i < cells.size(); ++i)
      CHECK(std::pair{cells[i - 1].t, cells[i - 1].s} < std::pair{cells[i].t, cells[i].s});
  }

  TEST_CASE("thread count does not change the table") {
    auto v = published();
    FBounds f1(v), f4(v);
    auto a = bounds_table(4, 2, 6, f1, 1);
    auto b = bounds_table(4, 2, 6, f4, 4);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].lp_value == b[i].lp_value);
      CHECK(a[i].lower_bound == b[i].lower_bound);
    }
  }

  TEST_CASE("optimum, feasibility and dual certificate") {
    auto v = published();
    FBounds f(v);
    for (auto [s, t] : std::vector<std::pair<int, int>>{{3, 0}, {1, 1}, {2, 1}, {0, 2}, {1, 2}, {0, 3}, {2, 2}}) {
      auto lp = build_lp(s, t, f);
      auto r = lp_minimize(lp.problem);
      REQUIRE(r.status == LpStatus::optimal);
      CHECK(lp_feasible(lp.problem, r.solution));
      CHECK(lp_dual_certifies(lp.problem, r.dual, r.value));
    }
  }

  TEST_CASE("dropping a row never raises the optimum") {
    auto v = published();
    FBounds f(v);
    for (auto [s, t] : std::vector<std::pair<int, int>>{{3, 0}, {2, 1}, {1, 2}, {0, 3}}) {
      auto lp = build_lp(s, t, f);
      Rat full = lp_minimize(lp.problem).value;
      for (std::size_t i = 0; i < lp.problem.constraints.size(); ++i) {
        LpProblem p = lp.problem;
        p.constraints.erase(p.constraints.begin() + static_cast<std::ptrdiff_t>(i));
        auto r = lp_minimize(p);
        REQUIRE(r.status == LpStatus::optimal);
        CHECK(r.value <= full);
      }
    }
  }

  TEST_CASE("row scaling does not change the optimum") {
    auto v = published();
    FBounds f(v);
    for (auto [s, t] : std::vector<std::pair<int, int>>{{3, 0}, {2, 1}, {1, 2}, {0, 3}}) {
      auto lp = build_lp(s, t, f);
      LpProblem unscaled = lp.problem;
      for (std::size_t i = 0; i < unscaled.constraints.size(); ++i) {
        auto [sp, tp] = lp.signatures[i];
        Rat k(factorial(sp + 2 * tp));
        for (auto& a : unscaled.constraints[i].coefficients) a /= k;
        unscaled.constraints[i].rhs /= k;
      }
      CHECK(lp_minimize(unscaled).value == lp_minimize(lp.problem).value);
    }
  }

  TEST_CASE("cells without a cap are skipped") {
    CubeCaps caps = CubeCaps::load(CubeCaps::default_path());
    CubeCaps small;
    for (const auto& [d, value] : caps.entries())
      if (d <= 7) small.set(d, value);
    VTable v(small, VPolicy::published);
    FBounds f(v);
    CHECK_THROWS_AS(build_lp(8, 0, f), std::out_of_range);
    auto cells = bounds_table(8, 0, 8, f);
    REQUIRE(cells.size() == 9);
    CHECK(cells[7].computed);
    CHECK_FALSE(cells[8].computed);
    CHECK_FALSE(cells[8].skip_reason.empty());
  }

  TEST_CASE("brute policy tightens V and never lowers a bound") {
    auto caps = CubeCaps::load(CubeCaps::default_path());
    VTable pub(caps, VPolicy::published), brute(caps, VPolicy::brute);
    FBounds fp(pub), fb(brute);
    for (auto [s, t] : std::vector<std::pair<int, int>>{{3, 0}, {4, 0}, {2, 1}, {2, 2}, {4, 1}}) {
      auto a = solve_cell(s, t, fp);
      auto b = solve_cell(s, t, fb);
      CHECK(b.v_used <= a.v_used);
      CHECK(b.lower_bound >= a.lower_bound);
      CHECK(b.v_provenance == VProvenance::brute_forced);
    }
  }
}
