#include "oracles.hpp"

#include "simplotope/exact.hpp"

#include <doctest.h>

#include <algorithm>

using namespace simplotope;

namespace {

LpProblem random_problem(int vars, int rows) {
  std::uniform_int_distribution<int> coef(-2, 5), rhs(0, 12), cost(1, 4);
  LpProblem p;
  for (int j = 0; j < vars; ++j) p.objective.emplace_back(cost(oracle::rng()));
  for (int i = 0; i < rows; ++i) {
    std::vector<Rat> row;
    bool positive = false;
    for (int j = 0; j < vars; ++j) {
      row.emplace_back(coef(oracle::rng()));
      positive = positive || row.back() > 0;
    }
    if (!positive) row[0] = 1;
    p.add(std::move(row), Rat(rhs(oracle::rng())));
  }
  return p;
}

}  // namespace

TEST_SUITE("lp") {
  TEST_CASE("two-variable program") {
    LpProblem p;
    p.objective = {1, 1};
    p.add({1, 0}, 4);
    p.add({1, 2}, 6);
    auto r = lp_minimize(p);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == 5);
    CHECK(r.solution == std::vector<Rat>{4, 1});
    CHECK(lp_dual_certifies(p, r.dual, r.value));
  }

  TEST_CASE("single bound") {
    LpProblem p;
    p.objective = {1};
    p.add({1}, 3);
    auto r = lp_minimize(p);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == 3);
  }

  TEST_CASE("infeasible and unbounded") {
    LpProblem p;
    p.objective = {1};
    p.add({-1}, 1);
    p.add({1}, 0);
    CHECK(lp_minimize(p).status == LpStatus::infeasible);

    LpProblem q;
    q.objective = {-1};
    q.add({1}, 1);
    CHECK(lp_minimize(q).status == LpStatus::unbounded);
  }

  TEST_CASE("row length mismatch is rejected") {
    LpProblem p;
    p.objective = {1, 1};
    p.add({1}, 1);
    CHECK_THROWS_AS(lp_minimize(p), std::invalid_argument);
  }

  TEST_CASE("degenerate program terminates") {
    // Many redundant rows through the optimum.
    LpProblem p;
    p.objective = {1, 1, 1};
    p.add({1, 1, 0}, 2);
    p.add({1, 0, 1}, 2);
    p.add({0, 1, 1}, 2);
    p.add({2, 2, 2}, 6);
    p.add({1, 1, 1}, 3);
    p.add({3, 3, 0}, 6);
    auto r = lp_minimize(p);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == 3);
    CHECK(lp_dual_certifies(p, r.dual, r.value));
  }

  TEST_CASE("random programs: exact feasibility, dual certificate, row order") {
    int solved = 0;
    for (int trial = 0; trial < 150; ++trial) {
      auto p = random_problem(2 + trial % 5, 1 + trial % 7);
      auto r = lp_minimize(p);
      REQUIRE(r.status != LpStatus::unbounded);  // positive costs, x >= 0
      if (r.status == LpStatus::infeasible) continue;
      ++solved;
      CHECK(lp_feasible(p, r.solution));
      Rat primal = 0;
      for (std::size_t j = 0; j < r.solution.size(); ++j) primal += p.objective[j] * r.solution[j];
      CHECK(primal == r.value);
      CHECK(lp_dual_certifies(p, r.dual, r.value));

      auto shuffled = p;
      std::shuffle(shuffled.constraints.begin(), shuffled.constraints.end(), oracle::rng());
      CHECK(lp_minimize(shuffled).value == r.value);
    }
    CHECK(solved >= 75);
  }
}
