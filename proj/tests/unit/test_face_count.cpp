#include "oracles.hpp"

#include "simplotope/face_count.hpp"

#include <doctest.h>

using namespace simplotope;

TEST_SUITE("face_count") {
  TEST_CASE("worked values") {
    CHECK(q_count({0, 2, 2, 0}) == 9);
    CHECK(q_count({3, 0, 2, 0}) == 6);
    CHECK(q_count({1, 1, 1, 1}) == 1);
    CHECK(q_by_generating_function({1, 1, 2, 0}) == 3);
    CHECK(q_by_enumeration({2, 0, 1, 0}) == 4);
    CHECK(q_by_enumeration({0, 1, 1, 0}) == 3);
    CHECK(q_count({0, 0, 0, 0}) == 1);
  }

  TEST_CASE("cube faces") {
    for (int s = 0; s <= 8; ++s)
      for (int sp = 0; sp <= s; ++sp) CHECK(q_count({s, 0, sp, 0}) == power(2, s - sp) * binomial(s, sp));
  }

  TEST_CASE("vertex count") {
    for (int s = 0; s <= 5; ++s)
      for (int t = 0; t <= 5; ++t) CHECK(q_by_generating_function({s, t, 0, 0}) == power(2, s) * power(3, t));
  }

  TEST_CASE("out of range queries vanish") {
    CHECK(q_count({2, 1, 0, 2}) == 0);
    CHECK(q_count({2, 1, 4, 0}) == 0);
    CHECK(q_count({1, 1, -1, 0}) == 0);
    CHECK(q_by_generating_function({1, 1, 3, 0}) == 0);
  }

  TEST_CASE("closed form, generating function and the independent count agree") {
    for (int s = 0; s <= 6; ++s)
      for (int t = 0; t <= 6; ++t)
        for (int tp = 0; tp <= t + 1; ++tp)
          for (int sp = 0; sp <= s + t + 1; ++sp) {
            Int q = q_count({s, t, sp, tp});
            CHECK(q == q_by_generating_function({s, t, sp, tp}));
            CHECK(q == oracle::q_brute(s, t, sp, tp));
          }
  }

  TEST_CASE("enumeration agrees for s, t <= 3") {
    for (int s = 0; s <= 3; ++s)
      for (int t = 0; t <= 3; ++t) {
        auto h = face_histogram(s, t);
        for (int tp = 0; tp <= t; ++tp)
          for (int sp = 0; sp <= s + t; ++sp) {
            auto it = h.find({sp, tp});
            Int n = it == h.end() ? Int(0) : it->second;
            CHECK(n == q_count({s, t, sp, tp}));
          }
      }
  }

  TEST_CASE("enumeration guard") {
    CHECK(q_enumeration_feasible(4, 4));
    CHECK_FALSE(q_enumeration_feasible(10, 6));
    CHECK_THROWS_AS(q_by_enumeration({10, 6, 0, 0}), std::invalid_argument);
  }
}
