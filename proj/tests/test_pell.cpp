#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <vector>

#include "tripell/arith.hpp"
#include "tripell/pell.hpp"

using tripell::Int;
using tripell::internal_error;
namespace arith = tripell::arith;
namespace pell = tripell::pell;

namespace {

// Independent oracle for merged_y_values: scan every odd y up to the limit
// and keep those with D y^2 + N a perfect square whose root is a multiple
// of 4 (the x = 4r, y = 2m+1 shape).
std::vector<Int> sweep_valid_y(const pell::PellProblem& p, long limit) {
  std::vector<Int> out;
  for (long y = 1; y <= limit; y += 2) {
    Int rhs = p.D * y * y + p.N;
    if (rhs < 0) continue;
    auto x = arith::as_perfect_square(rhs);
    if (x && tripell::mod_ui(*x, 4) == 0) out.emplace_back(y);
  }
  return out;
}

// Largest value passing a squared inequality, found by plain upward scan.
Int scan_bound(const std::function<bool(const Int&)>& holds) {
  Int v = 0;
  while (holds(v + 1)) ++v;
  return v;
}

}  // namespace

TEST_CASE("make_problem fills D, N and the unit") {
  auto p = pell::make_problem(1, -1);
  CHECK(p.D == 2);
  CHECK(p.N == -18);
  CHECK(p.unit_x == 3);
  CHECK(p.unit_y == 2);

  auto q = pell::make_problem(100, -1);
  CHECK(q.D == 10100);
  CHECK(q.N == -10116);
  CHECK(q.unit_x == 201);
  CHECK(q.unit_y == 2);

  auto r = pell::make_problem(4, -1);
  CHECK(r.D == 20);
  CHECK(r.N == -36);
  CHECK(r.unit_x == 9);
}

TEST_CASE("make_problem rejects bad input") {
  CHECK_THROWS_AS(pell::make_problem(0, -1), std::domain_error);
  CHECK_THROWS_AS(pell::make_problem(-3, -1), std::domain_error);
  CHECK_THROWS_AS(pell::make_problem(5, 0), std::domain_error);
  // 16 * 62 = 31 * 32: N collapses to zero
  CHECK_THROWS_AS(pell::make_problem(31, 62), std::domain_error);
}

TEST_CASE("the unit solves X^2 - D Y^2 = 1 for every index") {
  for (long n = 1; n <= 200; ++n) {
    auto p = pell::make_problem(n, -1);
    CHECK(p.unit_x * p.unit_x - p.D * p.unit_y * p.unit_y == 1);
    // n(n+1) sits strictly between n^2 and (n+1)^2
    CHECK(!arith::as_perfect_square(p.D).has_value());
  }
}

TEST_CASE("fundamental_bounds matches the documented values") {
  auto b100 = pell::fundamental_bounds(pell::make_problem(100, -1));
  CHECK(b100.y_bound == 10);
  CHECK(b100.x_bound == 1005);

  auto b1 = pell::fundamental_bounds(pell::make_problem(1, -1));
  CHECK(b1.y_bound == 4);
  CHECK(b1.x_bound == 4);

  auto b4 = pell::fundamental_bounds(pell::make_problem(4, -1));
  CHECK(b4.y_bound == 3);
  CHECK(b4.x_bound == 12);
}

TEST_CASE("fundamental_bounds agrees with a direct inequality scan") {
  for (long n : {1L, 2L, 3L, 4L, 7L, 25L, 100L}) {
    for (long a : {-2L, -1L, 1L, 3L}) {
      if (16 * a == n * (n + 1)) continue;
      auto p = pell::make_problem(n, a);
      auto b = pell::fundamental_bounds(p);
      Int abs_n = abs(p.N);
      Int shift = p.N < 0 ? Int(p.unit_x - 1) : Int(p.unit_x + 1);
      CHECK(b.y_bound == scan_bound([&](const Int& y) {
              return 2 * shift * y * y <= p.unit_y * p.unit_y * abs_n;
            }));
      CHECK(b.x_bound == scan_bound([&](const Int& x) { return 2 * x * x <= shift * abs_n; }));
    }
  }
}

TEST_CASE("fundamental_solutions for the documented problems") {
  auto f1 = pell::fundamental_solutions(pell::make_problem(1, -1));
  REQUIRE(f1.size() == 1);
  CHECK(f1[0].x == 0);
  CHECK(f1[0].y == 3);

  CHECK(pell::fundamental_solutions(pell::make_problem(100, -1)).empty());

  auto f4 = pell::fundamental_solutions(pell::make_problem(4, -1));
  REQUIRE(f4.size() == 2);
  CHECK(f4[0].x == -12);
  CHECK(f4[0].y == 3);
  CHECK(f4[1].x == 12);
  CHECK(f4[1].y == 3);
}

TEST_CASE("every fundamental solution satisfies the equation") {
  for (long n = 1; n <= 60; ++n) {
    for (long a : {-2L, -1L, 1L, 2L, 4L}) {
      if (16 * a == n * (n + 1)) continue;
      auto p = pell::make_problem(n, a);
      auto b = pell::fundamental_bounds(p);
      for (const auto& f : pell::fundamental_solutions(p)) {
        CHECK(f.x * f.x - p.D * f.y * f.y == p.N);
        CHECK(f.y >= 0);
        CHECK(f.y <= b.y_bound);
        CHECK(abs(f.x) <= b.x_bound);
      }
    }
  }
}

TEST_CASE("positive_solutions streams the documented orbits") {
  auto p1 = pell::make_problem(1, -1);
  auto c1 = pell::make_class(p1, {0, 3});
  CHECK(c1.start_index == 1);  // x* = 0 is not strictly positive
  auto s1 = pell::positive_solutions(c1, 2000);
  REQUIRE(s1.size() == 5);
  std::vector<long> expected_y{3, 9, 51, 297, 1731};
  for (std::size_t i = 0; i < s1.size(); ++i) CHECK(s1[i].y == expected_y[i]);

  auto p4 = pell::make_problem(4, -1);
  auto c4 = pell::make_class(p4, {12, 3});
  CHECK(c4.start_index == 0);
  auto s4 = pell::positive_solutions(c4, 1000);
  REQUIRE(s4.size() == 3);
  CHECK(s4[0].x == 12);
  CHECK(s4[0].y == 3);
  CHECK(s4[1].x == 228);
  CHECK(s4[1].y == 51);
  CHECK(s4[2].x == 4092);
  CHECK(s4[2].y == 915);
}

TEST_CASE("positive_solutions rejects a limit below 1") {
  auto p = pell::make_problem(1, -1);
  auto c = pell::make_class(p, {0, 3});
  CHECK_THROWS_AS(pell::positive_solutions(c, 0), std::domain_error);
  CHECK_THROWS_AS(pell::positive_solutions(c, -5), std::domain_error);
}

TEST_CASE("streamed solutions satisfy the equation with strictly increasing y") {
  for (long n : {1L, 2L, 3L, 4L, 5L, 25L, 148L}) {
    for (long a : {-2L, -1L, 1L, 4L}) {
      if (16 * a == n * (n + 1)) continue;
      auto p = pell::make_problem(n, a);
      for (const auto& f : pell::fundamental_solutions(p)) {
        auto stream = pell::first_solutions(pell::make_class(p, f), 8);
        REQUIRE(stream.size() == 8);
        for (std::size_t i = 0; i < stream.size(); ++i) {
          const auto& s = stream[i];
          CHECK(s.x >= 0);
          CHECK(s.y > 0);
          CHECK(s.x * s.x - p.D * s.y * s.y == p.N);
          if (i > 0) {
            CHECK(s.y > stream[i - 1].y);
            // two-term identity across consecutive stream members
            if (stream[i - 1].k + 1 == s.k) {
              const Int& y0 = stream[i - 1].y;
              const Int& y1 = s.y;
              CHECK(y1 * y1 - 2 * p.unit_x * y0 * y1 + y0 * y0 == 4 * p.N);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("first_solutions is a prefix of positive_solutions") {
  auto p = pell::make_problem(4, -1);
  auto c = pell::make_class(p, {-12, 3});
  auto all = pell::positive_solutions(c, Int("100000000"));
  auto head = pell::first_solutions(c, 3);
  REQUIRE(head.size() == 3);
  REQUIRE(all.size() >= 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(head[i].x == all[i].x);
    CHECK(head[i].y == all[i].y);
    CHECK(head[i].k == all[i].k);
  }
}

TEST_CASE("merged_y_values matches the documented lists") {
  auto m4 = pell::merged_y_values(pell::make_problem(4, -1), 1000);
  CHECK(m4 == std::vector<Int>{3, 51, 915});

  auto m1 = pell::merged_y_values(pell::make_problem(1, -1), 1000);
  CHECK(m1 == std::vector<Int>{3, 9, 51, 297});

  CHECK(pell::merged_y_values(pell::make_problem(2, -1), 1000).empty());
}

TEST_CASE("merged_y_values equals the brute-force sweep for n <= 50") {
  for (long n = 1; n <= 50; ++n) {
    auto p = pell::make_problem(n, -1);
    CHECK(pell::merged_y_values(p, 10000) == sweep_valid_y(p, 10000));
  }
}

TEST_CASE("merged_y_values equals the brute-force sweep for general properties") {
  for (long n = 1; n <= 20; ++n) {
    for (long a : {-3L, -2L, 1L, 2L, 3L, 4L}) {
      if (16 * a == n * (n + 1)) continue;
      auto p = pell::make_problem(n, a);
      CHECK(pell::merged_y_values(p, 1000) == sweep_valid_y(p, 1000));
    }
  }
}

TEST_CASE("parity classes for a = -1 cover every class") {
  // y odd and 4 | x on all solutions: no class may be dropped by the filter
  for (long n = 1; n <= 50; ++n) {
    auto p = pell::make_problem(n, -1);
    for (const auto& f : pell::fundamental_solutions(p)) {
      CHECK(pell::triangular_parity(f));
      for (const auto& s : pell::first_solutions(pell::make_class(p, f), 6)) {
        CHECK(tripell::is_odd(s.y));
        CHECK(s.y >= 3);
        CHECK(tripell::mod_ui(s.x, 4) == 0);
      }
    }
  }
}

TEST_CASE("bound stays below the index for n >= 4") {
  for (long n = 4; n <= 300; ++n) {
    auto b = pell::fundamental_bounds(pell::make_problem(n, -1));
    CHECK(b.y_bound < n);
  }
}

TEST_CASE("positive N: companion bounds and reflected orbits") {
  // n=3, a=4: N = 52 > 0; classes (+-8, 1) carry the triangular parity,
  // (+-10, 2) do not.
  auto p = pell::make_problem(3, 4);
  REQUIRE(p.N == 52);
  auto fs = pell::fundamental_solutions(p);
  REQUIRE(fs.size() == 4);
  CHECK(fs[0].x == -8);
  CHECK(fs[0].y == 1);
  CHECK(fs[1].x == 8);
  CHECK(fs[1].y == 1);
  CHECK(fs[2].x == -10);
  CHECK(fs[2].y == 2);
  CHECK(fs[3].x == 10);
  CHECK(fs[3].y == 2);
  CHECK(pell::triangular_parity(fs[0]));
  CHECK(!pell::triangular_parity(fs[2]));

  // the (-8, 1) orbit turns negative in both coordinates; its reflection
  // must surface (32, 9) and (440, 127)
  auto stream = pell::first_solutions(pell::make_class(p, fs[0]), 2);
  REQUIRE(stream.size() == 2);
  CHECK(stream[0].x == 32);
  CHECK(stream[0].y == 9);
  CHECK(stream[1].x == 440);
  CHECK(stream[1].y == 127);
}

TEST_CASE("positive N: a perfect square N admits the y = 0 representative") {
  // n=3, a=1: N = 4 = 2^2
  auto p = pell::make_problem(3, 1);
  auto fs = pell::fundamental_solutions(p);
  REQUIRE(fs.size() == 3);
  CHECK(fs[0].x == 2);
  CHECK(fs[0].y == 0);
  CHECK(fs[1].x == -4);
  CHECK(fs[1].y == 1);
  CHECK(fs[2].x == 4);
  CHECK(fs[2].y == 1);
  CHECK(!pell::triangular_parity(fs[0]));  // even y: no triangular pair shape
  // merged values for the parity classes: y = 1 and y = 15
  CHECK(pell::merged_y_values(p, 100) == std::vector<Int>{1, 15});
}
