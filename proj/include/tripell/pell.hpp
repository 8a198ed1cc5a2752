#pragma once

#include <cstddef>
#include <vector>

#include "tripell/int.hpp"

namespace tripell::pell {

/// The generalized Pell equation x^2 - D y^2 = N attached to a triangular
/// index n and a tuple property a: D = n(n+1), N = 16a - n(n+1). Writing
/// x = 4r and y = 2m+1 makes solutions encode pairs with T_n * T_m + a = r^2.
/// The unit (2n+1, 2) generates the solutions of X^2 - D Y^2 = 1.
struct PellProblem {
  Int n;
  Int a;
  Int D;
  Int N;
  Int unit_x;
  Int unit_y;
};

/// A class representative within the Nagell bounds: x may be negative or
/// zero, y >= 0 (y = 0 only when N is a positive perfect square).
struct FundamentalSolution {
  Int x;
  Int y;

  bool operator==(const FundamentalSolution&) const = default;
};

/// One member of a class orbit, k unit-multiplications from the fundamental,
/// sign-normalized so that y >= 0.
struct Solution {
  Int x;
  Int y;
  long k;
};

struct SolutionClass {
  PellProblem problem;
  FundamentalSolution fundamental;
  int start_index;  // 0 if fundamental.x > 0, else 1
};

struct FundamentalBounds {
  Int y_bound;
  Int x_bound;
};

/// Builds the problem for (n, a). Rejects n < 1, a = 0, and the degenerate
/// case N = 0 (16a = n(n+1)) with std::domain_error.
PellProblem make_problem(const Int& n, const Int& a);

/// Largest integers satisfying the fundamental-solution inequalities,
/// computed by exact cross-multiplied comparison (no floating point).
/// For N < 0:  2(X1-1) y^2 <= Y1^2 |N|   and   2 x^2 <= (X1-1) |N|.
/// For N > 0 the companion bounds with X1+1 in place of X1-1 apply.
FundamentalBounds fundamental_bounds(const PellProblem& p);

/// Every class representative: all (x, y) with 0 <= y <= y_bound (y >= 1 for
/// N < 0) such that D y^2 + N is a perfect square x^2. Both signs of x are
/// listed; (0, y) and (x, 0) appear once. Sorted by (y, x). An empty result
/// proves the equation has no solutions at all.
std::vector<FundamentalSolution> fundamental_solutions(const PellProblem& p);

SolutionClass make_class(const PellProblem& p, const FundamentalSolution& f);

/// All orbit members with x >= 0 and 0 < y <= y_limit, in increasing y order.
/// Requires y_limit >= 1.
std::vector<Solution> positive_solutions(const SolutionClass& c, const Int& y_limit);

/// The first `count` orbit members with x >= 0 and y > 0, regardless of size.
std::vector<Solution> first_solutions(const SolutionClass& c, std::size_t count);

/// True when the class carries the x = 4r, y = 2m+1 shape: y odd. Parity is
/// constant along an orbit, so testing the fundamental decides the class
/// (odd y forces 4 | x on every member).
bool triangular_parity(const FundamentalSolution& f);

/// Union of positive_solutions y-values over all triangular-parity classes,
/// sorted and deduplicated (conjugate classes emit identical streams).
std::vector<Int> merged_y_values(const PellProblem& p, const Int& y_limit);

}  // namespace tripell::pell
