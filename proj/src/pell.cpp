#include "tripell/pell.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>

#include "tripell/arith.hpp"

namespace tripell::pell {

namespace {

// One unit-multiplication step: (x + y sqrt(D)) * (X1 + Y1 sqrt(D)).
void advance(const PellProblem& p, Int& x, Int& y) {
  Int nx = p.unit_x * x + p.D * p.unit_y * y;
  Int ny = p.unit_x * y + p.unit_y * x;
  x = std::move(nx);
  y = std::move(ny);
}

// Walks the unit orbit of the fundamental and collects sign-normalized
// members with x >= 0 and y > 0, bounded either by y_limit or by count.
//
// Solutions come in pairs (x, y) ~ (-x, -y); orbits whose tail turns negative
// in both coordinates (possible for N > 0) are therefore read through the
// reflection, which is itself a unit orbit. A mixed-sign member never
// qualifies, and the qualifying states x >= 0, y > 0 and x <= 0, y < 0 are
// absorbing, so consecutive collected members are always consecutive
// same-orientation orbit members: the two-term identities stay valid.
//
// |y_k| is eventually strictly increasing (single dip at most), so stopping
// at the first k >= 1 with |y_k| >= |y_{k-1}| and |y_k| > y_limit is
// complete; in count mode every orbit qualifies infinitely often.
std::vector<Solution> collect(const SolutionClass& c, const std::optional<Int>& y_limit,
                              std::size_t count) {
  std::vector<Solution> out;
  if (count == 0) return out;
  const PellProblem& p = c.problem;
  Int x = c.fundamental.x;
  Int y = c.fundamental.y;
  Int prev_abs_y(-1);
  for (long k = 0;; ++k) {
    Int abs_y = abs(y);
    bool in_limit = !y_limit || abs_y <= *y_limit;
    if (abs_y > 0 && in_limit) {
      Int cx = y < 0 ? Int(-x) : x;
      if (cx >= 0) {
        out.push_back({std::move(cx), abs_y, k});
        if (out.size() >= count) break;
      }
    }
    if (y_limit && k > 0 && abs_y >= prev_abs_y && abs_y > *y_limit) break;
    prev_abs_y = std::move(abs_y);
    advance(p, x, y);
  }
  return out;
}

}  // namespace

PellProblem make_problem(const Int& n, const Int& a) {
  if (n < 1) throw std::domain_error("pell: index n must be a positive integer");
  if (a == 0) throw std::domain_error("pell: property a must be a nonzero integer");
  PellProblem p;
  p.n = n;
  p.a = a;
  p.D = n * (n + 1);
  p.N = 16 * a - p.D;
  if (p.N == 0)
    throw std::domain_error("pell: degenerate property: 16a = n(n+1) for n=" + n.get_str() +
                            ", a=" + a.get_str());
  p.unit_x = 2 * n + 1;
  p.unit_y = 2;
  return p;
}

FundamentalBounds fundamental_bounds(const PellProblem& p) {
  const Int abs_n = abs(p.N);
  // y^2 <= Y1^2 |N| / (2(X1 -+ 1)) and x^2 <= (X1 -+ 1) |N| / 2 as exact
  // rational inequalities; an integer square obeys them iff it is bounded by
  // the floor, so floor division before the root is lossless.
  const Int shift = p.N < 0 ? Int(p.unit_x - 1) : Int(p.unit_x + 1);
  FundamentalBounds b;
  b.y_bound = arith::isqrt(p.unit_y * p.unit_y * abs_n / (2 * shift));
  b.x_bound = arith::isqrt(shift * abs_n / 2);
  return b;
}

std::vector<FundamentalSolution> fundamental_solutions(const PellProblem& p) {
  const FundamentalBounds bounds = fundamental_bounds(p);
  std::vector<FundamentalSolution> out;
  for (Int y = p.N > 0 ? 0 : 1; y <= bounds.y_bound; ++y) {
    Int rhs = p.D * y * y + p.N;
    if (rhs < 0) continue;
    auto x = arith::as_perfect_square(rhs);
    if (!x) continue;
    if (*x == 0 || y == 0) {
      out.push_back({*x, y});
    } else {
      out.push_back({-*x, y});
      out.push_back({*x, y});
    }
  }
  std::sort(out.begin(), out.end(), [](const FundamentalSolution& a, const FundamentalSolution& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  });
  return out;
}

SolutionClass make_class(const PellProblem& p, const FundamentalSolution& f) {
  return {p, f, f.x > 0 ? 0 : 1};
}

std::vector<Solution> positive_solutions(const SolutionClass& c, const Int& y_limit) {
  if (y_limit < 1) throw std::domain_error("pell: y limit must be >= 1");
  return collect(c, y_limit, std::numeric_limits<std::size_t>::max());
}

std::vector<Solution> first_solutions(const SolutionClass& c, std::size_t count) {
  return collect(c, std::nullopt, count);
}

bool triangular_parity(const FundamentalSolution& f) { return is_odd(f.y); }

std::vector<Int> merged_y_values(const PellProblem& p, const Int& y_limit) {
  std::set<Int> values;
  for (const FundamentalSolution& f : fundamental_solutions(p)) {
    if (!triangular_parity(f)) continue;
    for (const Solution& s : positive_solutions(make_class(p, f), y_limit)) {
      if (mod_ui(s.x, 4) != 0)
        throw internal_error("pell: odd-y solution with x not divisible by 4 (x=" + s.x.get_str() +
                             ", y=" + s.y.get_str() + ")");
      values.insert(s.y);
    }
  }
  return {values.begin(), values.end()};
}

}  // namespace tripell::pell
