#include "tripell/sieve.hpp"

#include <set>

#include "tripell/pell.hpp"
#include "tripell/tuples.hpp"

namespace tripell::sieve {

AdmissibilityResult admissible(const Int& n) {
  if (n < 1) throw std::domain_error("admissible: index must be a positive integer");
  AdmissibilityResult res;
  res.n = n;
  res.n_factors = arith::factorize(n);
  res.n1_factors = arith::factorize(n + 1);

  auto scan_odd_primes = [&res](const arith::Factorization& f, const std::string& name) {
    for (const auto& [p, e] : f.factors) {
      if (p == 2) continue;
      if (mod_ui(p, 4) != 1)
        res.violations.push_back(name + " has prime factor " + p.get_str() + " = 3 (mod 4)");
    }
  };
  scan_odd_primes(res.n_factors, "n");
  scan_odd_primes(res.n1_factors, "n+1");

  unsigned two_n = res.n_factors.exponent_of(2);
  if (two_n != 0 && two_n != 2)
    res.violations.push_back("n has 2-adic exponent " + std::to_string(two_n) +
                             " (allowed: 0 or 2)");
  unsigned two_n1 = res.n1_factors.exponent_of(2);
  if (two_n1 > 1)
    res.violations.push_back("n+1 has 2-adic exponent " + std::to_string(two_n1) +
                             " (allowed: 0 or 1)");

  res.admissible = res.violations.empty();
  return res;
}

std::vector<Int> solutions_below(const Int& n, const Int& bound) {
  if (bound < 1) throw std::domain_error("solutions_below: bound must be >= 1");
  const pell::PellProblem p = pell::make_problem(n, -1);
  std::vector<Int> out;
  for (const Int& y : pell::merged_y_values(p, 2 * bound + 1)) {
    Int m = (y - 1) / 2;
    if (m > n) out.push_back(std::move(m));  // partners in (n, bound], as seeded search needs
  }
  return out;
}

EnumerationReport enumerate_pairs(const Int& bound) {
  if (bound < 1) throw std::domain_error("enumerate_pairs: bound must be >= 1");
  EnumerationReport report;
  report.bound = bound;

  std::set<Int> pending{Int(1)};
  std::set<Int> enqueued{Int(1)};
  std::set<Int> members;
  while (!pending.empty()) {
    Int seed = *pending.begin();
    pending.erase(pending.begin());
    std::vector<Int> found = solutions_below(seed, bound);
    if (!found.empty()) members.insert(seed);  // certified by an in-bound edge
    for (const Int& m : found) {
      members.insert(m);
      if (enqueued.insert(m).second) pending.insert(m);
    }
    report.steps.push_back({std::move(seed), std::move(found)});
  }
  report.result.assign(members.begin(), members.end());
  return report;
}

std::vector<Int> brute_force_pairs(const Int& bound) {
  if (bound < 1) throw std::domain_error("brute_force_pairs: bound must be >= 1");
  if (!bound.fits_ulong_p())
    throw std::domain_error("brute_force_pairs: bound too large for an exhaustive scan");
  const unsigned long c = bound.get_ui();

  std::vector<Int> tri(c + 1);
  for (unsigned long i = 1; i <= c; ++i) tri[i] = tuples::triangular(Int(i));

  std::vector<bool> member(c + 1, false);
  for (unsigned long n = 1; n <= c; ++n) {
    for (unsigned long m = n + 1; m <= c; ++m) {
      if (tuples::check_pair_values(tri[n], tri[m], -1)) {
        member[n] = true;
        member[m] = true;
      }
    }
  }
  std::vector<Int> out;
  for (unsigned long i = 1; i <= c; ++i)
    if (member[i]) out.emplace_back(i);
  return out;
}

}  // namespace tripell::sieve
