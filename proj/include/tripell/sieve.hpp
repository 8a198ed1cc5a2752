#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tripell/arith.hpp"
#include "tripell/int.hpp"

namespace tripell::sieve {

/// Outcome of the necessary-condition test for T_n membership in a
/// D(-1)-pair: n = 2^a * p1^l1 * ... with every p == 1 (mod 4) and
/// a in {0,2}, and n+1 likewise with a in {0,1}. Necessary, not sufficient.
struct AdmissibilityResult {
  Int n;
  bool admissible = false;
  arith::Factorization n_factors;
  arith::Factorization n1_factors;  // factorization of n+1
  // Every failed rule, each naming a concrete factor; empty iff admissible.
  // Order: bad odd primes of n, of n+1, then the 2-adic exponents.
  std::vector<std::string> violations;

  /// The primary violation, absent when admissible.
  std::optional<std::string> violation() const {
    if (violations.empty()) return std::nullopt;
    return violations.front();
  }
};

struct EnumerationStep {
  Int seed;
  std::vector<Int> discovered;  // partners of the seed in (seed, bound]
};

/// Transcript of the seeded search: every processed seed with its in-range
/// discoveries, and the final sorted index set. An index belongs to the
/// result exactly when one of its certifying partners also lies within the
/// bound, so the report answers the same question as the brute-force scan.
struct EnumerationReport {
  Int bound;
  std::vector<EnumerationStep> steps;
  std::vector<Int> result;
};

AdmissibilityResult admissible(const Int& n);

/// All m with n < m <= bound such that {T_n, T_m} is a D(-1)-pair, read off
/// the merged Pell streams with y-limit 2*bound + 1 (m = (y-1)/2).
std::vector<Int> solutions_below(const Int& n, const Int& bound);

/// Seeded search from n = 1, processing seeds in increasing order until no
/// unprocessed index remains. Every index whose T is in a D(-1)-pair of
/// triangular numbers with both indices <= bound is found: each such index
/// has a strictly smaller partner, so the descent bottoms out at the seed.
EnumerationReport enumerate_pairs(const Int& bound);

/// Independent oracle: direct scan of all unordered index pairs within
/// [1, bound], no Pell machinery involved.
std::vector<Int> brute_force_pairs(const Int& bound);

}  // namespace tripell::sieve
