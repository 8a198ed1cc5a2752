#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tripell/int.hpp"
#include "tripell/pell.hpp"

namespace tripell::tuples {

/// Certificate that {T_n, T_m} is a D(a)-pair: T_n * T_m + a = r^2, r >= 1.
struct PairWitness {
  Int n;
  Int m;
  Int a;
  Int r;
};

/// One retained index of a class sequence; k is the orbit position.
struct IndexTerm {
  Int m;
  long k;
};

/// The indices m_k = (y_k - 1)/2 read off one solution class, so that
/// {T_n, T_{m_k}} is a D(a)-pair for every retained k >= 1. Consecutive
/// stored terms with adjacent k obey m_{k+2} = 2(2n+1) m_{k+1} - m_k + 2n.
struct IndexSequence {
  Int n;
  Int a;
  pell::FundamentalSolution class_origin;
  std::vector<IndexTerm> terms;
  std::vector<std::string> notes;  // one entry per dropped term
};

struct PairResult {
  Int i;
  Int j;
  std::optional<Int> root;
};

/// Pairwise verification of a candidate tuple; is_valid iff every unordered
/// pair of distinct elements certified.
struct TupleReport {
  std::vector<Int> indices;  // sorted, distinct
  Int a;
  std::vector<PairResult> pair_results;  // all unordered pairs, lexicographic
  bool is_valid = false;
};

/// Thrown by build_triples when the problem has no solution classes at all.
class no_pairs_error : public std::runtime_error {
 public:
  no_pairs_error(const Int& n, const Int& a)
      : std::runtime_error("no pairs exist: T_" + n.get_str() +
                           " is not a member of any D(" + a.get_str() +
                           ")-pair of triangular numbers") {}
};

/// T_n = n(n+1)/2 for n >= 1.
Int triangular(const Int& n);

/// Root r >= 1 with u*v + a = r^2 when that value is a positive perfect
/// square; applies to arbitrary positive values, not only triangular ones.
std::optional<Int> check_pair_values(const Int& u, const Int& v, const Int& a);

/// Witness for {T_n, T_m} as a D(a)-pair; requires n != m.
std::optional<PairWitness> check_pair_indices(const Int& n, const Int& m, const Int& a);

/// Full pairwise report over at least two distinct indices.
TupleReport check_tuple(std::vector<Int> indices, const Int& a);

/// Index sequence of a triangular-parity class, at most max_terms entries.
/// The k=0 term is kept when the fundamental has x >= 0 and m_0 >= 1 (for
/// x < 0 it never appears in the positive stream); terms with m < 1, and
/// any later term with m = n, are dropped with a note.
IndexSequence index_sequence(const pell::SolutionClass& c, std::size_t max_terms);

/// r = (2 m1 m2 + m1 + m2 - n) / 4 for consecutive retained indices of one
/// class; divisibility by 4 is guaranteed there, so failure of the exact
/// division throws internal_error. Satisfies T_{m1} T_{m2} + a = r^2.
Int closed_form_root(const Int& n, const Int& m1, const Int& m2);

/// The first `count` triples {n, m_k, m_{k+1}} (k >= 1), drawn from every
/// triangular-parity class, deduplicated, ordered by smallest member, each
/// verified pairwise and cross-checked against the closed-form root.
/// Throws no_pairs_error when no class exists.
std::vector<TupleReport> build_triples(const Int& n, const Int& a, std::size_t count);

}  // namespace tripell::tuples
