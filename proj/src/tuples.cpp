#include "tripell/tuples.hpp"

#include <algorithm>

#include "tripell/arith.hpp"

namespace tripell::tuples {

Int triangular(const Int& n) {
  if (n < 1) throw std::domain_error("triangular: index must be a positive integer");
  return n * (n + 1) / 2;
}

std::optional<Int> check_pair_values(const Int& u, const Int& v, const Int& a) {
  if (u < 1 || v < 1) throw std::domain_error("check_pair_values: values must be positive");
  if (a == 0) throw std::domain_error("check_pair_values: property a must be nonzero");
  Int t = u * v + a;
  if (t < 1) return std::nullopt;  // the root must certify a positive square
  return arith::as_perfect_square(t);
}

std::optional<PairWitness> check_pair_indices(const Int& n, const Int& m, const Int& a) {
  if (n == m) throw std::domain_error("check_pair_indices: a pair needs two distinct indices");
  auto r = check_pair_values(triangular(n), triangular(m), a);
  if (!r) return std::nullopt;
  return PairWitness{n, m, a, *r};
}

TupleReport check_tuple(std::vector<Int> indices, const Int& a) {
  if (a == 0) throw std::domain_error("check_tuple: property a must be nonzero");
  if (indices.size() < 2) throw std::domain_error("check_tuple: need at least two indices");
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
    throw std::domain_error("check_tuple: indices must be distinct");

  std::vector<Int> values;
  values.reserve(indices.size());
  for (const Int& i : indices) values.push_back(triangular(i));

  TupleReport report{std::move(indices), a, {}, true};
  for (std::size_t i = 0; i < report.indices.size(); ++i) {
    for (std::size_t j = i + 1; j < report.indices.size(); ++j) {
      auto root = check_pair_values(values[i], values[j], a);
      if (!root) report.is_valid = false;
      report.pair_results.push_back({report.indices[i], report.indices[j], std::move(root)});
    }
  }
  return report;
}

IndexSequence index_sequence(const pell::SolutionClass& c, std::size_t max_terms) {
  IndexSequence seq{c.problem.n, c.problem.a, c.fundamental, {}, {}};
  if (max_terms == 0) return seq;
  // A stream can lose at most two terms: a leading y = 1 (m = 0) and a
  // single m = n hit (m is strictly increasing).
  for (const pell::Solution& s : pell::first_solutions(c, max_terms + 2)) {
    if (seq.terms.size() >= max_terms) break;
    if (is_even(s.y))
      throw internal_error("index_sequence: even y = " + s.y.get_str() +
                           " in stream of class (x=" + c.fundamental.x.get_str() +
                           ", y=" + c.fundamental.y.get_str() + "): not a triangular-parity class");
    Int m = (s.y - 1) / 2;
    if (m < 1) {
      seq.notes.push_back("dropped k=" + std::to_string(s.k) + ": m=" + m.get_str() + " < 1");
      continue;
    }
    if (m == seq.n && s.k >= 1) {
      seq.notes.push_back("dropped k=" + std::to_string(s.k) + ": m = n (tuple elements are distinct)");
      continue;
    }
    seq.terms.push_back({std::move(m), s.k});
  }
  return seq;
}

Int closed_form_root(const Int& n, const Int& m1, const Int& m2) {
  if (n < 1 || m1 < 1 || m2 < 1)
    throw std::domain_error("closed_form_root: indices must be positive integers");
  Int numerator = 2 * m1 * m2 + m1 + m2 - n;
  if (mod_ui(numerator, 4) != 0)
    throw internal_error("closed_form_root: 2*m1*m2 + m1 + m2 - n = " + numerator.get_str() +
                         " is not divisible by 4; the indices are not consecutive class terms");
  return numerator / 4;
}

std::vector<TupleReport> build_triples(const Int& n, const Int& a, std::size_t count) {
  if (count < 1) throw std::domain_error("build_triples: count must be >= 1");
  const pell::PellProblem problem = pell::make_problem(n, a);

  struct Candidate {
    Int m1;
    Int m2;
  };
  std::vector<Candidate> candidates;
  bool have_class = false;
  for (const pell::FundamentalSolution& f : pell::fundamental_solutions(problem)) {
    if (!pell::triangular_parity(f)) continue;
    have_class = true;
    IndexSequence seq = index_sequence(pell::make_class(problem, f), count + 2);
    // Pairing starts at the second stored pair: the first term is the
    // fundamental-level partner (conjugate classes would otherwise emit a
    // shifted duplicate of the primary stream's leading pair).
    for (std::size_t i = 1; i + 1 < seq.terms.size(); ++i) {
      const IndexTerm& lo = seq.terms[i];
      const IndexTerm& hi = seq.terms[i + 1];
      if (hi.k != lo.k + 1) continue;  // a dropped term broke adjacency
      candidates.push_back({lo.m, hi.m});
    }
  }
  if (!have_class) throw no_pairs_error(n, a);

  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    return a.m1 != b.m1 ? a.m1 < b.m1 : a.m2 < b.m2;
  });
  candidates.erase(std::unique(candidates.begin(), candidates.end(),
                               [](const Candidate& a, const Candidate& b) {
                                 return a.m1 == b.m1 && a.m2 == b.m2;
                               }),
                   candidates.end());
  if (candidates.size() > count) candidates.resize(count);

  std::vector<TupleReport> out;
  out.reserve(candidates.size());
  for (const Candidate& cand : candidates) {
    Int root = closed_form_root(n, cand.m1, cand.m2);
    TupleReport report = check_tuple({n, cand.m1, cand.m2}, a);
    if (!report.is_valid)
      throw internal_error("build_triples: constructed triple {" + n.get_str() + ", " +
                           cand.m1.get_str() + ", " + cand.m2.get_str() +
                           "} failed pairwise verification");
    for (const PairResult& pr : report.pair_results) {
      bool is_mk_pair = (pr.i == cand.m1 && pr.j == cand.m2) || (pr.i == cand.m2 && pr.j == cand.m1);
      if (is_mk_pair && *pr.root != root)
        throw internal_error("build_triples: closed-form root " + root.get_str() +
                             " disagrees with verified root " + pr.root->get_str());
    }
    out.push_back(std::move(report));
  }
  return out;
}

}  // namespace tripell::tuples
