#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tripell/int.hpp"

namespace tripell::arith {

/// Complete prime factorization of a positive integer:
/// value = prod prime^exponent, primes strictly increasing, value 1 <=> empty.
struct Factorization {
  Int value;
  std::vector<std::pair<Int, unsigned>> factors;

  /// Exponent of a given prime (0 when absent).
  unsigned exponent_of(const Int& prime) const;

  /// Multiplies the entries back together; equals value by construction.
  Int recompose() const;

  /// Human-readable form, e.g. "2^2 * 37". Returns "1" for the empty product.
  std::string str() const;
};

/// Floor square root: the unique s >= 0 with s^2 <= v < (s+1)^2.
/// Throws std::domain_error for v < 0.
Int isqrt(const Int& v);

/// The root s with s^2 = v when v is a nonnegative perfect square,
/// std::nullopt otherwise (including all v < 0).
std::optional<Int> as_perfect_square(const Int& v);

/// Deterministic primality test. Miller-Rabin with the thirteen prime bases
/// 2..41 decides every v below 3.3e24; larger inputs fall back to GMP's
/// Baillie-PSW based test, which has no known pseudoprimes.
bool is_prime(const Int& v);

/// Complete factorization of v >= 1: trial division by primes below 10^6,
/// then Brent's cycle-finding variant of Pollard rho with primality
/// certification of every cofactor. Throws std::domain_error for v < 1.
Factorization factorize(const Int& v);

}  // namespace tripell::arith
