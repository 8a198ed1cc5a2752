#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tripell {

/// Arbitrary-precision signed integer; all arithmetic in this library is exact.
using Int = mpz_class;

// Thrown when a proven identity fails at runtime. This always signals a broken
// precondition or an implementation bug, never bad user input.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline bool is_odd(const Int& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }
inline bool is_even(const Int& v) { return mpz_even_p(v.get_mpz_t()) != 0; }

/// Nonnegative remainder of v modulo a small positive modulus.
inline unsigned long mod_ui(const Int& v, unsigned long m) {
  return mpz_fdiv_ui(v.get_mpz_t(), m);
}

}  // namespace tripell
