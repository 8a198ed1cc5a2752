#include "tripell/arith.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

namespace tripell::arith {

namespace {

constexpr uint32_t kTrialBound = 1'000'000;

const std::vector<uint32_t>& small_primes() {
  static const std::vector<uint32_t> primes = [] {
    std::vector<bool> composite(kTrialBound + 1, false);
    std::vector<uint32_t> out;
    for (uint32_t i = 2; i <= kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (uint64_t j = uint64_t(i) * i; j <= kTrialBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

template <std::size_t M>
std::array<bool, M> square_residues() {
  std::array<bool, M> table{};
  for (std::size_t i = 0; i < M; ++i) table[(i * i) % M] = true;
  return table;
}

// x = base^d mod v, then squared up to s-1 times; true when base proves v composite.
bool is_composite_witness(const Int& v, unsigned long base, const Int& d, unsigned s) {
  Int x;
  Int b(base);
  mpz_powm(x.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t(), v.get_mpz_t());
  Int vm1 = v - 1;
  if (x == 1 || x == vm1) return false;
  for (unsigned i = 1; i < s; ++i) {
    x = (x * x) % v;
    if (x == vm1) return false;
  }
  return true;
}

// First thirteen primes decide primality below this bound (Sorenson/Webster).
const Int& miller_rabin_deterministic_bound() {
  static const Int bound("3317044064679887385961981");
  return bound;
}

constexpr unsigned long kWitnessBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// Brent's variant of Pollard rho. n must be odd, composite and > 1.
// Deterministic: polynomial offsets c = 1, 2, ... are tried in order.
Int pollard_rho_brent(const Int& n) {
  const long block = 128;
  for (unsigned long c = 1;; ++c) {
    Int y(2), q(1), g(1), x, ys;
    long r = 1;
    while (g == 1) {
      x = y;
      for (long i = 0; i < r; ++i) y = (y * y + c) % n;
      for (long k = 0; k < r && g == 1; k += block) {
        ys = y;
        const long steps = std::min(block, r - k);
        for (long i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      r *= 2;
    }
    if (g == n) {
      // The gcd batch overshot a factor; retrace one step at a time.
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        Int diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g != n) return g;  // else the whole cycle collapsed; retry with next c
  }
}

}  // namespace

unsigned Factorization::exponent_of(const Int& prime) const {
  for (const auto& [p, e] : factors)
    if (p == prime) return e;
  return 0;
}

Int Factorization::recompose() const {
  Int product(1);
  for (const auto& [p, e] : factors) {
    Int power;
    mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), e);
    product *= power;
  }
  return product;
}

std::string Factorization::str() const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : factors) {
    if (!out.empty()) out += " * ";
    out += p.get_str();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

Int isqrt(const Int& v) {
  if (v < 0) throw std::domain_error("isqrt: input must be nonnegative");
  if (v == 0) return 0;
  // Newton iteration from an over-estimate, then a monotone correction step.
  const std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
  Int x = Int(1) << ((bits + 1) / 2);
  for (;;) {
    Int next = (x + v / x) >> 1;
    if (next >= x) break;
    x = next;
  }
  while (x * x > v) --x;
  while ((x + 1) * (x + 1) <= v) ++x;
  return x;
}

std::optional<Int> as_perfect_square(const Int& v) {
  if (v < 0) return std::nullopt;
  // Quadratic-residue rejection modulo 64 and 63 before paying for a root.
  static const auto mod64 = square_residues<64>();
  static const auto mod63 = square_residues<63>();
  if (!mod64[mod_ui(v, 64)]) return std::nullopt;
  if (!mod63[mod_ui(v, 63)]) return std::nullopt;
  Int root = isqrt(v);
  if (root * root == v) return root;
  return std::nullopt;
}

bool is_prime(const Int& v) {
  if (v < 2) return false;
  for (unsigned long p : kWitnessBases) {
    if (v == p) return true;
    if (mpz_divisible_ui_p(v.get_mpz_t(), p)) return false;
  }
  Int d = v - 1;
  unsigned s = 0;
  while (is_even(d)) {
    d >>= 1;
    ++s;
  }
  if (v < miller_rabin_deterministic_bound()) {
    for (unsigned long base : kWitnessBases)
      if (is_composite_witness(v, base, d, s)) return false;
    return true;
  }
  return mpz_probab_prime_p(v.get_mpz_t(), 32) > 0;
}

Factorization factorize(const Int& v) {
  if (v < 1) throw std::domain_error("factorize: input must be >= 1");
  Factorization result;
  result.value = v;
  if (v == 1) return result;

  Int rest = v;
  for (uint32_t p : small_primes()) {
    if (mpz_cmp_ui(rest.get_mpz_t(), 1) == 0) break;
    if (mpz_cmp_ui(rest.get_mpz_t(), uint64_t(p) * p) < 0) break;  // rest is prime
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
    unsigned e = 0;
    do {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    } while (mpz_divisible_ui_p(rest.get_mpz_t(), p));
    result.factors.emplace_back(Int(p), e);
  }

  if (rest > 1) {
    std::vector<Int> pending{rest};
    std::vector<Int> primes;
    while (!pending.empty()) {
      Int t = pending.back();
      pending.pop_back();
      if (is_prime(t)) {
        primes.push_back(t);
        continue;
      }
      Int f = pollard_rho_brent(t);
      pending.push_back(f);
      pending.push_back(t / f);
    }
    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 0; i < primes.size();) {
      std::size_t j = i;
      while (j < primes.size() && primes[j] == primes[i]) ++j;
      result.factors.emplace_back(primes[i], unsigned(j - i));
      i = j;
    }
  }

  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return result;
}

}  // namespace tripell::arith
