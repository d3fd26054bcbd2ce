#pragma once

#include <utility>
#include <vector>

#include "shortint/budget.hpp"

namespace shortint {

// Moduli are capped at 2^62 so a*b mod m is exact through one 128-bit product.
inline constexpr u64 kModulusCap = u64(1) << 62;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(u128(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m);
u64 invmod(u64 a, u64 m);  // m prime, a != 0 mod m

// Deterministic strong-pseudoprime test, valid for all n < 2^62.
bool is_prime(u64 n);

std::vector<u64> sieve_primes(u64 limit, const Budget& budget = {});

struct Factorization {
  u64 n = 1;
  std::vector<std::pair<u64, int>> factors;  // (prime, exponent), primes ascending

  u64 value() const;    // recombined product
  u64 totient() const;  // Euler phi(n)
  u64 tau() const;      // divisor count
  std::vector<u64> divisors() const;  // all divisors, ascending
};

// Trial division below 10^6, then Brent's cycle finding. Failing to split a
// composite within the iteration budget is a hard error, never a silent
// composite-as-prime.
Factorization factorize(u64 n, const Budget& budget = {});

struct PrimeContext {
  u64 p;
  Factorization p_minus_1;

  static PrimeContext make(u64 p, const Budget& budget = {});
};

// Least d >= 1 with a^d = 1 mod p, by dividing prime factors out of p-1.
u64 mult_order(u64 a, const PrimeContext& ctx);

// Exact count of primes q <= y with q = 1 mod modulus.
u64 pi_progression(double y, u64 modulus, const Budget& budget = {});
u64 pi_progression(const std::vector<u64>& primes, double y, u64 modulus);

// Smallest-prime-factor table; batch factorization for census sweeps.
class SmallFactorSieve {
 public:
  explicit SmallFactorSieve(u64 limit, const Budget& budget = {});
  u64 limit() const { return limit_; }
  Factorization factorize(u64 n) const;

 private:
  u64 limit_;
  std::vector<std::uint32_t> spf_;
};

// phi(1..limit) filled by sieve; the N(h) fast path keys on this.
std::vector<std::uint32_t> totient_table(u64 limit, const Budget& budget = {});

}  // namespace shortint
