#include "shortint/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace shortint {

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 m) {
  a %= m;
  require(a != 0, "invmod: zero is not invertible");
  return powmod(a, m - 2, m);  // m prime
}

bool is_prime(u64 n) {
  check_budget(n < kModulusCap, "is_prime: operand exceeds 62-bit cap");
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This base set is a proven witness set for every n < 3.3*10^24.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<u64> sieve_primes(u64 limit, const Budget& budget) {
  require(limit >= 2, "sieve_primes: limit must be >= 2");
  check_budget(limit <= budget.sieve_limit, "sieve_primes: limit exceeds sieve cap");
  // odd-only table: bit i represents 2i+3
  u64 half = (limit - 1) / 2;  // count of odd numbers 3..limit
  std::vector<bool> composite(half, false);
  for (u64 i = 0;; ++i) {
    u64 p = 2 * i + 3;
    if (p * p > limit) break;
    if (composite[i]) continue;
    for (u64 j = (p * p - 3) / 2; j < half; j += p) composite[j] = true;
  }
  std::vector<u64> primes;
  primes.push_back(2);
  for (u64 i = 0; i < half; ++i)
    if (!composite[i]) primes.push_back(2 * i + 3);
  return primes;
}

u64 Factorization::value() const {
  u64 v = 1;
  for (auto [p, e] : factors)
    for (int i = 0; i < e; ++i) v *= p;
  return v;
}

u64 Factorization::totient() const {
  u64 v = 1;
  for (auto [p, e] : factors) {
    v *= p - 1;
    for (int i = 1; i < e; ++i) v *= p;
  }
  return v;
}

u64 Factorization::tau() const {
  u64 v = 1;
  for (auto [p, e] : factors) v *= u64(e) + 1;
  return v;
}

std::vector<u64> Factorization::divisors() const {
  std::vector<u64> divs{1};
  for (auto [p, e] : factors) {
    size_t base = divs.size();
    u64 pk = 1;
    for (int i = 0; i < e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

namespace {

// Brent's variant with batched gcds. Deterministic: the polynomial constant
// walks 1,2,3,... instead of being drawn at random.
u64 brent_rho(u64 n, const Budget& budget) {
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, q = 1, g = 1, ys = y;
    u64 r = 1, iters = 0;
    const u64 batch = 128;
    while (g == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
      for (u64 k = 0; k < r && g == 1; k += batch) {
        ys = y;
        u64 lim = std::min(batch, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        iters += lim;
        check_budget(iters < budget.rho_iterations || g != 1,
                     "factorize: cycle finding exceeded iteration budget");
      }
      r *= 2;
    }
    if (g == n) {
      // backtrack one by one
      g = 1;
      while (g == 1) {
        ys = (mulmod(ys, ys, n) + c) % n;
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g != n) return g;
    // cycle collapsed; retry with the next constant
    check_budget(c < 64, "factorize: cycle finding failed to split");
  }
}

void factor_rec(u64 n, std::vector<u64>& out, const Budget& budget) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = brent_rho(n, budget);
  factor_rec(d, out, budget);
  factor_rec(n / d, out, budget);
}

}  // namespace

Factorization factorize(u64 n, const Budget& budget) {
  require(n >= 1, "factorize: n must be positive");
  check_budget(n < kModulusCap, "factorize: operand exceeds 62-bit cap");
  Factorization f;
  f.n = n;
  std::vector<u64> primes;
  for (u64 d : {2ull, 3ull, 5ull}) {
    while (n % d == 0) {
      primes.push_back(d);
      n /= d;
    }
  }
  static constexpr u64 kTrialBound = 1'000'000;
  for (u64 d = 7; d <= kTrialBound && d * d <= n; d += 2) {
    if (d % 3 == 0 || d % 5 == 0) continue;
    while (n % d == 0) {
      primes.push_back(d);
      n /= d;
    }
  }
  if (n > 1) {
    if (n < kTrialBound * kTrialBound) {
      primes.push_back(n);  // no factor below its square root
    } else {
      factor_rec(n, primes, budget);
    }
  }
  std::sort(primes.begin(), primes.end());
  for (u64 p : primes) {
    if (!f.factors.empty() && f.factors.back().first == p)
      ++f.factors.back().second;
    else
      f.factors.emplace_back(p, 1);
  }
  return f;
}

PrimeContext PrimeContext::make(u64 p, const Budget& budget) {
  require(p >= 2 && is_prime(p), "PrimeContext: p is not prime");
  return PrimeContext{p, factorize(p - 1, budget)};
}

u64 mult_order(u64 a, const PrimeContext& ctx) {
  a %= ctx.p;
  require(a != 0, "mult_order: zero has no multiplicative order");
  u64 d = ctx.p - 1;
  for (auto [q, e] : ctx.p_minus_1.factors) {
    for (int i = 0; i < e; ++i) {
      if (d % q == 0 && powmod(a, d / q, ctx.p) == 1)
        d /= q;
      else
        break;
    }
  }
  return d;
}

u64 pi_progression(const std::vector<u64>& primes, double y, u64 modulus) {
  require(modulus >= 1, "pi_progression: modulus must be >= 1");
  u64 count = 0;
  for (u64 p : primes) {
    if (double(p) > y) break;
    if (p % modulus == 1 % modulus) ++count;
  }
  return count;
}

u64 pi_progression(double y, u64 modulus, const Budget& budget) {
  require(y >= 2.0, "pi_progression: y must be >= 2");
  auto primes = sieve_primes(static_cast<u64>(y), budget);
  return pi_progression(primes, y, modulus);
}

SmallFactorSieve::SmallFactorSieve(u64 limit, const Budget& budget) : limit_(limit) {
  require(limit >= 2, "SmallFactorSieve: limit must be >= 2");
  check_budget(limit <= budget.sieve_limit && limit < (u64(1) << 32),
               "SmallFactorSieve: limit exceeds sieve cap");
  spf_.assign(limit + 1, 0);
  for (u64 i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    for (u64 j = i; j <= limit; j += i)
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
  }
}

Factorization SmallFactorSieve::factorize(u64 n) const {
  require(n >= 1 && n <= limit_, "SmallFactorSieve: n out of range");
  Factorization f;
  f.n = n;
  while (n > 1) {
    u64 p = spf_[n];
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.factors.emplace_back(p, e);
  }
  return f;
}

std::vector<std::uint32_t> totient_table(u64 limit, const Budget& budget) {
  require(limit >= 1, "totient_table: limit must be >= 1");
  check_budget(limit <= budget.sieve_limit && limit < (u64(1) << 32),
               "totient_table: limit exceeds sieve cap");
  std::vector<std::uint32_t> phi(limit + 1);
  for (u64 i = 0; i <= limit; ++i) phi[i] = static_cast<std::uint32_t>(i);
  for (u64 i = 2; i <= limit; ++i) {
    if (phi[i] != i) continue;  // i composite: already touched by a smaller prime
    for (u64 j = i; j <= limit; j += i) phi[j] -= phi[j] / i;
  }
  return phi;
}

}  // namespace shortint
