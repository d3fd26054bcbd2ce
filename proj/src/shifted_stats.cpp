#include "shortint/shifted_stats.hpp"

#include <algorithm>
#include <cmath>

#include "shortint/parallel.hpp"

namespace shortint {

namespace {

// powl can land a hair off an exact integer power (e.g. (10^5)^0.4); snap to
// the integer when within relative 1e-9 so threshold semantics stay exact
u64 snap(long double x, bool want_ceil) {
  long double r = roundl(x);
  if (fabsl(x - r) < 1e-9L * std::max<long double>(1.0L, x)) return u64(r);
  return u64(want_ceil ? ceill(x) : floorl(x));
}

}  // namespace

u64 power_threshold(u64 T, double e) {
  return snap(powl((long double)T, (long double)e), true);
}

namespace {

u64 floor_power(u64 T, double e) {
  return snap(powl((long double)T, (long double)e), false);
}

template <class PerPrime>
ShiftedCensus run_census(u64 T, int workers, const Budget& budget, PerPrime&& fn) {
  auto primes = sieve_primes(T, budget);
  SmallFactorSieve sieve(T, budget);
  ShiftedCensus census;
  census.total = primes.size();
  census.rows.resize(primes.size());
  parallel_for(primes.size(), workers, [&](u64 i) {
    u64 p = primes[i];
    Factorization pm1 = sieve.factorize(p - 1);
    census.rows[i] = fn(p, pm1);
  });
  for (auto& row : census.rows)
    if (row.flag) ++census.flagged;
  return census;
}

}  // namespace

ShiftedCensus middle_divisor_census(u64 T, double eta, int workers, const Budget& budget) {
  require(T >= 2, "middle_divisor_census: T must be >= 2");
  require(eta > 0 && eta < 0.5, "middle_divisor_census: need 0 < eta < 1/2");
  u64 lo = power_threshold(T, 0.5 - eta);
  u64 hi = floor_power(T, 0.5 + eta);
  return run_census(T, workers, budget, [&](u64 p, const Factorization& pm1) {
    u64 in_range = 0;
    for (u64 d : pm1.divisors())
      if (d >= lo && d <= hi) ++in_range;
    return ShiftedCensusRow{p, in_range, in_range > 0};
  });
}

u64 smooth_part(const Factorization& n, u64 bound, bool with_multiplicity) {
  require(bound >= 2, "smooth_part: bound must be >= 2");
  u64 prod = 1;
  for (auto [q, e] : n.factors) {
    if (q >= bound) break;
    prod *= q;
    if (with_multiplicity)
      for (int i = 1; i < e; ++i) prod *= q;
  }
  return prod;
}

u64 smooth_part_of_shifted(u64 p, u64 bound, bool with_multiplicity, const Budget& budget) {
  require(p >= 2 && is_prime(p), "smooth_part_of_shifted: p must be prime");
  return smooth_part(factorize(p - 1, budget), bound, with_multiplicity);
}

ShiftedCensus smooth_part_census(u64 T, double alpha, double gamma, bool with_multiplicity,
                                 int workers, const Budget& budget) {
  require(T >= 2, "smooth_part_census: T must be >= 2");
  require(alpha > 0 && gamma > 0, "smooth_part_census: alpha, gamma must be positive");
  u64 bound = std::max<u64>(2, power_threshold(T, alpha));
  u64 cutoff = floor_power(T, gamma);
  return run_census(T, workers, budget, [&](u64 p, const Factorization& pm1) {
    u64 part = smooth_part(pm1, bound, with_multiplicity);
    return ShiftedCensusRow{p, part, part > cutoff};
  });
}

u64 large_prime_divisor_count(const Factorization& n, u64 threshold) {
  require(threshold >= 2, "large_prime_divisor_count: threshold must be >= 2");
  u64 count = 0;
  for (auto [q, e] : n.factors)
    if (q >= threshold) ++count;
  return count;
}

ShiftedCensus large_prime_divisor_census(u64 T, double alpha, double beta, double lambda,
                                         int workers, const Budget& budget) {
  require(T >= 2, "large_prime_divisor_census: T must be >= 2");
  require(0 < alpha && alpha <= beta && beta < 1 && 1 <= lambda,
          "large_prime_divisor_census: need 0 < alpha <= beta < 1 <= lambda");
  u64 threshold = std::max<u64>(2, power_threshold(T, alpha));
  double bound = 2.0 * lambda * std::log(beta / alpha) / (1.0 - beta) + 1.0 / beta;
  return run_census(T, workers, budget, [&](u64 p, const Factorization& pm1) {
    u64 count = large_prime_divisor_count(pm1, threshold);
    return ShiftedCensusRow{p, count, double(count) > bound};
  });
}

ShiftedCensus square_divisor_census(u64 T, double alpha, int workers, const Budget& budget) {
  require(T >= 2, "square_divisor_census: T must be >= 2");
  require(alpha > 0 && alpha < 1, "square_divisor_census: need 0 < alpha < 1");
  u64 qmin = power_threshold(T, alpha);
  return run_census(T, workers, budget, [&](u64 p, const Factorization& pm1) {
    // largest q with q^2 | p-1; some q >= qmin works iff this one does
    u64 q = 1;
    for (auto [f, e] : pm1.factors)
      for (int i = 0; i < e / 2; ++i) q *= f;
    return ShiftedCensusRow{p, q, q >= qmin};
  });
}

MertensWindow mertens_window(u64 T, double alpha, double beta, const Budget& budget) {
  require(T >= 2, "mertens_window: T must be >= 2");
  require(0 < alpha && alpha <= beta && beta <= 1, "mertens_window: need 0 < alpha <= beta <= 1");
  u64 lo = power_threshold(T, alpha);
  u64 hi_excl = power_threshold(T, beta);
  double sum = 0;
  for (u64 q : sieve_primes(T, budget)) {
    if (q >= hi_excl) break;
    if (q >= lo) sum += 1.0 / double(q);
  }
  double target = std::log(beta / alpha);
  return MertensWindow{sum, target, sum - target};
}

}  // namespace shortint
