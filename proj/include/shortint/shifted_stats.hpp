#pragma once

#include <vector>

#include "shortint/arith.hpp"

namespace shortint {

struct ShiftedCensusRow {
  u64 p;
  u64 statistic;
  bool flag;
};

// One row per prime p <= T, sorted by p; the flagged/total ratio is kept as
// an exact pair so regressions diff cleanly.
struct ShiftedCensus {
  std::vector<ShiftedCensusRow> rows;
  u64 flagged = 0;
  u64 total = 0;
};

// Census over p <= T of whether p-1 has a divisor in [T^(1/2-eta), T^(1/2+eta)];
// the statistic is the number of such divisors.
ShiftedCensus middle_divisor_census(u64 T, double eta, int workers = 1,
                                    const Budget& budget = {});

// Product of the prime-power components q^e of n with q < bound; set
// with_multiplicity = false to multiply each such prime only once.
u64 smooth_part(const Factorization& n, u64 bound, bool with_multiplicity = true);
u64 smooth_part_of_shifted(u64 p, u64 bound, bool with_multiplicity = true,
                           const Budget& budget = {});

// Flags primes whose T^alpha-smooth part of p-1 exceeds T^gamma.
ShiftedCensus smooth_part_census(u64 T, double alpha, double gamma,
                                 bool with_multiplicity = true, int workers = 1,
                                 const Budget& budget = {});

// Number of distinct primes q >= threshold dividing n.
u64 large_prime_divisor_count(const Factorization& n, u64 threshold);

// Flags primes where the count of prime divisors q >= T^alpha of p-1 exceeds
// 2 lambda log(beta/alpha)/(1-beta) + 1/beta.
ShiftedCensus large_prime_divisor_census(u64 T, double alpha, double beta,
                                         double lambda, int workers = 1,
                                         const Budget& budget = {});

// Flags primes such that q^2 | p-1 for some integer q >= T^alpha; the
// statistic is the largest q with q^2 | p-1.
ShiftedCensus square_divisor_census(u64 T, double alpha, int workers = 1,
                                    const Budget& budget = {});

struct MertensWindow {
  double prime_reciprocal_sum;  // sum of 1/q over primes T^alpha <= q < T^beta
  double log_ratio;             // log(beta/alpha)
  double gap;                   // sum - log_ratio
};

MertensWindow mertens_window(u64 T, double alpha, double beta, const Budget& budget = {});

// Smallest integer q with q >= T^e, robust to floating error at exact powers.
u64 power_threshold(u64 T, double e);

}  // namespace shortint
