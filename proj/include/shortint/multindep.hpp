#pragma once

#include <span>
#include <vector>

#include "shortint/budget.hpp"

namespace shortint {

// Output of the recursive extraction: q_i divides elements[i] and divides no
// later element, which forces multiplicative independence.
struct IndependentSet {
  std::vector<u64> elements;
  std::vector<u64> witness_primes;
};

// Scan [a, a+m) left to right; accept x when no previously recorded witness
// prime divides it; record x's smallest prime divisor as its witness.
IndependentSet greedy_independent(u64 a, u64 m, const Budget& budget = {});

// Rank over Q of the prime-exponent vectors; elements equal to 1 contribute
// zero rows. Equals the element count iff they are multiplicatively
// independent.
int independence_rank(std::span<const u64> elements, const Budget& budget = {});

// Longest run of consecutive integers in [lo, hi] each divisible by one of
// the given primes.
u64 covered_run_length(std::span<const u64> primes, u64 lo, u64 hi,
                       const Budget& budget = {});

}  // namespace shortint
