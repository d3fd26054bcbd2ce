#pragma once

#include <span>
#include <string>
#include <vector>

#include "shortint/arith.hpp"

namespace shortint {

// Interval semantics are half-open everywhere: elements are the residues of
// the m integers start, start+1, ..., start+m-1, with anything = 0 mod p
// skipped.
struct OrderRecord {
  u64 p;
  u64 start;
  u64 m;
  u64 max_order;
  u64 argmax;  // residue of the first (smallest) element attaining max_order
};

OrderRecord interval_max_order(const PrimeContext& ctx, u64 start, u64 m);

struct PairOrder {
  u64 ord_s;
  u64 ord_s1;
  u64 max_order;
  bool ord3_flag;  // ord(s) = 3 forces s+1 = -s^2, hence ord(s+1) = 6
};

PairOrder consecutive_pair_order(const PrimeContext& ctx, u64 s);

// Named threshold family for sweeps; labels are versioned so census files
// stay comparable across runs.
struct ThresholdSpec {
  enum class Kind { p_pow, T_pow, erdos_murty, sqrt_hT } kind;
  double param = 0;  // exponent c, or mu for erdos_murty

  double eval(u64 p, u64 T, u64 m) const;
  std::string label() const;
  // accepts "psqrt", "ppow:<c>", "tpow:<c>", "em:<mu>", "sqrtht"
  static ThresholdSpec parse(const std::string& text);
};

struct OrderSweepRow {
  u64 p;
  u64 max_order;
  u64 argmax;
  std::vector<bool> exceeded;  // one per threshold
};

struct OrderSweepReport {
  std::vector<OrderSweepRow> rows;  // sorted by p
  std::vector<std::string> threshold_labels;
  std::vector<u64> exceptional_counts;  // primes failing each threshold
  u64 skipped = 0;                      // primes whose interval had no nonzero element
};

// Interval anchor: either one fixed integer start for every prime, or a
// per-prime start drawn from (seed, p), independent of the worker schedule.
struct AnchorSpec {
  bool random = false;
  u64 fixed = 1;
  u64 seed = 0;
};

OrderSweepReport order_sweep(u64 T, u64 m, const AnchorSpec& anchor,
                             std::span<const ThresholdSpec> thresholds, int workers = 1,
                             const Budget& budget = {});

}  // namespace shortint
