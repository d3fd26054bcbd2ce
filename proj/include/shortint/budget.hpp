#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace shortint {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Caps on memory/work. Exceeding one raises BudgetError (exit code 2 in the
// CLI), never a partial result.
struct Budget {
  u64 histogram_entries = 100'000'000;  // product-histogram entry cap
  u64 sieve_limit = 200'000'000;        // largest sieve table
  u64 enumeration = 2'000'000'000;      // generic scan/double-loop cap
  u64 rho_iterations = 20'000'000;      // cycle-finding budget per split

  // SHORTINT_BUDGET_ENTRIES overrides the histogram cap.
  static Budget from_env() {
    Budget b;
    if (const char* e = std::getenv("SHORTINT_BUDGET_ENTRIES")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(e, &end, 10);
      if (end && *end == '\0' && v > 0) b.histogram_entries = v;
    }
    return b;
  }
};

struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Root finding / factor splitting gave up within its iteration budget.
struct ConvergenceError : std::runtime_error {
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

inline void check_budget(bool within, const std::string& what) {
  if (!within) throw BudgetError(what);
}

// a^e, refusing to overflow u64; used for budget checks like |A|^nu <= cap.
inline bool pow_within(u64 base, int exp, u64 cap, u64* out = nullptr) {
  u128 acc = 1;
  for (int i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > cap) return false;
  }
  if (out) *out = static_cast<u64>(acc);
  return true;
}

}  // namespace shortint
